#include "ductwave/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ductwave/coefficients.hpp"
#include "ductwave/diagnostics.hpp"
#include "ductwave/errors.hpp"
#include "ductwave/sine_kernel.hpp"
#include "ductwave/solver.hpp"
#include "ductwave/travwave.hpp"

namespace ductwave {
namespace {

namespace fs = std::filesystem;
constexpr double pi = std::numbers::pi;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// short form for file names
std::string tag(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

class CsvFile {
public:
    CsvFile(const fs::path& path, const std::string& config_echo, const std::string& header)
        : out_(path) {
        if (!out_) throw ParameterDomainError("output_dir", "cannot open " + path.string());
        out_ << "# config: " << config_echo << "\n" << header << "\n";
        std::cout << "wrote " << path.string() << "\n";
    }

    void row(std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) out_ << ",";
            out_ << num(v);
            first = false;
        }
        out_ << "\n";
    }

private:
    std::ofstream out_;
};

ModelCoefficients coefficients_for(const RunConfig& config, double b) {
    GasParameters gas{config.gas.delta, b};
    const DeltaPolicy policy =
        config.allow_delta_out_of_range ? DeltaPolicy::warn : DeltaPolicy::strict;
    if (config.allow_delta_out_of_range && validate_parameters(gas, policy))
        std::cerr << "warning: delta=" << num(gas.delta)
                  << " is outside (0, 2/3]; proceeding per gas.allow_delta_out_of_range\n";
    return compute_coefficients(gas, policy);
}

std::vector<double> resolved_b_list(const RunConfig& config) {
    if (!config.b_list.empty()) return config.b_list;
    if (config.scenario == Scenario::sweep) return {0.0, 0.02, 0.04};
    return {config.gas.b};
}

double resolved_t_end(const RunConfig& config) {
    if (config.t_end) return *config.t_end;
    switch (config.scenario) {
    case Scenario::attractor: return 120.0;
    case Scenario::sweep: return 80.0;
    case Scenario::evolve_pair: return 10.0;
    default: return 50.0;
    }
}

std::vector<double> uniform_times(double from, double to, double step) {
    std::vector<double> out;
    for (long k = static_cast<long>(std::ceil(from / step - 1e-9)); ; ++k) {
        const double t = static_cast<double>(k) * step;
        if (t > to + 1e-9) break;
        if (t > 0.0) out.push_back(t);
    }
    return out;
}

SolverConfig resolved_solver_config(const RunConfig& config, double t_end) {
    SolverConfig solver = config.solver;
    solver.t_end = t_end;
    if (solver.snapshot_times.empty() && config.snapshot_interval > 0.0)
        solver.snapshot_times = uniform_times(0.0, t_end, config.snapshot_interval);
    return solver;
}

void require_initial(const RunConfig& config) {
    if (config.initial_condition.empty())
        throw ParameterDomainError("initial", "scenario needs at least one harmonic term");
}

void write_field_csv(const fs::path& path, const std::string& echo, const PeriodicField& field,
                     const char* value_name) {
    CsvFile csv(path, echo, std::string("x,") + value_name);
    for (std::size_t i = 0; i < field.size(); ++i) csv.row({field.grid_point(i), field[i]});
}

void write_diagnostics_csv(const fs::path& path, const std::string& echo,
                           const std::vector<DiagnosticsRecord>& records) {
    CsvFile csv(path, echo, "t,energy,mean,tv,max_gradient,shock_flag,corner_flag");
    for (const auto& r : records)
        csv.row({r.t, r.energy, r.mean, r.tv, r.max_gradient, r.shock_flag ? 1.0 : 0.0,
                 r.corner_flag ? 1.0 : 0.0});
}

void scenario_coeffs(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    CsvFile csv(dir / "coefficients.csv", echo,
                "delta,b,c0,G,Lambda,Gamma,Gamma_over_Lambda,speed_1,speed_2,speed_3");
    for (double b : resolved_b_list(config)) {
        const ModelCoefficients c = coefficients_for(config, b);
        const auto speeds = characteristic_speeds(c);
        csv.row({config.gas.delta, b, c.c0, c.G, c.Lambda, c.Gamma, c.Gamma / c.Lambda, speeds[0],
                 speeds[1], speeds[2]});
    }
}

void scenario_dispersion(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    const ModelCoefficients c = coefficients_for(config, config.gas.b);
    const SineKernel kernel(config.kernel_coefficients);
    CsvFile csv(dir / "dispersion.csv", echo, "k,omega");
    for (int k = -config.dispersion_k_max; k <= config.dispersion_k_max; ++k) {
        if (k == 0) continue;
        csv.row({static_cast<double>(k), dispersion_omega(kernel, k, c.Gamma)});
    }
}

void scenario_travwave(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    for (double b : resolved_b_list(config)) {
        const ModelCoefficients c = coefficients_for(config, b);
        CsvFile family(dir / ("family_b" + tag(b) + ".csv"), echo, "alpha,gamma,s,A");
        const long steps = std::lround(1.0 / config.alpha_step);
        for (long k = 0; k <= steps; ++k) {
            const double alpha = std::min(1.0, static_cast<double>(k) * config.alpha_step);
            family.row({alpha, gamma_of_alpha(alpha), speed_of_alpha(alpha, c.Gamma),
                        amplitude_of_alpha(alpha, c)});
        }
        for (double alpha : config.alpha_list) {
            const TravelingWave wave = make_traveling_wave({alpha, 0.0, +1}, c);
            const PeriodicField profile = sample_traveling_wave(wave, c, config.solver.n, 0.0);
            write_field_csv(dir / ("profile_b" + tag(b) + "_alpha" + tag(alpha) + ".csv"), echo,
                            profile, "sigma");
        }
    }
}

void scenario_evolve(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    require_initial(config);
    const ModelCoefficients c = coefficients_for(config, config.gas.b);
    const SineKernel kernel(config.kernel_coefficients);
    const SolverConfig solver = resolved_solver_config(config, resolved_t_end(config));
    const PeriodicField initial = build_initial_condition(config.initial_condition, solver.n);
    const EvolutionRecord record = evolve(solver, initial, kernel, c);
    for (std::size_t i = 0; i < record.times.size(); ++i)
        write_field_csv(dir / ("snapshot_t" + tag(record.times[i]) + ".csv"), echo,
                        record.fields[i], "sigma");
    write_diagnostics_csv(dir / "diagnostics.csv", echo, record.diagnostics);
}

void scenario_evolve_pair(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    require_initial(config);
    const ModelCoefficients c = coefficients_for(config, config.gas.b);
    const SineKernel kernel(config.kernel_coefficients);
    const SolverConfig solver = resolved_solver_config(config, resolved_t_end(config));
    const PeriodicField a3 = build_initial_condition(config.initial_condition, solver.n);
    PeriodicField a1(solver.n);
    if (config.initial_condition_a1.empty()) {
        // mirror data a1(theta) = a3(-theta), the sigma-mode correspondence
        for (std::size_t i = 0; i < solver.n; ++i) a1[i] = a3[(solver.n - i) % solver.n];
    } else {
        a1 = build_initial_condition(config.initial_condition_a1, solver.n);
    }
    const PairEvolutionRecord record = evolve_pair(solver, a1, a3, kernel, c);
    for (std::size_t i = 0; i < record.times.size(); ++i) {
        write_field_csv(dir / ("snapshot_a1_t" + tag(record.times[i]) + ".csv"), echo,
                        record.a1[i], "a1");
        write_field_csv(dir / ("snapshot_a3_t" + tag(record.times[i]) + ".csv"), echo,
                        record.a3[i], "a3");
    }
    write_diagnostics_csv(dir / "diagnostics_a1.csv", echo, record.diagnostics_a1);
    write_diagnostics_csv(dir / "diagnostics_a3.csv", echo, record.diagnostics_a3);
}

void scenario_attractor(const RunConfig& config, const fs::path& dir, const std::string& echo) {
    require_initial(config);
    const ModelCoefficients c = coefficients_for(config, config.gas.b);
    const SineKernel kernel(config.kernel_coefficients);
    const double t_end = resolved_t_end(config);
    SolverConfig solver = resolved_solver_config(config, t_end);
    const double window = std::min(config.attractor_window, t_end);
    if (solver.snapshot_times.empty()) {
        // dense early era for the corner onset, dense tail for recurrence
        auto times = uniform_times(0.0, std::min(3.0, t_end), 0.05);
        for (double t : uniform_times(3.0, t_end - window, 0.5)) times.push_back(t);
        for (double t : uniform_times(t_end - window, t_end, 0.05)) times.push_back(t);
        solver.snapshot_times = times;
    }
    const PeriodicField initial = build_initial_condition(config.initial_condition, solver.n);
    const EvolutionRecord record = evolve(solver, initial, kernel, c);

    std::vector<double> alphas, phis;
    for (int i = 0; i <= 20; ++i) alphas.push_back(i / 20.0);
    for (int i = 0; i < 32; ++i) phis.push_back(PeriodicField::two_pi * i / 32.0);

    CsvFile csv(dir / "diagnostics.csv", echo,
                "t,energy,mean,tv,max_gradient,shock_flag,corner_flag,dist_to_family,best_alpha");
    std::vector<AttractorReport> family(record.times.size());
    for (std::size_t i = 0; i < record.times.size(); ++i) {
        family[i] = distance_to_family(record.fields[i], c, alphas, phis);
        const auto& r = record.diagnostics[i];
        csv.row({r.t, r.energy, r.mean, r.tv, r.max_gradient, r.shock_flag ? 1.0 : 0.0,
                 r.corner_flag ? 1.0 : 0.0, family[i].distance, family[i].best_alpha});
    }
    write_field_csv(dir / "final_state.csv", echo, record.fields.back(), "sigma");

    AttractorReport report = family.back();
    report.period_estimates =
        estimate_periods(record.times, record.fields, t_end - window, t_end);

    double first_corner = -1.0, last_shock = -1.0;
    for (const auto& r : record.diagnostics) {
        if (r.corner_flag && first_corner < 0.0) first_corner = r.t;
        if (r.shock_flag) last_shock = r.t;
    }

    std::ostringstream text;
    text << "# config: " << echo << "\n";
    text << "best_alpha = " << num(report.best_alpha) << "\n";
    text << "best_phi = " << num(report.best_phi) << "\n";
    text << "distance = " << num(report.distance) << "\n";
    if (first_corner >= 0.0) text << "first_corner_time = " << num(first_corner) << "\n";
    else text << "first_corner_time = none\n";
    if (last_shock >= 0.0) text << "last_shock_time = " << num(last_shock) << "\n";
    else text << "last_shock_time = none\n";
    if (report.period_estimates.empty()) {
        text << "recurrence = none found\n";
    } else {
        for (std::size_t i = 0; i < report.period_estimates.size(); ++i)
            text << "period_" << (i + 1) << " = " << num(report.period_estimates[i].period)
                 << " confidence = " << num(report.period_estimates[i].confidence) << "\n";
    }
    std::ofstream out(dir / "attractor_report.txt");
    out << text.str();
    std::cout << "wrote " << (dir / "attractor_report.txt").string() << "\n" << text.str();
}

void scenario_sweep(const RunConfig& config, const fs::path& dir, const std::string&) {
    for (double b : resolved_b_list(config)) {
        const fs::path subdir = dir / ("b" + tag(b));
        fs::create_directories(subdir);

        RunConfig local = config;
        local.gas.b = b;
        local.b_list = {b};

        RunConfig family = local;
        family.scenario = Scenario::travwave;
        scenario_travwave(family, subdir, describe(family));

        RunConfig evolution = local;
        evolution.scenario = Scenario::evolve;
        if (evolution.initial_condition.empty())
            evolution.initial_condition = {{1, 0.0, 2.0, 0.0}, {2, 3.0, 0.0, -2.0}};
        if (evolution.solver.snapshot_times.empty() && evolution.snapshot_interval <= 0.0)
            evolution.solver.snapshot_times = {0.15, 0.35, 0.8, 2.5, 5.0, 15.0, 50.0};
        if (!evolution.t_end) evolution.t_end = 80.0;
        scenario_evolve(evolution, subdir, describe(evolution));
    }
}

} // namespace

int run_scenario(const RunConfig& raw) {
    try {
        RunConfig config = raw;
        const bool evolves = config.scenario == Scenario::evolve ||
                             config.scenario == Scenario::evolve_pair ||
                             config.scenario == Scenario::attractor ||
                             config.scenario == Scenario::sweep;
        if (evolves && !config.t_end) config.t_end = resolved_t_end(raw); // echo resolved
        const fs::path dir(config.output_dir);
        fs::create_directories(dir);
        const std::string echo = describe(config);
        switch (config.scenario) {
        case Scenario::coeffs: scenario_coeffs(config, dir, echo); break;
        case Scenario::dispersion: scenario_dispersion(config, dir, echo); break;
        case Scenario::travwave: scenario_travwave(config, dir, echo); break;
        case Scenario::evolve: scenario_evolve(config, dir, echo); break;
        case Scenario::evolve_pair: scenario_evolve_pair(config, dir, echo); break;
        case Scenario::attractor: scenario_attractor(config, dir, echo); break;
        case Scenario::sweep: scenario_sweep(config, dir, echo); break;
        }
        return exit_ok;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
}

int run_seed_check(std::ostream& log) {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        log << "seed-check " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) ++failures;
    };
    auto near = [](double a, double b, double tol) { return std::abs(a - b) <= tol; };

    const ModelCoefficients c0 = compute_coefficients({0.4, 0.0});
    const ModelCoefficients c2 = compute_coefficients({0.4, 0.02});
    const ModelCoefficients c4 = compute_coefficients({0.4, 0.04});

    check("coefficients_b0", near(c0.c0, 1.18321595661992321, 1e-12) &&
                                 near(c0.Lambda, 1.41985914794390785, 1e-12) &&
                                 near(c0.Gamma, 0.414125584816973123, 1e-12));
    check("coefficients_b002", near(c2.c0, 1.19522860933439364, 1e-12) &&
                                   near(c2.Lambda, 1.46354523591966568, 1e-12) &&
                                   near(c2.Gamma, 0.426867360476569157, 1e-12));
    check("coefficients_b004", near(c4.c0, 1.20761472884911988, 1e-12) &&
                                   near(c4.Lambda, 1.50951841106139985, 1e-12) &&
                                   near(c4.Gamma, 0.440276203226241623, 1e-12));
    const double ratio = 1.4 / 4.8;
    check("coupling_ratio", near(c0.Gamma / c0.Lambda, ratio, 1e-14) &&
                                near(c2.Gamma / c2.Lambda, ratio, 1e-14) &&
                                near(c4.Gamma / c4.Lambda, ratio, 1e-14));

    check("family_endpoints", near(gamma_of_alpha(1.0), 8.0 * std::sqrt(2.0) / 3.0, 1e-9) &&
                                  near(speed_of_alpha(1.0, c0.Gamma),
                                       -32.0 * c0.Gamma / (3.0 * pi), 1e-9));

    const SineKernel kernel = SineKernel::single_mode();
    check("dispersion", near(dispersion_omega(kernel, 1, c0.Gamma), -c0.Gamma * pi, 1e-12) &&
                            dispersion_omega(kernel, 2, c0.Gamma) == 0.0 &&
                            near(speed_of_alpha(0.0, c0.Gamma),
                                 dispersion_omega(kernel, 1, c0.Gamma), 1e-10));

    {
        const std::size_t n = 64;
        const auto sigma = PeriodicField::from_function(n, [](double x) { return std::sin(x); });
        const PeriodicField conv = convolve(kernel, sigma, 1.0);
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            err = std::max(err, std::abs(conv[i] + pi * std::cos(conv.grid_point(i))));
        check("convolution_analytic", err <= 1e-12);
    }

    {
        // linear substep order probe against the exact rotation sin(x + Gamma pi T)
        const std::size_t n = 64;
        const double T = 0.5;
        auto error_at = [&](double dt) {
            auto u = PeriodicField::from_function(n, [](double x) { return std::sin(x); });
            const long steps = std::lround(T / dt);
            for (long s = 0; s < steps; ++s) u = convolution_substep(u, kernel, c0.Gamma, dt);
            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                err = std::max(err,
                               std::abs(u[i] - std::sin(u.grid_point(i) + c0.Gamma * pi * T)));
            return err;
        };
        const double e1 = error_at(0.01), e2 = error_at(0.005);
        check("linear_substep_order", e2 > 0.0 && std::log2(e1 / e2) >= 1.8);
    }

    {
        // one full period of the alpha = 0.6 traveling wave at modest resolution
        SolverConfig solver;
        solver.n = 128;
        const TravelingWave wave = make_traveling_wave({0.6, 0.0, +1}, c0);
        solver.t_end = PeriodicField::two_pi / std::abs(wave.s);
        const PeriodicField initial = sample_traveling_wave(wave, c0, solver.n, 0.0);
        const EvolutionRecord record = evolve(solver, initial, kernel, c0);
        double ssd = 0.0;
        for (std::size_t i = 0; i < solver.n; ++i) {
            const double d = record.fields.back()[i] - initial[i];
            ssd += d * d;
        }
        check("travwave_return", std::sqrt(ssd * initial.dx()) <= 0.03);
    }

    return failures == 0 ? exit_ok : exit_numerical;
}

} // namespace ductwave
