#include "ductwave/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ductwave/errors.hpp"

namespace ductwave {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigParseError("expected a number for '" + key + "', got '" + v + "'", line);
    }
}

long parse_int(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigParseError("expected an integer for '" + key + "', got '" + v + "'", line);
    }
}

bool parse_bool(const std::string& v, const std::string& key, int line) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigParseError("expected a boolean for '" + key + "', got '" + v + "'", line);
}

std::vector<double> parse_list(const std::string& v, const std::string& key, int line) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(item, key, line));
    }
    return out;
}

HarmonicTerm parse_harmonic(const std::string& v, int line) {
    std::istringstream ss(v);
    HarmonicTerm term;
    double k;
    if (!(ss >> k >> term.cos_coeff >> term.sin_coeff >> term.phase))
        throw ConfigParseError("harmonic needs four numbers: k cos_coeff sin_coeff phase", line);
    std::string rest;
    if (ss >> rest) throw ConfigParseError("harmonic has trailing input '" + rest + "'", line);
    if (k != std::floor(k) || k < 1.0)
        throw ParameterDomainError("initial.harmonic",
                                   "harmonic index must be a positive integer (zero mean)");
    term.harmonic = static_cast<int>(k);
    return term;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += fmt(v[i]);
    }
    return out;
}

std::string fmt_harmonics(const std::vector<HarmonicTerm>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(terms[i].harmonic) + " " + fmt(terms[i].cos_coeff) + " " +
               fmt(terms[i].sin_coeff) + " " + fmt(terms[i].phase);
    }
    return out;
}

void validate(RunConfig& config) {
    validate_parameters(config.gas, config.allow_delta_out_of_range ? DeltaPolicy::warn
                                                                    : DeltaPolicy::strict);
    if (config.kernel_coefficients.empty())
        throw ParameterDomainError("kernel.A", "needs at least one coefficient");
    if (config.solver.n < 16) throw ParameterDomainError("solver.N", "must be at least 16");
    if (config.solver.n < 4 * config.kernel_coefficients.size())
        throw ParameterDomainError("solver.N", "grid too coarse for the kernel: need N >= 4M");
    if (!(config.solver.cfl > 0.0 && config.solver.cfl <= 1.0))
        throw ParameterDomainError("solver.cfl", "must lie in (0, 1]");
    if (config.t_end && !(*config.t_end > 0.0))
        throw ParameterDomainError("solver.t_end", "must be positive");
    if (config.snapshot_interval < 0.0)
        throw ParameterDomainError("solver.snapshot_interval", "must be nonnegative");
    if (config.solver.fixed_dt < 0.0)
        throw ParameterDomainError("solver.fixed_dt", "must be nonnegative");
    if (!(config.solver.thresholds.c_shock > 0.0))
        throw ParameterDomainError("solver.c_shock", "must be positive");
    if (!(config.solver.thresholds.c_corner > 0.0))
        throw ParameterDomainError("solver.c_corner", "must be positive");
    if (config.dispersion_k_max < 1)
        throw ParameterDomainError("dispersion.k_max", "must be at least 1");
    if (!(config.alpha_step > 0.0 && config.alpha_step <= 1.0))
        throw ParameterDomainError("travwave.alpha_step", "must lie in (0, 1]");
    for (double a : config.alpha_list)
        if (!(std::abs(a) <= 1.0))
            throw ParameterDomainError("travwave.alpha_list", "entries must lie in [-1, 1]");
    for (double b : config.b_list)
        if (!(b >= 0.0 && b < 1.0))
            throw ParameterDomainError("b_list", "entries must lie in [0, 1)");
    if (!(config.attractor_window > 0.0))
        throw ParameterDomainError("attractor.window", "must be positive");
    for (double t : config.solver.snapshot_times)
        if (!(t >= 0.0)) throw ParameterDomainError("solver.snapshot_times", "must be nonnegative");
}

} // namespace

std::string scenario_name(Scenario s) {
    switch (s) {
    case Scenario::coeffs: return "coeffs";
    case Scenario::dispersion: return "dispersion";
    case Scenario::travwave: return "travwave";
    case Scenario::evolve: return "evolve";
    case Scenario::evolve_pair: return "evolve-pair";
    case Scenario::attractor: return "attractor";
    case Scenario::sweep: return "sweep";
    }
    return "?";
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
    for (Scenario s : {Scenario::coeffs, Scenario::dispersion, Scenario::travwave, Scenario::evolve,
                       Scenario::evolve_pair, Scenario::attractor, Scenario::sweep})
        if (scenario_name(s) == name) return s;
    return std::nullopt;
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    bool scenario_seen = false;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigParseError("unterminated section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigParseError("expected key = value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigParseError("empty key", line_no);
        const std::string full = section.empty() ? key : section + "." + key;

        if (full == "scenario") {
            const auto s = scenario_from_name(value);
            if (!s) throw ConfigParseError("unknown scenario '" + value + "'", line_no);
            config.scenario = *s;
            scenario_seen = true;
        } else if (full == "output_dir") {
            config.output_dir = value;
        } else if (full == "gas.delta") {
            config.gas.delta = parse_double(value, full, line_no);
        } else if (full == "gas.b") {
            config.gas.b = parse_double(value, full, line_no);
        } else if (full == "gas.allow_delta_out_of_range") {
            config.allow_delta_out_of_range = parse_bool(value, full, line_no);
        } else if (full == "kernel.A") {
            config.kernel_coefficients = parse_list(value, full, line_no);
        } else if (full == "solver.N") {
            config.solver.n = static_cast<std::size_t>(parse_int(value, full, line_no));
        } else if (full == "solver.cfl") {
            config.solver.cfl = parse_double(value, full, line_no);
        } else if (full == "solver.t_end") {
            config.t_end = parse_double(value, full, line_no);
        } else if (full == "solver.snapshot_stride") {
            config.solver.snapshot_stride =
                static_cast<std::size_t>(parse_int(value, full, line_no));
        } else if (full == "solver.snapshot_times") {
            config.solver.snapshot_times = parse_list(value, full, line_no);
        } else if (full == "solver.snapshot_interval") {
            config.snapshot_interval = parse_double(value, full, line_no);
        } else if (full == "solver.fixed_dt") {
            config.solver.fixed_dt = parse_double(value, full, line_no);
        } else if (full == "solver.c_shock") {
            config.solver.thresholds.c_shock = parse_double(value, full, line_no);
        } else if (full == "solver.c_corner") {
            config.solver.thresholds.c_corner = parse_double(value, full, line_no);
        } else if (full == "initial.harmonic") {
            config.initial_condition.push_back(parse_harmonic(value, line_no));
        } else if (full == "initial_a1.harmonic") {
            config.initial_condition_a1.push_back(parse_harmonic(value, line_no));
        } else if (full == "dispersion.k_max") {
            config.dispersion_k_max = static_cast<int>(parse_int(value, full, line_no));
        } else if (full == "travwave.b_list" || full == "b_list") {
            config.b_list = parse_list(value, full, line_no);
        } else if (full == "travwave.alpha_step") {
            config.alpha_step = parse_double(value, full, line_no);
        } else if (full == "travwave.alpha_list") {
            config.alpha_list = parse_list(value, full, line_no);
        } else if (full == "attractor.window") {
            config.attractor_window = parse_double(value, full, line_no);
        } else {
            throw ConfigParseError("unknown key '" + full + "'", line_no);
        }
    }
    if (!scenario_seen) throw ParameterDomainError("scenario", "config must name a scenario");
    config.solver.mode =
        config.scenario == Scenario::evolve_pair ? SolverMode::pair : SolverMode::single;
    validate(config);
    return config;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterDomainError("config", "cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string describe(const RunConfig& c) {
    std::string out = "scenario=" + scenario_name(c.scenario);
    out += " output_dir=" + c.output_dir;
    out += " gas.delta=" + fmt(c.gas.delta);
    out += " gas.b=" + fmt(c.gas.b);
    out += " gas.allow_delta_out_of_range=" + std::string(c.allow_delta_out_of_range ? "1" : "0");
    out += " kernel.A=" + fmt_list(c.kernel_coefficients);
    out += " solver.N=" + std::to_string(c.solver.n);
    out += " solver.cfl=" + fmt(c.solver.cfl);
    if (c.t_end) out += " solver.t_end=" + fmt(*c.t_end);
    if (c.solver.snapshot_stride)
        out += " solver.snapshot_stride=" + std::to_string(c.solver.snapshot_stride);
    if (!c.solver.snapshot_times.empty())
        out += " solver.snapshot_times=" + fmt_list(c.solver.snapshot_times);
    if (c.snapshot_interval > 0.0) out += " solver.snapshot_interval=" + fmt(c.snapshot_interval);
    if (c.solver.fixed_dt > 0.0) out += " solver.fixed_dt=" + fmt(c.solver.fixed_dt);
    out += " solver.c_shock=" + fmt(c.solver.thresholds.c_shock);
    out += " solver.c_corner=" + fmt(c.solver.thresholds.c_corner);
    if (!c.initial_condition.empty()) out += " initial=" + fmt_harmonics(c.initial_condition);
    if (!c.initial_condition_a1.empty())
        out += " initial_a1=" + fmt_harmonics(c.initial_condition_a1);
    if (c.scenario == Scenario::dispersion)
        out += " dispersion.k_max=" + std::to_string(c.dispersion_k_max);
    if (!c.b_list.empty()) out += " b_list=" + fmt_list(c.b_list);
    if (c.scenario == Scenario::travwave || c.scenario == Scenario::sweep) {
        out += " travwave.alpha_step=" + fmt(c.alpha_step);
        out += " travwave.alpha_list=" + fmt_list(c.alpha_list);
    }
    if (c.scenario == Scenario::attractor) out += " attractor.window=" + fmt(c.attractor_window);
    return out;
}

PeriodicField build_initial_condition(const std::vector<HarmonicTerm>& terms, std::size_t n) {
    return PeriodicField::from_function(n, [&](double x) {
        double v = 0.0;
        for (const auto& term : terms) {
            const double arg = term.harmonic * x + term.phase;
            v += term.cos_coeff * std::cos(arg) + term.sin_coeff * std::sin(arg);
        }
        return v;
    });
}

} // namespace ductwave
