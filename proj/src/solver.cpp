#include "ductwave/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ductwave/errors.hpp"
#include "ductwave/kernels.hpp"

namespace ductwave {
namespace {

constexpr double pi = std::numbers::pi;

struct Scratch {
    std::vector<double> slope, ul, ur, flux, rhs, mid;

    explicit Scratch(std::size_t n) : slope(n), ul(n), ur(n), flux(n), rhs(n), mid(n) {}
};

// lambda >= 0 here; callers conjugate for negative lambda.
void burgers_core(std::vector<double>& u, double lambda, double dt, double dx, Scratch& w,
                  double t) {
    const std::size_t n = u.size();
    const auto& k = kernels::ops();
    if (lambda == 0.0 || dt == 0.0) return;
    const double nu = lambda * k.max_abs(u.data(), n) * dt / dx;
    if (!(nu <= 1.0 + 1e-9))
        throw NumericalError("CFL violation in Burgers substep (nu = " + std::to_string(nu) + ")",
                             t);
    k.uno_slopes(u.data(), w.slope.data(), n);
    k.hancock_faces(u.data(), w.slope.data(), lambda * dt / (2.0 * dx), w.ul.data(), w.ur.data(),
                    n);
    k.godunov_flux(w.ur.data(), w.ul.data(), lambda, w.flux.data(), n);
    k.flux_update(u.data(), w.flux.data(), dt / dx, u.data(), n);
}

void burgers_signed(std::vector<double>& u, double lambda, double dt, double dx, Scratch& w,
                    double t) {
    if (lambda >= 0.0) {
        burgers_core(u, lambda, dt, dx, w, t);
        return;
    }
    // u -> -u maps the lambda < 0 law onto the lambda > 0 one (entropy
    // solutions included).
    for (double& v : u) v = -v;
    burgers_core(u, -lambda, dt, dx, w, t);
    for (double& v : u) v = -v;
}

void rk2_convolution(std::vector<double>& u, const ConvolutionPlan& plan, double gamma, double dt,
                     Scratch& w) {
    const std::size_t n = u.size();
    const auto& k = kernels::ops();
    plan.convolve(u, -gamma, w.rhs);
    k.add_scaled(w.mid.data(), u.data(), w.rhs.data(), 0.5 * dt, n);
    plan.convolve(w.mid, -gamma, w.rhs);
    k.add_scaled(u.data(), u.data(), w.rhs.data(), dt, n);
}

// Joint midpoint step for the linearly coupled pair:
//   a1_t = +gamma K(.)a3,  a3_t = -gamma K(.)a1   (cross correlation form)
void rk2_convolution_pair(std::vector<double>& a1, std::vector<double>& a3,
                          const ConvolutionPlan& plan, double gamma, double dt, Scratch& w1,
                          Scratch& w3) {
    const std::size_t n = a1.size();
    const auto& k = kernels::ops();
    plan.correlate(a3, gamma, w1.rhs);
    plan.correlate(a1, -gamma, w3.rhs);
    k.add_scaled(w1.mid.data(), a1.data(), w1.rhs.data(), 0.5 * dt, n);
    k.add_scaled(w3.mid.data(), a3.data(), w3.rhs.data(), 0.5 * dt, n);
    plan.correlate(w3.mid, gamma, w1.rhs);
    plan.correlate(w1.mid, -gamma, w3.rhs);
    k.add_scaled(a1.data(), a1.data(), w1.rhs.data(), dt, n);
    k.add_scaled(a3.data(), a3.data(), w3.rhs.data(), dt, n);
}

void strang_core(std::vector<double>& u, const ConvolutionPlan& plan,
                 const ModelCoefficients& coeffs, double dt, double dx, Scratch& w, double t) {
    rk2_convolution(u, plan, coeffs.Gamma, 0.5 * dt, w);
    burgers_core(u, coeffs.Lambda, dt, dx, w, t);
    rk2_convolution(u, plan, coeffs.Gamma, 0.5 * dt, w);
}

void strang_core_pair(std::vector<double>& a1, std::vector<double>& a3,
                      const ConvolutionPlan& plan, const ModelCoefficients& coeffs, double dt,
                      double dx, Scratch& w1, Scratch& w3, double t) {
    rk2_convolution_pair(a1, a3, plan, coeffs.Gamma, 0.5 * dt, w1, w3);
    burgers_signed(a1, -coeffs.Lambda, dt, dx, w1, t);
    burgers_core(a3, coeffs.Lambda, dt, dx, w3, t);
    rk2_convolution_pair(a1, a3, plan, coeffs.Gamma, 0.5 * dt, w1, w3);
}

void validate_config(const SolverConfig& config) {
    if (config.n < 16) throw ParameterDomainError("N", "grid size must be at least 16");
    if (!(config.cfl > 0.0 && config.cfl <= 1.0))
        throw ParameterDomainError("cfl", "must lie in (0, 1]");
    if (!(config.t_end >= 0.0)) throw ParameterDomainError("t_end", "must be nonnegative");
    if (config.fixed_dt < 0.0) throw ParameterDomainError("fixed_dt", "must be nonnegative");
}

std::vector<double> snapshot_schedule(const SolverConfig& config) {
    std::vector<double> times;
    for (double t : config.snapshot_times)
        if (t > 0.0 && t <= config.t_end) times.push_back(t);
    if (config.t_end > 0.0) times.push_back(config.t_end);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) <= 1e-12 * (1.0 + config.t_end);
                            }),
                times.end());
    return times;
}

// Generic evolution driver shared by the single and pair modes. Finiteness is
// checked through the field sum: addition propagates NaN/Inf on every
// backend, whereas a max can silently drop them.
template <typename StepFn, typename MaxFn, typename FiniteFn, typename SnapFn>
void run_evolution(const SolverConfig& config, const SineKernel& kernel,
                   const ModelCoefficients& coeffs, StepFn&& do_step, MaxFn&& field_max,
                   FiniteFn&& field_finite, SnapFn&& take_snapshot) {
    const double dx = PeriodicField::two_pi / static_cast<double>(config.n);
    const double kernel_scale =
        coeffs.Gamma * pi * kernel.max_abs_coefficient() * static_cast<double>(kernel.modes());
    // RK2 stability margin for the oscillatory convolution subproblem
    const double dt_convolution =
        kernel_scale > 0.0 ? 0.5 / kernel_scale : std::numeric_limits<double>::infinity();
    const std::vector<double> schedule = snapshot_schedule(config);
    const double time_eps = 1e-12 * (1.0 + config.t_end);

    double t = 0.0;
    take_snapshot(t);
    std::size_t next_snap = 0;
    std::size_t steps_since_snapshot = 0;
    while (next_snap < schedule.size()) {
        const double target = schedule[next_snap];
        if (t >= target - time_eps) { // already landed here; keep times strictly increasing
            ++next_snap;
            continue;
        }
        if (!field_finite()) throw NumericalError("non-finite field value", t);
        const double m = field_max();
        double dt;
        if (config.fixed_dt > 0.0) {
            dt = config.fixed_dt;
        } else {
            const double speed = coeffs.Lambda * m;
            dt = speed > 0.0 ? config.cfl * dx / speed : std::numeric_limits<double>::infinity();
            dt = std::min(dt, dt_convolution);
        }
        bool lands = false;
        if (t + dt >= target - time_eps) {
            dt = target - t;
            lands = true;
        }
        do_step(dt, t);
        t = lands ? target : t + dt;
        ++steps_since_snapshot;
        const bool stride_hit =
            config.snapshot_stride > 0 && steps_since_snapshot >= config.snapshot_stride;
        if (lands || stride_hit) {
            if (!field_finite()) throw NumericalError("non-finite field value", t);
            take_snapshot(t);
            steps_since_snapshot = 0;
            if (lands) ++next_snap;
        }
    }
}

} // namespace

PeriodicField burgers_substep(const PeriodicField& field, double lambda, double dt) {
    std::vector<double> u(field.data(), field.data() + field.size());
    Scratch w(field.size());
    burgers_signed(u, lambda, dt, field.dx(), w, 0.0);
    return PeriodicField(std::move(u));
}

PeriodicField convolution_substep(const PeriodicField& field, const SineKernel& kernel,
                                  double gamma, double dt) {
    ConvolutionPlan plan(kernel, field.size());
    std::vector<double> u(field.data(), field.data() + field.size());
    Scratch w(field.size());
    rk2_convolution(u, plan, gamma, dt, w);
    return PeriodicField(std::move(u));
}

PeriodicField strang_step(const PeriodicField& field, const SineKernel& kernel,
                          const ModelCoefficients& coeffs, double dt) {
    ConvolutionPlan plan(kernel, field.size());
    std::vector<double> u(field.data(), field.data() + field.size());
    Scratch w(field.size());
    strang_core(u, plan, coeffs, dt, field.dx(), w, 0.0);
    return PeriodicField(std::move(u));
}

EvolutionRecord evolve(const SolverConfig& config, const PeriodicField& initial,
                       const SineKernel& kernel, const ModelCoefficients& coeffs) {
    validate_config(config);
    if (config.mode != SolverMode::single)
        throw ParameterDomainError("mode", "evolve runs the single-field mode");
    if (initial.size() != config.n)
        throw ParameterDomainError("initial", "field size does not match the configured grid");

    ConvolutionPlan plan(kernel, config.n);
    std::vector<double> u(initial.data(), initial.data() + initial.size());
    Scratch w(config.n);
    const double dx = initial.dx();
    const auto& k = kernels::ops();

    EvolutionRecord record;
    run_evolution(
        config, kernel, coeffs,
        [&](double dt, double t) { strang_core(u, plan, coeffs, dt, dx, w, t); },
        [&]() { return k.max_abs(u.data(), u.size()); },
        [&]() { return std::isfinite(k.sum(u.data(), u.size())); },
        [&](double t) {
            record.times.push_back(t);
            record.fields.emplace_back(u);
            record.diagnostics.push_back(measure(record.fields.back(), t, config.thresholds));
        });
    return record;
}

PairEvolutionRecord evolve_pair(const SolverConfig& config, const PeriodicField& initial_a1,
                                const PeriodicField& initial_a3, const SineKernel& kernel,
                                const ModelCoefficients& coeffs) {
    validate_config(config);
    if (config.mode != SolverMode::pair)
        throw ParameterDomainError("mode", "evolve_pair runs the two-field mode");
    if (initial_a1.size() != config.n || initial_a3.size() != config.n)
        throw ParameterDomainError("initial", "field sizes must both match the configured grid");

    ConvolutionPlan plan(kernel, config.n);
    std::vector<double> a1(initial_a1.data(), initial_a1.data() + initial_a1.size());
    std::vector<double> a3(initial_a3.data(), initial_a3.data() + initial_a3.size());
    Scratch w1(config.n), w3(config.n);
    const double dx = initial_a1.dx();
    const auto& k = kernels::ops();

    PairEvolutionRecord record;
    run_evolution(
        config, kernel, coeffs,
        [&](double dt, double t) { strang_core_pair(a1, a3, plan, coeffs, dt, dx, w1, w3, t); },
        [&]() {
            return std::max(k.max_abs(a1.data(), a1.size()), k.max_abs(a3.data(), a3.size()));
        },
        [&]() {
            return std::isfinite(k.sum(a1.data(), a1.size()) + k.sum(a3.data(), a3.size()));
        },
        [&](double t) {
            record.times.push_back(t);
            record.a1.emplace_back(a1);
            record.a3.emplace_back(a3);
            record.diagnostics_a1.push_back(measure(record.a1.back(), t, config.thresholds));
            record.diagnostics_a3.push_back(measure(record.a3.back(), t, config.thresholds));
        });
    return record;
}

} // namespace ductwave
