#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ductwave/coefficients.hpp"
#include "ductwave/field.hpp"
#include "ductwave/solver.hpp"

namespace ductwave {

/// One term of a finite Fourier series initial condition:
/// cos_coeff * cos(k x + phase) + sin_coeff * sin(k x + phase), k >= 1.
struct HarmonicTerm {
    int harmonic = 1;
    double cos_coeff = 0.0;
    double sin_coeff = 0.0;
    double phase = 0.0;
};

enum class Scenario { coeffs, dispersion, travwave, evolve, evolve_pair, attractor, sweep };

std::string scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(const std::string& name);

struct RunConfig {
    Scenario scenario = Scenario::coeffs;
    std::string output_dir = "out";

    GasParameters gas;                         // delta = 0.4, b = 0
    bool allow_delta_out_of_range = false;

    std::vector<double> kernel_coefficients{1.0}; // A_1..A_M

    SolverConfig solver;                       // N = 1024, cfl = 0.45
    std::optional<double> t_end;               // scenario default applies if unset
    double snapshot_interval = 0.0;            // > 0: uniform snapshot times

    std::vector<HarmonicTerm> initial_condition;
    std::vector<HarmonicTerm> initial_condition_a1; // pair mode; mirror of a3 if empty

    int dispersion_k_max = 8;
    std::vector<double> b_list;                // per-scenario default if empty
    double alpha_step = 0.05;
    std::vector<double> alpha_list{0.2, 0.6, 1.0};
    double attractor_window = 40.0;
};

/// Parses the line-oriented key = value format (see README) and validates
/// every field, filling defaults. Throws ConfigParseError with a line number
/// for malformed input and ParameterDomainError naming the field for values
/// outside their domain.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

/// Canonical one-line rendering of a fully resolved config; every CSV output
/// embeds it as a comment.
std::string describe(const RunConfig& config);

/// Samples the finite Fourier series on an n-point grid.
PeriodicField build_initial_condition(const std::vector<HarmonicTerm>& terms, std::size_t n);

} // namespace ductwave
