#pragma once

#include <iosfwd>

#include "ductwave/config.hpp"

namespace ductwave {

/// Exit codes shared by run_scenario and the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_numerical = 2;

/// Runs one scenario, writing deterministic CSV outputs under
/// config.output_dir. Returns an exit status instead of throwing: 0 success,
/// 1 validation failure, 2 numerical failure.
int run_scenario(const RunConfig& config);

/// Fast deterministic fixtures (closed-form identities, analytic convolution,
/// substep order probes). Prints one PASS/FAIL line per fixture to `log` and
/// returns 0 when all pass, 2 otherwise.
int run_seed_check(std::ostream& log);

} // namespace ductwave
