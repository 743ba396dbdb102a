#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ductwave/coefficients.hpp"
#include "ductwave/field.hpp"

namespace ductwave {

/// Thresholds for the singularity detectors. A shock shows up as an O(1)
/// jump across one cell (first-difference ratio ~ 1/dx); a corner as an O(1)
/// jump of the slope with bounded values (second-difference ratio ~ 1, to be
/// compared against the sqrt(dx) mid-scale). c_corner is calibrated so the
/// maximum-amplitude wave flags a corner (its slope jump is ~1.56 for air)
/// while pre-breaking steepening does not fire prematurely.
struct FlagThresholds {
    double c_shock = 0.5;
    double c_corner = 12.0;
};

struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;       // sum sigma_i^2 dx
    double mean = 0.0;         // sum sigma_i dx / 2pi
    double tv = 0.0;           // periodic total variation
    double max_gradient = 0.0; // max |delta sigma| / dx
    bool shock_flag = false;
    bool corner_flag = false;
};

DiagnosticsRecord measure(const PeriodicField& field, double t = 0.0,
                          const FlagThresholds& thresholds = {});

struct PeriodEstimate {
    double period = 0.0;
    double confidence = 0.0; // dip depth relative to the typical recurrence level
};

struct AttractorReport {
    double best_alpha = 0.0;
    double best_phi = 0.0;
    double distance = 0.0; // L2 distance to the nearest traveling wave
    std::vector<PeriodEstimate> period_estimates;
};

/// Minimizes the L2 distance between the field and the sampled traveling-wave
/// family over a coarse (alpha, phi) product grid, then refines the argmin by
/// coordinate golden-section search.
AttractorReport distance_to_family(const PeriodicField& field, const ModelCoefficients& coeffs,
                                   std::span<const double> alpha_grid,
                                   std::span<const double> phi_grid);

AttractorReport distance_to_family(const PeriodicField& field, const ModelCoefficients& coeffs);

struct RecurrenceConfig {
    double dip_threshold = 0.25; // a dip qualifies below this fraction of the median level
    double shape_floor = 0.01;   // shift-minimized structure below this fraction of the plain
                                 // level is grid-alignment noise, not a shape oscillation
    std::size_t max_base_points = 8; // snapshots averaged over per lag
};

/// Recurrence-based period estimation over uniformly spaced snapshots in
/// [window_start, window_end]. Returns the translation period (smallest-tau
/// dip of the plain recurrence function) and, when present, the shape
/// oscillation period (smallest-tau dip of the shift-minimized recurrence).
/// Empty result means no recurrence was found below the threshold.
std::vector<PeriodEstimate> estimate_periods(std::span<const double> times,
                                             std::span<const PeriodicField> fields,
                                             double window_start, double window_end,
                                             const RecurrenceConfig& config = {});

} // namespace ductwave
