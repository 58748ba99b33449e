#ifndef GRAYUD_SWEEP_HPP
#define GRAYUD_SWEEP_HPP

#include <string>
#include <vector>

#include "grayud/embedding.hpp"

namespace grayud {

// First failing check in the fixed order: circle intersection ->
// coincidence -> symmetry -> isomorphism.
enum class SweepStatus { Valid, NoIntersection, Coincident, Asymmetric, NotGray };

std::string status_name(SweepStatus status);

struct SweepEntry {
    double h = 0.0;
    double theta = 0.0;
    SweepStatus status = SweepStatus::Valid;
    double min_separation = 0.0;  // NaN when the construction never ran
    int accidental_pairs = 0;
};

// Grid of parameter points in h-major order; entries[i * steps_theta + j]
// holds (h_values[i], theta_values[j]).
struct FeasibilityMap {
    std::vector<double> h_values;
    std::vector<double> theta_values;
    std::vector<SweepEntry> entries;
};

// Labels every point of the inclusive steps_h x steps_theta grid over
// [h_lo, h_hi] x [theta_lo, theta_hi]. Requires 0 < h_lo <= h_hi < 1 and
// at least one step per axis; theta is periodic with period 2*pi/3.
FeasibilityMap sweep(double h_lo, double h_hi, double theta_lo, double theta_hi,
                     int steps_h, int steps_theta,
                     double tol = kDefaultUnitTolerance,
                     double sep_threshold = kDefaultSeparationThreshold);

}  // namespace grayud

#endif
