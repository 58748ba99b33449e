#include "grayud/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "grayud/errors.hpp"

namespace grayud {

std::string status_name(SweepStatus status) {
    switch (status) {
        case SweepStatus::Valid: return "valid";
        case SweepStatus::NoIntersection: return "no_intersection";
        case SweepStatus::Coincident: return "coincident";
        case SweepStatus::Asymmetric: return "asymmetric";
        case SweepStatus::NotGray: return "not_gray";
    }
    return "unknown";
}

namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> values;
    values.reserve(steps);
    if (steps == 1) {
        values.push_back(lo);
        return values;
    }
    for (int i = 0; i < steps; ++i)
        values.push_back(lo + (hi - lo) * i / (steps - 1));
    return values;
}

SweepEntry classify(double h, double theta, double tol, double sep_threshold) {
    SweepEntry entry{h, theta, SweepStatus::Valid,
                     std::numeric_limits<double>::quiet_NaN(), 0};
    Embedding e;
    try {
        e = assemble({h, theta}, sep_threshold);
    } catch (const DomainError&) {
        entry.status = SweepStatus::NoIntersection;
        return entry;
    } catch (const DegenerateError& err) {
        entry.status = SweepStatus::Coincident;
        entry.min_separation = err.separation();
        return entry;
    }

    const ValidationReport report = validate(e, tol, sep_threshold);
    entry.min_separation = report.min_vertex_separation;
    entry.accidental_pairs = static_cast<int>(report.accidental_unit_pairs.size());
    if (report.symmetry_order < 3 || !report.induced_symmetry_permutation ||
        !is_semiregular(*report.induced_symmetry_permutation, 3))
        entry.status = SweepStatus::Asymmetric;
    else if (!report.isomorphic_to_gray)
        entry.status = SweepStatus::NotGray;
    return entry;
}

}  // namespace

FeasibilityMap sweep(double h_lo, double h_hi, double theta_lo, double theta_hi,
                     int steps_h, int steps_theta, double tol, double sep_threshold) {
    if (!(h_lo > 0.0) || !(h_hi < 1.0) || h_lo > h_hi)
        throw std::invalid_argument("h range must satisfy 0 < lo <= hi < 1");
    if (theta_lo > theta_hi)
        throw std::invalid_argument("theta range must satisfy lo <= hi");
    if (steps_h < 1 || steps_theta < 1)
        throw std::invalid_argument("step counts must be positive");

    FeasibilityMap map;
    map.h_values = linspace(h_lo, h_hi, steps_h);
    map.theta_values = linspace(theta_lo, theta_hi, steps_theta);
    map.entries.reserve(static_cast<std::size_t>(steps_h) * steps_theta);
    for (double h : map.h_values)
        for (double theta : map.theta_values)
            map.entries.push_back(classify(h, theta, tol, sep_threshold));
    return map;
}

}  // namespace grayud
