#ifndef GRAYUD_CONFIGURATION_HPP
#define GRAYUD_CONFIGURATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "grayud/graph.hpp"

namespace grayud {

// Abstract point-line incidence structure. Points and lines carry dense
// ids 0..P-1 and 0..L-1 plus human-readable labels; flags are (point,
// line) incidences, stored sorted and duplicate-free.
class IncidenceConfiguration {
public:
    using Flag = std::pair<int, int>;

    IncidenceConfiguration() = default;
    IncidenceConfiguration(std::vector<std::string> point_labels,
                           std::vector<std::string> line_labels,
                           std::vector<Flag> flags);

    int point_count() const { return static_cast<int>(point_labels_.size()); }
    int line_count() const { return static_cast<int>(line_labels_.size()); }
    const std::vector<Flag>& flags() const { return flags_; }
    const std::string& point_label(int p) const { return point_labels_[p]; }
    const std::string& line_label(int l) const { return line_labels_[l]; }

    int point_degree(int p) const;
    int line_degree(int l) const;

private:
    std::vector<std::string> point_labels_;
    std::vector<std::string> line_labels_;
    std::vector<Flag> flags_;
};

// The k x k x k integer grid: k^3 cell points and all 3k^2 axis-parallel
// full lines, incidence by containment. For k=3 this is the (27_3) Gray
// configuration. Ids are assigned by lexicographic order of coordinates
// (points) and of (axis, fixed coordinates) (lines). Requires k >= 2.
IncidenceConfiguration grid3_configuration(int k);

// The k x k planar grid: k^2 cell points, k rows then k columns. For k=3
// this is the (9_2, 6_3) subconfiguration. Requires k >= 2.
IncidenceConfiguration grid2_configuration(int k);

// Point-line incidence graph: points first (role solid), then lines
// (role hollow), one edge per flag.
Graph levi_graph(const IncidenceConfiguration& config);

}  // namespace grayud

#endif
