#include "grayud/configuration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grayud {

IncidenceConfiguration::IncidenceConfiguration(std::vector<std::string> point_labels,
                                               std::vector<std::string> line_labels,
                                               std::vector<Flag> flags)
    : point_labels_(std::move(point_labels)),
      line_labels_(std::move(line_labels)),
      flags_(std::move(flags)) {
    for (const auto& [p, l] : flags_) {
        if (p < 0 || p >= point_count() || l < 0 || l >= line_count())
            throw std::invalid_argument("flag references an undeclared id: (" +
                                        std::to_string(p) + "," + std::to_string(l) + ")");
    }
    std::sort(flags_.begin(), flags_.end());
    if (std::adjacent_find(flags_.begin(), flags_.end()) != flags_.end())
        throw std::invalid_argument("repeated flag");
}

int IncidenceConfiguration::point_degree(int p) const {
    return static_cast<int>(
        std::count_if(flags_.begin(), flags_.end(),
                      [p](const Flag& f) { return f.first == p; }));
}

int IncidenceConfiguration::line_degree(int l) const {
    return static_cast<int>(
        std::count_if(flags_.begin(), flags_.end(),
                      [l](const Flag& f) { return f.second == l; }));
}

IncidenceConfiguration grid3_configuration(int k) {
    if (k < 2) throw std::invalid_argument("grid3_configuration requires k >= 2");

    auto point_id = [k](int i, int j, int l) { return (i * k + j) * k + l; };
    std::vector<std::string> points;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                points.push_back("p(" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(l) + ")");

    // Lines ordered by varying axis (0,1,2), then by the two fixed
    // coordinates lexicographically.
    std::vector<std::string> lines;
    std::vector<IncidenceConfiguration::Flag> flags;
    int line_id = 0;
    for (int axis = 0; axis < 3; ++axis) {
        for (int u = 0; u < k; ++u) {
            for (int v = 0; v < k; ++v) {
                lines.push_back("l(axis" + std::to_string(axis) + ";" +
                                std::to_string(u) + "," + std::to_string(v) + ")");
                // fixed coordinates are the non-axis dimensions in index order
                int fixed[2], fi = 0;
                for (int d = 0; d < 3; ++d)
                    if (d != axis) fixed[fi++] = d;
                for (int t = 0; t < k; ++t) {
                    int c[3];
                    c[axis] = t;
                    c[fixed[0]] = u;
                    c[fixed[1]] = v;
                    flags.emplace_back(point_id(c[0], c[1], c[2]), line_id);
                }
                ++line_id;
            }
        }
    }
    return IncidenceConfiguration(std::move(points), std::move(lines), std::move(flags));
}

IncidenceConfiguration grid2_configuration(int k) {
    if (k < 2) throw std::invalid_argument("grid2_configuration requires k >= 2");

    std::vector<std::string> points;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            points.push_back("p(" + std::to_string(i) + "," + std::to_string(j) + ")");

    std::vector<std::string> lines;
    std::vector<IncidenceConfiguration::Flag> flags;
    for (int i = 0; i < k; ++i) {
        lines.push_back("row" + std::to_string(i));
        for (int j = 0; j < k; ++j) flags.emplace_back(i * k + j, i);
    }
    for (int j = 0; j < k; ++j) {
        lines.push_back("col" + std::to_string(j));
        for (int i = 0; i < k; ++i) flags.emplace_back(i * k + j, k + j);
    }
    return IncidenceConfiguration(std::move(points), std::move(lines), std::move(flags));
}

Graph levi_graph(const IncidenceConfiguration& config) {
    const int p = config.point_count();
    const int n = p + config.line_count();
    std::vector<Graph::Edge> edges;
    edges.reserve(config.flags().size());
    for (const auto& [pt, ln] : config.flags()) edges.emplace_back(pt, p + ln);
    std::vector<Role> roles(n, Role::Hollow);
    std::fill(roles.begin(), roles.begin() + p, Role::Solid);
    return Graph(n, std::move(edges), std::move(roles));
}

}  // namespace grayud
