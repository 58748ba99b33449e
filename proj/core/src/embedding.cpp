#include "grayud/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "grayud/errors.hpp"
#include "grayud/isomorphism.hpp"

namespace grayud {

namespace {

constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;

// Intersection of the unit circles around a and b, on the left of the
// directed segment a -> b. Throws when the circles are concentric,
// separated or tangent.
Vec2 left_unit_circle_intersection(Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double d = ab.norm();
    if (d <= 0.0 || d >= 2.0)
        throw DomainError("unit circles at center distance " + std::to_string(d) +
                          " do not intersect transversally");
    const Vec2 mid = (a + b) * 0.5;
    const double height = std::sqrt(1.0 - 0.25 * d * d);
    const Vec2 normal{-ab.y / d, ab.x / d};  // left of a -> b
    return mid + normal * height;
}

struct G0Geometry {
    Vec2 rows[3];
    Vec2 cols[3];
    Vec2 points[9];  // (row, column) lexicographic
};

G0Geometry g0_geometry(double h) {
    if (!(h > 0.0) || !(h < 1.0))
        throw DomainError("hexagon circumradius h must lie in (0,1), got " +
                          std::to_string(h));
    G0Geometry geo;
    const double deg = std::numbers::pi / 180.0;
    for (int i = 0; i < 3; ++i) {
        const double row_angle = (90.0 + 120.0 * i) * deg;
        const double col_angle = (30.0 + 120.0 * i) * deg;
        geo.rows[i] = {h * std::cos(row_angle), h * std::sin(row_angle)};
        geo.cols[i] = {h * std::cos(col_angle), h * std::sin(col_angle)};
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            geo.points[3 * i + j] = left_unit_circle_intersection(geo.rows[i], geo.cols[j]);
    return geo;
}

// Throws on the closest pair below the threshold.
void check_coincidences(const std::vector<Vec2>& coords, double sep_threshold) {
    const int n = static_cast<int>(coords.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double d = distance(coords[a], coords[b]);
            if (d < sep_threshold)
                throw DegenerateError("vertices " + std::to_string(a) + " and " +
                                          std::to_string(b) + " coincide (separation " +
                                          std::to_string(d) + ")",
                                      a, b, d);
        }
}

}  // namespace

double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Vec2 rotate_about(Vec2 v, Vec2 center, double angle) {
    return center + rotate(v - center, angle);
}

VectorStar vector_star(double theta) {
    VectorStar star;
    star.vectors[0] = {std::cos(theta), std::sin(theta)};
    star.vectors[1] = {std::cos(theta + kTwoThirdsPi), std::sin(theta + kTwoThirdsPi)};
    // closing the triangle keeps the zero-sum invariant exact; the length
    // deviates from 1 only at the last bit
    star.vectors[2] = (star.vectors[0] + star.vectors[1]) * -1.0;
    return star;
}

Embedding build_g0(double h) {
    const G0Geometry geo = g0_geometry(h);

    std::vector<Vec2> coords(15);
    std::vector<Role> roles(15, Role::Hollow);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 3; ++i) coords[i] = geo.rows[i];
    for (int j = 0; j < 3; ++j) coords[3 + j] = geo.cols[j];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int p = 6 + 3 * i + j;
            coords[p] = geo.points[3 * i + j];
            roles[p] = Role::Solid;
            edges.emplace_back(p, i);
            edges.emplace_back(p, 3 + j);
        }
    check_coincidences(coords, kDefaultSeparationThreshold);

    Embedding e;
    e.graph = Graph(15, std::move(edges), std::move(roles));
    e.coords = std::move(coords);
    e.colors.assign(15, ColorTag::None);
    e.params = ConstructionParams{h, 0.0};
    return e;
}

Embedding assemble(const ConstructionParams& params, double sep_threshold) {
    const G0Geometry geo = g0_geometry(params.h);
    const VectorStar star = vector_star(params.theta);

    std::vector<Vec2> coords(54);
    std::vector<Role> roles(54, Role::Hollow);
    std::vector<ColorTag> colors(54, ColorTag::None);
    std::vector<Graph::Edge> edges;
    edges.reserve(81);

    static constexpr ColorTag kCopyColor[3] = {ColorTag::Blue, ColorTag::Green,
                                               ColorTag::Red};
    for (int t = 0; t < 3; ++t) {
        const int base = 15 * t;
        const Vec2 shift = star.vectors[t];
        for (int i = 0; i < 3; ++i) coords[base + i] = geo.rows[i] + shift;
        for (int j = 0; j < 3; ++j) coords[base + 3 + j] = geo.cols[j] + shift;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const int p = base + 6 + 3 * i + j;
                coords[p] = geo.points[3 * i + j] + shift;
                roles[p] = Role::Solid;
                edges.emplace_back(p, base + i);
                edges.emplace_back(p, base + 3 + j);
            }
        for (int v = base; v < base + 15; ++v) colors[v] = kCopyColor[t];
    }

    // The 9 solid vertices of G0 stay in place, relabeled hollow; each is
    // at unit distance from its translated copy in every colored copy.
    for (int idx = 0; idx < 9; ++idx) {
        const int v = 45 + idx;
        coords[v] = geo.points[idx];
        for (int t = 0; t < 3; ++t) edges.emplace_back(v, 15 * t + 6 + idx);
    }

    check_coincidences(coords, sep_threshold);

    Embedding e;
    e.graph = Graph(54, std::move(edges), std::move(roles));
    e.coords = std::move(coords);
    e.colors = std::move(colors);
    e.params = params;
    return e;
}

Graph extract_graph(const Embedding& e) { return e.graph; }

ValidationReport validate(const Embedding& e, double tol, double sep_threshold) {
    ValidationReport report;
    const int n = e.graph.vertex_count();

    for (const auto& [a, b] : e.graph.edges())
        report.max_edge_length_error =
            std::max(report.max_edge_length_error,
                     std::abs(distance(e.coords[a], e.coords[b]) - 1.0));

    report.min_vertex_separation = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double d = distance(e.coords[a], e.coords[b]);
            report.min_vertex_separation = std::min(report.min_vertex_separation, d);
            if (d < sep_threshold) report.coincident_pairs.emplace_back(a, b);
            if (std::abs(d - 1.0) <= tol && !e.graph.has_edge(a, b))
                report.accidental_unit_pairs.emplace_back(a, b);
        }
    if (n < 2) report.min_vertex_separation = 0.0;

    auto [order, perm] = detect_symmetry(e, tol);
    report.symmetry_order = order;
    report.induced_symmetry_permutation = perm;

    auto certificate = find_isomorphism(e.graph, gray_graph());
    report.isomorphic_to_gray = certificate.has_value() && certificate->verified;
    return report;
}

std::pair<int, std::optional<Permutation>> detect_symmetry(const Embedding& e,
                                                           double tol) {
    const int n = e.graph.vertex_count();
    if (n == 0) return {1, std::nullopt};

    Vec2 centroid{0.0, 0.0};
    for (const Vec2& c : e.coords) centroid = centroid + c;
    centroid = centroid * (1.0 / n);

    for (int m = n; m >= 2; --m) {
        const double angle = 2.0 * std::numbers::pi / m;
        std::vector<int> image(n, -1);
        std::vector<bool> taken(n, false);
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const Vec2 target = rotate_about(e.coords[v], centroid, angle);
            int best = -1;
            double best_dist = tol;
            for (int w = 0; w < n; ++w) {
                if (taken[w]) continue;
                const double d = distance(target, e.coords[w]);
                if (d <= best_dist) {
                    best_dist = d;
                    best = w;
                }
            }
            if (best < 0) {
                ok = false;
                break;
            }
            image[v] = best;
            taken[best] = true;
        }
        if (!ok) continue;
        Permutation perm(image);
        if (is_automorphism(e.graph, perm)) return {m, perm};
    }
    return {1, std::nullopt};
}

PointCircleRealization point_circle_realization(const Embedding& e, double tol) {
    const int n = e.graph.vertex_count();
    if (n != 54 || !e.graph.has_roles())
        throw std::invalid_argument("point-circle realization needs a 54-vertex "
                                    "role-balanced embedding");
    PointCircleRealization r;
    for (int v = 0; v < n; ++v)
        (e.graph.role(v) == Role::Hollow ? r.circle_vertices : r.point_vertices)
            .push_back(v);
    if (r.circle_vertices.size() != 27 || r.point_vertices.size() != 27)
        throw std::invalid_argument("embedding is not balanced into 27 solid and "
                                    "27 hollow vertices");

    for (int s : r.point_vertices)
        for (int c : r.circle_vertices) {
            if (std::abs(distance(e.coords[s], e.coords[c]) - 1.0) > tol) continue;
            if (e.graph.has_edge(s, c))
                r.incidences.emplace_back(s, c);
            else
                r.accidental_incidences.emplace_back(s, c);
        }
    return r;
}

IncidenceConfiguration realization_configuration(const Embedding& e,
                                                 const PointCircleRealization& r) {
    std::vector<std::string> point_labels, line_labels;
    std::vector<int> point_index(e.graph.vertex_count(), -1);
    std::vector<int> circle_index(e.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < r.point_vertices.size(); ++i) {
        point_index[r.point_vertices[i]] = static_cast<int>(i);
        point_labels.push_back("v" + std::to_string(r.point_vertices[i]));
    }
    for (std::size_t i = 0; i < r.circle_vertices.size(); ++i) {
        circle_index[r.circle_vertices[i]] = static_cast<int>(i);
        line_labels.push_back("v" + std::to_string(r.circle_vertices[i]));
    }
    std::vector<IncidenceConfiguration::Flag> flags;
    for (const auto& [s, c] : r.incidences)
        flags.emplace_back(point_index[s], circle_index[c]);
    return IncidenceConfiguration(std::move(point_labels), std::move(line_labels),
                                  std::move(flags));
}

}  // namespace grayud
