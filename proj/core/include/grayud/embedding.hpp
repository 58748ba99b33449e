#ifndef GRAYUD_EMBEDDING_HPP
#define GRAYUD_EMBEDDING_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grayud/configuration.hpp"
#include "grayud/graph.hpp"
#include "grayud/permutation.hpp"

namespace grayud {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
};

double distance(Vec2 a, Vec2 b);
Vec2 rotate(Vec2 v, double angle);
Vec2 rotate_about(Vec2 v, Vec2 center, double angle);

// The two degrees of freedom: hexagon circumradius h (in units of the
// edge length, 0 < h < 1) and the rotation theta of the vector star
// relative to G0, in radians.
struct ConstructionParams {
    double h = 0.0;
    double theta = 0.0;
};

// Three unit vectors at mutual 120 degree angles; they sum to zero.
struct VectorStar {
    Vec2 vectors[3];
};

VectorStar vector_star(double theta);

// Which translate a vertex belongs to; the 9 untranslated connector
// vertices (and anything outside the assembled figure) carry None.
enum class ColorTag { Blue, Green, Red, None };

// Maps vertex ids to planar coordinates; edge target length is 1.
struct Embedding {
    Graph graph;
    std::vector<Vec2> coords;
    std::vector<ColorTag> colors;              // per vertex
    std::optional<ConstructionParams> params;  // set by build_g0/assemble
};

// Per-check validation results. Failures are recorded, never thrown.
struct ValidationReport {
    double max_edge_length_error = 0.0;
    double min_vertex_separation = 0.0;
    std::vector<std::pair<int, int>> coincident_pairs;
    std::vector<std::pair<int, int>> accidental_unit_pairs;  // non-adjacent, |d-1| <= tol
    int symmetry_order = 1;
    std::optional<Permutation> induced_symmetry_permutation;
    bool isomorphic_to_gray = false;
};

// 27 unit circles centred at the hollow vertices together with the 27
// solid points.
struct PointCircleRealization {
    std::vector<int> circle_vertices;  // hollow vertex ids, one circle each
    std::vector<int> point_vertices;   // solid vertex ids
    double circle_radius = 1.0;
    // (solid vertex, hollow vertex) pairs with |distance - 1| <= tol and
    // the corresponding graph edge present.
    std::vector<std::pair<int, int>> incidences;
    // unit-distance pairs without a graph edge
    std::vector<std::pair<int, int>> accidental_incidences;
};

inline constexpr double kDefaultUnitTolerance = 1e-9;
inline constexpr double kDefaultSeparationThreshold = 1e-6;

// Unit-distance drawing of the Levi graph of the 3x3 grid: 6 hollow
// vertices on a regular hexagon of circumradius h (rows at 90, 210, 330
// degrees; columns at 30, 150, 270), and one solid vertex per (row,
// column) pair at an intersection of the two unit circles around the
// paired hollow vertices. 15 vertices, 18 unit edges, invariant under
// rotation by 120 degrees about the origin.
//
// Vertex ids: rows 0..2, columns 3..5, then solid vertices 6..14 in
// (row, column) lexicographic order.
Embedding build_g0(double h);

// Construction of the full figure: three translates of G0 by the star
// vectors (blue, green, red) plus the 9 untranslated solid vertices of
// G0 relabeled hollow, joined to their translated copies by 27 unit
// connector edges. 54 vertices, 81 unit edges.
//
// Vertex ids: translate t in {0:blue, 1:green, 2:red} occupies
// 15t..15t+14 with G0's internal order; the relabeled connector vertices
// are 45..53 in (row, column) order.
Embedding assemble(const ConstructionParams& params,
                   double sep_threshold = kDefaultSeparationThreshold);

// The combinatorial graph underlying the embedding, coordinates stripped.
Graph extract_graph(const Embedding& e);

ValidationReport validate(const Embedding& e,
                          double tol = kDefaultUnitTolerance,
                          double sep_threshold = kDefaultSeparationThreshold);

// Largest m such that rotation by 2*pi/m about the coordinate centroid
// maps the vertex set to itself within tol and induces a graph
// automorphism. Returns (1, nullopt) when no nontrivial rotation fits.
std::pair<int, std::optional<Permutation>> detect_symmetry(const Embedding& e,
                                                           double tol = kDefaultUnitTolerance);

PointCircleRealization point_circle_realization(const Embedding& e,
                                                double tol = kDefaultUnitTolerance);

// The incidence structure of a realization restricted to graph-adjacent
// pairs, points and circles numbered in embedding id order.
IncidenceConfiguration realization_configuration(const Embedding& e,
                                                 const PointCircleRealization& r);

}  // namespace grayud

#endif
