#ifndef GRAYUD_ISOMORPHISM_HPP
#define GRAYUD_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "grayud/configuration.hpp"
#include "grayud/graph.hpp"
#include "grayud/permutation.hpp"

namespace grayud {

// Vertex bijection from G to H together with the result of an
// independent edge-by-edge re-verification.
struct IsomorphismCertificate {
    Permutation mapping;
    bool verified = false;
};

// Re-checks a mapping edge by edge; independent of the search that
// produced it.
bool verify_certificate(const Graph& g, const Graph& h, const Permutation& mapping);

// Exact backtracking search with partition refinement (degree and
// distance-profile invariants, then neighborhood color refinement),
// candidates tried in increasing vertex id. Deterministic.
std::optional<IsomorphismCertificate> find_isomorphism(const Graph& g, const Graph& h);

// Incidence-preserving bijection test: points map to points and lines to
// lines (dualities do not count). Runs the isomorphism search on the Levi
// graphs with the point/line sides pinned.
bool configurations_isomorphic(const IncidenceConfiguration& a,
                               const IncidenceConfiguration& b);

// Order of the full automorphism group by exhaustive refined
// backtracking. Rejects graphs with more than 100 vertices.
long automorphism_count(const Graph& g);

// Orbit partitions under the full automorphism group, computed by
// union-find over the enumerated automorphisms. Same scale bound as
// automorphism_count. Orbits are sorted by their smallest element;
// members sorted ascending.
std::vector<std::vector<int>> vertex_orbits(const Graph& g);
std::vector<std::vector<Graph::Edge>> edge_orbits(const Graph& g);

}  // namespace grayud

#endif
