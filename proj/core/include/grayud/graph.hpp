#ifndef GRAYUD_GRAPH_HPP
#define GRAYUD_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace grayud {

enum class Role { Solid, Hollow };

// Labeled undirected simple graph on dense vertex ids 0..n-1, with an
// optional solid/hollow role per vertex. Immutable after construction.
class Graph {
public:
    using Edge = std::pair<int, int>;  // stored with first < second

    Graph() = default;

    // Edges are normalized (smaller id first), sorted and checked:
    // no self-loops, no duplicates, endpoints in range. If roles are
    // given they must cover every vertex and every edge must join a
    // solid vertex to a hollow one.
    Graph(int n, std::vector<Edge> edges, std::vector<Role> roles = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int a, int b) const;

    bool has_roles() const { return !roles_.empty(); }
    Role role(int v) const { return roles_[v]; }
    const std::vector<Role>& roles() const { return roles_; }

    // Same vertex set, edge set and roles.
    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Role> roles_;
};

// LCF code for a cubic Hamiltonian graph: chord offsets along the
// Hamilton cycle, repeated `repeats` times.
struct LcfCode {
    std::vector<int> offsets;
    int repeats = 1;
};

// Hamilton cycle 0-1-...-(n-1)-0 plus chord {i, (i+o_i) mod n} for each i.
// Rejects codes whose chords do not pair up (o_j != -o_i mod n at the
// chord partner j) or duplicate a cycle edge (|o_i| = 1 or n-1).
Graph lcf_graph(const LcfCode& code);

// The Gray graph from its LCF code [7,-7,13,-13,25,-25]^9, with roles
// assigned from the bipartition; the class of vertex 0 is hollow.
Graph gray_graph();

// Length of a shortest cycle; nullopt for forests. Exact (BFS from every
// vertex).
std::optional<int> girth(const Graph& g);

// Proper 2-coloring as (class A, class B), or nullopt if some component
// has an odd cycle. The lowest vertex id of each component goes to A.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
bipartition(const Graph& g);

// True iff `cycle` visits every vertex exactly once and consecutive pairs
// (cyclically) are edges. A verifier, not a solver.
bool verify_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace grayud

#endif
