#include "grayud/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grayud/errors.hpp"

namespace grayud {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Role> roles)
    : n_(n), edges_(std::move(edges)), roles_(std::move(roles)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint out of range: {" +
                                        std::to_string(a) + "," + std::to_string(b) + "}");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    adj_.assign(n_, {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    if (!roles_.empty()) {
        if (static_cast<int>(roles_.size()) != n_)
            throw std::invalid_argument("roles must cover every vertex");
        for (const auto& [a, b] : edges_)
            if (roles_[a] == roles_[b])
                throw std::invalid_argument(
                    "edge {" + std::to_string(a) + "," + std::to_string(b) +
                    "} joins two vertices of the same role");
    }
}

bool Graph::has_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && roles_ == other.roles_;
}

Graph lcf_graph(const LcfCode& code) {
    const int k = static_cast<int>(code.offsets.size());
    if (k == 0 || code.repeats <= 0)
        throw LcfError("LCF code must have offsets and a positive repeat count", 0);
    const int n = k * code.repeats;

    auto offset_at = [&](int i) { return code.offsets[i % k]; };
    auto mod = [n](int x) { return ((x % n) + n) % n; };

    for (int i = 0; i < n; ++i) {
        const int o = offset_at(i);
        if (o == 0)
            throw LcfError("zero offset at position " + std::to_string(i), i);
        const int a = std::abs(o);
        if (a % n == 1 || a % n == n - 1)
            throw LcfError("chord at position " + std::to_string(i) +
                           " duplicates a Hamilton-cycle edge", i);
        const int j = mod(i + o);
        if (mod(offset_at(j) + o) != 0)
            throw LcfError("inconsistent chord pairing at position " + std::to_string(i) +
                           ": partner " + std::to_string(j) + " does not point back", i);
    }

    std::vector<Graph::Edge> edges;
    edges.reserve(3 * n / 2);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        const int j = mod(i + offset_at(i));
        if (i < j) edges.emplace_back(i, j);
    }
    return Graph(n, std::move(edges));
}

Graph gray_graph() {
    Graph g = lcf_graph({{7, -7, 13, -13, 25, -25}, 9});
    auto parts = bipartition(g);
    // The LCF graph is bipartite; class A contains vertex 0.
    std::vector<Role> roles(g.vertex_count(), Role::Solid);
    for (int v : parts->first) roles[v] = Role::Hollow;
    return Graph(g.vertex_count(), g.edges(), std::move(roles));
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    // Non-tree edge closes a cycle through the root's BFS tree.
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;  // lowest id of the component goes to A
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

bool verify_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<bool> seen(n, false);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
    return true;
}

}  // namespace grayud
