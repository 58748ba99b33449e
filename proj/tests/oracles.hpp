// Independent brute-force oracles used to cross-check the library. These
// deliberately avoid the library's own algorithms: girth by exhaustive
// cycle enumeration, automorphisms by trying every vertex permutation.
#ifndef GRAYUD_TESTS_ORACLES_HPP
#define GRAYUD_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "grayud/graph.hpp"

namespace oracles {

// Shortest cycle of length <= max_len by DFS over simple paths whose
// smallest vertex is the start (each cycle enumerated from its minimum).
inline std::optional<int> brute_girth(const grayud::Graph& g, int max_len) {
    const int n = g.vertex_count();
    int best = max_len + 1;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);

    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (static_cast<int>(path.size()) >= best) return;
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                best = std::min<int>(best, static_cast<int>(path.size()));
                continue;
            }
            if (w <= start || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = true;
            dfs(start, w);
            on_path[w] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        dfs(s, s);
    }
    if (best > max_len) return std::nullopt;
    return best;
}

// Any simple cycle of odd length, by the same exhaustive path search.
inline bool brute_has_odd_cycle(const grayud::Graph& g) {
    const int n = g.vertex_count();
    bool found = false;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (found) return;
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path.size() % 2 == 1) {
                found = true;
                return;
            }
            if (w <= start || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = true;
            dfs(start, w);
            on_path[w] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n && !found; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        dfs(s, s);
    }
    return found;
}

// Every permutation of the vertices that maps edges to edges.
inline std::vector<std::vector<int>> brute_automorphisms(const grayud::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        bool ok = true;
        for (const auto& [a, b] : g.edges())
            if (!g.has_edge(perm[a], perm[b])) {
                ok = false;
                break;
            }
        if (ok) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

inline std::vector<std::vector<int>> brute_vertex_orbits(const grayud::Graph& g) {
    const auto autos = brute_automorphisms(g);
    const int n = g.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return rep[x] == x ? x : rep[x] = find(rep[x]);
    };
    for (const auto& p : autos)
        for (int v = 0; v < n; ++v) rep[find(v)] = find(p[v]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [_, members] : groups) orbits.push_back(members);
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

// Simple random graph on n vertices with independent edge probability p.
inline grayud::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<grayud::Graph::Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) edges.emplace_back(a, b);
    return grayud::Graph(n, std::move(edges));
}

}  // namespace oracles

#endif
