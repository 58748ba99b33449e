#include "grayud/isomorphism.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "grayud/errors.hpp"

namespace grayud {

namespace {

constexpr int kMaxEngineVertices = 128;
using Bits = std::bitset<kMaxEngineVertices>;

// BFS level counts from v, with a trailing count of unreachable vertices.
std::vector<long> distance_profile(const Graph& g, int v) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    int reached = 1;
    std::vector<long> profile;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (static_cast<int>(profile.size()) <= dist[u]) profile.push_back(0);
        ++profile[dist[u]];
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
                ++reached;
            }
        }
    }
    profile.push_back(n - reached);
    return profile;
}

// Joint color refinement over two graphs: seed colors from (degree,
// distance profile), then refine by sorted neighbor-color multisets
// until stable. Colors are comparable across the two graphs. Returns
// false if the per-color class sizes differ (no isomorphism possible).
bool refine_colors(const Graph& g, const Graph& h,
                   std::vector<int>& cg, std::vector<int>& ch,
                   const std::vector<int>& pin_g = {},
                   const std::vector<int>& pin_h = {}) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    cg.assign(ng, 0);
    ch.assign(nh, 0);

    {
        std::map<std::tuple<long, long, std::vector<long>>, int> palette;
        auto seed = [&](const Graph& gr, const std::vector<int>& pin,
                        std::vector<int>& colors) {
            for (int v = 0; v < gr.vertex_count(); ++v) {
                const long pinned = pin.empty() ? 0 : pin[v];
                auto key = std::make_tuple(pinned, static_cast<long>(gr.degree(v)),
                                           distance_profile(gr, v));
                auto [it, _] = palette.try_emplace(key, static_cast<int>(palette.size()));
                colors[v] = it->second;
            }
        };
        seed(g, pin_g, cg);
        seed(h, pin_h, ch);
    }

    int color_count = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        auto next = [&](const Graph& gr, const std::vector<int>& colors) {
            std::vector<int> out(gr.vertex_count());
            for (int v = 0; v < gr.vertex_count(); ++v) {
                std::vector<int> around;
                around.reserve(gr.degree(v));
                for (int w : gr.neighbors(v)) around.push_back(colors[w]);
                std::sort(around.begin(), around.end());
                auto key = std::make_pair(colors[v], std::move(around));
                auto [it, _] = palette.try_emplace(key, static_cast<int>(palette.size()));
                out[v] = it->second;
            }
            return out;
        };
        auto ng_colors = next(g, cg);
        auto nh_colors = next(h, ch);
        cg = std::move(ng_colors);
        ch = std::move(nh_colors);
        const int count = static_cast<int>(palette.size());
        if (count == color_count) break;
        color_count = count;
    }

    std::map<int, int> size_g, size_h;
    for (int c : cg) ++size_g[c];
    for (int c : ch) ++size_h[c];
    return size_g == size_h;
}

// Backtracking matcher. Vertices of g are mapped in a fixed static order
// (most mapped neighbors first, then smallest color class, then lowest
// id); candidate images are tried in increasing id. on_found returns
// true to keep enumerating, false to stop.
class Matcher {
public:
    Matcher(const Graph& g, const Graph& h,
            std::vector<int> cg, std::vector<int> ch)
        : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)) {
        const int nh = h_.vertex_count();
        hadj_.resize(nh);
        for (int v = 0; v < nh; ++v)
            for (int w : h_.neighbors(v)) hadj_[v].set(w);

        int color_count = 0;
        for (int c : cg_) color_count = std::max(color_count, c + 1);
        for (int c : ch_) color_count = std::max(color_count, c + 1);
        class_h_.assign(color_count, {});
        for (int v = 0; v < nh; ++v) class_h_[ch_[v]].push_back(v);
        class_size_g_.assign(color_count, 0);
        for (int c : cg_) ++class_size_g_[c];

        build_order();
    }

    void enumerate(const std::function<bool(const std::vector<int>&)>& on_found) {
        mapping_.assign(g_.vertex_count(), -1);
        used_.reset();
        on_found_ = &on_found;
        stopped_ = false;
        extend(0);
    }

private:
    void build_order() {
        const int n = g_.vertex_count();
        std::vector<bool> chosen(n, false);
        std::vector<int> mapped_neighbors(n, 0);
        order_.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (chosen[v]) continue;
                if (best < 0 ||
                    mapped_neighbors[v] > mapped_neighbors[best] ||
                    (mapped_neighbors[v] == mapped_neighbors[best] &&
                     class_size_g_[cg_[v]] < class_size_g_[cg_[best]]))
                    best = v;
            }
            chosen[best] = true;
            order_.push_back(best);
            for (int w : g_.neighbors(best)) ++mapped_neighbors[w];
        }
    }

    void extend(int depth) {
        if (stopped_) return;
        if (depth == g_.vertex_count()) {
            if (!(*on_found_)(mapping_)) stopped_ = true;
            return;
        }
        const int v = order_[depth];
        Bits required;
        for (int u : g_.neighbors(v))
            if (mapping_[u] >= 0) required.set(mapping_[u]);
        for (int w : class_h_[cg_[v]]) {
            if (used_.test(w)) continue;
            if ((hadj_[w] & used_) != required) continue;
            mapping_[v] = w;
            used_.set(w);
            extend(depth + 1);
            used_.reset(w);
            mapping_[v] = -1;
            if (stopped_) return;
        }
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> cg_, ch_;
    std::vector<Bits> hadj_;
    std::vector<std::vector<int>> class_h_;
    std::vector<int> class_size_g_;
    std::vector<int> order_;
    std::vector<int> mapping_;
    Bits used_;
    const std::function<bool(const std::vector<int>&)>* on_found_ = nullptr;
    bool stopped_ = false;
};

void check_engine_scale(const Graph& g, const Graph& h) {
    if (g.vertex_count() > kMaxEngineVertices || h.vertex_count() > kMaxEngineVertices)
        throw ScaleError("isomorphism engine supports at most " +
                         std::to_string(kMaxEngineVertices) + " vertices");
}

void check_exhaustive_scale(const Graph& g) {
    if (g.vertex_count() > 100)
        throw ScaleError("exhaustive automorphism operations are limited to 100 vertices");
}

// Runs the matcher over all automorphisms of g, invoking visit for each.
void for_each_automorphism(const Graph& g,
                           const std::function<void(const std::vector<int>&)>& visit) {
    check_engine_scale(g, g);
    if (g.vertex_count() == 0) {
        visit({});
        return;
    }
    std::vector<int> cg, ch;
    refine_colors(g, g, cg, ch);
    Matcher matcher(g, g, cg, ch);
    matcher.enumerate([&](const std::vector<int>& m) {
        visit(m);
        return true;
    });
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool verify_certificate(const Graph& g, const Graph& h, const Permutation& mapping) {
    if (mapping.size() != g.vertex_count()) return false;
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    for (const auto& [a, b] : g.edges())
        if (!h.has_edge(mapping(a), mapping(b))) return false;
    return true;
}

std::optional<IsomorphismCertificate> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    check_engine_scale(g, h);
    if (g.vertex_count() == 0)
        return IsomorphismCertificate{Permutation(), true};

    std::vector<int> cg, ch;
    if (!refine_colors(g, h, cg, ch)) return std::nullopt;

    Matcher matcher(g, h, cg, ch);
    std::optional<std::vector<int>> found;
    matcher.enumerate([&](const std::vector<int>& m) {
        found = m;
        return false;
    });
    if (!found) return std::nullopt;

    Permutation mapping(*found);
    return IsomorphismCertificate{mapping, verify_certificate(g, h, mapping)};
}

bool configurations_isomorphic(const IncidenceConfiguration& a,
                               const IncidenceConfiguration& b) {
    if (a.point_count() != b.point_count() || a.line_count() != b.line_count())
        return false;
    if (a.flags().size() != b.flags().size()) return false;
    const Graph ga = levi_graph(a), gb = levi_graph(b);
    check_engine_scale(ga, gb);
    if (ga.vertex_count() == 0) return true;

    auto side = [](const Graph& g) {
        std::vector<int> pin(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            pin[v] = g.role(v) == Role::Solid ? 0 : 1;
        return pin;
    };
    std::vector<int> cg, ch;
    if (!refine_colors(ga, gb, cg, ch, side(ga), side(gb))) return false;

    Matcher matcher(ga, gb, cg, ch);
    bool found = false;
    std::vector<int> mapping;
    matcher.enumerate([&](const std::vector<int>& m) {
        found = true;
        mapping = m;
        return false;
    });
    return found && verify_certificate(ga, gb, Permutation(mapping));
}

long automorphism_count(const Graph& g) {
    check_exhaustive_scale(g);
    long count = 0;
    for_each_automorphism(g, [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g) {
    check_exhaustive_scale(g);
    const int n = g.vertex_count();
    UnionFind uf(n);
    for_each_automorphism(g, [&](const std::vector<int>& m) {
        for (int v = 0; v < n; ++v) uf.unite(v, m[v]);
    });
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [_, members] : groups) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

std::vector<std::vector<Graph::Edge>> edge_orbits(const Graph& g) {
    check_exhaustive_scale(g);
    const auto& edges = g.edges();
    const int m = g.edge_count();
    auto edge_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), Graph::Edge{a, b});
        return static_cast<int>(it - edges.begin());
    };
    UnionFind uf(m);
    for_each_automorphism(g, [&](const std::vector<int>& p) {
        for (int e = 0; e < m; ++e)
            uf.unite(e, edge_index(p[edges[e].first], p[edges[e].second]));
    });
    std::map<int, std::vector<Graph::Edge>> groups;
    for (int e = 0; e < m; ++e) groups[uf.find(e)].push_back(edges[e]);
    std::vector<std::vector<Graph::Edge>> orbits;
    for (auto& [_, members] : groups) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

}  // namespace grayud
