#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grayud/configuration.hpp"
#include "grayud/errors.hpp"
#include "grayud/graph.hpp"
#include "grayud/isomorphism.hpp"
#include "grayud/permutation.hpp"
#include "oracles.hpp"

using namespace grayud;

TEST_CASE("Permutation: bijection checking, cycles, composition") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);

    const Permutation p({1, 2, 0, 4, 3});
    CHECK(p.cycle_lengths() == std::vector<int>{2, 3});
    CHECK(p.order() == 6);
    CHECK(p.compose(p.inverse()) == Permutation::identity(5));
}

TEST_CASE("rho: the paper's order-3 generator") {
    const Permutation r = rho();
    CHECK(r(0) == 18);
    CHECK(r(18) == 36);
    CHECK(r(36) == 0);
    CHECK(r(35) == 53);
    CHECK(r.compose(r).compose(r) == Permutation::identity(54));
}

TEST_CASE("is_automorphism") {
    const Graph g = gray_graph();
    CHECK(is_automorphism(g, rho()));
    CHECK(is_automorphism(g, Permutation::identity(54)));

    // the swap (0 1) moves 0's neighbor 7 to a non-neighbor of 1
    std::vector<int> swap01(54);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    CHECK_FALSE(is_automorphism(g, Permutation(swap01)));
}

TEST_CASE("is_semiregular") {
    CHECK(is_semiregular(rho(), 3));
    CHECK(rho().cycle_lengths() == std::vector<int>(18, 3));
    CHECK_FALSE(is_semiregular(rho(), 2));
    CHECK_FALSE(is_semiregular(Permutation::identity(54), 3));
    CHECK(is_semiregular(Permutation::identity(54), 1));
}

TEST_CASE("find_isomorphism: Levi construction matches the LCF graph") {
    const Graph g = gray_graph();
    const Graph h = levi_graph(grid3_configuration(3));
    const auto cert = find_isomorphism(g, h);
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
    CHECK(verify_certificate(g, h, cert->mapping));
}

TEST_CASE("find_isomorphism: self-mapping and trivial rejections") {
    const Graph g = gray_graph();
    const auto self = find_isomorphism(g, g);
    REQUIRE(self.has_value());
    CHECK(self->verified);

    CHECK_FALSE(find_isomorphism(g, lcf_graph({{3}, 6})).has_value());

    // same counts, different structure: 6-cycle vs two triangles
    const Graph hexagon(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    const Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(find_isomorphism(hexagon, triangles).has_value());
}

TEST_CASE("automorphism_count: regression and trivial values") {
    CHECK(automorphism_count(gray_graph()) == 1296);
    CHECK(automorphism_count(lcf_graph({{2}, 4})) == 24);  // K4
    CHECK(automorphism_count(Graph(2, {{0, 1}})) == 2);
    CHECK(1296 % rho().order() == 0);
}

TEST_CASE("automorphism operations reject oversized instances") {
    const Graph big(101, {});
    CHECK_THROWS_AS(automorphism_count(big), ScaleError);
    CHECK_THROWS_AS(vertex_orbits(big), ScaleError);
    CHECK_THROWS_AS(edge_orbits(big), ScaleError);
}

TEST_CASE("vertex and edge orbits of the Gray graph") {
    const Graph g = gray_graph();

    const auto vorbits = vertex_orbits(g);
    REQUIRE(vorbits.size() == 2);
    CHECK(vorbits[0].size() == 27);
    CHECK(vorbits[1].size() == 27);

    // orbits coincide with the bipartition classes
    const auto parts = bipartition(g);
    CHECK(vorbits[0] == parts->first);
    CHECK(vorbits[1] == parts->second);

    const auto eorbits = edge_orbits(g);
    REQUIRE(eorbits.size() == 1);
    CHECK(eorbits[0].size() == 81);
}

TEST_CASE("orbits of K4") {
    const auto vorbits = vertex_orbits(lcf_graph({{2}, 4}));
    REQUIRE(vorbits.size() == 1);
    CHECK(vorbits[0].size() == 4);
}

TEST_CASE("orbits partition the vertex set") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracles::random_graph(rng, 7, 0.4);
        const auto orbits = vertex_orbits(g);
        std::set<int> covered;
        for (const auto& orbit : orbits)
            for (int v : orbit) CHECK(covered.insert(v).second);
        CHECK(static_cast<int>(covered.size()) == g.vertex_count());
    }
}

TEST_CASE("engine agrees with brute-force permutation enumeration (n <= 8)") {
    std::mt19937 rng(42);
    int done = 0;
    while (done < 50) {
        const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        const Graph g = oracles::random_graph(rng, n, 0.35);
        const auto autos = oracles::brute_automorphisms(g);

        CHECK(automorphism_count(g) == static_cast<long>(autos.size()));
        CHECK(vertex_orbits(g) == oracles::brute_vertex_orbits(g));

        // is_automorphism agrees with the brute-force list membership
        for (int probe = 0; probe < 5; ++probe) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const bool listed =
                std::find(autos.begin(), autos.end(), perm) != autos.end();
            CHECK(is_automorphism(g, Permutation(perm)) == listed);
        }
        ++done;
    }
}

TEST_CASE("configurations_isomorphic respects point/line sides") {
    CHECK(configurations_isomorphic(grid3_configuration(3), grid3_configuration(3)));
    CHECK(configurations_isomorphic(grid2_configuration(3), grid2_configuration(3)));
    CHECK_FALSE(configurations_isomorphic(grid2_configuration(3), grid2_configuration(2)));
    // the cube's vertex-edge incidences have unequal point/line degrees,
    // so they cannot match the (9_2,6_3) grid
    CHECK_FALSE(configurations_isomorphic(grid3_configuration(2), grid2_configuration(3)));
}
