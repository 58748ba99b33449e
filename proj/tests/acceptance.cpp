// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grayud/configuration.hpp"
#include "grayud/embedding.hpp"
#include "grayud/errors.hpp"
#include "grayud/graph.hpp"
#include "grayud/isomorphism.hpp"
#include "grayud/permutation.hpp"
#include "grayud/serialize.hpp"
#include "grayud/sweep.hpp"
#include "oracles.hpp"

using namespace grayud;

#ifndef GRAYUD_CLI_PATH
#define GRAYUD_CLI_PATH ""
#endif

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& check) {
    std::string detail;
    bool ok = false;
    try {
        ok = check(detail);
    } catch (const std::exception& err) {
        detail = std::string("exception: ") + err.what();
    }
    std::printf("criterion %2d: %s  %s%s%s\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

double max_edge_error(const Embedding& e) {
    double worst = 0.0;
    for (const auto& [a, b] : e.graph.edges())
        worst = std::max(worst, std::abs(distance(e.coords[a], e.coords[b]) - 1.0));
    return worst;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

int main() {
    const Graph gray = gray_graph();
    const ConstructionParams ref{0.6, 0.3};

    criterion(1, "LCF graph: 54 vertices, 81 edges, cubic, bipartite 27/27, girth 8",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  const Graph g = lcf_graph({{7, -7, 13, -13, 25, -25}, 9});
                  bool cubic = true;
                  for (int v = 0; v < g.vertex_count(); ++v)
                      cubic = cubic && g.degree(v) == 3;
                  const auto parts = bipartition(g);
                  const bool ok = g.vertex_count() == 54 && g.edge_count() == 81 &&
                                  cubic && parts && parts->first.size() == 27 &&
                                  parts->second.size() == 27 && girth(g) == 8;
                  const double elapsed = seconds_since(start);
                  detail = "girth 8, " + std::to_string(elapsed) + " s";
                  return ok && elapsed < 1.0;
              });

    criterion(2, "Levi graph of the 3x3x3 grid is isomorphic to the LCF graph",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  const auto cert = find_isomorphism(levi_graph(grid3_configuration(3)), gray);
                  const double elapsed = seconds_since(start);
                  detail = std::to_string(elapsed) + " s";
                  return cert && cert->verified && elapsed < 5.0;
              });

    criterion(3, "rho is a semiregular automorphism with 18 three-cycles",
              [&](std::string&) {
                  const Permutation r = rho();
                  return is_automorphism(gray, r) && is_semiregular(r, 3) &&
                         r.cycle_lengths().size() == 18;
              });

    criterion(4, "2 vertex orbits of 27, 1 edge orbit of 81",
              [&](std::string& detail) {
                  const auto start = std::chrono::steady_clock::now();
                  const auto vorbits = vertex_orbits(gray);
                  const auto eorbits = edge_orbits(gray);
                  const double elapsed = seconds_since(start);
                  detail = std::to_string(elapsed) + " s";
                  return vorbits.size() == 2 && vorbits[0].size() == 27 &&
                         vorbits[1].size() == 27 && eorbits.size() == 1 &&
                         eorbits[0].size() == 81 && elapsed < 60.0;
              });

    criterion(5, "reference embedding: 54 vertices, 81 unit edges, Gray graph",
              [&](std::string& detail) {
                  const Embedding e = assemble(ref);
                  const ValidationReport report = validate(e, 1e-9, 1e-6);
                  std::ostringstream out;
                  out << "max edge error " << report.max_edge_length_error
                      << ", min separation " << report.min_vertex_separation;
                  detail = out.str();
                  return e.graph.vertex_count() == 54 && e.graph.edge_count() == 81 &&
                         report.max_edge_length_error <= 1e-9 &&
                         report.min_vertex_separation > 1e-6 &&
                         report.isomorphic_to_gray;
              });

    criterion(6, "reference embedding has Z3 rotational symmetry",
              [&](std::string&) {
                  const Embedding e = assemble(ref);
                  const auto [order, perm] = detect_symmetry(e, 1e-9);
                  return order == 3 && perm && is_semiregular(*perm, 3) &&
                         perm->order() == 3 && is_automorphism(e.graph, *perm);
              });

    criterion(7, "100 random feasible parameter points all reproduce the Gray graph",
              [&](std::string& detail) {
                  std::mt19937 rng(2024);
                  std::uniform_real_distribution<double> pick_h(0.05, 0.95);
                  std::uniform_real_distribution<double> pick_theta(
                      0.0, 2.0 * std::numbers::pi / 3.0);
                  int feasible = 0, degenerate = 0, attempts = 0;
                  while (feasible < 100 && attempts < 1000) {
                      ++attempts;
                      Embedding e;
                      try {
                          e = assemble({pick_h(rng), pick_theta(rng)});
                      } catch (const DegenerateError& err) {
                          // rejected with a named reason, never silently
                          if (std::string(err.what()).empty()) return false;
                          ++degenerate;
                          continue;
                      } catch (const DomainError&) {
                          return false;  // samples stay inside (0,1)
                      }
                      ++feasible;
                      const ValidationReport report = validate(e, 1e-9, 1e-6);
                      if (report.max_edge_length_error > 1e-9 ||
                          !report.coincident_pairs.empty() ||
                          !report.isomorphic_to_gray)
                          return false;
                  }
                  detail = std::to_string(feasible) + " feasible, " +
                           std::to_string(degenerate) + " degenerate";
                  return feasible == 100;
              });

    criterion(8, "point-circle realization is the (27_3) Gray configuration",
              [&](std::string&) {
                  const Embedding e = assemble(ref);
                  const PointCircleRealization r = point_circle_realization(e, 1e-9);
                  if (r.incidences.size() != 81) return false;
                  // each circle passes through exactly its 3 graph neighbors
                  std::vector<int> per_circle(54, 0);
                  for (const auto& [s, c] : r.incidences) {
                      if (!e.graph.has_edge(s, c)) return false;
                      ++per_circle[c];
                  }
                  for (int c : r.circle_vertices)
                      if (per_circle[c] != 3) return false;
                  return configurations_isomorphic(realization_configuration(e, r),
                                                   grid3_configuration(3));
              });

    criterion(9, "small-scale oracle agreement over >= 50 random graphs (n <= 8)",
              [&](std::string& detail) {
                  std::mt19937 rng(99);
                  int cases = 0;
                  while (cases < 50) {
                      const int n = 4 + static_cast<int>(rng() % 5);
                      const Graph g = oracles::random_graph(rng, n, 0.35);
                      const auto autos = oracles::brute_automorphisms(g);
                      if (girth(g) != oracles::brute_girth(g, n)) return false;
                      if (automorphism_count(g) != static_cast<long>(autos.size()))
                          return false;
                      if (vertex_orbits(g) != oracles::brute_vertex_orbits(g))
                          return false;
                      // bipartition must 2-color properly exactly when no
                      // odd cycle exists
                      const auto parts = bipartition(g);
                      if (parts.has_value() == oracles::brute_has_odd_cycle(g))
                          return false;
                      if (parts) {
                          std::vector<int> side(n, 0);
                          for (int v : parts->second) side[v] = 1;
                          for (const auto& [a, b] : g.edges())
                              if (side[a] == side[b]) return false;
                      }
                      ++cases;
                  }
                  detail = std::to_string(cases) + " cases";
                  return cases >= 50;
              });

    criterion(10, "certify and render are byte-identical across repeated runs",
               [&](std::string& detail) {
                   const std::string cli = GRAYUD_CLI_PATH;
                   if (cli.empty() || !std::filesystem::exists(cli)) {
                       detail = "CLI binary not found";
                       return false;
                   }
                   const auto dir = std::filesystem::temp_directory_path() / "grayud_accept";
                   std::filesystem::create_directories(dir);
                   auto run = [&](const std::string& args, const std::string& out) {
                       const std::string cmd = cli + " " + args + " --out " +
                                               (dir / out).string();
                       return std::system(cmd.c_str()) == 0;
                   };
                   if (!run("certify --h 0.6 --theta 0.3", "cert1.json")) return false;
                   if (!run("certify --h 0.6 --theta 0.3", "cert2.json")) return false;
                   if (!run("render --h 0.6 --theta 0.3 --circles", "fig1.svg")) return false;
                   if (!run("render --h 0.6 --theta 0.3 --circles", "fig2.svg")) return false;
                   const bool certs = read_file(dir / "cert1.json") ==
                                      read_file(dir / "cert2.json");
                   const bool figs = read_file(dir / "fig1.svg") ==
                                     read_file(dir / "fig2.svg");
                   return certs && figs && !read_file(dir / "cert1.json").empty();
               });

    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
