#ifndef GRAYUD_SERIALIZE_HPP
#define GRAYUD_SERIALIZE_HPP

#include <string>

#include "grayud/embedding.hpp"
#include "grayud/graph.hpp"
#include "grayud/sweep.hpp"

namespace grayud {

// Canonical graph JSON: {"edges":[[a,b],...],"n":...,"roles":{...}},
// sorted keys, edges sorted with the smaller id first. "roles" is
// present only when the graph carries roles.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Embedding JSON with coordinates printed to 17 significant digits:
// {"params":{...},"vertices":[{"id":...,"role":...,"color":...,
// "x":...,"y":...},...],"edges":[[a,b],...]}
std::string embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const std::string& text);

// One row per grid point in h-major order under the fixed header
// h,theta,status,min_separation,accidental_pairs
std::string sweep_to_csv(const FeasibilityMap& map);

std::string color_name(ColorTag color);
ColorTag color_from_name(const std::string& name);

}  // namespace grayud

#endif
