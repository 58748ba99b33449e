#include "grayud/serialize.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "grayud/errors.hpp"

namespace grayud {

namespace {

std::string role_name(Role role) { return role == Role::Solid ? "solid" : "hollow"; }

Role role_from_name(const std::string& name, const std::string& where) {
    if (name == "solid") return Role::Solid;
    if (name == "hollow") return Role::Hollow;
    throw ParseError("unknown role \"" + name + "\"", where);
}

// 17 significant digits round-trips any double exactly.
std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace

std::string color_name(ColorTag color) {
    switch (color) {
        case ColorTag::Blue: return "b";
        case ColorTag::Green: return "g";
        case ColorTag::Red: return "r";
        case ColorTag::None: return "none";
    }
    return "none";
}

ColorTag color_from_name(const std::string& name) {
    if (name == "b") return ColorTag::Blue;
    if (name == "g") return ColorTag::Green;
    if (name == "r") return ColorTag::Red;
    if (name == "none") return ColorTag::None;
    throw ParseError("unknown color tag \"" + name + "\"", "color");
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;  // std::map keys, serialized sorted
    doc["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    if (g.has_roles()) {
        nlohmann::json roles;
        for (int v = 0; v < g.vertex_count(); ++v)
            roles[std::to_string(v)] = role_name(g.role(v));
        doc["roles"] = std::move(roles);
    }
    return doc.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(err.what(), "byte " + std::to_string(err.byte));
    }
    try {
        const int n = doc.at("n").get<int>();
        std::vector<Graph::Edge> edges;
        for (const auto& pair : doc.at("edges"))
            edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        std::vector<Role> roles;
        if (doc.contains("roles")) {
            roles.assign(n, Role::Solid);
            std::vector<bool> seen(n, false);
            for (const auto& [key, value] : doc.at("roles").items()) {
                const int v = std::stoi(key);
                if (v < 0 || v >= n)
                    throw ParseError("role for undeclared vertex " + key, "roles");
                roles[v] = role_from_name(value.get<std::string>(), "roles." + key);
                seen[v] = true;
            }
            for (int v = 0; v < n; ++v)
                if (!seen[v])
                    throw ParseError("missing role for vertex " + std::to_string(v), "roles");
        }
        return Graph(n, std::move(edges), std::move(roles));
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(err.what(), "graph document");
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), "graph document");
    }
}

std::string embedding_to_json(const Embedding& e) {
    std::ostringstream out;
    out << "{";
    if (e.params)
        out << "\"params\":{\"h\":" << format_double(e.params->h)
            << ",\"theta\":" << format_double(e.params->theta) << "},";
    out << "\"vertices\":[";
    for (int v = 0; v < e.graph.vertex_count(); ++v) {
        if (v > 0) out << ",";
        out << "{\"id\":" << v;
        if (e.graph.has_roles()) out << ",\"role\":\"" << role_name(e.graph.role(v)) << "\"";
        out << ",\"color\":\"" << color_name(e.colors[v])
            << "\",\"x\":" << format_double(e.coords[v].x)
            << ",\"y\":" << format_double(e.coords[v].y) << "}";
    }
    out << "],\"edges\":[";
    bool first = true;
    for (const auto& [a, b] : e.graph.edges()) {
        if (!first) out << ",";
        first = false;
        out << "[" << a << "," << b << "]";
    }
    out << "]}";
    return out.str();
}

Embedding embedding_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(err.what(), "byte " + std::to_string(err.byte));
    }
    try {
        Embedding e;
        const auto& vertices = doc.at("vertices");
        const int n = static_cast<int>(vertices.size());
        e.coords.resize(n);
        e.colors.assign(n, ColorTag::None);
        std::vector<Role> roles(n, Role::Solid);
        std::vector<bool> seen(n, false);
        int role_count = 0;
        for (const auto& vertex : vertices) {
            const int id = vertex.at("id").get<int>();
            if (id < 0 || id >= n || seen[id])
                throw ParseError("bad or repeated vertex id " + std::to_string(id),
                                 "vertices");
            seen[id] = true;
            if (vertex.contains("role")) {
                roles[id] = role_from_name(vertex.at("role").get<std::string>(),
                                           "vertices[" + std::to_string(id) + "].role");
                ++role_count;
            }
            e.colors[id] = color_from_name(vertex.at("color").get<std::string>());
            e.coords[id] = {vertex.at("x").get<double>(), vertex.at("y").get<double>()};
        }
        if (role_count != 0 && role_count != n)
            throw ParseError("roles must cover every vertex or none", "vertices");
        if (role_count == 0) roles.clear();
        std::vector<Graph::Edge> edges;
        for (const auto& pair : doc.at("edges"))
            edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        e.graph = Graph(n, std::move(edges), std::move(roles));
        if (doc.contains("params"))
            e.params = ConstructionParams{doc.at("params").at("h").get<double>(),
                                          doc.at("params").at("theta").get<double>()};
        return e;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(err.what(), "embedding document");
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), "embedding document");
    }
}

std::string sweep_to_csv(const FeasibilityMap& map) {
    std::ostringstream out;
    out << "h,theta,status,min_separation,accidental_pairs\n";
    for (const SweepEntry& entry : map.entries)
        out << format_double(entry.h) << "," << format_double(entry.theta) << ","
            << status_name(entry.status) << "," << format_double(entry.min_separation)
            << "," << entry.accidental_pairs << "\n";
    return out.str();
}

}  // namespace grayud
