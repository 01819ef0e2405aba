#include "rspin/graph_io.hpp"

#include "rspin/state_space.hpp"

#include <json.hpp>

namespace rspin {

using nlohmann::json;

std::string graph_to_json(const DecoratedGraph& graph)
{
    json j;
    j["r"] = graph.r;
    j["vertices"] = json::array();
    for (int g : graph.vertex_genus)
        j["vertices"].push_back({{"genus", g}});
    j["half_edges"] = graph.half_edge_vertex;
    j["edges"] = json::array();
    for (auto [a, b] : graph.edges)
        j["edges"].push_back({a, b});
    j["tails"] = graph.tails;
    j["decoration"] = json::object();
    for (std::size_t h = 0; h < graph.decoration.size(); ++h)
        j["decoration"][std::to_string(h)] = graph.decoration[h];
    return j.dump();
}

DecoratedGraph graph_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("graph JSON: ") + e.what());
    }
    try {
        DecoratedGraph g;
        g.r = j.at("r").get<int>();
        for (const auto& v : j.at("vertices"))
            g.vertex_genus.push_back(v.at("genus").get<int>());
        if (j.contains("half_edges")) {
            g.half_edge_vertex = j.at("half_edges").get<std::vector<int>>();
        } else if (g.vertex_genus.size() == 1) {
            // A single vertex owns every half-edge mentioned in the decoration map.
            g.half_edge_vertex.assign(j.at("decoration").size(), 0);
        } else {
            throw DomainError("graph JSON: \"half_edges\" is required for graphs with several vertices");
        }
        for (const auto& e : j.at("edges")) {
            auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2)
                throw DomainError("graph JSON: every edge needs exactly two half-edges");
            g.edges.emplace_back(pair[0], pair[1]);
        }
        g.tails = j.at("tails").get<std::vector<int>>();
        g.decoration.assign(g.half_edge_vertex.size(), 0);
        for (const auto& [key, value] : j.at("decoration").items()) {
            std::size_t h = std::stoul(key);
            if (h >= g.decoration.size())
                throw DomainError("graph JSON: decoration for unknown half-edge " + key);
            g.decoration[h] = normalize_label(g.r, value.get<int>());
        }
        return g;
    } catch (const json::exception& e) {
        throw DomainError(std::string("graph JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw DomainError("graph JSON: decoration keys must be half-edge ids");
    }
}

} // namespace rspin
