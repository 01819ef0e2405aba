#pragma once

#include "rspin/graph.hpp"

#include <string>
#include <string_view>

namespace rspin {

// JSON graph format:
//   {"decoration":{"0":m,...},"edges":[[h1,h2],...],"half_edges":[v,...],
//    "r":r,"tails":[h,...],"vertices":[{"genus":g},...]}
// "half_edges" lists the vertex of each half-edge id. Keys are sorted and the
// output contains no whitespace, so equal graphs serialise to equal bytes.
std::string graph_to_json(const DecoratedGraph& graph);
DecoratedGraph graph_from_json(std::string_view text);

} // namespace rspin
