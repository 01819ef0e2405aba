#pragma once

#include "rspin/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rspin {

// Stable graph with genus-decorated vertices, ordered tails and r-spin
// decorations on every half-edge. Half-edge ids are 0..num_half_edges()-1;
// each half-edge is either a tail or one half of exactly one edge.
struct DecoratedGraph {
    int r = 2;
    std::vector<int> vertex_genus;
    std::vector<int> half_edge_vertex;
    std::vector<std::pair<int, int>> edges; // (m+ half, m- half)
    std::vector<int> tails;
    std::vector<int> decoration;            // indexed by half-edge id

    std::size_t num_vertices() const { return vertex_genus.size(); }
    std::size_t num_half_edges() const { return half_edge_vertex.size(); }
    std::size_t num_tails() const { return tails.size(); }
    int valence(std::size_t v) const;
    int components() const;
    // sum of vertex genera plus first Betti number.
    int genus() const;
    std::vector<int> tail_decorations() const;

    bool operator==(const DecoratedGraph&) const = default;
};

DecoratedGraph corolla(int r, int g, std::span<const int> tail_m);

struct Violation {
    std::string kind;
    std::string detail;
};

// Every violated invariant, empty when the graph is valid.
std::vector<Violation> validate(const DecoratedGraph& graph);

// Canonical serialisation up to isomorphism fixing tail order and decorations.
struct GraphIsoKey {
    std::string text;
    auto operator<=>(const GraphIsoKey&) const = default;
};

GraphIsoKey canonical_key(const DecoratedGraph& graph);

// Replaces edge e by two new tails appended in the order m+, m-.
DecoratedGraph cut_edge(const DecoratedGraph& graph, std::size_t edge);
// Inverse of cut_edge: joins tails at positions a (m+ side) and b into an edge.
DecoratedGraph glue_tails(const DecoratedGraph& graph, std::size_t tail_a, std::size_t tail_b);
// Tail positions are 0-based here; the CLI speaks 1-based.
DecoratedGraph forget_tail(const DecoratedGraph& graph, std::size_t tail);
DecoratedGraph add_tail(const DecoratedGraph& graph, std::size_t vertex, int m);

int edge_factor(int r, int m_plus);

bool selection_nonempty(int r, int g, std::span<const int> sectors);

enum class Twist { Canonical, Log };

// Canonical: (2g-2-sum m)/r; log: (2g-2+n-sum m)/r.
Rational bundle_degree(int r, int g, std::span<const int> m, Twist twist);
Rational vertex_bundle_degree(const DecoratedGraph& graph, std::size_t v, Twist twist);

struct VirtualDimension {
    Rational D;
    bool vanishes = false;
    std::optional<Integer> homological_degree; // 6g-6+2n-2D when D is integral
};

VirtualDimension virtual_dim(int r, int g, int alpha, std::span<const int> m);

bool concave(const DecoratedGraph& graph);

using GraphPredicate = std::function<bool(const DecoratedGraph&)>;

// All isomorphism classes of connected stable decorated (g, n) graphs obeying
// the node congruence, ordered by (edge count, canonical key).
std::vector<DecoratedGraph> enumerate_graphs(int r, int g, int n, const GraphPredicate& keep = {});

// Undecorated shapes (all decorations 0), same order convention.
std::vector<DecoratedGraph> enumerate_stable_graphs(int g, int n);

inline constexpr int kMaxEnumerationGenus = 2;
inline constexpr int kMaxEnumerationTails = 6;
inline constexpr long long kDecorationBudget = 4'000'000;

} // namespace rspin
