#include "rspin/graph.hpp"
#include "rspin/graph_io.hpp"
#include "rspin/state_space.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace rspin;

namespace {

bool has_violation(const DecoratedGraph& g, const std::string& kind)
{
    auto v = validate(g);
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

// Two genus-0 vertices joined by one edge; tails (a, b) on vertex 0 and (c, d) on vertex 1.
DecoratedGraph dumbbell(int r, int a, int b, int c, int d, int mp)
{
    DecoratedGraph g;
    g.r = r;
    g.vertex_genus = {0, 0};
    g.half_edge_vertex = {0, 0, 1, 1, 0, 1};
    g.tails = {0, 1, 2, 3};
    g.edges = {{4, 5}};
    g.decoration = {a, b, c, d, mp, ((r - 2 - mp) % r + r) % r};
    return g;
}

// Same graph with vertex and half-edge ids shuffled and edge halves swapped.
DecoratedGraph relabel(const DecoratedGraph& g, std::mt19937& rng)
{
    std::vector<int> vp(g.num_vertices()), hp(g.num_half_edges());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(hp.begin(), hp.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(hp.begin(), hp.end(), rng);
    DecoratedGraph out;
    out.r = g.r;
    out.vertex_genus.resize(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out.vertex_genus[vp[v]] = g.vertex_genus[v];
    out.half_edge_vertex.resize(g.num_half_edges());
    out.decoration.resize(g.num_half_edges());
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        out.half_edge_vertex[hp[h]] = vp[g.half_edge_vertex[h]];
        out.decoration[hp[h]] = g.decoration[h];
    }
    for (int t : g.tails)
        out.tails.push_back(hp[t]);
    for (auto [a, b] : g.edges) {
        if (rng() % 2)
            out.edges.emplace_back(hp[b], hp[a]);
        else
            out.edges.emplace_back(hp[a], hp[b]);
    }
    std::shuffle(out.edges.begin(), out.edges.end(), rng);
    return out;
}

Rational global_canonical_degree(const DecoratedGraph& g)
{
    return bundle_degree(g.r, g.genus(), g.tail_decorations(), Twist::Canonical);
}

} // namespace

TEST_CASE("validate examples")
{
    std::vector<int> three{0, 1, 2};
    CHECK(validate(corolla(3, 0, three)).empty());
    std::vector<int> two{0, 0};
    CHECK(has_violation(corolla(3, 0, two), "unstable vertex"));

    DecoratedGraph bad = dumbbell(3, 0, 0, 0, 0, 1);
    bad.decoration[5] = 1; // 1 + 1 = 2 is not 1 mod 3
    CHECK(has_violation(bad, "node congruence"));
    CHECK(validate(dumbbell(3, 0, 0, 0, 0, 1)).empty());

    DecoratedGraph range = corolla(3, 0, three);
    range.decoration[0] = 5;
    CHECK(has_violation(range, "decoration range"));
    CHECK(has_violation(DecoratedGraph{}, "empty graph"));
}

TEST_CASE("cut_edge examples")
{
    // genus-1 loop: one genus-0 vertex, one tail, one self-edge
    DecoratedGraph loop;
    loop.r = 3;
    loop.vertex_genus = {0};
    loop.half_edge_vertex = {0, 0, 0};
    loop.tails = {0};
    loop.edges = {{1, 2}};
    loop.decoration = {0, 0, 1};
    REQUIRE(validate(loop).empty());
    CHECK(loop.genus() == 1);
    DecoratedGraph cut = cut_edge(loop, 0);
    CHECK(cut.genus() == 0);
    CHECK(cut.num_tails() == 3);
    CHECK(cut.tail_decorations() == std::vector<int>{0, 0, 1});

    DecoratedGraph bar = dumbbell(4, 0, 1, 2, 3, 1);
    DecoratedGraph forest = cut_edge(bar, 0);
    CHECK(forest.components() == 2);
    CHECK(forest.tail_decorations() == std::vector<int>{0, 1, 2, 3, 1, 1});
    CHECK(validate(forest).empty());

    CHECK(canonical_key(glue_tails(forest, 4, 5)) == canonical_key(bar));
    CHECK_THROWS_AS(cut_edge(bar, 1), DomainError);
}

TEST_CASE("forget_tail examples")
{
    std::vector<int> m{0, 1, 1, 2};
    DecoratedGraph g = corolla(5, 0, m);
    DecoratedGraph f = forget_tail(g, 0);
    std::vector<int> rest{1, 1, 2};
    CHECK(canonical_key(f) == canonical_key(corolla(5, 0, rest)));

    std::vector<int> three{0, 0, 0};
    CHECK_THROWS_WITH_AS(forget_tail(corolla(5, 0, three), 1), doctest::Contains("unstable result"), DomainError);
    std::vector<int> marked{2, 0, 0, 0};
    CHECK_THROWS_WITH_AS(forget_tail(corolla(5, 0, marked), 0), doctest::Contains("non-trivially-marked"),
                         DomainError);

    // forget o add(m = 0) = identity
    std::mt19937 rng(7);
    for (const auto& graph : enumerate_graphs(3, 1, 2))
        for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
            DecoratedGraph back = forget_tail(add_tail(graph, v, 0), graph.num_tails());
            CHECK(canonical_key(back) == canonical_key(graph));
        }
}

TEST_CASE("edge_factor examples and symmetry")
{
    CHECK(edge_factor(4, 1) == 2);
    CHECK(edge_factor(5, 0) == 5);
    CHECK(edge_factor(6, 2) == 2);
    for (int r = 2; r <= 12; ++r)
        for (int mp = 0; mp < r; ++mp) {
            int mm = ((r - 2 - mp) % r + r) % r;
            CHECK(edge_factor(r, mp) == edge_factor(r, mm));
        }
}

TEST_CASE("selection rule pinned by formula")
{
    std::vector<int> k111{1, 1, 1}, k220{2, 2, 0}, k222{2, 2, 2};
    CHECK_FALSE(selection_nonempty(3, 0, k111));
    CHECK(selection_nonempty(3, 0, k220));
    CHECK_FALSE(selection_nonempty(3, 0, k222));
    CHECK(selection_nonempty(2, 0, k111)); // (-2 + 3)/2 - 3/2 = -1

    // Table oracle: exact rational evaluation for every tuple, r <= 5, n <= 5, g <= 2.
    for (int r = 2; r <= 5; ++r)
        for (int n = 1; n <= 5; ++n)
            for (int g = 0; g <= 2; ++g) {
                std::vector<int> k(n, 0);
                for (;;) {
                    Rational x = frac(2 * g - 2 + n, r);
                    for (int v : k)
                        x -= frac(v, r);
                    CHECK(selection_nonempty(r, g, k) == is_integer(x));

                    std::vector<int> m;
                    for (int v : k)
                        m.push_back(to_rspin(r, v).m);
                    CHECK(selection_nonempty(r, g, k) == is_integer(bundle_degree(r, g, m, Twist::Canonical)));
                    int i = 0;
                    while (i < n && ++k[i] == r)
                        k[i++] = 0;
                    if (i == n)
                        break;
                }
            }
}

TEST_CASE("bundle degree examples")
{
    std::vector<int> a{1, 1, 1, 1}, b{0}, c{2, 2, 2, 2};
    CHECK(bundle_degree(3, 0, a, Twist::Canonical) == -2);
    CHECK(bundle_degree(2, 1, b, Twist::Canonical) == 0);
    CHECK(bundle_degree(5, 0, c, Twist::Canonical) == -2);
    CHECK(bundle_degree(3, 0, a, Twist::Log) == frac(-2, 3));
}

TEST_CASE("virtual dimension examples")
{
    std::vector<int> a{1, 1, 1, 1}, b{0, 0, 0}, c{1, 1, 1}, d{1, 1};
    auto x = virtual_dim(3, 0, 1, a);
    CHECK(x.D == 1);
    CHECK(*x.homological_degree == 0);
    auto y = virtual_dim(2, 0, 1, b);
    CHECK(y.D == 0);
    CHECK(*y.homological_degree == 0);
    auto z = virtual_dim(5, 0, 1, c);
    CHECK(z.D == 0);
    CHECK_FALSE(z.vanishes);
    auto w = virtual_dim(3, 0, 1, d);
    CHECK(w.vanishes);
    CHECK_FALSE(w.homological_degree.has_value());
    CHECK_THROWS_AS(virtual_dim(3, 0, 0, d), DomainError);
}

TEST_CASE("concavity examples")
{
    std::vector<int> a{1, 1, 1, 1}, ramond{1, 1, 2, 0}, one{0};
    CHECK(concave(corolla(3, 0, a)));
    CHECK_FALSE(concave(corolla(3, 0, ramond)));
    CHECK_FALSE(concave(corolla(3, 1, one)));
}

TEST_CASE("degree additivity over vertices and edges")
{
    for (int r = 2; r <= 4; ++r)
        for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {1, 2}, {1, 3}})
            for (const auto& graph : enumerate_graphs(r, g, n)) {
                Rational sum = 0;
                for (std::size_t v = 0; v < graph.num_vertices(); ++v)
                    sum += vertex_bundle_degree(graph, v, Twist::Canonical);
                for (auto [a, b] : graph.edges)
                    sum += frac(graph.decoration[a] + graph.decoration[b] + 2, r);
                CHECK(sum == global_canonical_degree(graph));
            }
}

TEST_CASE("enumeration counts")
{
    for (int r = 2; r <= 5; ++r)
        CHECK(enumerate_graphs(r, 0, 3).size() == static_cast<std::size_t>(r * r * r));

    // corolla r^4 plus 3 one-edge trees with r^4 tail decorations times r edge choices
    CHECK(enumerate_graphs(2, 0, 4).size() == 112);
    for (int r = 2; r <= 5; ++r)
        CHECK(enumerate_graphs(r, 0, 4).size() == static_cast<std::size_t>(r * r * r * r * (1 + 3 * r)));

    // (1,1): genus-1 corolla, plus a loop whose unordered halves {a, b} satisfy a + b = r - 2 mod r
    for (int r = 2; r <= 7; ++r) {
        int pairs = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a; b < r; ++b)
                pairs += (a + b + 2) % r == 0;
        CHECK(enumerate_graphs(r, 1, 1).size() == static_cast<std::size_t>(r + r * pairs));
    }
}

TEST_CASE("stable graph shape counts")
{
    // Independent brute-force counts of stable graphs up to isomorphism.
    CHECK(enumerate_stable_graphs(0, 3).size() == 1);
    CHECK(enumerate_stable_graphs(0, 4).size() == 4);
    CHECK(enumerate_stable_graphs(0, 5).size() == 26);
    CHECK(enumerate_stable_graphs(1, 1).size() == 2);
    CHECK(enumerate_stable_graphs(1, 2).size() == 5);
    CHECK(enumerate_stable_graphs(1, 3).size() == 23);
    CHECK(enumerate_stable_graphs(1, 4).size() == 163);
    CHECK(enumerate_stable_graphs(2, 0).size() == 7);
}

TEST_CASE("enumeration output is valid, connected, deterministic and duplicate-free")
{
    for (int r = 2; r <= 3; ++r)
        for (auto [g, n] : {std::pair{0, 5}, {1, 3}, {2, 1}}) {
            auto graphs = enumerate_graphs(r, g, n);
            std::set<GraphIsoKey> keys;
            std::size_t last_edges = 0;
            for (const auto& graph : graphs) {
                CHECK(validate(graph).empty());
                CHECK(graph.components() == 1);
                CHECK(graph.genus() == g);
                CHECK(graph.num_tails() == static_cast<std::size_t>(n));
                CHECK(graph.edges.size() >= last_edges);
                last_edges = graph.edges.size();
                keys.insert(canonical_key(graph));
            }
            CHECK(keys.size() == graphs.size());
            auto again = enumerate_graphs(r, g, n);
            CHECK(again == graphs);
        }
}

TEST_CASE("enumeration with a predicate and scale limits")
{
    auto one_edge = enumerate_graphs(2, 0, 4, [](const DecoratedGraph& g) { return g.edges.size() == 1; });
    CHECK(one_edge.size() == 96);
    for (const auto& graph : one_edge) {
        DecoratedGraph forest = cut_edge(graph, 0);
        CHECK(validate(forest).empty());
        CHECK(forest.components() == 2);
    }
    CHECK_THROWS_AS(enumerate_graphs(2, 3, 1), ScaleLimitError);
    CHECK_THROWS_AS(enumerate_graphs(2, 0, 7), ScaleLimitError);
    CHECK_THROWS_AS(enumerate_graphs(5, 1, 5), ScaleLimitError);
    CHECK_THROWS_AS(enumerate_graphs(2, 0, 2), DomainError);
    CHECK_THROWS_AS(enumerate_graphs(2, 1, 0), DomainError);
}

TEST_CASE("canonical key is invariant under relabelling")
{
    std::mt19937 rng(2024);
    for (const auto& graph : enumerate_graphs(3, 1, 3)) {
        GraphIsoKey key = canonical_key(graph);
        for (int trial = 0; trial < 3; ++trial)
            CHECK(canonical_key(relabel(graph, rng)) == key);
    }
    for (const auto& graph : enumerate_graphs(2, 2, 1)) {
        GraphIsoKey key = canonical_key(graph);
        for (int trial = 0; trial < 3; ++trial)
            CHECK(canonical_key(relabel(graph, rng)) == key);
    }
}

TEST_CASE("tail order and decorations are part of the key")
{
    DecoratedGraph a = dumbbell(4, 0, 1, 2, 3, 1);
    DecoratedGraph b = dumbbell(4, 0, 2, 1, 3, 1);
    CHECK(canonical_key(a) != canonical_key(b));
    DecoratedGraph c = dumbbell(4, 0, 1, 2, 3, 0);
    CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("cut then glue on every edge recovers the graph")
{
    for (int r = 2; r <= 3; ++r)
        for (int g = 0; g <= 1; ++g)
            for (int n = (g == 0 ? 3 : 1); n <= 4; ++n)
                for (const auto& graph : enumerate_graphs(r, g, n)) {
                    GraphIsoKey key = canonical_key(graph);
                    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
                        DecoratedGraph cut = cut_edge(graph, e);
                        CHECK(canonical_key(glue_tails(cut, n, n + 1)) == key);
                    }
                }
}

TEST_CASE("graph JSON round trip")
{
    for (const auto& graph : enumerate_graphs(3, 1, 2)) {
        std::string text = graph_to_json(graph);
        CHECK(text.find(' ') == std::string::npos);
        DecoratedGraph back = graph_from_json(text);
        CHECK(back == graph);
        CHECK(graph_to_json(back) == text);
    }
    DecoratedGraph single = graph_from_json(
        R"({"r":3,"vertices":[{"genus":0}],"edges":[],"tails":[0,1,2,3],"decoration":{"0":1,"1":1,"2":1,"3":-1}})");
    CHECK(validate(single).empty());
    CHECK(single.decoration[3] == 2);
    CHECK(graph_to_json(single) ==
          R"({"decoration":{"0":1,"1":1,"2":1,"3":2},"edges":[],"half_edges":[0,0,0,0],"r":3,"tails":[0,1,2,3],)"
          R"("vertices":[{"genus":0}]})");
    CHECK_THROWS_AS(graph_from_json("{"), DomainError);
    CHECK_THROWS_AS(graph_from_json(R"({"r":3,"vertices":[{"genus":0},{"genus":0}],"edges":[],"tails":[],)"
                                    R"("decoration":{}})"),
                    DomainError);
}
