#include "rspin/graph.hpp"

#include "rspin/state_space.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_set>
#include <sstream>

namespace rspin {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

std::vector<std::vector<int>> half_edges_by_vertex(const DecoratedGraph& g)
{
    std::vector<std::vector<int>> out(g.num_vertices());
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        int v = g.half_edge_vertex[h];
        if (v >= 0 && static_cast<std::size_t>(v) < out.size())
            out[v].push_back(static_cast<int>(h));
    }
    return out;
}

// Partner half-edge for every half-edge in an edge, -1 for tails.
std::vector<int> partners(const DecoratedGraph& g)
{
    std::vector<int> p(g.num_half_edges(), -1);
    for (auto [a, b] : g.edges) {
        p[a] = b;
        p[b] = a;
    }
    return p;
}

} // namespace

int DecoratedGraph::valence(std::size_t v) const
{
    return static_cast<int>(std::count(half_edge_vertex.begin(), half_edge_vertex.end(), static_cast<int>(v)));
}

int DecoratedGraph::components() const
{
    std::vector<int> parent(num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int count = static_cast<int>(num_vertices());
    for (auto [a, b] : edges) {
        int u = find(half_edge_vertex[a]), w = find(half_edge_vertex[b]);
        if (u != w) {
            parent[u] = w;
            --count;
        }
    }
    return count;
}

int DecoratedGraph::genus() const
{
    int g = std::accumulate(vertex_genus.begin(), vertex_genus.end(), 0);
    return g + static_cast<int>(edges.size()) - static_cast<int>(num_vertices()) + components();
}

std::vector<int> DecoratedGraph::tail_decorations() const
{
    std::vector<int> m;
    for (int h : tails)
        m.push_back(decoration[h]);
    return m;
}

DecoratedGraph corolla(int r, int g, std::span<const int> tail_m)
{
    DecoratedGraph out;
    out.r = r;
    out.vertex_genus = {g};
    for (int m : tail_m) {
        out.tails.push_back(static_cast<int>(out.half_edge_vertex.size()));
        out.half_edge_vertex.push_back(0);
        out.decoration.push_back(normalize_label(r, m));
    }
    return out;
}

std::vector<Violation> validate(const DecoratedGraph& g)
{
    std::vector<Violation> out;
    auto add = [&](std::string kind, std::string detail) { out.push_back({std::move(kind), std::move(detail)}); };

    if (g.r < 2)
        add("bad r", "r = " + std::to_string(g.r));
    if (g.decoration.size() != g.num_half_edges())
        add("decoration size", "decoration has " + std::to_string(g.decoration.size()) + " entries for " +
                                   std::to_string(g.num_half_edges()) + " half-edges");
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (g.vertex_genus[v] < 0)
            add("negative genus", "vertex " + std::to_string(v));
    for (std::size_t h = 0; h < g.num_half_edges(); ++h) {
        int v = g.half_edge_vertex[h];
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices())
            add("dangling half-edge", "half-edge " + std::to_string(h) + " points at vertex " + std::to_string(v));
    }

    std::vector<int> uses(g.num_half_edges(), 0);
    auto use = [&](int h, const std::string& where) {
        if (h < 0 || static_cast<std::size_t>(h) >= g.num_half_edges()) {
            add("unknown half-edge", where + " references " + std::to_string(h));
            return false;
        }
        ++uses[h];
        return true;
    };
    for (int h : g.tails)
        use(h, "tail");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        bool ok = use(a, "edge " + std::to_string(e));
        ok = use(b, "edge " + std::to_string(e)) && ok;
        if (ok && a == b)
            add("degenerate edge", "edge " + std::to_string(e) + " joins a half-edge to itself");
        if (ok && g.decoration.size() == g.num_half_edges() && g.r >= 2 &&
            mod(g.decoration[a] + g.decoration[b], g.r) != g.r - 2)
            add("node congruence", "edge " + std::to_string(e) + " has m+ = " + std::to_string(g.decoration[a]) +
                                       ", m- = " + std::to_string(g.decoration[b]));
    }
    for (std::size_t h = 0; h < uses.size(); ++h)
        if (uses[h] != 1)
            add("half-edge usage", "half-edge " + std::to_string(h) + " used " + std::to_string(uses[h]) + " times");

    if (g.decoration.size() == g.num_half_edges())
        for (std::size_t h = 0; h < g.num_half_edges(); ++h)
            if (g.decoration[h] < 0 || g.decoration[h] > g.r - 1)
                add("decoration range", "half-edge " + std::to_string(h) + " has m = " +
                                            std::to_string(g.decoration[h]));

    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        if (2 * g.vertex_genus[v] - 2 + g.valence(v) <= 0)
            add("unstable vertex", "vertex " + std::to_string(v) + " with genus " +
                                       std::to_string(g.vertex_genus[v]) + " and valence " +
                                       std::to_string(g.valence(v)));
    if (g.num_vertices() == 0)
        add("empty graph", "no vertices");
    return out;
}

GraphIsoKey canonical_key(const DecoratedGraph& g)
{
    const std::size_t nv = g.num_vertices();
    const std::size_t nh = g.num_half_edges();
    const auto partner = partners(g);
    // Half-edges grouped by vertex: at[start[v] .. start[v+1]).
    std::vector<int> start(nv + 1, 0), at(nh);
    for (std::size_t h = 0; h < nh; ++h)
        ++start[g.half_edge_vertex[h] + 1];
    for (std::size_t v = 0; v < nv; ++v)
        start[v + 1] += start[v];
    {
        std::vector<int> fill(start.begin(), start.end() - 1);
        for (std::size_t h = 0; h < nh; ++h)
            at[fill[g.half_edge_vertex[h]]++] = static_cast<int>(h);
    }
    std::vector<int> tail_pos(nh, -1);
    for (std::size_t i = 0; i < g.tails.size(); ++i)
        tail_pos[g.tails[i]] = static_cast<int>(i);

    using Signature = std::vector<long long>;
    // Per-vertex signatures stored back to back; sig(v) = buf[off[v] .. off[v+1]).
    Signature buf;
    buf.reserve(3 * nh + 4 * nv);
    std::vector<std::size_t> off(nv + 1, 0);
    std::vector<int> color(nv), idx(nv);
    auto rank = [&] {
        std::iota(idx.begin(), idx.end(), 0);
        auto less = [&](int x, int y) {
            return std::lexicographical_compare(buf.begin() + off[x], buf.begin() + off[x + 1], buf.begin() + off[y],
                                                buf.begin() + off[y + 1]);
        };
        std::sort(idx.begin(), idx.end(), less);
        std::size_t classes = 0;
        for (std::size_t i = 0; i < nv; ++i) {
            if (i > 0 && less(idx[i - 1], idx[i]))
                ++classes;
            color[idx[i]] = static_cast<int>(classes);
        }
        return nv ? classes + 1 : 0;
    };

    std::vector<std::pair<int, int>> tails_here, loops;
    tails_here.reserve(nh);
    loops.reserve(nh);
    for (std::size_t v = 0; v < nv; ++v) {
        tails_here.clear();
        loops.clear();
        for (int i = start[v]; i < start[v + 1]; ++i) {
            int h = at[i];
            if (tail_pos[h] >= 0)
                tails_here.emplace_back(tail_pos[h], g.decoration[h]);
            else if (g.half_edge_vertex[partner[h]] == static_cast<int>(v) && h < partner[h])
                loops.emplace_back(std::min(g.decoration[h], g.decoration[partner[h]]),
                                   std::max(g.decoration[h], g.decoration[partner[h]]));
        }
        std::sort(tails_here.begin(), tails_here.end());
        std::sort(loops.begin(), loops.end());
        buf.push_back(g.vertex_genus[v]);
        buf.push_back(start[v + 1] - start[v]);
        buf.push_back(static_cast<long long>(tails_here.size()));
        for (auto [p, m] : tails_here)
            buf.insert(buf.end(), {p, m});
        buf.push_back(static_cast<long long>(loops.size()));
        for (auto [x, y] : loops)
            buf.insert(buf.end(), {x, y});
        off[v + 1] = buf.size();
    }
    std::size_t classes = rank();

    // Colour refinement over non-loop neighbours.
    std::vector<std::array<int, 3>> nb;
    nb.reserve(nh);
    while (classes < nv) {
        buf.clear();
        for (std::size_t v = 0; v < nv; ++v) {
            nb.clear();
            for (int i = start[v]; i < start[v + 1]; ++i) {
                int h = at[i];
                if (partner[h] < 0)
                    continue;
                int u = g.half_edge_vertex[partner[h]];
                if (u == static_cast<int>(v))
                    continue;
                nb.push_back({color[u], g.decoration[h], g.decoration[partner[h]]});
            }
            std::sort(nb.begin(), nb.end());
            buf.push_back(color[v]);
            for (auto& t : nb)
                buf.insert(buf.end(), t.begin(), t.end());
            off[v + 1] = buf.size();
        }
        std::size_t count = rank();
        if (count == classes)
            break;
        classes = count;
    }

    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return std::tie(color[a], a) < std::tie(color[b], b); });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < nv;) {
        std::size_t j = i;
        while (j < nv && color[order[j]] == color[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    // Edges as (vertex, decoration) half pairs; only vertex positions change between orderings.
    std::vector<int> pos(nv);
    Signature s, best;
    s.reserve(4 + nv + 2 * nh + 2 * g.tails.size());
    best.reserve(s.capacity());
    std::vector<std::array<int, 4>> es(g.edges.size());
    auto serialize = [&](const std::vector<int>& ord) {
        for (std::size_t i = 0; i < nv; ++i)
            pos[ord[i]] = static_cast<int>(i);
        s.clear();
        s.push_back(g.r);
        s.push_back(static_cast<long long>(nv));
        for (std::size_t i = 0; i < nv; ++i)
            s.push_back(g.vertex_genus[ord[i]]);
        s.push_back(static_cast<long long>(g.tails.size()));
        for (int h : g.tails) {
            s.push_back(pos[g.half_edge_vertex[h]]);
            s.push_back(g.decoration[h]);
        }
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto [a, b] = g.edges[e];
            std::array<int, 2> x{pos[g.half_edge_vertex[a]], g.decoration[a]};
            std::array<int, 2> y{pos[g.half_edge_vertex[b]], g.decoration[b]};
            if (y < x)
                std::swap(x, y);
            es[e] = {x[0], x[1], y[0], y[1]};
        }
        std::sort(es.begin(), es.end());
        s.push_back(static_cast<long long>(es.size()));
        for (auto& e : es)
            s.insert(s.end(), e.begin(), e.end());
    };

    // Exhaust orderings inside each colour class (odometer over block permutations).
    bool first = true;
    for (;;) {
        serialize(order);
        if (first || s < best) {
            best.swap(s);
            first = false;
        }
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto [lo, hi] = blocks[b];
            if (std::next_permutation(order.begin() + lo, order.begin() + hi))
                break;
        }
        if (b == blocks.size())
            break;
    }

    std::string text;
    text.reserve(best.size() * 3);
    char digits[24];
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i)
            text.push_back(',');
        auto res = std::to_chars(digits, digits + sizeof digits, best[i]);
        text.append(digits, res.ptr);
    }
    return {std::move(text)};
}

DecoratedGraph cut_edge(const DecoratedGraph& graph, std::size_t edge)
{
    if (edge >= graph.edges.size())
        throw DomainError("cut_edge: no edge " + std::to_string(edge));
    DecoratedGraph out = graph;
    auto [a, b] = out.edges[edge];
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
    out.tails.push_back(a);
    out.tails.push_back(b);
    return out;
}

DecoratedGraph glue_tails(const DecoratedGraph& graph, std::size_t tail_a, std::size_t tail_b)
{
    if (tail_a >= graph.tails.size() || tail_b >= graph.tails.size() || tail_a == tail_b)
        throw DomainError("glue_tails: need two distinct existing tails");
    DecoratedGraph out = graph;
    int a = graph.tails[tail_a], b = graph.tails[tail_b];
    out.tails.erase(std::remove_if(out.tails.begin(), out.tails.end(), [&](int h) { return h == a || h == b; }),
                    out.tails.end());
    out.edges.emplace_back(a, b);
    return out;
}

DecoratedGraph forget_tail(const DecoratedGraph& graph, std::size_t tail)
{
    if (tail >= graph.tails.size())
        throw DomainError("forget_tail: no tail " + std::to_string(tail));
    int h = graph.tails[tail];
    if (graph.decoration[h] != 0)
        throw DomainError("forgetting non-trivially-marked tail (m = " + std::to_string(graph.decoration[h]) + ")");
    int v = graph.half_edge_vertex[h];
    if (2 * graph.vertex_genus[v] - 2 + graph.valence(v) - 1 <= 0)
        throw DomainError("unstable result: vertex " + std::to_string(v) + " would become unstable");

    DecoratedGraph out;
    out.r = graph.r;
    out.vertex_genus = graph.vertex_genus;
    auto renum = [h](int x) { return x > h ? x - 1 : x; };
    for (std::size_t x = 0; x < graph.num_half_edges(); ++x) {
        if (static_cast<int>(x) == h)
            continue;
        out.half_edge_vertex.push_back(graph.half_edge_vertex[x]);
        out.decoration.push_back(graph.decoration[x]);
    }
    for (auto [a, b] : graph.edges)
        out.edges.emplace_back(renum(a), renum(b));
    for (std::size_t i = 0; i < graph.tails.size(); ++i)
        if (i != tail)
            out.tails.push_back(renum(graph.tails[i]));
    return out;
}

DecoratedGraph add_tail(const DecoratedGraph& graph, std::size_t vertex, int m)
{
    if (vertex >= graph.num_vertices())
        throw DomainError("add_tail: no vertex " + std::to_string(vertex));
    DecoratedGraph out = graph;
    out.tails.push_back(static_cast<int>(out.half_edge_vertex.size()));
    out.half_edge_vertex.push_back(static_cast<int>(vertex));
    out.decoration.push_back(normalize_label(graph.r, m));
    return out;
}

int edge_factor(int r, int m_plus)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    m_plus = normalize_label(r, m_plus);
    if (m_plus < 0 || m_plus > r - 1)
        throw DomainError("half-edge decoration out of range");
    return r / std::gcd(m_plus + 1, r);
}

bool selection_nonempty(int r, int g, std::span<const int> sectors)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    long long total = 2LL * g - 2 + static_cast<long long>(sectors.size());
    for (int k : sectors) {
        if (k < 0 || k > r - 1)
            throw DomainError("sector index out of range");
        total -= k;
    }
    return total % r == 0;
}

Rational bundle_degree(int r, int g, std::span<const int> m, Twist twist)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    long long num = 2LL * g - 2;
    if (twist == Twist::Log)
        num += static_cast<long long>(m.size());
    for (int x : m) {
        int mm = normalize_label(r, x);
        if (mm < 0 || mm > r - 1)
            throw DomainError("decoration out of range");
        num -= mm;
    }
    Rational d(Integer(std::to_string(num)), Integer(r));
    d.canonicalize();
    return d;
}

Rational vertex_bundle_degree(const DecoratedGraph& graph, std::size_t v, Twist twist)
{
    std::vector<int> m;
    for (std::size_t h = 0; h < graph.num_half_edges(); ++h)
        if (graph.half_edge_vertex[h] == static_cast<int>(v))
            m.push_back(graph.decoration[h]);
    return bundle_degree(graph.r, graph.vertex_genus.at(v), m, twist);
}

VirtualDimension virtual_dim(int r, int g, int alpha, std::span<const int> m)
{
    if (alpha < 1)
        throw DomainError("number of components must be at least 1");
    VirtualDimension out;
    out.D = central_charge(r) * (g - alpha);
    for (int x : m)
        out.D += frac(normalize_label(r, x), r);
    out.D.canonicalize();
    out.vanishes = !is_integer(out.D);
    if (!out.vanishes)
        out.homological_degree = Integer(6 * g - 6 + 2 * static_cast<int>(m.size())) - 2 * out.D.get_num();
    return out;
}

bool concave(const DecoratedGraph& graph)
{
    for (int gv : graph.vertex_genus)
        if (gv != 0)
            return false;
    for (int m : graph.decoration)
        if (m > graph.r - 2)
            return false;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v)
        if (vertex_bundle_degree(graph, v, Twist::Canonical) >= 0)
            return false;
    return true;
}

namespace {

void require_enumeration_bounds(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw DomainError("no stable graphs for (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
    if (g > kMaxEnumerationGenus || n > kMaxEnumerationTails)
        throw ScaleLimitError("scale limit: enumeration supports g <= " + std::to_string(kMaxEnumerationGenus) +
                              ", n <= " + std::to_string(kMaxEnumerationTails));
}

// One-step degenerations: a self-node at a positive-genus vertex, or a split
// of a vertex into two joined by a new edge.
std::vector<DecoratedGraph> degenerations(const DecoratedGraph& g)
{
    std::vector<DecoratedGraph> out;
    const auto at = half_edges_by_vertex(g);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.vertex_genus[v] > 0) {
            DecoratedGraph d = g;
            --d.vertex_genus[v];
            int a = static_cast<int>(d.half_edge_vertex.size());
            d.half_edge_vertex.insert(d.half_edge_vertex.end(), {static_cast<int>(v), static_cast<int>(v)});
            d.decoration.insert(d.decoration.end(), {0, 0});
            d.edges.emplace_back(a, a + 1);
            out.push_back(std::move(d));
        }
        const auto& hs = at[v];
        const std::size_t k = hs.size();
        for (int g1 = 0; g1 <= g.vertex_genus[v]; ++g1) {
            int g2 = g.vertex_genus[v] - g1;
            for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
                int moved = std::popcount(mask);
                int stay = static_cast<int>(k) - moved;
                if (2 * g1 - 2 + stay + 1 <= 0 || 2 * g2 - 2 + moved + 1 <= 0)
                    continue;
                DecoratedGraph d = g;
                d.vertex_genus[v] = g1;
                int w = static_cast<int>(d.vertex_genus.size());
                d.vertex_genus.push_back(g2);
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (1UL << i))
                        d.half_edge_vertex[hs[i]] = w;
                int a = static_cast<int>(d.half_edge_vertex.size());
                d.half_edge_vertex.insert(d.half_edge_vertex.end(), {static_cast<int>(v), w});
                d.decoration.insert(d.decoration.end(), {0, 0});
                d.edges.emplace_back(a, a + 1);
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

long long ipow(long long b, int e)
{
    long long x = 1;
    while (e-- > 0)
        x *= b;
    return x;
}

} // namespace

std::vector<DecoratedGraph> enumerate_stable_graphs(int g, int n)
{
    require_enumeration_bounds(g, n);
    std::vector<int> zeros(n, 0);
    DecoratedGraph start = corolla(2, g, zeros);

    std::map<GraphIsoKey, DecoratedGraph> seen;
    std::vector<DecoratedGraph> frontier{start};
    seen.emplace(canonical_key(start), start);
    while (!frontier.empty()) {
        std::vector<DecoratedGraph> next;
        for (const auto& graph : frontier)
            for (auto& d : degenerations(graph)) {
                auto key = canonical_key(d);
                if (seen.emplace(key, d).second)
                    next.push_back(std::move(d));
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<std::size_t, GraphIsoKey>> order;
    for (const auto& [key, graph] : seen)
        order.emplace_back(graph.edges.size(), key);
    std::sort(order.begin(), order.end());
    std::vector<DecoratedGraph> out;
    for (const auto& [e, key] : order)
        out.push_back(seen.at(key));
    return out;
}

std::vector<DecoratedGraph> enumerate_graphs(int r, int g, int n, const GraphPredicate& keep)
{
    if (r < 2)
        throw DomainError("r must be at least 2");
    require_enumeration_bounds(g, n);
    auto shapes = enumerate_stable_graphs(g, n);
    long long budget = 0;
    for (const auto& s : shapes)
        budget += ipow(r, n + static_cast<int>(s.edges.size()));
    if (budget > kDecorationBudget)
        throw ScaleLimitError("scale limit: " + std::to_string(budget) + " decorated candidates exceed budget " +
                              std::to_string(kDecorationBudget));

    std::vector<std::tuple<std::size_t, std::string, std::size_t>> order; // (edges, key, index)
    std::vector<DecoratedGraph> found;
    std::unordered_set<std::string> seen;
    for (auto shape : shapes) {
        shape.r = r;
        const std::size_t slots = shape.tails.size() + shape.edges.size();
        std::vector<int> digits(slots, 0);
        for (;;) {
            for (std::size_t i = 0; i < shape.tails.size(); ++i)
                shape.decoration[shape.tails[i]] = digits[i];
            for (std::size_t e = 0; e < shape.edges.size(); ++e) {
                int mp = digits[shape.tails.size() + e];
                shape.decoration[shape.edges[e].first] = mp;
                shape.decoration[shape.edges[e].second] = mod(r - 2 - mp, r);
            }
            if (!keep || keep(shape)) {
                auto key = canonical_key(shape).text;
                if (seen.insert(key).second) {
                    order.emplace_back(shape.edges.size(), std::move(key), found.size());
                    found.push_back(shape);
                }
            }
            std::size_t i = 0;
            for (; i < slots; ++i) {
                if (++digits[i] < r)
                    break;
                digits[i] = 0;
            }
            if (i == slots)
                break;
        }
    }
    std::sort(order.begin(), order.end());
    std::vector<DecoratedGraph> out;
    out.reserve(order.size());
    for (const auto& [e, key, index] : order)
        out.push_back(std::move(found[index]));
    return out;
}

} // namespace rspin
