#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "isogame/enumerate.hpp"
#include "isogame/families.hpp"
#include "isogame/graph.hpp"
#include "isogame/graph6.hpp"
#include "isogame/trees.hpp"

namespace isogame {
namespace {

// Independent graph6 writer: builds the bit string first, then packs it.
std::string encode_by_hand(int n, const std::vector<Edge>& edges)
{
    std::set<Edge> e;
    for (auto [u, v] : edges) e.insert({std::min(u, v), std::max(u, v)});
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += e.count({i, j}) ? '1' : '0';
    while (bits.size() % 6) bits += '0';
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6)
        out += static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2));
    return out;
}

// Brute-force canonical code: the largest code over all n! labelings.
std::uint64_t brute_canonical(const Graph& g)
{
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = 0;
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
        best = std::max(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Connected isomorphism classes of order n by scanning all labeled graphs.
std::size_t brute_connected_classes(int n)
{
    std::vector<Edge> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1) edges.push_back(slots[b]);
        const Graph g = build_graph(n, edges);
        if (is_connected(g)) classes.insert(brute_canonical(g));
    }
    return classes.size();
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

VertexSet random_subset(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> d;
    return VertexSet{d(rng)} & VertexSet::first(n);
}

TEST(BuildGraph, PathFromEdges)
{
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g, make_family(path_spec(4)));
}

TEST(BuildGraph, FigureOneGraphH)
{
    // v1v2, v1v3, v1v4, v2v3, v4v5, v4v6, v5v6, v5v10, v6v7, v7v8, v7v9,
    // v8v9, v10v11, v10v12, v11v12
    const std::vector<std::pair<int, int>> named = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5},
                                                    {4, 6}, {5, 6}, {5, 10}, {6, 7}, {7, 8},
                                                    {7, 9}, {8, 9}, {10, 11}, {10, 12}, {11, 12}};
    std::vector<Edge> edges;
    for (auto [a, b] : named) edges.emplace_back(a - 1, b - 1);
    const Graph h = build_graph(12, edges);
    EXPECT_EQ(h.edge_count(), 15);
    EXPECT_EQ(h, make_family(hgraph_spec()));
}

TEST(BuildGraph, SingleVertexAndDuplicates)
{
    const Graph k1 = build_graph(1, {});
    EXPECT_EQ(k1.order(), 1);
    EXPECT_EQ(k1.edge_count(), 0);
    EXPECT_EQ(build_graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count(), 1);
}

TEST(BuildGraph, Errors)
{
    EXPECT_THROW(build_graph(64, {}), OrderTooLarge);
    EXPECT_NO_THROW(build_graph(63, {{0, 62}}));
    EXPECT_THROW(build_graph(3, {{0, 3}}), BadEdge);
    EXPECT_THROW(build_graph(3, {{-1, 0}}), BadEdge);
    EXPECT_THROW(build_graph(3, {{1, 1}}), BadEdge);
}

TEST(Graph6, HandEncodedExamples)
{
    EXPECT_EQ(encode_by_hand(4, make_family(complete_spec(4)).edges()), "C~");
    EXPECT_EQ(encode_by_hand(2, {{0, 1}}), "A_");

    EXPECT_EQ(parse_graph6("C~"), make_family(complete_spec(4)));
    EXPECT_EQ(parse_graph6("A_"), build_graph(2, {{0, 1}}));
    const Graph empty2 = parse_graph6("A?");
    EXPECT_EQ(empty2.order(), 2);
    EXPECT_EQ(empty2.edge_count(), 0);
}

TEST(Graph6, WriterMatchesHandEncoder)
{
    std::mt19937_64 rng(7);
    for (int n = 0; n <= 20; ++n) {
        const Graph g = random_graph(n, 0.4, rng);
        EXPECT_EQ(to_graph6(g), encode_by_hand(n, g.edges())) << "n=" << n;
    }
}

TEST(Graph6, RoundTripEnumeratedAndLarge)
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) EXPECT_EQ(parse_graph6(to_graph6(g)), g);

    std::mt19937_64 rng(11);
    const Graph big = random_graph(63, 0.3, rng);
    const std::string text = to_graph6(big);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6(text), big);
    EXPECT_EQ(parse_graph6(to_graph6(make_family(gh_spec(5)))), make_family(gh_spec(5)));
}

TEST(Graph6, TrailingNewlineAccepted)
{
    EXPECT_EQ(parse_graph6("C~\n"), make_family(complete_spec(4)));
}

TEST(Graph6, Malformed)
{
    EXPECT_THROW(parse_graph6(""), MalformedGraph6);
    EXPECT_THROW(parse_graph6("C"), MalformedGraph6);     // missing data
    EXPECT_THROW(parse_graph6("C~~"), MalformedGraph6);   // too much data
    EXPECT_THROW(parse_graph6("C\x20"), MalformedGraph6); // bad character
    EXPECT_THROW(parse_graph6("B@"), MalformedGraph6);    // nonzero padding (n=3 uses 3 bits)
    EXPECT_THROW(parse_graph6("~?A?"), OrderTooLarge);    // n = 64
}

TEST(Components, Examples)
{
    const Graph p4 = make_family(path_spec(4));
    EXPECT_EQ(components(p4, VertexSet::of({2, 3})), std::vector<VertexSet>{VertexSet::of({2, 3})});
    EXPECT_EQ(components(p4, VertexSet::of({0, 2})),
              (std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({2})}));
    const Graph c6 = make_family(cycle_spec(6));
    EXPECT_EQ(components(c6, c6.vertices()), std::vector<VertexSet>{c6.vertices()});
    EXPECT_TRUE(components(c6, VertexSet{}).empty());
}

TEST(Components, PartitionProperty)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 16;
        const Graph g = random_graph(n, 0.25, rng);
        const VertexSet active = random_subset(n, rng);
        const auto parts = components(g, active);
        VertexSet uni;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            EXPECT_FALSE(parts[i].empty());
            EXPECT_FALSE(parts[i].intersects(uni));
            uni |= parts[i];
            if (i > 0) {
                EXPECT_LT(parts[i - 1].lowest(), parts[i].lowest());
            }
        }
        EXPECT_EQ(uni, active);
        for (auto [u, v] : g.edges()) {
            if (!active.contains(u) || !active.contains(v)) continue;
            const bool same = std::any_of(parts.begin(), parts.end(), [&](VertexSet c) {
                return c.contains(u) && c.contains(v);
            });
            EXPECT_TRUE(same);
        }
    }
}

TEST(ClosedNeighborhood, Examples)
{
    EXPECT_EQ(closed_neighborhood(make_family(path_spec(4)), VertexSet::of({1})), VertexSet::of({0, 1, 2}));
    EXPECT_EQ(closed_neighborhood(make_family(cycle_spec(5)), VertexSet{}), VertexSet{});
    const Graph k5 = make_family(complete_spec(5));
    EXPECT_EQ(closed_neighborhood(k5, VertexSet::of({0})), k5.vertices());
}

TEST(ClosedNeighborhood, MonotoneAndExtensive)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 20;
        const Graph g = random_graph(n, 0.2, rng);
        const VertexSet t = random_subset(n, rng);
        const VertexSet s = t & random_subset(n, rng);
        EXPECT_TRUE(s.subset_of(closed_neighborhood(g, s)));
        EXPECT_TRUE(closed_neighborhood(g, s).subset_of(closed_neighborhood(g, t)));
    }
}

TEST(Families, Examples)
{
    EXPECT_EQ(make_family(gstar_spec(complete_spec(1))), make_family(path_spec(7)));

    const Graph g3 = make_family(gtriangles_spec(3));
    EXPECT_EQ(g3.order(), 9);
    EXPECT_EQ(g3.edge_count(), 12);

    EXPECT_EQ(make_family(gh_spec(1)), make_family(hgraph_spec()));
}

TEST(Families, Orders)
{
    for (int b = 1; b <= 9; ++b)
        EXPECT_EQ(make_family(gstar_spec(path_spec(b))).order(), 7 * b);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(make_family(gh_spec(n)).order(), 12 * n);
    EXPECT_EQ(make_family(gstar_spec(complete_spec(2))).edge_count(), 13);
}

TEST(Families, FTrianglesAllRemoved)
{
    for (int n = 1; n <= 6; ++n) {
        const Graph f = make_family(ftriangles_spec(n, n));
        int clique_edges = 0;
        for (auto [u, v] : f.edges())
            if (u % 3 == 0 && v % 3 == 0) ++clique_edges;
        EXPECT_EQ(clique_edges, n * (n - 1) / 2);
        // Without the clique the graph splits into n paths x_i v_i y_i.
        std::vector<Edge> local;
        for (auto [u, v] : f.edges())
            if (!(u % 3 == 0 && v % 3 == 0)) local.emplace_back(u, v);
        const auto parts = components(build_graph(3 * n, local), f.vertices());
        ASSERT_EQ(static_cast<int>(parts.size()), n);
        for (auto c : parts) EXPECT_EQ(c.size(), 3);
    }
}

TEST(Families, BadSpecs)
{
    EXPECT_THROW(make_family(ftriangles_spec(3, 4)), BadSpec);
    EXPECT_THROW(make_family(ftriangles_spec(3, 0)), BadSpec);
    EXPECT_THROW(make_family(path_spec(0)), BadSpec);
    EXPECT_THROW(make_family(cycle_spec(2)), BadSpec);
    EXPECT_THROW(make_family(gh_spec(6)), BadSpec);
    EXPECT_THROW(make_family(gstar_spec(path_spec(10))), BadSpec);
    EXPECT_THROW(make_family(all_trees_spec(4)), BadSpec);
    EXPECT_THROW(make_family(custom_spec(3, {{0, 3}})), BadSpec);
}

TEST(Families, ParseSpecStrings)
{
    EXPECT_EQ(make_family(parse_family_spec("path:5")), make_family(path_spec(5)));
    EXPECT_EQ(make_family(parse_family_spec("cycle:6")), make_family(cycle_spec(6)));
    EXPECT_EQ(make_family(parse_family_spec("complete:4")), make_family(complete_spec(4)));
    EXPECT_EQ(make_family(parse_family_spec("star:3")), make_family(star_spec(3)));
    EXPECT_EQ(make_family(parse_family_spec("hgraph")), make_family(hgraph_spec()));
    EXPECT_EQ(make_family(parse_family_spec("gstar:complete:2")), make_family(gstar_spec(complete_spec(2))));
    EXPECT_EQ(make_family(parse_family_spec("gtriangles:3")), make_family(gtriangles_spec(3)));
    EXPECT_EQ(make_family(parse_family_spec("ftriangles:3:2")), make_family(ftriangles_spec(3, 2)));
    EXPECT_EQ(make_family(parse_family_spec("gh:1")), make_family(gh_spec(1)));
    EXPECT_EQ(make_family(parse_family_spec("custom:3:0-1,1-2")), make_family(path_spec(3)));
    EXPECT_EQ(make_family_members(parse_family_spec("trees:5")).size(), 125u);
    EXPECT_THROW(parse_family_spec("wheel:5"), BadSpec);
    EXPECT_THROW(parse_family_spec("path:x"), BadSpec);
    EXPECT_THROW(parse_family_spec("path"), BadSpec);
    EXPECT_THROW(parse_family_spec("custom:3:01"), BadSpec);
}

TEST(Trees, PruferSweepCountsAndShape)
{
    for (int n = 1; n <= 7; ++n) {
        std::size_t count = 0;
        for_each_prufer_tree(n, [&](const Graph& t) {
            ++count;
            EXPECT_EQ(t.edge_count(), n - 1);
            EXPECT_TRUE(is_connected(t));
        });
        std::size_t expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        EXPECT_EQ(count, expected) << "n=" << n;
    }
}

TEST(Trees, DistinctTreesMatchCanonicalDedup)
{
    for (int n = 1; n <= 8; ++n) {
        std::set<std::uint64_t> classes;
        for_each_prufer_tree(n, [&](const Graph& t) { classes.insert(canonical_code(t)); });
        EXPECT_EQ(distinct_trees(n).size(), classes.size()) << "n=" << n;
    }
    // A000055 at n = 9.
    EXPECT_EQ(distinct_trees(9).size(), 47u);
}

TEST(Enumerate, MatchesBruteForceOracle)
{
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(enumerate_connected(n).size(), brute_connected_classes(n)) << "n=" << n;
}

TEST(Enumerate, KnownSmallCounts)
{
    // Frozen from brute_connected_classes above.
    const std::vector<std::size_t> counts = {1, 1, 2, 6, 21};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_connected(n).size(), counts[n - 1]);
    const auto three = enumerate_connected(3);
    EXPECT_TRUE(std::any_of(three.begin(), three.end(), [](const Graph& g) { return g.edge_count() == 2; }));
    EXPECT_TRUE(std::any_of(three.begin(), three.end(), [](const Graph& g) { return g.edge_count() == 3; }));
}

TEST(Enumerate, ConnectedAndPairwiseNonIsomorphic)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::uint64_t> codes;
        for (const Graph& g : enumerate_connected(n)) {
            EXPECT_TRUE(is_connected(g));
            if (n <= 6) {
                EXPECT_TRUE(codes.insert(brute_canonical(g)).second);
            }
        }
    }
}

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return build_graph(g.order(), edges);
}

TEST(Enumerate, CanonicalCodeIsACompleteInvariant)
{
    std::mt19937_64 rng(13);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 240; ++trial) {
        const int n = 1 + trial % 6;
        const Graph g = random_graph(n, 0.45, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm))) << g;
        EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm))) << g;
        graphs.push_back(g);
    }
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            if (graphs[i].order() != graphs[j].order()) continue;
            EXPECT_EQ(canonical_code(graphs[i]) == canonical_code(graphs[j]),
                      brute_canonical(graphs[i]) == brute_canonical(graphs[j]))
                << graphs[i] << " vs " << graphs[j];
        }
}

TEST(Enumerate, CanonicalFormIsIsomorphic)
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + trial % 7, 0.5, rng);
        EXPECT_EQ(brute_canonical(canonical_form(g)), brute_canonical(g));
        EXPECT_EQ(canonical_form(canonical_form(g)), canonical_form(g));
    }
}

TEST(Enumerate, Limits)
{
    EXPECT_THROW(enumerate_connected(9), OrderTooLarge);
    EXPECT_THROW(enumerate_connected(0), BadSpec);
}

} // namespace
} // namespace isogame
