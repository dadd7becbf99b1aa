#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "isogame/families.hpp"
#include "isogame/graph.hpp"

namespace isogame {

namespace detail {

inline std::string rooted_code(const Graph& t, int v, int parent)
{
    std::vector<std::string> kids;
    for (int u : t.neighbors(v))
        if (u != parent) kids.push_back(rooted_code(t, u, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    return out + ")";
}

} // namespace detail

/// Isomorphism code of a tree: nested-parenthesis encoding rooted at the
/// center (minimum over both centers when there are two).
inline std::string tree_code(const Graph& t)
{
    const int n = t.order();
    if (n == 0) return "";
    std::vector<int> degree(n);
    VertexSet alive = t.vertices();
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
    while (alive.size() > 2) {
        VertexSet leaves;
        for (int v : alive)
            if (degree[v] <= 1) leaves.insert(v);
        for (int v : leaves)
            for (int u : t.neighbors(v) & alive) --degree[u];
        alive -= leaves;
    }
    std::string best;
    for (int c : alive) {
        auto code = detail::rooted_code(t, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// One labeled tree per isomorphism class of order n, taken from the Prüfer
/// sweep in first-seen order.
inline std::vector<Graph> distinct_trees(int n)
{
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for_each_prufer_tree(n, [&](const Graph& t) {
        if (seen.insert(tree_code(t)).second) out.push_back(t);
    });
    return out;
}

/// Random forest: a random Prüfer tree of order n with each edge dropped
/// independently with probability drop.
template <class Rng>
Graph random_forest(int n, double drop, Rng& rng)
{
    std::vector<int> seq(std::max(0, n - 2));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& s : seq) s = pick(rng);
    const Graph tree = tree_from_prufer(n, seq);
    std::bernoulli_distribution cut(drop);
    std::vector<Edge> keep;
    for (auto e : tree.edges())
        if (!cut(rng)) keep.push_back(e);
    return build_graph(n, keep);
}

} // namespace isogame
