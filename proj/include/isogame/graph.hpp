#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "isogame/errors.hpp"
#include "isogame/vertex_set.hpp"

namespace isogame {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bit-mask adjacency.
/// Immutable once built; use build_graph() to construct one.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::first(order()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | VertexSet::singleton(v); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }

    int edge_count() const
    {
        int twice = 0;
        for (auto a : adj_) twice += a.size();
        return twice / 2;
    }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::string& label() const { return label_; }

    Graph with_label(std::string label) const
    {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

    friend std::ostream& operator<<(std::ostream& os, const Graph& g)
    {
        os << "Graph(n=" << g.order() << ", edges=[";
        bool sep = false;
        for (auto [u, v] : g.edges()) {
            os << (sep ? " " : "") << u << '-' << v;
            sep = true;
        }
        return os << "])";
    }

private:
    friend Graph build_graph(int n, const std::vector<Edge>& edges, std::string label);

    std::vector<VertexSet> adj_;
    std::string label_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges, std::string label = {})
{
    if (n > max_order)
        throw OrderTooLarge("graph order " + std::to_string(n) + " exceeds " +
                            std::to_string(max_order));
    if (n < 0) throw BadEdge("negative graph order");
    Graph g;
    g.adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw BadEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                          " out of range for order " + std::to_string(n));
        if (u == v) throw BadEdge("loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    g.label_ = std::move(label);
    return g;
}

/// N[s]: members of s together with all their neighbors.
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s)
{
    VertexSet out = s;
    for (int v : s) out |= g.neighbors(v);
    return out;
}

/// The vertices of active reachable from start inside g[active].
inline VertexSet component_of(const Graph& g, VertexSet active, int start)
{
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next &= active;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Connected components of g[active], ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet active)
{
    std::vector<VertexSet> out;
    VertexSet rest = active & g.vertices();
    while (!rest.empty()) {
        VertexSet c = component_of(g, rest, rest.lowest());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

inline bool is_connected(const Graph& g)
{
    return g.order() == 0 || component_of(g, g.vertices(), 0) == g.vertices();
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return build_graph(a.order() + b.order(), edges);
}

/// Graph induced by keep, relabeled to 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for (int v : keep) index[v] = next++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v)) edges.emplace_back(index[u], index[v]);
    return build_graph(next, edges);
}

} // namespace isogame
