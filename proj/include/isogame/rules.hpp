#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "isogame/families.hpp"
#include "isogame/graph.hpp"

namespace isogame {

/// Largest pattern order the containment search accepts.
inline constexpr int max_pattern_order = 6;

namespace detail {

inline bool embed(const Graph& host, VertexSet within, const Graph& pattern,
                  const std::vector<int>& order, std::vector<int>& image, VertexSet used,
                  std::size_t depth)
{
    if (depth == order.size()) return true;
    const int p = order[depth];
    VertexSet candidates = within - used;
    for (std::size_t i = 0; i < depth; ++i)
        if (pattern.adjacent(p, order[i])) candidates &= host.neighbors(image[order[i]]);
    const int need = pattern.degree(p);
    for (int h : candidates) {
        if ((host.neighbors(h) & within).size() < need) continue;
        image[p] = h;
        if (embed(host, within, pattern, order, image, used | VertexSet::singleton(h), depth + 1))
            return true;
    }
    return false;
}

} // namespace detail

/// True iff g[within] has pattern as a (not necessarily induced) subgraph.
inline bool contains_pattern(const Graph& g, VertexSet within, const Graph& pattern)
{
    const int k = pattern.order();
    if (k > max_pattern_order)
        throw PatternTooLarge("pattern order " + std::to_string(k) + " exceeds " +
                              std::to_string(max_pattern_order));
    within &= g.vertices();
    if (k == 0) return true;
    if (within.size() < k) return false;
    const int m = pattern.edge_count();
    if (m == 0) return true;

    int host_edges = 0;
    for (int v : within) host_edges += (g.neighbors(v) & within).size();
    if (host_edges / 2 < m) return false;
    if (m == 1) return host_edges > 0;

    // Place pattern vertices so that each one after the first of its
    // component is adjacent to an already placed vertex, highest degree first.
    std::vector<int> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < k) {
        int pick = -1;
        for (int v = 0; v < k; ++v) {
            if (placed.contains(v)) continue;
            const bool linked = pattern.neighbors(v).intersects(placed);
            if (pick < 0) {
                pick = v;
                continue;
            }
            const bool pick_linked = pattern.neighbors(pick).intersects(placed);
            if (linked != pick_linked ? linked : pattern.degree(v) > pattern.degree(pick)) pick = v;
        }
        order.push_back(pick);
        placed.insert(pick);
    }
    std::vector<int> image(k, -1);
    return detail::embed(g, within, pattern, order, image, VertexSet{}, 0);
}

/// A forbidden family F: a component is F-forbidden when it contains no
/// member of F as a subgraph.
struct ForbiddenFamily {
    std::vector<Graph> patterns;
    std::string tag;

    static ForbiddenFamily k1() { return {{build_graph(1, {})}, "K1"}; }
    static ForbiddenFamily k2() { return {{build_graph(2, {{0, 1}})}, "K2"}; }
    static ForbiddenFamily p3() { return {{build_graph(3, {{0, 1}, {1, 2}})}, "P3"}; }
    static ForbiddenFamily none() { return {{}, "none"}; }

    static ForbiddenFamily of(std::vector<Graph> patterns, std::string tag)
    {
        for (const auto& p : patterns)
            if (p.order() > max_pattern_order)
                throw PatternTooLarge("pattern order " + std::to_string(p.order()) + " exceeds " +
                                      std::to_string(max_pattern_order));
        return {std::move(patterns), std::move(tag)};
    }
};

/// True iff the component comp contains no pattern of fam (it is F-forbidden).
inline bool is_forbidden_component(const Graph& g, VertexSet comp, const ForbiddenFamily& fam)
{
    return std::none_of(fam.patterns.begin(), fam.patterns.end(),
                        [&](const Graph& p) { return contains_pattern(g, comp, p); });
}

/// Parses "K1", "K2", "P3", "none", or "custom:<order>:<u-v,...>"; several
/// patterns are separated by ';' and pooled into one family.
inline ForbiddenFamily parse_forbidden(std::string_view text)
{
    if (text.empty()) throw BadSpec("empty forbidden-family spec");
    if (text == "none") return ForbiddenFamily::none();
    std::vector<Graph> patterns;
    std::string_view rest = text;
    while (true) {
        auto semi = rest.find(';');
        std::string_view item = rest.substr(0, semi);
        if (item == "K1") {
            patterns.push_back(ForbiddenFamily::k1().patterns[0]);
        } else if (item == "K2") {
            patterns.push_back(ForbiddenFamily::k2().patterns[0]);
        } else if (item == "P3") {
            patterns.push_back(ForbiddenFamily::p3().patterns[0]);
        } else if (item.substr(0, 7) == "custom:") {
            const FamilySpec spec = parse_family_spec(item);
            patterns.push_back(make_family(spec));
        } else {
            throw BadSpec("unknown forbidden pattern '" + std::string(item) + "'");
        }
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
    }
    return ForbiddenFamily::of(std::move(patterns), std::string(text));
}

/// A game position: the marked set M, closed so that no component of G - M is
/// F-forbidden.
struct MarkState {
    VertexSet marked;
    /// Set when initial_closure had to absorb F-forbidden components that
    /// the caller's marks left behind.
    bool normalized = false;

    friend bool operator==(const MarkState&, const MarkState&) = default;
};

/// marked plus every vertex lying in an F-forbidden component of G - marked.
inline VertexSet close_marks(const Graph& g, const ForbiddenFamily& fam, VertexSet marked)
{
    VertexSet out = marked & g.vertices();
    for (VertexSet c : components(g, g.vertices() - out))
        if (is_forbidden_component(g, c, fam)) out |= c;
    return out;
}

inline MarkState initial_closure(const Graph& g, const ForbiddenFamily& fam, VertexSet a)
{
    if (!a.subset_of(g.vertices())) throw BadSpec("initial marks outside the graph: " + a.to_string());
    const VertexSet closed = close_marks(g, fam, a);
    return {closed, closed != a};
}

/// Vertices whose closed neighborhood still holds an unmarked vertex.
inline VertexSet playable(const Graph& g, const MarkState& state)
{
    const VertexSet unmarked = g.vertices() - state.marked;
    VertexSet out = unmarked;
    for (int v : unmarked) out |= g.neighbors(v);
    return out;
}

inline bool is_terminal(const Graph& g, const MarkState& state)
{
    return state.marked == g.vertices();
}

/// Marks N[x] and then every vertex of the new F-forbidden components.
inline MarkState apply_move(const Graph& g, const MarkState& state, const ForbiddenFamily& fam, int x)
{
    if (x < 0 || x >= g.order() || !playable(g, state).contains(x))
        throw IllegalMove("vertex " + std::to_string(x) + " is not playable");
    return {close_marks(g, fam, state.marked | g.closed_neighbors(x)), false};
}

} // namespace isogame
