#pragma once

#include <charconv>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isogame/graph.hpp"

namespace isogame {

struct FamilySpec;

namespace family {

struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
/// K_{1,r}: center 0, leaves 1..r.
struct Star { int r; };
/// The 12-vertex graph H; vertex v_i of the drawing is index i-1.
struct HGraph {};
/// Each base vertex identified with the center of its own P_7.
struct GStar { std::shared_ptr<const FamilySpec> base; };
/// n disjoint triangles {v_i, x_i, y_i} with {v_1..v_n} a clique.
struct GTriangles { int n; };
/// GTriangles(n) without the edges x_i y_i for i <= k.
struct FTriangles { int n; int k; };
/// n copies of H whose v_4 vertices are joined along a path P_n.
struct GH { int n; };
/// Every labeled tree of order n (one per Prüfer sequence).
struct AllTrees { int n; };
struct Custom { int n; std::vector<Edge> edges; };

} // namespace family

struct FamilySpec {
    std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::HGraph,
                 family::GStar, family::GTriangles, family::FTriangles, family::GH,
                 family::AllTrees, family::Custom>
        value;
};

inline FamilySpec path_spec(int n) { return {family::Path{n}}; }
inline FamilySpec cycle_spec(int n) { return {family::Cycle{n}}; }
inline FamilySpec complete_spec(int n) { return {family::Complete{n}}; }
inline FamilySpec star_spec(int r) { return {family::Star{r}}; }
inline FamilySpec hgraph_spec() { return {family::HGraph{}}; }
inline FamilySpec gstar_spec(FamilySpec base)
{
    return {family::GStar{std::make_shared<const FamilySpec>(std::move(base))}};
}
inline FamilySpec gtriangles_spec(int n) { return {family::GTriangles{n}}; }
inline FamilySpec ftriangles_spec(int n, int k) { return {family::FTriangles{n, k}}; }
inline FamilySpec gh_spec(int n) { return {family::GH{n}}; }
inline FamilySpec all_trees_spec(int n) { return {family::AllTrees{n}}; }
inline FamilySpec custom_spec(int n, std::vector<Edge> edges)
{
    return {family::Custom{n, std::move(edges)}};
}

/// Edges of H, 0-based (v1v2 -> 0-1, ...).
inline const std::vector<Edge>& hgraph_edges()
{
    static const std::vector<Edge> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {4, 9},
        {5, 6}, {6, 7}, {6, 8}, {7, 8}, {9, 10}, {9, 11}, {10, 11},
    };
    return edges;
}

/// Index of v_4 inside H, the vertex that gets identified with a base vertex.
inline constexpr int hgraph_attach_vertex = 3;

/// Attaches a private P_7 to every vertex of base, base vertex i becoming the
/// center 7i+3 of the path on 7i..7i+6.
inline Graph make_gstar(const Graph& base)
{
    const int b = base.order();
    if (b < 1) throw BadSpec("gstar base must have at least one vertex");
    if (7 * b > max_order) throw BadSpec("gstar result would exceed 63 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < b; ++i)
        for (int t = 0; t < 6; ++t) edges.emplace_back(7 * i + t, 7 * i + t + 1);
    for (auto [u, v] : base.edges()) edges.emplace_back(7 * u + 3, 7 * v + 3);
    return build_graph(7 * b, edges);
}

/// Identifies base vertex i with v_4 of copy i of H (copy i on 12i..12i+11).
inline Graph make_gh(const Graph& base)
{
    const int b = base.order();
    if (b < 1) throw BadSpec("gh base must have at least one vertex");
    if (12 * b > max_order) throw BadSpec("gh result would exceed 63 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < b; ++i)
        for (auto [u, v] : hgraph_edges()) edges.emplace_back(12 * i + u, 12 * i + v);
    for (auto [u, v] : base.edges())
        edges.emplace_back(12 * u + hgraph_attach_vertex, 12 * v + hgraph_attach_vertex);
    return build_graph(12 * b, edges);
}

/// Tree decoded from a Prüfer sequence over 0..n-1 (length n-2).
inline Graph tree_from_prufer(int n, const std::vector<int>& seq)
{
    if (n == 1) return build_graph(1, {});
    if (n == 2) return build_graph(2, {{0, 1}});
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<Edge> edges;
    for (int v : seq) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    int u = -1;
    for (int w = 0; w < n; ++w) {
        if (degree[w] == 1) {
            if (u < 0) {
                u = w;
            } else {
                edges.emplace_back(u, w);
                break;
            }
        }
    }
    return build_graph(n, edges);
}

/// Calls visit on every labeled tree of order n, n^(n-2) of them for n >= 2.
inline void for_each_prufer_tree(int n, const std::function<void(const Graph&)>& visit)
{
    if (n < 1) throw BadSpec("tree order must be positive");
    if (n > max_order) throw OrderTooLarge("tree order exceeds 63");
    if (n <= 2) {
        visit(tree_from_prufer(n, {}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        visit(tree_from_prufer(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

namespace detail {

inline void require(bool ok, const char* what)
{
    if (!ok) throw BadSpec(what);
}

inline Graph make_single(const FamilySpec& spec)
{
    using namespace family;
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            std::vector<Edge> edges;
            if constexpr (std::is_same_v<T, Path>) {
                require(s.n >= 1, "path order must be positive");
                for (int i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
                return build_graph(s.n, edges, "P" + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, Cycle>) {
                require(s.n >= 3, "cycle order must be at least 3");
                for (int i = 0; i < s.n; ++i) edges.emplace_back(i, (i + 1) % s.n);
                return build_graph(s.n, edges, "C" + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, Complete>) {
                require(s.n >= 1, "complete graph order must be positive");
                for (int i = 0; i < s.n; ++i)
                    for (int j = i + 1; j < s.n; ++j) edges.emplace_back(i, j);
                return build_graph(s.n, edges, "K" + std::to_string(s.n));
            } else if constexpr (std::is_same_v<T, Star>) {
                require(s.r >= 1, "star needs at least one leaf");
                for (int i = 1; i <= s.r; ++i) edges.emplace_back(0, i);
                return build_graph(s.r + 1, edges, "K1," + std::to_string(s.r));
            } else if constexpr (std::is_same_v<T, HGraph>) {
                return build_graph(12, hgraph_edges(), "H");
            } else if constexpr (std::is_same_v<T, GStar>) {
                require(s.base != nullptr, "gstar needs a base");
                const Graph base = make_single(*s.base);
                return make_gstar(base).with_label(base.label() + "*");
            } else if constexpr (std::is_same_v<T, GTriangles> || std::is_same_v<T, FTriangles>) {
                int n = s.n;
                int k = 0;
                if constexpr (std::is_same_v<T, FTriangles>) {
                    k = s.k;
                    require(k >= 1 && k <= n, "ftriangles requires 1 <= k <= n");
                }
                require(n >= 1, "triangle count must be positive");
                require(3 * n <= max_order, "triangle family would exceed 63 vertices");
                for (int i = 0; i < n; ++i) {
                    edges.emplace_back(3 * i, 3 * i + 1);
                    edges.emplace_back(3 * i, 3 * i + 2);
                    if (i >= k) edges.emplace_back(3 * i + 1, 3 * i + 2);
                    for (int j = i + 1; j < n; ++j) edges.emplace_back(3 * i, 3 * j);
                }
                std::string label = k == 0 ? "G" + std::to_string(n)
                                           : "F" + std::to_string(k) + "(n=" + std::to_string(n) + ")";
                return build_graph(3 * n, edges, label);
            } else if constexpr (std::is_same_v<T, GH>) {
                require(s.n >= 1, "gh order must be positive");
                require(12 * s.n <= max_order, "gh result would exceed 63 vertices");
                const Graph base = make_single(path_spec(s.n));
                return make_gh(base).with_label("GH(base=P" + std::to_string(s.n) + ")");
            } else if constexpr (std::is_same_v<T, AllTrees>) {
                throw BadSpec("trees:n names many graphs; use make_family_members");
            } else {
                require(s.n >= 1, "custom graph order must be positive");
                try {
                    return build_graph(s.n, s.edges, "custom");
                } catch (const BadEdge& e) {
                    throw BadSpec(e.what());
                }
            }
        },
        spec.value);
}

} // namespace detail

/// Builds the single graph named by spec. AllTrees is rejected; see
/// make_family_members.
inline Graph make_family(const FamilySpec& spec)
{
    return detail::make_single(spec);
}

/// Every graph named by spec: one graph, or all Prüfer trees for AllTrees
/// (orders up to 8, since the list is materialized).
inline std::vector<Graph> make_family_members(const FamilySpec& spec)
{
    if (const auto* t = std::get_if<family::AllTrees>(&spec.value)) {
        if (t->n > 8) throw BadSpec("trees:n materializes n^(n-2) graphs; use for_each_prufer_tree");
        std::vector<Graph> out;
        for_each_prufer_tree(t->n, [&](const Graph& g) {
            out.push_back(g.with_label("T" + std::to_string(t->n)));
        });
        return out;
    }
    return {make_family(spec)};
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view context)
{
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw BadSpec("expected an integer in '" + std::string(context) + "', got '" +
                      std::string(s) + "'");
    return value;
}

/// "0-1,1-2" -> edges
inline std::vector<Edge> parse_edge_list(std::string_view s, std::string_view context)
{
    std::vector<Edge> edges;
    while (!s.empty()) {
        auto comma = s.find(',');
        std::string_view item = s.substr(0, comma);
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw BadSpec("edge '" + std::string(item) + "' in '" + std::string(context) +
                          "' must look like u-v");
        edges.emplace_back(parse_int(item.substr(0, dash), context),
                           parse_int(item.substr(dash + 1), context));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return edges;
}

} // namespace detail

/// Parses the family mini-language: path:n, cycle:n, complete:n, star:r,
/// hgraph, gstar:<spec>, gtriangles:n, ftriangles:n:k, gh:n, trees:n,
/// custom:n:u-v,...
inline FamilySpec parse_family_spec(std::string_view text)
{
    const std::string whole(text);
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto one_int = [&] {
        if (colon == std::string_view::npos) throw BadSpec("family '" + whole + "' needs a parameter");
        return detail::parse_int(rest, whole);
    };

    if (head == "path") return path_spec(one_int());
    if (head == "cycle") return cycle_spec(one_int());
    if (head == "complete") return complete_spec(one_int());
    if (head == "star") return star_spec(one_int());
    if (head == "gtriangles") return gtriangles_spec(one_int());
    if (head == "gh") return gh_spec(one_int());
    if (head == "trees") return all_trees_spec(one_int());
    if (head == "hgraph") {
        if (!rest.empty()) throw BadSpec("hgraph takes no parameter");
        return hgraph_spec();
    }
    if (head == "gstar") {
        if (rest.empty()) throw BadSpec("gstar needs a base spec, e.g. gstar:complete:2");
        return gstar_spec(parse_family_spec(rest));
    }
    if (head == "ftriangles") {
        auto c = rest.find(':');
        if (c == std::string_view::npos) throw BadSpec("ftriangles needs n:k");
        return ftriangles_spec(detail::parse_int(rest.substr(0, c), whole),
                               detail::parse_int(rest.substr(c + 1), whole));
    }
    if (head == "custom") {
        auto c = rest.find(':');
        const int n = detail::parse_int(rest.substr(0, c), whole);
        auto edges = c == std::string_view::npos ? std::vector<Edge>{}
                                                 : detail::parse_edge_list(rest.substr(c + 1), whole);
        return custom_spec(n, std::move(edges));
    }
    throw BadSpec("unknown family '" + std::string(head) + "'");
}

} // namespace isogame
