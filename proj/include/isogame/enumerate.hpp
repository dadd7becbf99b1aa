#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_set>
#include <vector>

#include "isogame/graph.hpp"

namespace isogame {

/// Largest order accepted by enumerate_connected.
inline constexpr int max_enumeration_order = 8;

namespace detail {

/// Color refinement: repeatedly split vertex classes by the multiset of
/// neighbor classes. Class numbers depend only on the isomorphism type.
inline std::vector<int> refine_colors(const Graph& g)
{
    const int n = g.order();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> ids;
        for (auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

/// Backtracking search for the lexicographically largest upper-triangle code
/// over all labelings that place vertices in nondecreasing refined color.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order())
    {
        const auto color = refine_colors(g);
        slot_color_ = color;
        std::sort(slot_color_.begin(), slot_color_.end());
        color_ = color;
        shift_.resize(n_ + 1);
        int bits = n_ * (n_ - 1) / 2;
        for (int j = 0; j <= n_; ++j) {
            bits -= j > 0 ? j - 1 : 0;
            shift_[j] = bits;
        }
        perm_.assign(n_, -1);
    }

    /// Returns the canonical code and the labeling (perm[position] = vertex).
    std::pair<std::uint64_t, std::vector<int>> run()
    {
        search(0, 0, VertexSet{});
        return {best_, best_perm_};
    }

private:
    void search(int pos, std::uint64_t code, VertexSet used)
    {
        if (pos == n_) {
            if (!found_ || code > best_) {
                best_ = code;
                best_perm_ = perm_;
                found_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used.contains(v) || color_[v] != slot_color_[pos]) continue;
            std::uint64_t column = 0;
            for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(perm_[i], v) ? 1 : 0);
            const std::uint64_t next = code | (column << shift_[pos + 1]);
            if (found_ && (next >> shift_[pos + 1]) < (best_ >> shift_[pos + 1])) continue;
            perm_[pos] = v;
            search(pos + 1, next, used | VertexSet::singleton(v));
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> slot_color_;
    std::vector<int> shift_;
    std::vector<int> perm_;
    std::vector<int> best_perm_;
    std::uint64_t best_ = 0;
    bool found_ = false;
};

} // namespace detail

/// Canonical upper-triangle code (column-major, first column most
/// significant); two graphs of the same order share a code iff isomorphic.
/// Order at most 11 so the code fits 64 bits.
inline std::uint64_t canonical_code(const Graph& g)
{
    if (g.order() > 11) throw OrderTooLarge("canonical_code supports order <= 11");
    return detail::CanonicalSearch(g).run().first;
}

/// g relabeled into its canonical form.
inline Graph canonical_form(const Graph& g)
{
    if (g.order() > 11) throw OrderTooLarge("canonical_form supports order <= 11");
    auto [code, perm] = detail::CanonicalSearch(g).run();
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[perm[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
    return build_graph(g.order(), edges, g.label());
}

/// One representative (in canonical labeling) per isomorphism class of
/// connected graphs of order n, sorted by canonical code.
///
/// Every connected graph of order n >= 2 arises from a connected graph of
/// order n-1 by adding a vertex with a nonempty neighborhood (delete a
/// non-cut vertex), so classes are grown order by order and deduplicated by
/// canonical code.
inline std::vector<Graph> enumerate_connected(int n)
{
    if (n > max_enumeration_order)
        throw OrderTooLarge("enumerate_connected supports order <= " +
                            std::to_string(max_enumeration_order));
    if (n < 1) throw BadSpec("enumerate_connected needs order >= 1");

    std::vector<Graph> level = {build_graph(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::pair<std::uint64_t, Graph>> next;
        for (const Graph& base : level) {
            const auto edges = base.edges();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                auto grown = edges;
                for (int v : VertexSet{mask}) grown.emplace_back(v, m - 1);
                Graph candidate = build_graph(m, grown);
                auto [code, perm] = detail::CanonicalSearch(candidate).run();
                if (!seen.insert(code).second) continue;
                next.emplace_back(code, canonical_form(candidate));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

/// Connected graphs of every order in [n_min, n_max], order by order.
inline std::vector<Graph> enumerate_connected_range(int n_min, int n_max)
{
    std::vector<Graph> out;
    for (int n = n_min; n <= n_max; ++n) {
        auto level = enumerate_connected(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace isogame
