#pragma once

// Deliberately naive reference computations used as ground truth for the
// solver. Nothing here touches GameSolver or its memo.

#include <algorithm>
#include <vector>

#include "isogame/rules.hpp"
#include "isogame/solver.hpp"

namespace isogame::oracle {

inline constexpr int max_isolation_order = 24;
inline constexpr int max_naive_game_order = 7;

/// True iff every component of G - N[s] is F-forbidden.
inline bool is_isolating(const Graph& g, const ForbiddenFamily& fam, VertexSet s)
{
    const VertexSet rest = g.vertices() - closed_neighborhood(g, s);
    for (VertexSet c : components(g, rest))
        if (!is_forbidden_component(g, c, fam)) return false;
    return true;
}

struct IsolationCertificate {
    VertexSet witness;
    int size = 0;
};

/// Minimum F-isolating set by ascending-cardinality search; among minimum sets
/// the lexicographically least sorted vertex list is returned.
inline IsolationCertificate isolation_number(const Graph& g, const ForbiddenFamily& fam)
{
    const int n = g.order();
    if (n > max_isolation_order)
        throw BudgetExceeded("isolation_number supports order <= " +
                             std::to_string(max_isolation_order));
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            const VertexSet s = VertexSet::from_range(pick);
            if (is_isolating(g, fam, s)) return {s, k};
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error("internal: the full vertex set is always isolating");
}

/// Plain minimax recursion on the shared rulebook, no memo.
inline int naive_game_value(const Graph& g, const ForbiddenFamily& fam, const MarkState& start,
                            Mover mover)
{
    if (g.order() > max_naive_game_order)
        throw BudgetExceeded("naive_game_value supports order <= " +
                             std::to_string(max_naive_game_order));
    if (is_terminal(g, start)) return 0;
    int best = mover == Mover::Dominator ? g.order() + 1 : -1;
    for (int x : playable(g, start)) {
        const int v = 1 + naive_game_value(g, fam, apply_move(g, start, fam, x), other(mover));
        best = mover == Mover::Dominator ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

/// Game value straight from the move rule on played sets: x is legal iff it
/// dominates a vertex of a non-F-forbidden component of G - N[played]. No
/// marked-set bookkeeping is involved.
inline int direct_game_value(const Graph& g, const ForbiddenFamily& fam, VertexSet played, Mover mover)
{
    if (g.order() > max_naive_game_order)
        throw BudgetExceeded("direct_game_value supports order <= " +
                             std::to_string(max_naive_game_order));
    VertexSet live;
    for (VertexSet c : components(g, g.vertices() - closed_neighborhood(g, played)))
        if (!is_forbidden_component(g, c, fam)) live |= c;
    if (live.empty()) return 0;
    int best = mover == Mover::Dominator ? g.order() + 1 : -1;
    for (int x = 0; x < g.order(); ++x) {
        if (!g.closed_neighbors(x).intersects(live)) continue;
        const int v = 1 + direct_game_value(g, fam, played | VertexSet::singleton(x), other(mover));
        best = mover == Mover::Dominator ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

/// Textbook domination game: a move is legal iff it dominates a new vertex;
/// the game ends once N[played] covers V.
inline int domination_game_value(const Graph& g, VertexSet dominated, Mover mover)
{
    if (g.order() > max_naive_game_order)
        throw BudgetExceeded("domination_game_value supports order <= " +
                             std::to_string(max_naive_game_order));
    if (dominated == g.vertices()) return 0;
    int best = mover == Mover::Dominator ? g.order() + 1 : -1;
    for (int x = 0; x < g.order(); ++x) {
        if (g.closed_neighbors(x).subset_of(dominated)) continue;
        const int v = 1 + domination_game_value(g, dominated | g.closed_neighbors(x), other(mover));
        best = mover == Mover::Dominator ? std::min(best, v) : std::max(best, v);
    }
    return best;
}

} // namespace isogame::oracle
