#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isogame/graph6.hpp"
#include "isogame/rules.hpp"

namespace isogame {

enum class Mover { Dominator, Staller };

inline constexpr Mover other(Mover m)
{
    return m == Mover::Dominator ? Mover::Staller : Mover::Dominator;
}

inline const char* mover_tag(Mover m) { return m == Mover::Dominator ? "D" : "S"; }

struct GameResult {
    /// Moves remaining under optimal play.
    int value = 0;
    /// Lowest-index optimal move; empty at a terminal state.
    std::optional<int> best_move;
    /// One optimal line of play; its length equals value.
    std::vector<int> principal_line;
    /// The start marks were widened by closure before solving.
    bool normalized = false;
};

struct SolverOptions {
    /// Hard cap on memo entries; exceeding it raises StateSpaceBudgetExceeded.
    std::size_t memo_cap = std::size_t{1} << 26;
    /// Stop scanning moves once a provably optimal one is found. Values and
    /// best moves are unchanged.
    bool bound_pruning = false;
};

/// Exact minimax over closed marked sets, memoized on (marked set, mover).
/// One solver serves one (graph, family) pair; it is not thread-safe, so give
/// each thread its own.
class GameSolver {
public:
    GameSolver(Graph g, ForbiddenFamily fam, SolverOptions options = {})
        : g_(std::move(g)), fam_(std::move(fam)), options_(options)
    {
    }

    const Graph& graph() const { return g_; }
    const ForbiddenFamily& family() const { return fam_; }
    std::size_t memo_size() const { return memo_.size(); }

    /// Moves remaining from a closed state with mover to play.
    int value(const MarkState& state, Mover mover) { return eval(state.marked, mover); }

    GameResult result(const MarkState& state, Mover mover)
    {
        GameResult r;
        r.normalized = state.normalized;
        r.value = eval(state.marked, mover);
        VertexSet m = state.marked;
        Mover turn = mover;
        while (m != g_.vertices()) {
            const int x = best_move(m, turn);
            if (r.principal_line.empty()) r.best_move = x;
            r.principal_line.push_back(x);
            m = successor(m, x);
            turn = other(turn);
        }
        return r;
    }

    /// Every playable vertex whose successor attains the optimum for mover.
    VertexSet optimal_moves(const MarkState& state, Mover mover)
    {
        if (state.marked == g_.vertices()) throw TerminalState("no moves remain: every vertex is marked");
        const int target = eval(state.marked, mover) - 1;
        VertexSet out;
        for (int x : playable(g_, state))
            if (eval(successor(state.marked, x), other(mover)) == target) out.insert(x);
        return out;
    }

    VertexSet successor(VertexSet marked, int x) const
    {
        return close_marks(g_, fam_, marked | g_.closed_neighbors(x));
    }

private:
    static std::uint64_t key(VertexSet marked, Mover mover)
    {
        return marked.bits() | (mover == Mover::Staller ? std::uint64_t{1} << 63 : 0);
    }

    int best_move(VertexSet marked, Mover mover)
    {
        const int target = eval(marked, mover) - 1;
        for (int x : playable(g_, MarkState{marked}))
            if (eval(successor(marked, x), other(mover)) == target) return x;
        throw Error("internal: no move attains the stored value");
    }

    int eval(VertexSet marked, Mover mover)
    {
        const VertexSet all = g_.vertices();
        if (marked == all) return 0;
        const auto k = key(marked, mover);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;

        const bool minimize = mover == Mover::Dominator;
        // Any nonterminal state needs at least one move, and every move marks
        // at least one new vertex.
        const int floor_value = 1;
        const int ceiling_value = (all - marked).size();
        int best = minimize ? ceiling_value + 1 : 0;
        for (int x : playable(g_, MarkState{marked})) {
            const int v = 1 + eval(successor(marked, x), other(mover));
            if (minimize ? v < best : v > best) best = v;
            if (options_.bound_pruning && (minimize ? best == floor_value : best == ceiling_value))
                break;
        }
        if (memo_.size() >= options_.memo_cap)
            throw StateSpaceBudgetExceeded("memo table reached its cap of " +
                                           std::to_string(options_.memo_cap) + " entries while solving " +
                                           to_graph6(g_));
        memo_.emplace(k, static_cast<std::uint8_t>(best));
        return best;
    }

    Graph g_;
    ForbiddenFamily fam_;
    SolverOptions options_;
    std::unordered_map<std::uint64_t, std::uint8_t> memo_;
};

inline GameResult game_value(const Graph& g, const ForbiddenFamily& fam, const MarkState& start,
                             Mover mover, SolverOptions options = {})
{
    return GameSolver(g, fam, options).result(start, mover);
}

inline VertexSet optimal_moves(const Graph& g, const ForbiddenFamily& fam, const MarkState& state,
                               Mover mover, SolverOptions options = {})
{
    return GameSolver(g, fam, options).optimal_moves(state, mover);
}

/// Closes initial_marks, then solves the game with start_player moving first.
inline GameResult solve(const Graph& g, const ForbiddenFamily& fam, Mover start_player,
                        VertexSet initial_marks = {}, SolverOptions options = {})
{
    return game_value(g, fam, initial_closure(g, fam, initial_marks), start_player, options);
}

/// D-game and S-game values on the same position, sharing one memo.
struct ValuePair {
    int d = 0;
    int s = 0;
};

inline ValuePair solve_both(const Graph& g, const ForbiddenFamily& fam, VertexSet initial_marks = {},
                            SolverOptions options = {})
{
    GameSolver solver(g, fam, options);
    const MarkState start = initial_closure(g, fam, initial_marks);
    return {solver.value(start, Mover::Dominator), solver.value(start, Mover::Staller)};
}

} // namespace isogame
