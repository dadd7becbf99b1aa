#include <random>

#include <gtest/gtest.h>

#include "isogame/enumerate.hpp"
#include "isogame/families.hpp"
#include "isogame/oracle.hpp"

namespace isogame {
namespace {

constexpr Mover D = Mover::Dominator;
constexpr Mover S = Mover::Staller;

TEST(IsIsolating, Examples)
{
    const auto k2 = ForbiddenFamily::k2();
    const Graph p5 = make_family(path_spec(5));
    EXPECT_TRUE(oracle::is_isolating(p5, k2, VertexSet::of({2})));
    EXPECT_FALSE(oracle::is_isolating(p5, k2, VertexSet::of({0})));
    EXPECT_FALSE(oracle::is_isolating(p5, k2, VertexSet{}));
    EXPECT_FALSE(oracle::is_isolating(p5, ForbiddenFamily::k1(), VertexSet::of({2})));
    EXPECT_TRUE(oracle::is_isolating(p5, ForbiddenFamily::k1(), VertexSet::of({1, 3})));
}

TEST(IsolationNumber, Examples)
{
    const auto k2 = ForbiddenFamily::k2();
    const auto p5 = oracle::isolation_number(make_family(path_spec(5)), k2);
    EXPECT_EQ(p5.size, 1);
    EXPECT_EQ(p5.witness, VertexSet::of({2}));
    EXPECT_EQ(oracle::isolation_number(make_family(cycle_spec(6)), k2).size, 2);
    EXPECT_EQ(oracle::isolation_number(make_family(complete_spec(7)), ForbiddenFamily::k1()).size, 1);
    EXPECT_EQ(oracle::isolation_number(build_graph(3, {}), k2).size, 0);
    EXPECT_EQ(oracle::isolation_number(make_family(hgraph_spec()), k2).size, 3);
}

TEST(IsolationNumber, OrderLimit)
{
    EXPECT_THROW(oracle::isolation_number(make_family(path_spec(25)), ForbiddenFamily::k2()), BudgetExceeded);
}

TEST(IsolationNumber, CertificateIsMinimal)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n))
            for (const auto& fam : {ForbiddenFamily::k1(), ForbiddenFamily::k2(), ForbiddenFamily::p3()}) {
                const auto cert = oracle::isolation_number(g, fam);
                ASSERT_EQ(cert.witness.size(), cert.size);
                EXPECT_TRUE(oracle::is_isolating(g, fam, cert.witness));
                // No set of smaller size isolates.
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                    const VertexSet s{bits};
                    if (s.size() < cert.size) {
                        EXPECT_FALSE(oracle::is_isolating(g, fam, s)) << g << s;
                    }
                }
            }
}

TEST(NaiveGame, Examples)
{
    const auto k2 = ForbiddenFamily::k2();
    const Graph p4 = make_family(path_spec(4));
    EXPECT_EQ(oracle::naive_game_value(p4, k2, MarkState{}, D), 1);
    EXPECT_EQ(oracle::naive_game_value(p4, k2, MarkState{}, S), 2);
    EXPECT_EQ(oracle::naive_game_value(make_family(path_spec(3)), ForbiddenFamily::k1(), MarkState{}, D), 1);
    EXPECT_EQ(oracle::naive_game_value(make_family(cycle_spec(6)), k2, MarkState{}, D), 3);
    EXPECT_THROW(oracle::naive_game_value(make_family(path_spec(8)), k2, MarkState{}, D), BudgetExceeded);
    EXPECT_THROW(oracle::direct_game_value(make_family(path_spec(8)), k2, {}, D), BudgetExceeded);
    EXPECT_THROW(oracle::domination_game_value(make_family(path_spec(8)), {}, D), BudgetExceeded);
}

TEST(NaiveGame, DirectRuleAgreesWithMarkedSetRule)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n))
            for (const auto& fam : {ForbiddenFamily::k1(), ForbiddenFamily::k2(), ForbiddenFamily::p3()})
                for (Mover m : {D, S})
                    EXPECT_EQ(oracle::direct_game_value(g, fam, {}, m),
                              oracle::naive_game_value(g, fam, initial_closure(g, fam, {}), m))
                        << g << " fam " << fam.tag;
}

TEST(NaiveGame, K1IsTheDominationGame)
{
    const auto k1 = ForbiddenFamily::k1();
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n))
            for (Mover m : {D, S})
                EXPECT_EQ(oracle::domination_game_value(g, {}, m), oracle::naive_game_value(g, k1, MarkState{}, m))
                    << g;
}

TEST(NaiveGame, SolverAgrees)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n))
            for (const auto& fam : {ForbiddenFamily::k1(), ForbiddenFamily::k2(), ForbiddenFamily::p3()})
                for (Mover m : {D, S}) {
                    const auto start = initial_closure(g, fam, {});
                    EXPECT_EQ(game_value(g, fam, start, m).value, oracle::naive_game_value(g, fam, start, m));
                }
}

TEST(NaiveGame, RandomPlayoutsEndIsolated)
{
    std::mt19937_64 rng(99);
    const auto k2 = ForbiddenFamily::k2();
    for (int rep = 0; rep < 3; ++rep)
        for (const auto& g : enumerate_connected_range(2, 6)) {
            MarkState st = initial_closure(g, k2, {});
            VertexSet played;
            int moves = 0;
            while (!is_terminal(g, st)) {
                const auto pl = playable(g, st).to_vector();
                const int x = pl[std::uniform_int_distribution<std::size_t>(0, pl.size() - 1)(rng)];
                st = apply_move(g, st, k2, x);
                played.insert(x);
                ++moves;
            }
            EXPECT_TRUE(oracle::is_isolating(g, k2, played));
            EXPECT_GE(moves, oracle::isolation_number(g, k2).size);
        }
}

} // namespace
} // namespace isogame
