#pragma once

// Property checks over exhaustive or seeded-random instance sets. Every check
// produces a CheckReport; an empty violation list means the property held on
// every instance tested.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "isogame/enumerate.hpp"
#include "isogame/families.hpp"
#include "isogame/graph6.hpp"
#include "isogame/oracle.hpp"
#include "isogame/solver.hpp"
#include "isogame/trees.hpp"

namespace isogame {

enum class CheckKind {
    DiffAtMostOne,
    ContinuationPrinciple,
    Sandwich,
    FamilyMonotone,
    HalfBound,
    SpanningGap,
    ForestMonotone,
    PathBounds,
    PathExact,
    StarAddition,
    FamilyValues,
    ConjectureSweep,
};

inline constexpr std::pair<CheckKind, const char*> check_names[] = {
    {CheckKind::DiffAtMostOne, "diff-at-most-one"},
    {CheckKind::ContinuationPrinciple, "continuation-principle"},
    {CheckKind::Sandwich, "sandwich"},
    {CheckKind::FamilyMonotone, "family-monotone"},
    {CheckKind::HalfBound, "half-bound"},
    {CheckKind::SpanningGap, "spanning-gap"},
    {CheckKind::ForestMonotone, "forest-monotone"},
    {CheckKind::PathBounds, "path-bounds"},
    {CheckKind::PathExact, "path-exact"},
    {CheckKind::StarAddition, "star-addition"},
    {CheckKind::FamilyValues, "family-values"},
    {CheckKind::ConjectureSweep, "conjecture-sweep"},
};

inline std::string to_string(CheckKind k)
{
    for (auto [kind, name] : check_names)
        if (kind == k) return name;
    return "unknown";
}

inline CheckKind parse_check_kind(std::string_view s)
{
    for (auto [kind, name] : check_names)
        if (s == name) return kind;
    throw BadSpec("unknown check '" + std::string(s) + "'");
}

struct Violation {
    std::string graph6;
    std::string parameters;
    std::string observed;
    std::string expected;
};

/// An instance that meets a bound with equality (or sets a record).
struct Extremal {
    std::string graph6;
    std::string description;
    int observed = 0;
    int bound = 0;
};

/// One CSV row per solved instance.
struct InstanceRow {
    std::string graph6;
    int n = 0;
    std::string family;
    std::string marks;
    std::optional<int> d_value;
    std::optional<int> s_value;
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> exact;
};

struct CheckReport {
    CheckKind kind = CheckKind::DiffAtMostOne;
    std::size_t instances = 0;
    std::vector<Violation> violations;
    std::vector<Extremal> extremal;
    std::vector<InstanceRow> rows;
    /// Kind-specific aggregates, e.g. max_ratio for the conjecture sweep.
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> notes;
    double wall_time_seconds = 0.0;

    bool ok() const { return violations.empty(); }
};

/// Where a check draws its graphs from.
///   connected:a-b   all connected graphs of orders a..b (b <= 8)
///   trees:a-b       one tree per isomorphism class, orders a..b
///   family:<spec>   one family graph, e.g. family:cycle:6
///   file:<path>     graph6 records, one per line
///   graph6:<g6>     a single literal record
struct GraphSource {
    std::string text;

    bool is_default() const { return text.empty(); }
};

struct CheckParams {
    std::uint64_t seed = 0;
    /// Random trials per order where the check samples; 0 picks the default.
    int trials = 0;
    /// Order range where the check sweeps orders; 0 picks the default.
    int n_min = 0;
    int n_max = 0;
    /// Empty picks each check's default families.
    std::vector<ForbiddenFamily> families;
    int jobs = 1;
    SolverOptions solver;
};

namespace detail {

inline std::pair<int, int> parse_range(std::string_view s, std::string_view context)
{
    auto dash = s.find('-');
    if (dash == std::string_view::npos) {
        const int v = parse_int(s, context);
        return {v, v};
    }
    return {parse_int(s.substr(0, dash), context), parse_int(s.substr(dash + 1), context)};
}

inline std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw BadSpec("cannot open graph6 file '" + path + "'");
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind(">>graph6<<", 0) == 0) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace detail

inline std::vector<Graph> materialize(const GraphSource& source)
{
    const std::string_view t = source.text;
    auto colon = t.find(':');
    const std::string_view head = t.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : t.substr(colon + 1);
    if (head == "connected") {
        auto [a, b] = detail::parse_range(rest, t);
        return enumerate_connected_range(a, b);
    }
    if (head == "trees") {
        auto [a, b] = detail::parse_range(rest, t);
        std::vector<Graph> out;
        for (int n = a; n <= b; ++n) {
            auto level = distinct_trees(n);
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }
    if (head == "family") return make_family_members(parse_family_spec(rest));
    if (head == "file") return detail::read_graph6_file(std::string(rest));
    if (head == "graph6") return {parse_graph6(rest)};
    throw BadSpec("unknown graph source '" + std::string(t) + "'");
}

/// Runs fn(i) for i in [0, count) on up to jobs threads; results keep index
/// order so aggregation does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// ceil(3n/7)
inline int three_sevenths_bound(int n) { return (3 * n + 6) / 7; }
/// ceil(2n/5) - 1
inline int path_lower_bound(int n) { return (2 * n + 4) / 5 - 1; }
/// floor((2n+2)/5)
inline int path_upper_bound(int n) { return (2 * n + 2) / 5; }
inline bool path_value_is_exact(int n) { return n % 5 == 1 || n % 5 == 2 || n % 5 == 3; }

/// Closure of a random played set plus a few random extra vertices.
template <class Rng>
VertexSet random_marks(const Graph& g, const ForbiddenFamily& fam, Rng& rng)
{
    std::bernoulli_distribution played(0.2);
    std::bernoulli_distribution extra(0.15);
    VertexSet s;
    VertexSet more;
    for (int v = 0; v < g.order(); ++v) {
        if (played(rng)) s.insert(v);
        if (extra(rng)) more.insert(v);
    }
    return close_marks(g, fam, closed_neighborhood(g, s) | more);
}

namespace detail {

/// What one instance contributes to a report.
struct Outcome {
    std::vector<InstanceRow> rows;
    std::vector<Violation> violations;
    std::vector<Extremal> extremal;
    std::size_t instances = 1;
};

inline std::string marks_text(VertexSet m) { return m.empty() ? "" : m.to_string(); }

inline std::string seed_text(std::uint64_t seed, std::size_t trial)
{
    return "seed=" + std::to_string(seed) + " trial=" + std::to_string(trial);
}

inline CheckReport collect(CheckKind kind, std::vector<Outcome> outcomes)
{
    CheckReport r;
    r.kind = kind;
    for (auto& o : outcomes) {
        r.instances += o.instances;
        for (auto& x : o.rows) r.rows.push_back(std::move(x));
        for (auto& x : o.violations) r.violations.push_back(std::move(x));
        for (auto& x : o.extremal) r.extremal.push_back(std::move(x));
    }
    return r;
}

inline std::vector<ForbiddenFamily> families_or(const CheckParams& p, std::vector<ForbiddenFamily> dflt)
{
    return p.families.empty() ? std::move(dflt) : p.families;
}

inline std::vector<Graph> source_or(const GraphSource& s, const char* dflt)
{
    return materialize(s.is_default() ? GraphSource{dflt} : s);
}

inline int or_default(int value, int dflt) { return value > 0 ? value : dflt; }

struct Job {
    Graph g;
    const ForbiddenFamily* fam = nullptr;
    VertexSet marks;
    std::string parameters;
};

inline CheckReport check_diff(const GraphSource& src, const CheckParams& p)
{
    const auto graphs = source_or(src, "connected:1-6");
    const auto fams = families_or(p, {ForbiddenFamily::k2()});
    std::vector<Job> jobs;
    for (const auto& f : fams)
        for (const auto& g : graphs) jobs.push_back({g, &f, {}, "fam=" + f.tag});
    auto out = parallel_map(jobs.size(), p.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        const auto v = solve_both(j.g, *j.fam, j.marks, p.solver);
        Outcome o;
        const auto g6 = to_graph6(j.g);
        o.rows.push_back({g6, j.g.order(), j.fam->tag, "", v.d, v.s, {}, {}, {}});
        if (std::abs(v.d - v.s) > 1)
            o.violations.push_back({g6, j.parameters, "D=" + std::to_string(v.d) + " S=" + std::to_string(v.s),
                                    "|D-S| <= 1"});
        return o;
    });
    auto r = collect(CheckKind::DiffAtMostOne, std::move(out));
    int less = 0, equal = 0, more = 0;
    for (const auto& row : r.rows) {
        if (*row.d_value < *row.s_value) ++less;
        else if (*row.d_value == *row.s_value) ++equal;
        else ++more;
    }
    r.summary = {{"d_less_than_s", std::to_string(less)},
                 {"d_equals_s", std::to_string(equal)},
                 {"d_greater_than_s", std::to_string(more)}};
    return r;
}

inline CheckReport check_sandwich(const GraphSource& src, const CheckParams& p)
{
    const auto graphs = source_or(src, "connected:1-6");
    const auto fams = families_or(p, {ForbiddenFamily::k1(), ForbiddenFamily::k2()});
    std::vector<Job> jobs;
    for (const auto& f : fams)
        for (const auto& g : graphs) jobs.push_back({g, &f, {}, "fam=" + f.tag});
    auto out = parallel_map(jobs.size(), p.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        const auto v = solve_both(j.g, *j.fam, {}, p.solver);
        const int iota = oracle::isolation_number(j.g, *j.fam).size;
        Outcome o;
        const auto g6 = to_graph6(j.g);
        // With iota = 0 the graph is already F-forbidden, every vertex starts
        // marked and both games are empty.
        const int d_upper = iota == 0 ? 0 : 2 * iota - 1;
        const int s_upper = 2 * iota;
        o.rows.push_back({g6, j.g.order(), j.fam->tag, "", v.d, v.s, iota, d_upper, {}});
        const std::string obs = "iota=" + std::to_string(iota) + " D=" + std::to_string(v.d) +
                                " S=" + std::to_string(v.s);
        if (v.d < iota || v.d > d_upper)
            o.violations.push_back({g6, j.parameters, obs, "iota <= D <= 2*iota-1"});
        if (v.s < iota || v.s > s_upper)
            o.violations.push_back({g6, j.parameters, obs, "iota <= S <= 2*iota"});
        if (iota > 0 && v.d == d_upper)
            o.extremal.push_back({g6, "fam=" + j.fam->tag + " D = 2*iota-1", v.d, d_upper});
        return o;
    });
    return collect(CheckKind::Sandwich, std::move(out));
}

inline CheckReport check_family_monotone(const GraphSource& src, const CheckParams& p)
{
    const auto graphs = source_or(src, "connected:1-6");
    // (F, F') with every member of F a subgraph of some member of F'.
    const std::vector<std::pair<ForbiddenFamily, ForbiddenFamily>> pairs = {
        {ForbiddenFamily::k1(), ForbiddenFamily::k2()},
        {ForbiddenFamily::k2(), ForbiddenFamily::p3()},
    };
    auto out = parallel_map(graphs.size() * pairs.size(), p.jobs, [&](std::size_t i) {
        const auto& g = graphs[i % graphs.size()];
        const auto& [f, f2] = pairs[i / graphs.size()];
        const int small = solve(g, f, Mover::Dominator, {}, p.solver).value;
        const int large = solve(g, f2, Mover::Dominator, {}, p.solver).value;
        Outcome o;
        const auto g6 = to_graph6(g);
        const std::string tag = f2.tag + "<=" + f.tag;
        o.rows.push_back({g6, g.order(), tag, "", large, {}, {}, small, {}});
        if (large > small)
            o.violations.push_back({g6, "pair=" + tag,
                                    f2.tag + " D=" + std::to_string(large) + ", " + f.tag +
                                        " D=" + std::to_string(small),
                                    "D(" + f2.tag + ") <= D(" + f.tag + ")"});
        return o;
    });
    auto r = collect(CheckKind::FamilyMonotone, std::move(out));
    r.notes.push_back("the K2<=K1 pair is the game isolation vs game domination comparison");
    return r;
}

inline CheckReport check_half_bound(const GraphSource& src, const CheckParams& p)
{
    const auto graphs = source_or(src, "connected:1-6");
    const auto k2 = ForbiddenFamily::k2();
    auto out = parallel_map(graphs.size(), p.jobs, [&](std::size_t i) {
        const auto& g = graphs[i];
        const int d = solve(g, k2, Mover::Dominator, {}, p.solver).value;
        Outcome o;
        const auto g6 = to_graph6(g);
        o.rows.push_back({g6, g.order(), "K2", "", d, {}, {}, g.order() / 2, {}});
        if (2 * d > g.order())
            o.violations.push_back({g6, "fam=K2", "D=" + std::to_string(d), "D <= n/2"});
        if (2 * d == g.order()) o.extremal.push_back({g6, "D = n/2", d, g.order() / 2});
        return o;
    });
    return collect(CheckKind::HalfBound, std::move(out));
}

inline CheckReport check_spanning_gap(const CheckParams& p)
{
    const int lo = or_default(p.n_min, 3);
    const int hi = or_default(p.n_max, 4);
    struct Item {
        FamilySpec spec;
        ForbiddenFamily fam;
        int expected;
        std::string what;
    };
    std::vector<Item> items;
    for (int n = lo; n <= hi; ++n) {
        items.push_back({gtriangles_spec(n), ForbiddenFamily::k2(), n, "iota_g(G_n) = n"});
        for (int k = 1; k <= n - 1; ++k)
            items.push_back({ftriangles_spec(n, k), ForbiddenFamily::k2(), n - k, "iota_g(F_k) = n-k"});
        if (n % 2 == 1) {
            items.push_back({ftriangles_spec(n, n), ForbiddenFamily::k2(), 1, "iota_g(F_n) = 1"});
            items.push_back({ftriangles_spec(n, n), ForbiddenFamily::k1(), 1 + 3 * (n - 1) / 2,
                             "gamma_g(F_n) = 1+3(n-1)/2"});
        }
    }
    auto out = parallel_map(items.size(), p.jobs, [&](std::size_t i) {
        const auto& it = items[i];
        const Graph g = make_family(it.spec);
        const int d = solve(g, it.fam, Mover::Dominator, {}, p.solver).value;
        Outcome o;
        const auto g6 = to_graph6(g);
        o.rows.push_back({g6, g.order(), it.fam.tag, "", d, {}, {}, {}, it.expected});
        if (d != it.expected)
            o.violations.push_back({g6, g.label() + " fam=" + it.fam.tag, "D=" + std::to_string(d),
                                    it.what + " = " + std::to_string(it.expected)});
        return o;
    });
    return collect(CheckKind::SpanningGap, std::move(out));
}

inline Outcome forest_outcome(const Graph& g, VertexSet marks, const std::string& params,
                              const SolverOptions& opts)
{
    const auto k2 = ForbiddenFamily::k2();
    const auto v = solve_both(g, k2, marks, opts);
    Outcome o;
    const auto g6 = to_graph6(g);
    o.rows.push_back({g6, g.order(), "K2", marks_text(marks), v.d, v.s, {}, {}, {}});
    if (v.d > v.s)
        o.violations.push_back({g6, params + " marks=" + marks.to_string(),
                                "D=" + std::to_string(v.d) + " S=" + std::to_string(v.s), "D <= S"});
    return o;
}

inline CheckReport check_forest_monotone(const GraphSource& src, const CheckParams& p)
{
    const int n_max = or_default(p.n_max, 9);
    const int per_order = or_default(p.trials, 100);
    const auto k2 = ForbiddenFamily::k2();

    std::vector<Graph> trees;
    if (src.is_default()) {
        for (int n = or_default(p.n_min, 1); n <= n_max; ++n) {
            auto level = distinct_trees(n);
            trees.insert(trees.end(), level.begin(), level.end());
        }
    } else {
        trees = materialize(src);
    }

    std::vector<Job> random_jobs;
    std::mt19937_64 rng(p.seed);
    std::size_t trial = 0;
    for (int n : {6, 8, 10, 12}) {
        for (int t = 0; t < per_order; ++t, ++trial) {
            Graph f = random_forest(n, 0.25, rng);
            VertexSet marks = random_marks(f, k2, rng);
            random_jobs.push_back({std::move(f), &k2, marks, seed_text(p.seed, trial)});
        }
    }

    auto out = parallel_map(trees.size() + random_jobs.size(), p.jobs, [&](std::size_t i) {
        if (i < trees.size()) return forest_outcome(trees[i], {}, "tree", p.solver);
        const auto& j = random_jobs[i - trees.size()];
        return forest_outcome(j.g, j.marks, j.parameters, p.solver);
    });
    auto r = collect(CheckKind::ForestMonotone, std::move(out));
    r.summary = {{"trees", std::to_string(trees.size())},
                 {"random_marked_forests", std::to_string(random_jobs.size())}};
    r.notes.push_back("trees come from the full Prufer sweep, one per isomorphism class");
    return r;
}

inline CheckReport check_continuation(const CheckParams& p)
{
    const int lo = or_default(p.n_min, 4);
    const int hi = or_default(p.n_max, 7);
    const int per_order = or_default(p.trials, 200);
    const auto fams = families_or(p, {ForbiddenFamily::k1(), ForbiddenFamily::k2(), ForbiddenFamily::p3()});

    struct Pair {
        Graph g;
        const ForbiddenFamily* fam;
        VertexSet a;
        VertexSet b;
        std::string params;
    };
    std::vector<Pair> pairs;
    std::mt19937_64 rng(p.seed);
    std::size_t trial = 0;
    for (int n = lo; n <= hi; ++n) {
        const auto pool = enumerate_connected(n);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::bernoulli_distribution keep(0.5);
        for (int t = 0; t < per_order; ++t, ++trial) {
            const Graph& g = pool[pick(rng)];
            const ForbiddenFamily& fam = fams[trial % fams.size()];
            const VertexSet a = random_marks(g, fam, rng);
            VertexSet sub;
            for (int v : a)
                if (keep(rng)) sub.insert(v);
            pairs.push_back({g, &fam, a, close_marks(g, fam, sub), seed_text(p.seed, trial)});
        }
    }

    auto out = parallel_map(pairs.size(), p.jobs, [&](std::size_t i) {
        const auto& q = pairs[i];
        Outcome o;
        const auto g6 = to_graph6(q.g);
        const std::string params = q.params + " fam=" + q.fam->tag + " A=" + q.a.to_string() +
                                   " B=" + q.b.to_string();
        if (!q.b.subset_of(q.a)) {
            o.violations.push_back({g6, params, "closed B not inside A", "B subset of A"});
            return o;
        }
        GameSolver solver(q.g, *q.fam, p.solver);
        const MarkState a{q.a};
        const MarkState b{q.b};
        const int da = solver.value(a, Mover::Dominator), db = solver.value(b, Mover::Dominator);
        const int sa = solver.value(a, Mover::Staller), sb = solver.value(b, Mover::Staller);
        o.rows.push_back({g6, q.g.order(), q.fam->tag, marks_text(q.a), da, sa, {}, {}, {}});
        if (da > db)
            o.violations.push_back({g6, params, "D(A)=" + std::to_string(da) + " D(B)=" + std::to_string(db),
                                    "D(A) <= D(B)"});
        if (sa > sb)
            o.violations.push_back({g6, params, "S(A)=" + std::to_string(sa) + " S(B)=" + std::to_string(sb),
                                    "S(A) <= S(B)"});
        return o;
    });
    return collect(CheckKind::ContinuationPrinciple, std::move(out));
}

inline std::vector<InstanceRow> path_rows(int lo, int hi, const CheckParams& p)
{
    const auto k2 = ForbiddenFamily::k2();
    return parallel_map(static_cast<std::size_t>(hi - lo + 1), p.jobs, [&](std::size_t i) {
        const int n = lo + static_cast<int>(i);
        const Graph g = make_family(path_spec(n));
        const auto v = solve_both(g, k2, {}, p.solver);
        std::optional<int> exact;
        if (path_value_is_exact(n)) exact = path_upper_bound(n);
        return InstanceRow{to_graph6(g), n, "K2", "", v.d, v.s, path_lower_bound(n), path_upper_bound(n), exact};
    });
}

inline CheckReport check_path_bounds(const CheckParams& p)
{
    CheckReport r;
    r.kind = CheckKind::PathBounds;
    r.rows = path_rows(or_default(p.n_min, 6), or_default(p.n_max, 23), p);
    for (const auto& row : r.rows) {
        ++r.instances;
        if (!(*row.lower <= *row.d_value && *row.d_value <= *row.s_value && *row.s_value <= *row.upper))
            r.violations.push_back({row.graph6, "n=" + std::to_string(row.n),
                                    "D=" + std::to_string(*row.d_value) + " S=" + std::to_string(*row.s_value),
                                    std::to_string(*row.lower) + " <= D <= S <= " + std::to_string(*row.upper)});
    }
    return r;
}

inline CheckReport check_path_exact(const CheckParams& p)
{
    CheckReport r;
    r.kind = CheckKind::PathExact;
    r.rows = path_rows(or_default(p.n_min, 6), or_default(p.n_max, 23), p);
    for (const auto& row : r.rows) {
        if (!row.exact) continue;
        ++r.instances;
        if (*row.d_value != *row.exact || *row.s_value != *row.exact)
            r.violations.push_back({row.graph6, "n=" + std::to_string(row.n),
                                    "D=" + std::to_string(*row.d_value) + " S=" + std::to_string(*row.s_value),
                                    "D = S = " + std::to_string(*row.exact)});
    }
    r.notes.push_back("exact values asserted for n = 1, 2, 3 (mod 5); other rows are informational");
    return r;
}

inline CheckReport check_star_addition(const GraphSource& src, const CheckParams& p)
{
    const auto k2 = ForbiddenFamily::k2();
    const int n_max = or_default(p.n_max, 8);
    const int trials = or_default(p.trials, 200);
    constexpr int value_cap = 4;

    std::vector<Job> bases;
    for (const auto& t : src.is_default() ? materialize(GraphSource{"trees:1-" + std::to_string(std::min(n_max, 8))})
                                          : materialize(src))
        bases.push_back({t, &k2, {}, "tree"});
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> order(1, n_max);
    for (int t = 0; t < trials; ++t) {
        Graph f = random_forest(order(rng), 0.3, rng);
        VertexSet marks = random_marks(f, k2, rng);
        bases.push_back({std::move(f), &k2, marks, seed_text(p.seed, static_cast<std::size_t>(t))});
    }

    auto out = parallel_map(bases.size(), p.jobs, [&](std::size_t i) {
        const auto& j = bases[i];
        Outcome o;
        o.instances = 0;
        const auto base = solve_both(j.g, k2, j.marks, p.solver);
        if (base.d > value_cap) return o;
        const auto g6 = to_graph6(j.g);
        for (int r = 1; r <= 3; ++r) {
            const Graph joined = disjoint_union(j.g, make_family(star_spec(r)));
            const auto v = solve_both(joined, k2, j.marks, p.solver);
            ++o.instances;
            const std::string params = j.parameters + " marks=" + j.marks.to_string() + " r=" + std::to_string(r);
            o.rows.push_back({to_graph6(joined), joined.order(), "K2", marks_text(j.marks), v.d, v.s,
                              base.d, {}, {}});
            if (v.d <= base.d)
                o.violations.push_back({g6, params, "D(G+K1r)=" + std::to_string(v.d) + " D(G)=" + std::to_string(base.d),
                                        "D(G+K1r) > D(G)"});
            if (v.s <= base.s)
                o.violations.push_back({g6, params, "S(G+K1r)=" + std::to_string(v.s) + " S(G)=" + std::to_string(base.s),
                                        "S(G+K1r) > S(G)"});
        }
        return o;
    });
    auto r = collect(CheckKind::StarAddition, std::move(out));
    r.notes.push_back("only forests with D-game value <= 4 are tested");
    return r;
}

inline CheckReport check_family_values(const CheckParams& p)
{
    struct Item {
        Graph g;
        VertexSet marks;
        int expected;
        std::string what;
    };
    const Graph h = make_family(hgraph_spec());
    std::vector<Item> items;
    for (int b : {1, 2}) {
        const Graph g = make_family(gstar_spec(complete_spec(b)));
        items.push_back({g, {}, 3 * g.order() / 7, "G*(K" + std::to_string(b) + "): D = S = 3n/7"});
    }
    items.push_back({h, {}, 5, "H: D = S = 5"});
    items.push_back({h, VertexSet::singleton(hgraph_attach_vertex), 5, "H|{v4}: D = S = 5"});
    items.push_back({make_family(gh_spec(1)), {}, 5, "G_H with n=1: D = S = 5n"});

    const auto k2 = ForbiddenFamily::k2();
    auto out = parallel_map(items.size(), p.jobs, [&](std::size_t i) {
        const auto& it = items[i];
        const auto v = solve_both(it.g, k2, it.marks, p.solver);
        Outcome o;
        const auto g6 = to_graph6(it.g);
        o.rows.push_back({g6, it.g.order(), "K2", marks_text(it.marks), v.d, v.s, {}, {}, it.expected});
        if (v.d != it.expected || v.s != it.expected)
            o.violations.push_back({g6, it.what, "D=" + std::to_string(v.d) + " S=" + std::to_string(v.s),
                                    "D = S = " + std::to_string(it.expected)});
        return o;
    });
    auto r = collect(CheckKind::FamilyValues, std::move(out));
    r.notes.push_back("G_H for n >= 2 (24+ vertices) is not verified; base graph is P_n");
    return r;
}

} // namespace detail

/// Sweeps all connected graphs of order <= n_max for the bound
/// ceil(3n/7) on both game values. Reports findings; proves nothing.
inline CheckReport conjecture_sweep(int n_max, const CheckParams& params = {})
{
    if (n_max < 1 || n_max > max_enumeration_order)
        throw BudgetExceeded("conjecture_sweep supports 1 <= n_max <= " +
                             std::to_string(max_enumeration_order));
    const auto start = std::chrono::steady_clock::now();
    const auto graphs = enumerate_connected_range(1, n_max);
    const auto k2 = ForbiddenFamily::k2();
    auto out = parallel_map(graphs.size(), params.jobs, [&](std::size_t i) {
        const Graph& g = graphs[i];
        detail::Outcome o;
        // K2 itself is a K2-component, outside the hypothesis.
        if (g.order() == 2) {
            o.instances = 0;
            return o;
        }
        const auto v = solve_both(g, k2, {}, params.solver);
        const int bound = three_sevenths_bound(g.order());
        const auto g6 = to_graph6(g);
        o.rows.push_back({g6, g.order(), "K2", "", v.d, v.s, {}, bound, {}});
        if (v.d > bound || v.s > bound)
            o.violations.push_back({g6, "n=" + std::to_string(g.order()),
                                    "D=" + std::to_string(v.d) + " S=" + std::to_string(v.s),
                                    "D, S <= " + std::to_string(bound)});
        if (v.d == bound) o.extremal.push_back({g6, "D = ceil(3n/7)", v.d, bound});
        if (v.s == bound) o.extremal.push_back({g6, "S = ceil(3n/7)", v.s, bound});
        return o;
    });
    auto r = detail::collect(CheckKind::ConjectureSweep, std::move(out));
    double max_ratio = 0.0;
    std::string max_witness;
    for (const auto& row : r.rows) {
        const double ratio = static_cast<double>(std::max(*row.d_value, *row.s_value)) / *row.upper;
        if (ratio > max_ratio) {
            max_ratio = ratio;
            max_witness = row.graph6;
        }
    }
    std::ostringstream ratio_text;
    ratio_text << max_ratio;
    r.summary = {{"n_max", std::to_string(n_max)},
                 {"max_ratio", ratio_text.str()},
                 {"max_ratio_witness", max_witness},
                 {"equality_witnesses", std::to_string(r.extremal.size())},
                 {"excluded_k2_component_graphs", n_max >= 2 ? "1" : "0"}};
    r.notes.push_back("findings only: a clean sweep is not a proof of the bound");
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline CheckReport run_check(CheckKind kind, const GraphSource& source = {}, const CheckParams& params = {})
{
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    switch (kind) {
    case CheckKind::DiffAtMostOne: r = detail::check_diff(source, params); break;
    case CheckKind::ContinuationPrinciple: r = detail::check_continuation(params); break;
    case CheckKind::Sandwich: r = detail::check_sandwich(source, params); break;
    case CheckKind::FamilyMonotone: r = detail::check_family_monotone(source, params); break;
    case CheckKind::HalfBound: r = detail::check_half_bound(source, params); break;
    case CheckKind::SpanningGap: r = detail::check_spanning_gap(params); break;
    case CheckKind::ForestMonotone: r = detail::check_forest_monotone(source, params); break;
    case CheckKind::PathBounds: r = detail::check_path_bounds(params); break;
    case CheckKind::PathExact: r = detail::check_path_exact(params); break;
    case CheckKind::StarAddition: r = detail::check_star_addition(source, params); break;
    case CheckKind::FamilyValues: r = detail::check_family_values(params); break;
    case CheckKind::ConjectureSweep: r = conjecture_sweep(detail::or_default(params.n_max, 6), params); break;
    }
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct PathRow {
    int n = 0;
    int lower = 0;
    int d_value = 0;
    int s_value = 0;
    int upper = 0;
    /// d_value = s_value = upper
    bool exact = false;
};

/// Solver values for P_n with the path bound columns, 6 <= n_min <= n_max <= 23.
inline std::vector<PathRow> path_table(int n_min, int n_max, const CheckParams& params = {})
{
    if (n_min < 6 || n_max > 23 || n_min > n_max)
        throw BudgetExceeded("path_table needs 6 <= n_min <= n_max <= 23");
    std::vector<PathRow> out;
    for (const auto& row : detail::path_rows(n_min, n_max, params))
        out.push_back({row.n, *row.lower, *row.d_value, *row.s_value, *row.upper,
                       *row.d_value == *row.upper && *row.s_value == *row.upper});
    return out;
}

} // namespace isogame
