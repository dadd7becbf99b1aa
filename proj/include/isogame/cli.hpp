#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isogame/enumerate.hpp"
#include "isogame/families.hpp"
#include "isogame/graph6.hpp"
#include "isogame/harness.hpp"
#include "isogame/report_io.hpp"
#include "isogame/rules.hpp"
#include "isogame/solver.hpp"

namespace isogame::cli {

enum class Command { Solve, Verify, Sweep, Family, Enumerate };
enum class Format { Plain, Json, Csv };

/// Environment variable that overrides the default memo cap; --memo-cap wins.
inline constexpr const char* memo_cap_env = "ISOGAME_MEMO_CAP";

struct RunConfig {
    Command command = Command::Solve;
    std::string graph6;
    std::string file;
    std::string family_spec;
    std::string forbidden = "K2";
    Mover start = Mover::Dominator;
    std::string marks;
    std::uint64_t seed = 0;
    std::optional<std::size_t> memo_cap;
    Format format = Format::Plain;
    std::string output;
    bool reproducible = false;
    bool prune = false;
    int jobs = 1;
    // verify / sweep / enumerate
    std::string check;
    std::string source;
    int n_min = 0;
    int n_max = 0;
    int trials = 0;
};

/// Raised for bad command lines; carries the offending flag in its message.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Raised by parse_args for --help; what() is the help text.
class HelpRequested : public Error {
public:
    using Error::Error;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_violations = 2;

/// Parses argv into a RunConfig. Throws UsageError on bad input.
inline RunConfig parse_args(int argc, const char* const* argv)
{
    RunConfig cfg;
    CLI::App app{"Exact solver and property checker for the F-isolation game", "isogame"};
    app.require_subcommand(1);

    std::string start = "D";
    std::string format = "plain";
    std::size_t memo_cap = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain | json | csv");
        sub->add_option("--output,-o", cfg.output, "write artifacts to this file instead of stdout");
        sub->add_option("--memo-cap", memo_cap, "solver memo entry cap (default 2^26)");
        sub->add_option("--jobs,-j", cfg.jobs, "worker threads for multi-instance commands");
        sub->add_flag("--reproducible", cfg.reproducible, "omit wall-time fields");
        sub->add_flag("--prune", cfg.prune, "enable value-preserving bound pruning");
    };

    auto* solve = app.add_subcommand("solve", "solve one game instance");
    auto* src = solve->add_option_group("graph source");
    src->add_option("--graph6", cfg.graph6, "graph6 literal");
    src->add_option("--file", cfg.file, "graph6 file, one record per line");
    src->add_option("--family", cfg.family_spec, "family spec, e.g. cycle:6");
    src->require_option(1);
    solve->add_option("--forbidden", cfg.forbidden, "K1 | K2 | P3 | custom:<n>:<edges>, ';'-separated");
    solve->add_option("--start", start, "D | S");
    solve->add_option("--marks", cfg.marks, "initial marks, comma separated (v1-style for hgraph)");
    add_common(solve);

    auto* verify = app.add_subcommand("verify", "run a named property check");
    verify->add_option("--check", cfg.check, "check name")->required();
    verify->add_option("--source", cfg.source, "graph source: connected:a-b, trees:a-b, family:<spec>, file:<path>");
    verify->add_option("--forbidden", cfg.forbidden, "forbidden families (checks that take them)");
    verify->add_option("--n-min", cfg.n_min);
    verify->add_option("--n-max", cfg.n_max);
    verify->add_option("--trials", cfg.trials);
    verify->add_option("--seed", cfg.seed);
    add_common(verify);

    auto* sweep = app.add_subcommand("sweep", "sweep connected graphs against the ceil(3n/7) bound");
    sweep->add_option("--n-max", cfg.n_max, "largest order (<= 8)")->required();
    add_common(sweep);

    auto* family = app.add_subcommand("family", "print family graphs as graph6");
    family->add_option("--spec", cfg.family_spec, "family spec")->required();
    add_common(family);

    auto* enumerate = app.add_subcommand("enumerate", "print connected graphs of one order as graph6");
    enumerate->add_option("--n", cfg.n_max, "order (<= 8)")->required();
    add_common(enumerate);

    // Only an explicit --forbidden on verify overrides the per-check defaults.
    bool verify_forbidden_given = false;
    try {
        app.parse(argc, argv);
        verify_forbidden_given = verify->count("--forbidden") > 0;
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (solve->parsed()) cfg.command = Command::Solve;
    else if (verify->parsed()) cfg.command = Command::Verify;
    else if (sweep->parsed()) cfg.command = Command::Sweep;
    else if (family->parsed()) cfg.command = Command::Family;
    else cfg.command = Command::Enumerate;

    if (cfg.command == Command::Verify && !verify_forbidden_given) cfg.forbidden.clear();

    if (start == "D") cfg.start = Mover::Dominator;
    else if (start == "S") cfg.start = Mover::Staller;
    else throw UsageError("--start: expected D or S, got '" + start + "'");

    if (format == "plain") cfg.format = Format::Plain;
    else if (format == "json") cfg.format = Format::Json;
    else if (format == "csv") cfg.format = Format::Csv;
    else throw UsageError("--format: expected plain, json or csv, got '" + format + "'");

    if (memo_cap > 0) cfg.memo_cap = memo_cap;
    if (cfg.jobs < 1) throw UsageError("--jobs: must be at least 1");
    return cfg;
}

namespace detail {

inline std::size_t resolve_memo_cap(const RunConfig& cfg)
{
    if (cfg.memo_cap) return *cfg.memo_cap;
    if (const char* env = std::getenv(memo_cap_env)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string(memo_cap_env) + ": not a number: '" + env + "'");
        }
    }
    return SolverOptions{}.memo_cap;
}

/// "v4,1" -> {3, 1} for hgraph (v-names are 1-based); plain integers are
/// 0-based vertex indices.
inline VertexSet parse_marks(const std::string& text, const Graph& g, bool v_names)
{
    VertexSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = 0;
        try {
            std::size_t used = 0;
            if (item[0] == 'v') {
                if (!v_names) throw UsageError("--marks: v-style names are only accepted for hgraph");
                v = std::stoi(item.substr(1), &used) - 1;
                used += 1;
            } else {
                v = std::stoi(item, &used);
            }
            if (used != item.size()) throw std::invalid_argument("trailing characters");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("--marks: cannot parse '" + item + "'");
        }
        if (v < 0 || v >= g.order())
            throw UsageError("--marks: vertex '" + item + "' is outside the graph");
        out.insert(v);
    }
    return out;
}

inline std::vector<Graph> solve_inputs(const RunConfig& cfg)
{
    if (!cfg.graph6.empty()) return {parse_graph6(cfg.graph6)};
    if (!cfg.file.empty()) return isogame::detail::read_graph6_file(cfg.file);
    return make_family_members(parse_family_spec(cfg.family_spec));
}

inline int run_solve(const RunConfig& cfg, std::ostream& out)
{
    const ForbiddenFamily fam = parse_forbidden(cfg.forbidden);
    SolverOptions opts;
    opts.memo_cap = resolve_memo_cap(cfg);
    opts.bound_pruning = cfg.prune;
    const bool v_names = cfg.family_spec == "hgraph";
    for (const Graph& g : solve_inputs(cfg)) {
        SolveRecord rec{g, fam.tag, cfg.start, parse_marks(cfg.marks, g, v_names), {}};
        rec.result = solve(g, fam, cfg.start, rec.initial_marks, opts);
        if (cfg.format == Format::Json) {
            out << to_json(rec).dump() << '\n';
        } else if (cfg.format == Format::Csv) {
            write_csv(out, std::vector<InstanceRow>{{to_graph6(g), g.order(), fam.tag,
                                                     rec.initial_marks.empty() ? "" : rec.initial_marks.to_string(),
                                                     cfg.start == Mover::Dominator ? std::optional<int>(rec.result.value) : std::nullopt,
                                                     cfg.start == Mover::Staller ? std::optional<int>(rec.result.value) : std::nullopt,
                                                     {}, {}, {}}});
        } else {
            out << "value=" << rec.result.value << '\n';
            out << "best_move=" << (rec.result.best_move ? std::to_string(*rec.result.best_move) : "none") << '\n';
            out << "principal_line=";
            for (std::size_t i = 0; i < rec.result.principal_line.size(); ++i)
                out << (i ? "," : "") << rec.result.principal_line[i];
            out << '\n';
            if (rec.result.normalized) out << "note: initial marks were widened by closure\n";
            if (g.label().rfind("GH(", 0) == 0) out << "note: " << g.label() << '\n';
        }
    }
    return exit_ok;
}

inline void emit_report(const RunConfig& cfg, const CheckReport& r, std::ostream& out)
{
    switch (cfg.format) {
    case Format::Json: out << to_json(r, cfg.reproducible).dump(2) << '\n'; break;
    case Format::Csv: write_csv(out, r.rows); break;
    case Format::Plain: write_plain(out, r, cfg.reproducible); break;
    }
}

inline CheckParams check_params(const RunConfig& cfg)
{
    CheckParams p;
    p.seed = cfg.seed;
    p.trials = cfg.trials;
    p.n_min = cfg.n_min;
    p.n_max = cfg.n_max;
    p.jobs = cfg.jobs;
    p.solver.memo_cap = resolve_memo_cap(cfg);
    p.solver.bound_pruning = cfg.prune;
    if (!cfg.forbidden.empty()) {
        // Several families are separated by '|'; ';' joins patterns inside one.
        std::stringstream ss(cfg.forbidden);
        std::string item;
        while (std::getline(ss, item, '|')) p.families.push_back(parse_forbidden(item));
    }
    return p;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out)
{
    CheckKind kind;
    try {
        kind = parse_check_kind(cfg.check);
    } catch (const BadSpec& e) {
        throw UsageError(std::string("--check: ") + e.what());
    }
    const auto r = run_check(kind, GraphSource{cfg.source}, check_params(cfg));
    emit_report(cfg, r, out);
    return r.ok() ? exit_ok : exit_violations;
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out)
{
    const auto r = conjecture_sweep(cfg.n_max, check_params(cfg));
    emit_report(cfg, r, out);
    return r.ok() ? exit_ok : exit_violations;
}

inline void emit_graphs(const RunConfig& cfg, const std::vector<Graph>& graphs, std::ostream& out)
{
    if (cfg.format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : graphs)
            arr.push_back({{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.edge_count()}, {"label", g.label()}});
        out << arr.dump(2) << '\n';
        return;
    }
    if (cfg.format == Format::Csv) out << "graph6,n,edges,label\n";
    for (const auto& g : graphs) {
        if (cfg.format == Format::Csv)
            out << to_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ','
                << isogame::detail::csv_field(g.label()) << '\n';
        else
            out << to_graph6(g) << '\n';
    }
}

} // namespace detail

/// Runs one command, writing artifacts to out (or cfg.output) and diagnostics
/// to err. Returns 0 on success, 2 when a check recorded violations, 1 on
/// usage or budget errors.
inline int execute(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: --output: cannot open '" << cfg.output << "'\n";
            return exit_failure;
        }
        sink = &file;
    }
    try {
        switch (cfg.command) {
        case Command::Solve: return detail::run_solve(cfg, *sink);
        case Command::Verify: return detail::run_verify(cfg, *sink);
        case Command::Sweep: return detail::run_sweep(cfg, *sink);
        case Command::Family:
            detail::emit_graphs(cfg, make_family_members(parse_family_spec(cfg.family_spec)), *sink);
            return exit_ok;
        case Command::Enumerate:
            detail::emit_graphs(cfg, enumerate_connected(cfg.n_max), *sink);
            return exit_ok;
        }
    } catch (const StateSpaceBudgetExceeded& e) {
        err << "budget error: " << e.what() << '\n';
    } catch (const BudgetExceeded& e) {
        err << "budget error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_failure;
}

/// parse_args + execute, mapping usage errors to exit 1.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr)
{
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const HelpRequested& e) {
        out << e.what();
        return exit_ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_failure;
    }
    return execute(cfg, out, err);
}

} // namespace isogame::cli
