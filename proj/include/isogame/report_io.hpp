#pragma once

// JSON and CSV renderings of solver results and check reports.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "isogame/graph6.hpp"
#include "isogame/harness.hpp"
#include "isogame/solver.hpp"

namespace isogame {

/// A solved instance, as serialized by `isogame solve`.
struct SolveRecord {
    Graph graph;
    std::string family;
    Mover start = Mover::Dominator;
    VertexSet initial_marks;
    GameResult result;
};

inline nlohmann::json to_json(const SolveRecord& rec)
{
    nlohmann::json j;
    j["graph"] = to_graph6(rec.graph);
    j["family"] = rec.family;
    j["start"] = mover_tag(rec.start);
    j["initial_marks"] = rec.initial_marks.to_vector();
    j["value"] = rec.result.value;
    j["best_move"] = rec.result.best_move ? nlohmann::json(*rec.result.best_move) : nlohmann::json(nullptr);
    j["principal_line"] = rec.result.principal_line;
    j["metadata"] = {{"normalized_marks", rec.result.normalized}, {"label", rec.graph.label()}};
    return j;
}

inline nlohmann::json to_json(const CheckReport& r, bool reproducible = false)
{
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["instances"] = r.instances;
    j["ok"] = r.ok();
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back(
            {{"graph6", v.graph6}, {"parameters", v.parameters}, {"observed", v.observed}, {"expected", v.expected}});
    j["extremal"] = nlohmann::json::array();
    for (const auto& e : r.extremal)
        j["extremal"].push_back(
            {{"graph6", e.graph6}, {"description", e.description}, {"observed", e.observed}, {"bound", e.bound}});
    j["summary"] = nlohmann::json::object();
    for (const auto& [k, v] : r.summary) j["summary"][k] = v;
    j["notes"] = r.notes;
    if (!reproducible) j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

} // namespace detail

inline void write_csv(std::ostream& out, const std::vector<InstanceRow>& rows)
{
    out << "graph6,n,family,marks,d_value,s_value,lower,upper,exact\n";
    for (const auto& r : rows)
        out << detail::csv_field(r.graph6) << ',' << r.n << ',' << detail::csv_field(r.family) << ','
            << detail::csv_field(r.marks) << ',' << detail::csv_opt(r.d_value) << ','
            << detail::csv_opt(r.s_value) << ',' << detail::csv_opt(r.lower) << ','
            << detail::csv_opt(r.upper) << ',' << detail::csv_opt(r.exact) << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<PathRow>& rows)
{
    out << "n,lower,d_value,s_value,upper,exact\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.lower << ',' << r.d_value << ',' << r.s_value << ',' << r.upper << ','
            << (r.exact ? "yes" : "no") << '\n';
}

/// Short human-readable summary.
inline void write_plain(std::ostream& out, const CheckReport& r, bool reproducible = false)
{
    out << "check=" << to_string(r.kind) << '\n'
        << "instances=" << r.instances << '\n'
        << "violations=" << r.violations.size() << '\n';
    for (const auto& v : r.violations)
        out << "  violation " << v.graph6 << " [" << v.parameters << "] observed " << v.observed
            << ", expected " << v.expected << '\n';
    out << "extremal=" << r.extremal.size() << '\n';
    for (const auto& e : r.extremal)
        out << "  extremal " << e.graph6 << " " << e.description << " (" << e.observed << ")\n";
    for (const auto& [k, v] : r.summary) out << k << '=' << v << '\n';
    for (const auto& n : r.notes) out << "note: " << n << '\n';
    if (!reproducible) out << "wall_time_seconds=" << r.wall_time_seconds << '\n';
}

} // namespace isogame
