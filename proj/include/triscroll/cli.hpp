#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "report.hpp"
#include "tripleplane.hpp"

namespace triscroll {

// ===========================================================================
// Command dispatch (the CLI binary is a thin flag parser over this)
// ===========================================================================

enum class Command { Table1, Verify, Invariants, Bounds, Report };
enum class Format { Text, Json, Csv, Markdown };

inline std::optional<Format> parse_format(const std::string& s) {
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    if (s == "md")
        return Format::Markdown;
    return std::nullopt;
}

struct RunConfig {
    Command command = Command::Verify;
    Format format = Format::Text;
    std::string verify_id = "all"; // verifier id or "all"
    Int window = 10;               // Reider search window

    // invariants inputs: exactly one pair must be set
    std::optional<std::pair<Int, Int>> from_b1_b2;
    std::optional<std::pair<Int, Int>> from_b_c;
    std::optional<std::pair<Int, Int>> from_m_n;

    // bounds inputs
    Int bounds_b = 0;
    Int bounds_s = 0;
    bool rational_non_p2 = false;
};

struct RunResult {
    int exit_code = 0;   // 0: all pass, 1: verification discrepancy, 2: usage/input error
    std::string output;
};

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Payload builders
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json to_json(const FilterVerdict& f) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : f.values)
        values[k] = v;
    return nlohmann::json{
        {"name", f.name}, {"note", f.note}, {"passed", f.passed}, {"values", values}};
}

inline nlohmann::json to_json(const CaseRecord& r) {
    nlohmann::json filters = nlohmann::json::array();
    for (const auto& f : r.filters)
        filters.push_back(to_json(f));
    return nlohmann::json{{"b", r.b},           {"c", r.c}, {"filters", filters}, {"id", r.id},
                          {"obvious", r.obvious}, {"s", r.s}, {"survivor", r.survivor}};
}

inline nlohmann::json table1_payload() {
    const auto rows = filter_table1(enumerate_table1());
    nlohmann::json cases = nlohmann::json::array();
    nlohmann::json survivors = nlohmann::json::array();
    for (const auto& r : rows) {
        cases.push_back(to_json(r));
        if (r.survivor)
            survivors.push_back(r.id);
    }
    return nlohmann::json{{"cases", cases}, {"survivors", survivors}};
}

inline nlohmann::json verify_payload(const std::vector<VerdictReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    bool overall = true;
    for (const auto& r : reports) {
        arr.push_back(triscroll::to_json(r));
        overall = overall && r.overall();
    }
    return nlohmann::json{{"overall", overall}, {"reports", arr}};
}

inline nlohmann::json invariants_payload(const TriplePlaneData& t) {
    return nlohmann::json{{"b", t.b},     {"b1", t.b1},   {"b2", t.b2},
                          {"c", t.c},     {"chi", t.chi}, {"euler", t.euler},
                          {"g", t.g},     {"ksq", t.ksq}, {"pg", t.pg}};
}

inline nlohmann::json bounds_payload(Int b, Int s, const CuspBounds& cb) {
    return nlohmann::json{{"b", b},
                          {"lower_strict", cb.lower_strict.str()},
                          {"refined", cb.refined.str()},
                          {"refined_applicable", cb.refined_applicable},
                          {"s", s},
                          {"upper", cb.upper.str()},
                          {"upper_pg", cb.upper_pg.str()},
                          {"upper_topological", cb.upper_topological.str()}};
}

inline std::string emit_json(nlohmann::json payload) {
    payload["schema_version"] = kSchemaVersion;
    return payload.dump(2) + "\n";
}

inline std::string filter_trail(const CaseRecord& r) {
    std::string out;
    for (const auto& f : r.filters) {
        if (!out.empty())
            out += "; ";
        out += f.name + (f.passed ? ":pass" : ":FAIL");
        for (const auto& [k, v] : f.values)
            out += " " + k + "=" + std::to_string(v);
    }
    return out;
}

inline std::string table1_text() {
    const auto rows = filter_table1(enumerate_table1());
    std::string out = "case   s   b    c  verdict\n";
    for (const auto& r : rows) {
        auto pad = [](const std::string& v, std::size_t w) {
            return std::string(w > v.size() ? w - v.size() : 0, ' ') + v;
        };
        out += pad(std::to_string(r.id), 4) + pad(std::to_string(r.s), 4) +
               pad(std::to_string(r.b), 4) + pad(std::to_string(r.c), 5) + "  " +
               (r.survivor ? "survivor" : "excluded") + "  [" + filter_trail(r) + "]\n";
    }
    return out;
}

inline std::string table1_csv() {
    std::string out = "case,s,b,c\n";
    for (const auto& r : enumerate_table1())
        out += std::to_string(r.id) + "," + std::to_string(r.s) + "," + std::to_string(r.b) +
               "," + std::to_string(r.c) + "\n";
    return out;
}

inline std::string table1_markdown() {
    const auto rows = filter_table1(enumerate_table1());
    std::string out = "| case | s | b | c | verdict |\n|---|---|---|---|---|\n";
    for (const auto& r : rows)
        out += "| " + std::to_string(r.id) + " | " + std::to_string(r.s) + " | " +
               std::to_string(r.b) + " | " + std::to_string(r.c) + " | " +
               (r.survivor ? "survivor" : "excluded") + " (" + filter_trail(r) + ") |\n";
    return out;
}

inline std::string invariants_text(const TriplePlaneData& t) {
    auto line = [](const std::string& k, Int v) { return k + " = " + std::to_string(v) + "\n"; };
    return line("b1", t.b1) + line("b2", t.b2) + line("b", t.b) + line("c", t.c) +
           line("g", t.g) + line("pg", t.pg) + line("chi", t.chi) + line("ksq", t.ksq) +
           line("euler", t.euler);
}

inline std::string invariants_csv(const TriplePlaneData& t) {
    return "b1,b2,b,c,g,pg,chi,ksq,euler\n" + std::to_string(t.b1) + "," +
           std::to_string(t.b2) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "," +
           std::to_string(t.g) + "," + std::to_string(t.pg) + "," + std::to_string(t.chi) + "," +
           std::to_string(t.ksq) + "," + std::to_string(t.euler) + "\n";
}

inline std::string invariants_markdown(const TriplePlaneData& t) {
    return "| b1 | b2 | b | c | g | pg | chi | ksq | euler |\n"
           "|---|---|---|---|---|---|---|---|---|\n| " +
           std::to_string(t.b1) + " | " + std::to_string(t.b2) + " | " + std::to_string(t.b) +
           " | " + std::to_string(t.c) + " | " + std::to_string(t.g) + " | " +
           std::to_string(t.pg) + " | " + std::to_string(t.chi) + " | " + std::to_string(t.ksq) +
           " | " + std::to_string(t.euler) + " |\n";
}

inline std::string bounds_text(Int b, Int s, const CuspBounds& cb) {
    std::string out;
    out += "b = " + std::to_string(b) + ", s = " + std::to_string(s) + "\n";
    out += "lower bound (strict)      = " + cb.lower_strict.str() + "\n";
    out += "upper bound (topological) = " + cb.upper_topological.str() + "\n";
    out += "upper bound (p_g >= 0)    = " + cb.upper_pg.str() + "\n";
    out += "upper bound (min)         = " + cb.upper.str() + "\n";
    out += "refined rational-base     = " + cb.refined.str() +
           (cb.refined_applicable ? " (applicable)" : " (not applicable)") + "\n";
    return out;
}

inline std::string bounds_csv(Int b, Int s, const CuspBounds& cb) {
    return "b,s,lower_strict,upper_topological,upper_pg,upper,refined,refined_applicable\n" +
           std::to_string(b) + "," + std::to_string(s) + "," + cb.lower_strict.str() + "," +
           cb.upper_topological.str() + "," + cb.upper_pg.str() + "," + cb.upper.str() + "," +
           cb.refined.str() + "," + (cb.refined_applicable ? "1" : "0") + "\n";
}

inline std::string bounds_markdown(Int b, Int s, const CuspBounds& cb) {
    return "| b | s | lower (strict) | upper topological | upper p_g | upper | refined | "
           "refined applicable |\n|---|---|---|---|---|---|---|---|\n| " +
           std::to_string(b) + " | " + std::to_string(s) + " | " + cb.lower_strict.str() +
           " | " + cb.upper_topological.str() + " | " + cb.upper_pg.str() + " | " +
           cb.upper.str() + " | " + cb.refined.str() + " | " +
           (cb.refined_applicable ? "yes" : "no") + " |\n";
}

inline std::string verify_text(const std::vector<VerdictReport>& reports) {
    std::string out;
    int passed = 0;
    for (const auto& r : reports) {
        out += render_text(r);
        passed += r.overall() ? 1 : 0;
    }
    out += "verified: " + std::to_string(passed) + "/" + std::to_string(reports.size()) +
           " reports pass\n";
    return out;
}

inline std::string verify_csv(const std::vector<VerdictReport>& reports) {
    std::string out = "id,overall,steps,steps_passed\n";
    for (const auto& r : reports) {
        int ok = 0;
        for (const auto& s : r.steps)
            ok += s.passed ? 1 : 0;
        out += r.id + "," + (r.overall() ? "1" : "0") + "," + std::to_string(r.steps.size()) +
               "," + std::to_string(ok) + "\n";
    }
    return out;
}

inline std::string verify_markdown(const std::vector<VerdictReport>& reports) {
    std::string out;
    for (const auto& r : reports)
        out += render_markdown(r);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

inline RunResult run(const RunConfig& cfg) {
    using namespace detail;
    try {
        if (cfg.window < 1)
            return {2, "error: --window must be >= 1\n"};

        switch (cfg.command) {
        case Command::Table1: {
            switch (cfg.format) {
            case Format::Text: return {0, table1_text()};
            case Format::Json: return {0, emit_json(table1_payload())};
            case Format::Csv: return {0, table1_csv()};
            case Format::Markdown: return {0, table1_markdown()};
            }
            break;
        }
        case Command::Verify: {
            std::vector<VerdictReport> reports;
            if (cfg.verify_id == "all") {
                reports = run_all_verifiers(cfg.window);
            } else {
                const auto& ids = verifier_ids();
                if (std::find(ids.begin(), ids.end(), cfg.verify_id) == ids.end()) {
                    std::string msg = "error: unknown theorem id '" + cfg.verify_id +
                                      "'\nvalid ids: all";
                    for (const auto& id : ids)
                        msg += ", " + id;
                    return {2, msg + "\n"};
                }
                reports.push_back(run_verifier(cfg.verify_id, cfg.window));
            }
            bool overall = true;
            for (const auto& r : reports)
                overall = overall && r.overall();
            std::string out;
            switch (cfg.format) {
            case Format::Text: out = verify_text(reports); break;
            case Format::Json: out = emit_json(verify_payload(reports)); break;
            case Format::Csv: out = verify_csv(reports); break;
            case Format::Markdown: out = verify_markdown(reports); break;
            }
            return {overall ? 0 : 1, out};
        }
        case Command::Invariants: {
            const int given = (cfg.from_b1_b2 ? 1 : 0) + (cfg.from_b_c ? 1 : 0) +
                              (cfg.from_m_n ? 1 : 0);
            if (given != 1)
                return {2, "error: give exactly one of --b1/--b2, --b/--c, --m/--n\n"};
            TriplePlaneData t;
            if (cfg.from_b1_b2) {
                const auto [b1, b2] = *cfg.from_b1_b2;
                if (b1 >= 0)
                    return {2, "error: b1 must be negative\n"};
                t = branch_invariants(-2 * b1, 3 * b2);
            } else if (cfg.from_b_c) {
                t = branch_invariants(cfg.from_b_c->first, cfg.from_b_c->second);
            } else {
                t = decomposable_invariants(cfg.from_m_n->first, cfg.from_m_n->second);
            }
            switch (cfg.format) {
            case Format::Text: return {0, invariants_text(t)};
            case Format::Json: return {0, emit_json(invariants_payload(t))};
            case Format::Csv: return {0, invariants_csv(t)};
            case Format::Markdown: return {0, invariants_markdown(t)};
            }
            break;
        }
        case Command::Bounds: {
            const auto cb = cusp_bounds(cfg.bounds_b, cfg.bounds_s, cfg.rational_non_p2);
            switch (cfg.format) {
            case Format::Text: return {0, bounds_text(cfg.bounds_b, cfg.bounds_s, cb)};
            case Format::Json: return {0, emit_json(bounds_payload(cfg.bounds_b, cfg.bounds_s, cb))};
            case Format::Csv: return {0, bounds_csv(cfg.bounds_b, cfg.bounds_s, cb)};
            case Format::Markdown:
                return {0, bounds_markdown(cfg.bounds_b, cfg.bounds_s, cb)};
            }
            break;
        }
        case Command::Report: {
            const auto reports = run_all_verifiers(cfg.window);
            bool overall = true;
            for (const auto& r : reports)
                overall = overall && r.overall();
            std::string out;
            switch (cfg.format) {
            case Format::Text: out = table1_text() + "\n" + verify_text(reports); break;
            case Format::Json: {
                nlohmann::json payload{{"table1", table1_payload()},
                                       {"verify", verify_payload(reports)}};
                out = emit_json(payload);
                break;
            }
            case Format::Csv: out = verify_csv(reports); break;
            case Format::Markdown: out = table1_markdown() + "\n" + verify_markdown(reports); break;
            }
            return {overall ? 0 : 1, out};
        }
        }
        return {2, "error: unknown command\n"};
    } catch (const std::exception& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace triscroll
