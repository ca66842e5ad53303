#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace triscroll {

using Int = long long;

// ===========================================================================
// Machine-checkable verdicts
// ===========================================================================

/// One checked claim inside a verifier: what was computed, what was
/// expected, and whether they agree. Witness values ride along in the
/// computed/expected strings so the report reads as a checked proof.
struct VerdictStep {
    std::string claim;
    std::string computed;
    std::string expected;
    bool passed = true;
};

/// Ordered result of one theorem-level verifier. `overall` is by definition
/// the conjunction of the step verdicts.
struct VerdictReport {
    std::string id;    // stable verifier id, e.g. "double-solid"
    std::string title;
    std::vector<VerdictStep> steps;

    bool overall() const {
        for (const auto& s : steps)
            if (!s.passed)
                return false;
        return true;
    }

    void check(std::string claim, std::string computed, std::string expected, bool ok) {
        steps.push_back(VerdictStep{std::move(claim), std::move(computed), std::move(expected), ok});
    }

    void check_int(std::string claim, Int computed, Int expected) {
        check(std::move(claim), std::to_string(computed), std::to_string(expected),
              computed == expected);
    }

    void check_str(std::string claim, std::string computed, std::string expected) {
        const bool ok = computed == expected;
        check(std::move(claim), std::move(computed), std::move(expected), ok);
    }

    /// Imported geometric fact used as a filter rule: recorded, never computed.
    void assumed(std::string claim, std::string rule) {
        check(std::move(claim), "assumed", std::move(rule), true);
    }

    /// Informational value surfaced without an assertion.
    void note(std::string claim, std::string value, std::string context) {
        check(std::move(claim), std::move(value), std::move(context), true);
    }
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const VerdictStep& s) {
    return nlohmann::json{
        {"claim", s.claim}, {"computed", s.computed}, {"expected", s.expected}, {"passed", s.passed}};
}

inline nlohmann::json to_json(const VerdictReport& r) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps)
        steps.push_back(to_json(s));
    return nlohmann::json{
        {"id", r.id}, {"overall", r.overall()}, {"steps", steps}, {"title", r.title}};
}

inline std::string render_text(const VerdictReport& r) {
    std::string out;
    out += (r.overall() ? "[PASS] " : "[FAIL] ") + r.id + ": " + r.title + "\n";
    for (const auto& s : r.steps) {
        out += std::string("  ") + (s.passed ? "[ok]   " : "[FAIL] ") + s.claim +
               "  (computed: " + s.computed + "; expected: " + s.expected + ")\n";
    }
    return out;
}

inline std::string render_markdown(const VerdictReport& r) {
    std::string out;
    out += "### `" + r.id + "` - " + r.title + " - **" + (r.overall() ? "PASS" : "FAIL") + "**\n\n";
    out += "| claim | computed | expected | ok |\n|---|---|---|---|\n";
    for (const auto& s : r.steps)
        out += "| " + s.claim + " | " + s.computed + " | " + s.expected + " | " +
               (s.passed ? "yes" : "NO") + " |\n";
    out += "\n";
    return out;
}

} // namespace triscroll
