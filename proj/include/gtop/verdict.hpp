#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gtop/topology.hpp"

namespace gtop {

/// One named object appearing in a certificate or witness: either a carrier
/// point or a subset, tagged with the role it plays in the definition being
/// checked ("x", "U", "A", ...).
struct Binding {
    std::string role;
    std::variant<int, SubSet> value;

    static Binding point(std::string role, int p) { return {std::move(role), p}; }
    static Binding set(std::string role, SubSet s) { return {std::move(role), s}; }

    [[nodiscard]] bool operator==(const Binding&) const = default;
};

/// One quantifier instance of a predicate: the universally-quantified
/// configuration (`given`) and, when the predicate holds there, the
/// existential choices that resolve it (`chosen`). A witness is an entry
/// with no choices: the configuration for which the exhaustive search over
/// all choices failed.
struct VerdictEntry {
    std::vector<Binding> given;
    std::vector<Binding> chosen;

    [[nodiscard]] bool operator==(const VerdictEntry&) const = default;
};

/// Outcome of a predicate check. Exactly one of certificates/witness is
/// populated: certificates list a resolving choice for every quantifier
/// instance scanned (possibly none, when the quantifier is vacuous), the
/// witness is the canonical-first violating configuration.
struct Verdict {
    bool holds = true;
    std::vector<VerdictEntry> certificates;
    std::optional<VerdictEntry> witness;
    std::string note;  // free-form stats, e.g. cover counts; not semantic

    explicit operator bool() const { return holds; }

    static Verdict pass(std::vector<VerdictEntry> certs = {}, std::string note = {}) {
        Verdict v;
        v.certificates = std::move(certs);
        v.note = std::move(note);
        return v;
    }

    static Verdict fail(VerdictEntry w, std::string note = {}) {
        Verdict v;
        v.holds = false;
        v.witness = std::move(w);
        v.note = std::move(note);
        return v;
    }
};

inline std::string format_bindings(const std::vector<Binding>& bs,
                                   const std::vector<std::string>& names) {
    std::string out;
    for (const Binding& b : bs) {
        if (!out.empty()) out += ' ';
        out += b.role + '=';
        if (std::holds_alternative<int>(b.value)) {
            const int p = std::get<int>(b.value);
            out += static_cast<std::size_t>(p) < names.size() ? names[static_cast<std::size_t>(p)]
                                                              : std::to_string(p);
        } else {
            out += format_set(std::get<SubSet>(b.value), names);
        }
    }
    return out;
}

/// Short human rendering: "true", or "false, witness x=a U={a}".
inline std::string describe(const Verdict& v, const std::vector<std::string>& names) {
    if (v.holds) return v.note.empty() ? "true" : "true (" + v.note + ")";
    std::string out = "false";
    if (v.witness && !v.witness->given.empty()) {
        out += ", witness " + format_bindings(v.witness->given, names);
    }
    return out;
}

}  // namespace gtop
