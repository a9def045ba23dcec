#pragma once

#include <vector>

#include "gtop/gamma.hpp"
#include "gtop/space.hpp"
#include "gtop/verdict.hpp"

namespace gtop {

namespace detail {

// Opens containing each point, canonical order; the common substrate of the
// point-indexed quantifiers below.
inline std::vector<std::vector<SubSet>> neighbourhoods(const Space& s) {
    std::vector<std::vector<SubSet>> nbd(static_cast<std::size_t>(s.carrier()));
    for (SubSet u : s.opens()) {
        for (int x : u) nbd[static_cast<std::size_t>(x)].push_back(u);
    }
    return nbd;
}

template <bool Exact>
Verdict regularity_scan(const Space& s) {
    const auto nbd = neighbourhoods(s);
    std::vector<VerdictEntry> certs;
    for (int x = 0; x < s.carrier(); ++x) {
        const auto& nx = nbd[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < nx.size(); ++i) {
            for (std::size_t j = i; j < nx.size(); ++j) {
                const SubSet target = s.gamma_of(nx[i]) & s.gamma_of(nx[j]);
                const SubSet* found = nullptr;
                for (const SubSet& w : nx) {
                    const SubSet wg = s.gamma_of(w);
                    if (Exact ? wg == target : wg.subset_of(target)) {
                        found = &w;
                        break;
                    }
                }
                if (!found) {
                    return Verdict::fail(VerdictEntry{{Binding::point("x", x),
                                                       Binding::set("U", nx[i]),
                                                       Binding::set("V", nx[j])},
                                                      {}});
                }
                certs.push_back(VerdictEntry{{Binding::point("x", x), Binding::set("U", nx[i]),
                                              Binding::set("V", nx[j])},
                                             {Binding::set("W", *found)}});
            }
        }
    }
    return Verdict::pass(std::move(certs));
}

}  // namespace detail

/// Regular operation: any two open nbds U, V of a point are γ-dominated by a
/// third, W^γ ⊆ U^γ ∩ V^γ. Certificate: the chosen W per (x, U, V).
inline Verdict is_regular_operation(const Space& s) { return detail::regularity_scan<false>(s); }

/// Strictly regular operation: same with exact equality W^γ = U^γ ∩ V^γ.
inline Verdict is_strictly_regular_operation(const Space& s) {
    return detail::regularity_scan<true>(s);
}

/// γ-open operation: every table value V^γ is itself a γ-open set.
inline Verdict is_open_operation(const Space& s) {
    const SetFamily tg = gamma_open_family(s);
    std::vector<VerdictEntry> certs;
    for (const auto& [open, value] : s.gamma.entries()) {
        if (!tg.contains(value)) {
            return Verdict::fail(
                VerdictEntry{{Binding::set("V", open), Binding::set("V^g", value)}, {}});
        }
        certs.push_back(VerdictEntry{{Binding::set("V", open)}, {Binding::set("V^g", value)}});
    }
    return Verdict::pass(std::move(certs));
}

}  // namespace gtop
