#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtop/gamma.hpp"
#include "gtop/space.hpp"

namespace gtop {

/// There is no canonical operation for a subspace to inherit, yet the
/// subspace theorems need one. The engine names two explicit conventions and
/// runs those theorems under both:
///   max-trace: γ_Y(G) = γ(U*) ∩ Y, where U* is the union of all ambient
///              opens tracing to G (itself an open with trace G);
///   min-trace: γ_Y(G) = ∩ { γ(U) ∩ Y : U ∈ τ, U ∩ Y = G }.
/// Both are expansive: G = U ∩ Y ⊆ U^γ ∩ Y for every tracing U.
enum class TraceConvention { MaxTrace, MinTrace };

inline std::string to_string(TraceConvention c) {
    return c == TraceConvention::MaxTrace ? "max" : "min";
}

/// The subspace on Y with the induced operation under the chosen convention.
/// Point names are carried over from the ambient space.
inline Space induced_space(const Space& s, SubSet y, TraceConvention conv) {
    Topology sub = subspace_topology(s.topology, y);
    std::vector<std::pair<SubSet, SubSet>> entries;
    entries.reserve(sub.opens().size());
    for (SubSet g : sub.opens()) {
        const SubSet g_ambient = extend_set(g, y, s.carrier());
        SubSet value = conv == TraceConvention::MaxTrace ? SubSet::empty_set(s.carrier())
                                                         : SubSet::full_set(s.carrier());
        SubSet u_star = SubSet::empty_set(s.carrier());
        for (SubSet u : s.opens()) {
            if ((u & y) != g_ambient) continue;
            if (conv == TraceConvention::MaxTrace) {
                u_star = u_star | u;
            } else {
                value = value & (s.gamma_of(u) & y);
            }
        }
        if (conv == TraceConvention::MaxTrace) value = s.gamma_of(u_star) & y;
        entries.emplace_back(g, restrict_set(value, y));
    }
    OperationTable table(sub, std::move(entries));
    return Space(std::move(sub), std::move(table),
                 s.name.empty() ? "" : s.name + "|" + s.set_to_string(y));
}

inline Space induced_operation(const Space& s, SubSet y, TraceConvention conv) {
    return induced_space(s, y, conv);
}

/// Traces of the ambient γ-open sets on Y, in subspace coordinates. Kept
/// distinct from the γ-open family of the induced space; the theorem lab
/// compares the two per instance.
inline SetFamily gamma_open_trace_family(const Space& s, SubSet y) {
    SetFamily fam(y.size());
    for (SubSet o : gamma_open_family(s)) fam.insert(restrict_set(o & y, y));
    return fam;
}

}  // namespace gtop
