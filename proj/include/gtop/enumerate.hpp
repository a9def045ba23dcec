#pragma once

#include <cstdint>
#include <vector>

#include "gtop/errors.hpp"
#include "gtop/topology.hpp"

namespace gtop {

/// Exhaustive labeled-topology enumeration is capped here: families of
/// subsets of an n-set number 2^(2^n), which stops being a desk-scale scan
/// right after n = 4 (where there are 355 topologies).
inline constexpr int max_enumeration_carrier = 4;

/// All labeled topologies on the carrier, exactly once each, in canonical
/// order (ascending encoding of the family-membership mask, where bit s of
/// the mask marks the subset encoded by s). Deterministic by construction;
/// callers may partition the returned list across workers and merge by index.
inline std::vector<Topology> enumerate_topologies(int carrier) {
    if (carrier < 1 || carrier > max_enumeration_carrier) {
        throw ScopeError("enumerate_topologies: exhaustive enumeration supports 1 <= n <= " +
                         std::to_string(max_enumeration_carrier));
    }
    const std::uint32_t subsets = std::uint32_t{1} << carrier;
    const std::uint64_t family_masks = std::uint64_t{1} << subsets;
    std::vector<Topology> out;
    std::vector<SubSet> members;
    for (std::uint64_t mask = 0; mask < family_masks; ++mask) {
        if (!(mask & 1)) continue;                        // ∅ required
        if (!((mask >> (subsets - 1)) & 1)) continue;     // X required
        members.clear();
        for (std::uint32_t s = 0; s < subsets; ++s) {
            if ((mask >> s) & 1) members.emplace_back(carrier, s);
        }
        bool closed = true;
        for (std::size_t i = 0; i < members.size() && closed; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const std::uint32_t u = members[i].bits() | members[j].bits();
                const std::uint32_t v = members[i].bits() & members[j].bits();
                if (!((mask >> u) & 1) || !((mask >> v) & 1)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) out.emplace_back(SetFamily(carrier, members));
    }
    return out;
}

}  // namespace gtop
