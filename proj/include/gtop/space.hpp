#pragma once

#include <string>
#include <utility>

#include "gtop/operation.hpp"
#include "gtop/topology.hpp"

namespace gtop {

/// A named space: a topology together with an operation table over its
/// opens. This is the unit every predicate in the engine consumes.
/// Immutable after construction; freely shareable across threads.
struct Space {
    Space(Topology t, OperationTable g, std::string label = "")
        : topology(std::move(t)), gamma(std::move(g)), name(std::move(label)) {
        // the table was validated against *some* topology; re-check it is this one
        if (gamma.domain() != topology.opens()) {
            throw std::invalid_argument("Space: operation table does not match the topology's opens");
        }
    }

    [[nodiscard]] int carrier() const { return topology.carrier(); }
    [[nodiscard]] SubSet gamma_of(SubSet open) const { return gamma.value_of(open); }
    [[nodiscard]] const SetFamily& opens() const { return topology.opens(); }
    [[nodiscard]] std::string set_to_string(SubSet s) const { return topology.set_to_string(s); }

    [[nodiscard]] bool operator==(const Space&) const = default;

    Topology topology;
    OperationTable gamma;
    std::string name;
};

inline Space make_space(Topology t, const RuleExpr& rule, std::string name = "") {
    OperationTable g = OperationTable::from_rule(t, rule);
    return Space(std::move(t), std::move(g), std::move(name));
}

}  // namespace gtop
