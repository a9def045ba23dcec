#pragma once

#include <vector>

#include "gtop/errors.hpp"
#include "gtop/operation.hpp"
#include "gtop/topology.hpp"

namespace gtop {

/// The operation catalog scans range over: the four leaf rules, then every
/// if-contains(p, r1, r2) with p over the carrier and r1, r2 over the leaves,
/// in that order. Deterministic; 4 + 16n rules on an n-point carrier.
inline std::vector<RuleExpr> rule_catalog(int carrier) {
    const std::vector<RuleExpr> leaves = {RuleExpr::identity(), RuleExpr::closure_rule(),
                                          RuleExpr::int_closure(), RuleExpr::cl_int_cl()};
    std::vector<RuleExpr> rules = leaves;
    for (int p = 0; p < carrier; ++p) {
        for (const RuleExpr& then_rule : leaves) {
            for (const RuleExpr& else_rule : leaves) {
                rules.push_back(RuleExpr::if_contains(p, then_rule, else_rule));
            }
        }
    }
    return rules;
}

/// Every expansive table over the host's opens, in canonical order (odometer
/// over opens, each value running through the supersets of its open in
/// ascending encoding). The count is Π 2^(n − |V|) over opens V, which is
/// why exhaustive all-table scans are gated to tiny carriers.
inline std::vector<OperationTable> all_expansive_tables(const Topology& host) {
    const int n = host.carrier();
    const std::uint32_t full = SubSet::full_set(n).bits();

    std::uint64_t count = 1;
    for (SubSet v : host.opens()) {
        count *= std::uint64_t{1} << (n - v.size());
        if (count > 1'000'000) {
            throw ScopeError("all_expansive_tables: table space too large to enumerate");
        }
    }

    std::vector<std::pair<SubSet, SubSet>> entries;
    for (SubSet v : host.opens()) entries.emplace_back(v, v);

    std::vector<OperationTable> out;
    out.reserve(static_cast<std::size_t>(count));
    while (true) {
        out.emplace_back(host, entries);
        // advance the odometer: last open's value first
        std::size_t i = entries.size();
        while (i > 0) {
            auto& [open, value] = entries[i - 1];
            if (value.bits() == full) {
                value = open;  // wrap to the least superset and carry
                --i;
            } else {
                value = SubSet(n, (value.bits() + 1) | open.bits());  // next superset
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

}  // namespace gtop
