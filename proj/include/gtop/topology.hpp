#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtop/errors.hpp"
#include "gtop/set_family.hpp"
#include "gtop/subset.hpp"

namespace gtop {

/// A validated topology on a finite carrier: the family of open sets must
/// contain ∅ and X and be closed under pairwise union and intersection
/// (which on a finite family is all the closure there is).
///
/// Point labels ride along for rendering; every computation is on indices.
class Topology {
  public:
    /// Validates the axioms; throws TopologyError with a canonical-first
    /// witness pair on a closure failure.
    explicit Topology(SetFamily opens, std::vector<std::string> names = {})
        : n_(opens.carrier()), opens_(std::move(opens)), names_(std::move(names)) {
        if (names_.empty()) names_ = default_point_names(n_);
        if (static_cast<int>(names_.size()) != n_) {
            throw std::invalid_argument("Topology: one name per carrier point required");
        }
        if (!opens_.contains(SubSet::empty_set(n_)) || !opens_.contains(SubSet::full_set(n_))) {
            throw TopologyError(TopologyError::Code::MissingEmptyOrFull,
                                "topology must contain the empty set and the full carrier");
        }
        if (auto bad = opens_.union_escape()) {
            throw TopologyError(TopologyError::Code::NotClosedUnderUnion,
                                "family not closed under union: " + format_set(bad->first, names_) +
                                    " u " + format_set(bad->second, names_),
                                bad->first, bad->second);
        }
        if (auto bad = opens_.intersection_escape()) {
            throw TopologyError(TopologyError::Code::NotClosedUnderIntersection,
                                "family not closed under intersection: " +
                                    format_set(bad->first, names_) + " n " +
                                    format_set(bad->second, names_),
                                bad->first, bad->second);
        }
    }

    /// Convenience for literal topologies in tests and examples.
    static Topology of(int carrier, std::initializer_list<std::initializer_list<int>> opens,
                       std::vector<std::string> names = {}) {
        std::vector<SubSet> fam;
        for (const auto& o : opens) fam.push_back(SubSet::of(carrier, o));
        return Topology(SetFamily(carrier, std::move(fam)), std::move(names));
    }

    [[nodiscard]] int carrier() const { return n_; }
    [[nodiscard]] const SetFamily& opens() const { return opens_; }
    [[nodiscard]] const std::vector<std::string>& point_names() const { return names_; }

    [[nodiscard]] bool is_open(SubSet a) const { return opens_.contains(a); }
    [[nodiscard]] bool is_closed(SubSet a) const { return opens_.contains(~a); }

    /// Largest open subset of A.
    [[nodiscard]] SubSet interior(SubSet a) const {
        SubSet r = SubSet::empty_set(n_);
        for (SubSet o : opens_) {
            if (o.subset_of(a)) r = r | o;
        }
        return r;
    }

    /// Smallest closed superset of A, via the complement duality.
    [[nodiscard]] SubSet closure(SubSet a) const { return ~interior(~a); }

    [[nodiscard]] SetFamily closed_family() const {
        std::vector<SubSet> closed;
        closed.reserve(opens_.size());
        for (SubSet o : opens_) closed.push_back(~o);
        return SetFamily(n_, std::move(closed));
    }

    [[nodiscard]] std::string set_to_string(SubSet s) const { return format_set(s, names_); }
    [[nodiscard]] std::string family_to_string(const SetFamily& f) const {
        return format_family(f, names_);
    }

    [[nodiscard]] bool operator==(const Topology&) const = default;

  private:
    int n_;
    SetFamily opens_;
    std::vector<std::string> names_;
};

/// Canonicalizes and validates a family as a topology over its carrier.
inline Topology validate_topology(SetFamily opens, std::vector<std::string> names = {}) {
    return Topology(std::move(opens), std::move(names));
}

/// The trace topology on Y: carrier reindexed to |Y|, opens = {O ∩ Y},
/// deduplicated, with the ambient labels of Y's points retained.
/// Y = ∅ yields the one-set topology on the empty carrier.
inline Topology subspace_topology(const Topology& t, SubSet y) {
    std::vector<SubSet> traces;
    traces.reserve(t.opens().size());
    for (SubSet o : t.opens()) traces.push_back(restrict_set(o & y, y));
    std::vector<std::string> names;
    for (int p : y) names.push_back(t.point_names()[static_cast<std::size_t>(p)]);
    return Topology(SetFamily(y.size(), std::move(traces)), std::move(names));
}

}  // namespace gtop
