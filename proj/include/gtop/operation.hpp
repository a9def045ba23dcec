#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gtop/errors.hpp"
#include "gtop/topology.hpp"

namespace gtop {

/// A rule for producing the value V^γ of an open set V. The leaf rules are
/// the standard operations (identity, cl, int∘cl, cl∘int∘cl); the
/// conditional selects a branch by membership of a pivot point in the input
/// open itself. Nesting of conditionals is capped at depth 4.
class RuleExpr {
  public:
    enum class Kind { Identity, Closure, IntClosure, ClIntCl, IfContains };

    static constexpr int max_conditional_depth = 4;

    static RuleExpr identity() { return RuleExpr(Kind::Identity); }
    static RuleExpr closure_rule() { return RuleExpr(Kind::Closure); }
    static RuleExpr int_closure() { return RuleExpr(Kind::IntClosure); }
    static RuleExpr cl_int_cl() { return RuleExpr(Kind::ClIntCl); }

    static RuleExpr if_contains(int pivot, RuleExpr then_rule, RuleExpr else_rule) {
        RuleExpr r(Kind::IfContains);
        r.pivot_ = pivot;
        r.then_ = std::make_shared<RuleExpr>(std::move(then_rule));
        r.else_ = std::make_shared<RuleExpr>(std::move(else_rule));
        if (r.depth() > max_conditional_depth) {
            throw std::invalid_argument("RuleExpr: conditional nesting deeper than 4");
        }
        return r;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int pivot() const { return pivot_; }
    [[nodiscard]] const RuleExpr& then_branch() const { return *then_; }
    [[nodiscard]] const RuleExpr& else_branch() const { return *else_; }

    [[nodiscard]] int depth() const {
        if (kind_ != Kind::IfContains) return 0;
        return 1 + std::max(then_->depth(), else_->depth());
    }

    /// Evaluates the rule on an open set of the given topology. The
    /// conditional guard tests the pivot against the input open.
    [[nodiscard]] SubSet apply(const Topology& t, SubSet open) const {
        switch (kind_) {
            case Kind::Identity: return open;
            case Kind::Closure: return t.closure(open);
            case Kind::IntClosure: return t.interior(t.closure(open));
            case Kind::ClIntCl: return t.closure(t.interior(t.closure(open)));
            case Kind::IfContains:
                if (pivot_ >= t.carrier()) {
                    throw std::invalid_argument("RuleExpr: pivot point outside carrier");
                }
                return open.contains(pivot_) ? then_->apply(t, open) : else_->apply(t, open);
        }
        throw std::logic_error("RuleExpr: unreachable");
    }

    /// Space-file syntax, e.g. "if-contains b then identity else closure".
    [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const {
        switch (kind_) {
            case Kind::Identity: return "identity";
            case Kind::Closure: return "closure";
            case Kind::IntClosure: return "intclosure";
            case Kind::ClIntCl: return "clintcl";
            case Kind::IfContains:
                return "if-contains " +
                       (static_cast<std::size_t>(pivot_) < names.size()
                            ? names[static_cast<std::size_t>(pivot_)]
                            : std::to_string(pivot_)) +
                       " then " + then_->to_string(names) + " else " + else_->to_string(names);
        }
        throw std::logic_error("RuleExpr: unreachable");
    }

    [[nodiscard]] bool operator==(const RuleExpr& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ != Kind::IfContains) return true;
        return pivot_ == o.pivot_ && *then_ == *o.then_ && *else_ == *o.else_;
    }

  private:
    explicit RuleExpr(Kind k) : kind_(k) {}

    Kind kind_;
    int pivot_ = -1;
    std::shared_ptr<const RuleExpr> then_;
    std::shared_ptr<const RuleExpr> else_;
};

/// The operation γ as an explicit, validated table: a total map from the
/// opens of a host topology to supersets of themselves (the expansiveness
/// condition V ⊆ V^γ). γ is defined on opens only; looking up any other set
/// is a programming error and throws.
class OperationTable {
  public:
    /// Validates an explicit table: the domain must be exactly the opens of
    /// the host topology and every entry must be expansive. Witnesses are
    /// canonical-first.
    OperationTable(const Topology& host, std::vector<std::pair<SubSet, SubSet>> entries)
        : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            if (entries_[i].first == entries_[i - 1].first) {
                throw OperationError(OperationError::Code::ExtraEntry,
                                     "duplicate entry for " + host.set_to_string(entries_[i].first),
                                     entries_[i].first);
            }
        }
        std::size_t i = 0;
        for (SubSet open : host.opens()) {
            if (i >= entries_.size() || open < entries_[i].first) {
                throw OperationError(OperationError::Code::MissingEntry,
                                     "no entry for open " + host.set_to_string(open), open);
            }
            if (entries_[i].first < open) {
                throw OperationError(OperationError::Code::ExtraEntry,
                                     "entry for non-open set " + host.set_to_string(entries_[i].first),
                                     entries_[i].first);
            }
            ++i;
        }
        if (i < entries_.size()) {
            throw OperationError(OperationError::Code::ExtraEntry,
                                 "entry for non-open set " + host.set_to_string(entries_[i].first),
                                 entries_[i].first);
        }
        for (const auto& [open, value] : entries_) {
            if (!open.subset_of(value)) {
                throw OperationError(OperationError::Code::NotExpansive,
                                     "entry " + host.set_to_string(open) + " -> " +
                                         host.set_to_string(value) + " is not expansive",
                                     open);
            }
        }
    }

    static OperationTable from_rule(const Topology& host, const RuleExpr& rule) {
        std::vector<std::pair<SubSet, SubSet>> entries;
        entries.reserve(host.opens().size());
        for (SubSet open : host.opens()) entries.emplace_back(open, rule.apply(host, open));
        return OperationTable(host, std::move(entries));
    }

    [[nodiscard]] SubSet value_of(SubSet open) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), open,
                                   [](const auto& e, SubSet s) { return e.first < s; });
        if (it == entries_.end() || it->first != open) {
            throw std::out_of_range("OperationTable: gamma is only defined on opens");
        }
        return it->second;
    }

    [[nodiscard]] const std::vector<std::pair<SubSet, SubSet>>& entries() const { return entries_; }

    /// The opens of the host topology, in canonical order.
    [[nodiscard]] SetFamily domain() const {
        std::vector<SubSet> d;
        d.reserve(entries_.size());
        for (const auto& e : entries_) d.push_back(e.first);
        return SetFamily(carrier(), std::move(d));
    }

    [[nodiscard]] int carrier() const {
        return entries_.empty() ? 0 : entries_.front().first.carrier();
    }

    [[nodiscard]] bool operator==(const OperationTable&) const = default;

  private:
    std::vector<std::pair<SubSet, SubSet>> entries_;  // sorted by domain set
};

inline OperationTable build_operation(const Topology& host, const RuleExpr& rule) {
    return OperationTable::from_rule(host, rule);
}

inline OperationTable validate_operation(const Topology& host,
                                         std::vector<std::pair<SubSet, SubSet>> entries) {
    return OperationTable(host, std::move(entries));
}

}  // namespace gtop
