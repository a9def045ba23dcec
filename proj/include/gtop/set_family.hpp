#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gtop/subset.hpp"

namespace gtop {

/// An ordered, deduplicated family of subsets over one carrier. The order is
/// canonical (ascending numeric encoding), which makes families directly
/// comparable and lets parallel producers merge deterministically.
class SetFamily {
  public:
    explicit SetFamily(int carrier) : n_(carrier) {}

    SetFamily(int carrier, std::vector<SubSet> members) : n_(carrier), members_(std::move(members)) {
        for (const SubSet& s : members_) {
            if (s.carrier() != n_) throw std::invalid_argument("SetFamily: carrier mismatch");
        }
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    [[nodiscard]] int carrier() const { return n_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const SubSet& operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    [[nodiscard]] bool contains(SubSet s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    /// Keeps canonical order; returns false if the member was already present.
    bool insert(SubSet s) {
        if (s.carrier() != n_) throw std::invalid_argument("SetFamily: carrier mismatch");
        auto it = std::lower_bound(members_.begin(), members_.end(), s);
        if (it != members_.end() && *it == s) return false;
        members_.insert(it, s);
        return true;
    }

    [[nodiscard]] SubSet union_all() const {
        SubSet u = SubSet::empty_set(n_);
        for (SubSet s : members_) u = u | s;
        return u;
    }

    /// Intersection over the family; the empty family intersects to the full
    /// carrier (the usual convention for meets over an empty index set).
    [[nodiscard]] SubSet intersect_all() const {
        SubSet v = SubSet::full_set(n_);
        for (SubSet s : members_) v = v & s;
        return v;
    }

    /// First pair (canonical order) whose union escapes the family, if any.
    [[nodiscard]] std::optional<std::pair<SubSet, SubSet>> union_escape() const {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = i; j < members_.size(); ++j) {
                if (!contains(members_[i] | members_[j])) return std::pair{members_[i], members_[j]};
            }
        }
        return std::nullopt;
    }

    /// First pair whose intersection escapes the family, if any.
    [[nodiscard]] std::optional<std::pair<SubSet, SubSet>> intersection_escape() const {
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = i; j < members_.size(); ++j) {
                if (!contains(members_[i] & members_[j])) return std::pair{members_[i], members_[j]};
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] bool operator==(const SetFamily&) const = default;

  private:
    int n_;
    std::vector<SubSet> members_;
};

inline std::string format_family(const SetFamily& fam, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (SubSet s : fam) {
        if (!first) out += ',';
        first = false;
        out += format_set(s, names);
    }
    out += '}';
    return out;
}

}  // namespace gtop
