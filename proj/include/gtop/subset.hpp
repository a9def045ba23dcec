#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtop {

/// A subset of a finite carrier {0, .., n-1}, packed into the low n bits of
/// one machine word. Carriers are capped at 16 points, so every set
/// operation is a couple of integer instructions and the full powerset of a
/// carrier fits in a small table.
///
/// Canonical order of subsets over the same carrier is the ascending numeric
/// order of the bit encoding; all deterministic scans in the engine iterate
/// in that order.
class SubSet {
  public:
    static constexpr int max_carrier = 16;

    SubSet() = default;  // empty set over the empty carrier

    SubSet(int carrier, std::uint32_t bits) : bits_(bits), n_(carrier) {
        if (carrier < 0 || carrier > max_carrier) {
            throw std::invalid_argument("SubSet: carrier must be in [0, 16]");
        }
        if ((bits & ~mask(carrier)) != 0) {
            throw std::invalid_argument("SubSet: bit set beyond carrier");
        }
    }

    static SubSet empty_set(int carrier) { return SubSet(carrier, 0); }
    static SubSet full_set(int carrier) { return SubSet(carrier, mask(carrier)); }

    static SubSet singleton(int carrier, int point) {
        return SubSet(carrier, std::uint32_t{1} << check_point(carrier, point));
    }

    static SubSet of(int carrier, std::initializer_list<int> points) {
        std::uint32_t b = 0;
        for (int p : points) b |= std::uint32_t{1} << check_point(carrier, p);
        return SubSet(carrier, b);
    }

    [[nodiscard]] int carrier() const { return n_; }
    [[nodiscard]] std::uint32_t bits() const { return bits_; }
    [[nodiscard]] int size() const { return std::popcount(bits_); }
    [[nodiscard]] bool empty() const { return bits_ == 0; }
    [[nodiscard]] bool is_full() const { return bits_ == mask(n_); }

    [[nodiscard]] bool contains(int point) const {
        return (bits_ >> check_point(n_, point)) & 1U;
    }

    [[nodiscard]] SubSet with(int point) const {
        return SubSet(n_, bits_ | (std::uint32_t{1} << check_point(n_, point)));
    }

    // -- set algebra (total on a common carrier) ----------------------------

    [[nodiscard]] SubSet operator|(SubSet o) const { return SubSet(same(o), bits_ | o.bits_); }
    [[nodiscard]] SubSet operator&(SubSet o) const { return SubSet(same(o), bits_ & o.bits_); }
    [[nodiscard]] SubSet operator-(SubSet o) const { return SubSet(same(o), bits_ & ~o.bits_); }
    [[nodiscard]] SubSet operator~() const { return SubSet(n_, ~bits_ & mask(n_)); }

    [[nodiscard]] bool subset_of(SubSet o) const { same(o); return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] bool intersects(SubSet o) const { same(o); return (bits_ & o.bits_) != 0; }

    [[nodiscard]] bool operator==(const SubSet&) const = default;

    // Strict weak order for canonical sorting; carriers compare first so that
    // mixed-carrier containers still sort totally.
    [[nodiscard]] bool operator<(SubSet o) const {
        return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_;
    }

    // -- iteration over member points, ascending ----------------------------

    class iterator {
      public:
        iterator(std::uint32_t bits) : bits_(bits) {}
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() { bits_ &= bits_ - 1; return *this; }
        bool operator==(const iterator&) const = default;

      private:
        std::uint32_t bits_;
    };

    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

  private:
    static std::uint32_t mask(int n) { return n == 0 ? 0 : (std::uint32_t{0xFFFF} >> (max_carrier - n)); }

    static int check_point(int carrier, int point) {
        if (point < 0 || point >= carrier) {
            throw std::out_of_range("SubSet: point index outside carrier");
        }
        return point;
    }

    int same(SubSet o) const {
        if (n_ != o.n_) throw std::invalid_argument("SubSet: carrier mismatch");
        return n_;
    }

    std::uint32_t bits_ = 0;
    int n_ = 0;
};

/// Default point labels a, b, c, ... used whenever a carrier has no
/// user-supplied names. Labels are cosmetic; all semantics run on indices.
inline std::vector<std::string> default_point_names(int carrier) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(carrier));
    for (int i = 0; i < carrier; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return names;
}

/// Renders "{a c}" using the given labels, "{}" for the empty set.
inline std::string format_set(SubSet s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (int p : s) {
        if (!first) out += ' ';
        first = false;
        out += static_cast<std::size_t>(p) < names.size() ? names[static_cast<std::size_t>(p)]
                                                          : std::to_string(p);
    }
    out += '}';
    return out;
}

inline std::string format_set(SubSet s) { return format_set(s, default_point_names(s.carrier())); }

/// Every subset of the carrier in canonical (ascending encoding) order.
inline std::vector<SubSet> all_subsets(int carrier) {
    std::vector<SubSet> out;
    out.reserve(std::size_t{1} << carrier);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << carrier); ++b) out.emplace_back(carrier, b);
    return out;
}

/// Ambient points of Y, ascending; position in this list is the point's
/// index in the subspace carrier.
inline std::vector<int> points_of(SubSet y) {
    std::vector<int> pts;
    for (int p : y) pts.push_back(p);
    return pts;
}

/// Reindexes an ambient set A into the coordinates of the subspace carrier Y.
/// Only the part of A inside Y survives.
inline SubSet restrict_set(SubSet a, SubSet y) {
    std::uint32_t b = 0;
    int k = 0;
    for (int p : y) {
        if (a.contains(p)) b |= std::uint32_t{1} << k;
        ++k;
    }
    return SubSet(y.size(), b);
}

/// Inverse of restrict_set on sets that live inside Y.
inline SubSet extend_set(SubSet g, SubSet y, int ambient_carrier) {
    std::uint32_t b = 0;
    int k = 0;
    for (int p : y) {
        if (g.contains(k)) b |= std::uint32_t{1} << p;
        ++k;
    }
    return SubSet(ambient_carrier, b);
}

}  // namespace gtop
