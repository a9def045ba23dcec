#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gtop/errors.hpp"
#include "gtop/space.hpp"
#include "gtop/verdict.hpp"

namespace gtop {

/// γ-interior: int_γ(A) = { x : x ∈ N ∈ τ and N^γ ⊆ A }. Expansiveness of γ
/// forces every such x into A already, so this is the union of the
/// witnessing opens; in particular int_γ(A) is τ-open and ⊆ A.
inline SubSet gamma_interior(const Space& s, SubSet a) {
    SubSet r = SubSet::empty_set(s.carrier());
    for (SubSet n : s.opens()) {
        if (s.gamma_of(n).subset_of(a)) r = r | n;
    }
    return r;
}

/// γ-closure: cl_γ(A) = { x : U^γ ∩ A ≠ ∅ for every open nbd U of x }.
/// Expansive and monotone in A; dual to gamma_interior by complement.
inline SubSet gamma_closure(const Space& s, SubSet a) {
    SubSet r = SubSet::empty_set(s.carrier());
    for (int x = 0; x < s.carrier(); ++x) {
        bool in = true;
        for (SubSet u : s.opens()) {
            if (u.contains(x) && !s.gamma_of(u).intersects(a)) {
                in = false;
                break;
            }
        }
        if (in) r = r.with(x);
    }
    return r;
}

inline bool is_gamma_open_set(const Space& s, SubSet a) { return gamma_interior(s, a) == a; }

/// The family τ_γ of γ-open sets.
using GammaFamily = SetFamily;

/// τ_γ: all sets equal to their γ-interior, canonically ordered. Always
/// contains ∅ and X, and sits inside τ since every member is a union of
/// witnessing opens.
inline GammaFamily gamma_open_family(const Space& s) {
    SetFamily fam(s.carrier());
    for (SubSet a : all_subsets(s.carrier())) {
        if (is_gamma_open_set(s, a)) fam.insert(a);
    }
    return fam;
}

/// γ-closedness comes in two forms: complement (X − A is γ-open) and
/// closure (cl_γ(A) ⊆ A). Both are exposed; they are provably equivalent and
/// the test-suite asserts that on every enumerated instance.
enum class GammaClosedConvention { Complement, Closure };

inline Verdict is_gamma_closed(const Space& s, SubSet a,
                               GammaClosedConvention conv = GammaClosedConvention::Closure) {
    if (conv == GammaClosedConvention::Complement) {
        SubSet c = ~a;
        if (is_gamma_open_set(s, c)) {
            return Verdict::pass({VerdictEntry{{Binding::set("A", a)}, {Binding::set("X-A", c)}}});
        }
        return Verdict::fail(VerdictEntry{{Binding::set("A", a), Binding::set("X-A", c)}, {}});
    }
    SubSet cl = gamma_closure(s, a);
    if (cl.subset_of(a)) {
        return Verdict::pass({VerdictEntry{{Binding::set("A", a)}, {Binding::set("cl_g(A)", cl)}}});
    }
    // canonical-first escaping point
    const int x = *(cl - a).begin();
    return Verdict::fail(VerdictEntry{{Binding::set("A", a), Binding::point("x", x)}, {}});
}

inline Verdict all_subsets_gamma_closed(const Space& s) {
    std::vector<VerdictEntry> certs;
    for (SubSet a : all_subsets(s.carrier())) {
        Verdict v = is_gamma_closed(s, a);
        if (!v.holds) return v;
        certs.push_back(std::move(v.certificates.front()));
    }
    return Verdict::pass(std::move(certs));
}

inline Verdict all_singletons_gamma_closed(const Space& s) {
    std::vector<VerdictEntry> certs;
    for (int x = 0; x < s.carrier(); ++x) {
        Verdict v = is_gamma_closed(s, SubSet::singleton(s.carrier(), x));
        if (!v.holds) return v;
        certs.push_back(std::move(v.certificates.front()));
    }
    return Verdict::pass(std::move(certs));
}

/// Minimum-cardinality subfamily of the cover whose γ-closures union to X;
/// ties broken by canonical order (lexicographically least index set of the
/// winning size). Throws CoverError if a member is not γ-open or the family
/// does not cover X.
inline SetFamily minimal_closure_subcover(const Space& s, const SetFamily& cover) {
    for (SubSet v : cover) {
        if (!is_gamma_open_set(s, v)) {
            throw CoverError("cover member " + s.set_to_string(v) + " is not gamma-open", v);
        }
    }
    if (!cover.union_all().is_full()) {
        const SubSet gap = ~cover.union_all();
        const int pt = gap.empty() ? 0 : *gap.begin();  // gap empty only on n = 0
        throw CoverError("family does not cover the carrier; point " +
                             format_set(SubSet::singleton(s.carrier(), pt), s.topology.point_names()) +
                             " uncovered",
                         pt);
    }

    const std::size_t k = cover.size();
    std::vector<SubSet> closures;
    closures.reserve(k);
    for (SubSet v : cover) closures.push_back(gamma_closure(s, v));

    const SubSet full = SubSet::full_set(s.carrier());
    // staged combination search: first hit at the smallest size, scanning
    // index combinations in lexicographic order, is the canonical winner
    std::vector<std::size_t> idx;
    for (std::size_t size = full.empty() ? 0 : 1; size <= k; ++size) {
        idx.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            SubSet u = SubSet::empty_set(s.carrier());
            for (std::size_t i : idx) u = u | closures[i];
            if (u == full) {
                std::vector<SubSet> chosen;
                for (std::size_t i : idx) chosen.push_back(cover[i]);
                return SetFamily(s.carrier(), std::move(chosen));
            }
            // next combination
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == k - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return SetFamily(s.carrier());  // n = 0: the empty subfamily already covers
}

namespace detail {
// Subfamily scans are exhaustive only while the base family is word-sized;
// larger bases fall back to the whole-family certificate alone.
inline constexpr std::size_t max_scan_family = 16;
}  // namespace detail

/// γ₀-compactness: every cover of X by γ-open sets has a finite subfamily
/// whose γ-closures cover X. On a finite carrier the whole (finite) cover is
/// such a subfamily, so the verdict is always true; the checker still
/// exercises the definition by scanning every irredundant γ-open cover and
/// certifying each with its minimal closure subcover.
inline Verdict is_gamma0_compact(const Space& s) {
    const SetFamily tg = gamma_open_family(s);
    const SubSet full = SubSet::full_set(s.carrier());

    std::vector<VerdictEntry> certs;
    std::size_t covers_scanned = 0;
    if (tg.size() <= detail::max_scan_family) {
        std::vector<SubSet> closures;
        for (SubSet v : tg) closures.push_back(gamma_closure(s, v));
        const std::size_t k = tg.size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
            SubSet u = SubSet::empty_set(s.carrier());
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1) u = u | tg[i];
            }
            if (u != full) continue;
            bool irredundant = true;
            for (std::size_t i = 0; i < k && irredundant; ++i) {
                if (!((mask >> i) & 1)) continue;
                SubSet rest = SubSet::empty_set(s.carrier());
                for (std::size_t j = 0; j < k; ++j) {
                    if (j != i && ((mask >> j) & 1)) rest = rest | tg[j];
                }
                if (rest == full) irredundant = false;
            }
            if (!irredundant) continue;
            ++covers_scanned;
            SubSet cl_union = SubSet::empty_set(s.carrier());
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1) cl_union = cl_union | closures[i];
            }
            if (cl_union != full) {
                // unreachable on finite carriers: cl_γ(V) ⊇ V
                VerdictEntry w;
                for (std::size_t i = 0; i < k; ++i) {
                    if ((mask >> i) & 1) w.given.push_back(Binding::set("V", tg[i]));
                }
                return Verdict::fail(std::move(w));
            }
        }
    }
    // certificate: the minimum closure subcover of the full γ-open cover
    VerdictEntry cert;
    for (SubSet v : minimal_closure_subcover(s, tg)) cert.chosen.push_back(Binding::set("V", v));
    certs.push_back(std::move(cert));
    return Verdict::pass(std::move(certs),
                         "irredundant gamma-open covers scanned: " + std::to_string(covers_scanned));
}

/// Two readings of "class of γ-open and γ-closed sets": each member clopen
/// (the conjunction reading, default) or a mixed class of γ-open members and
/// γ-closed members.
enum class IntersectionReading { Clopen, Mixed };

/// The finite-intersection characterization of γ₀-compactness: every class
/// of γ-open and γ-closed sets with empty intersection has a finite subclass
/// with empty intersection. On finite carriers every class is its own finite
/// subclass, so this always holds; the scan exercises it directly on every
/// qualifying subfamily (up to a word-sized base family).
inline Verdict finite_intersection_characterization(
    const Space& s, IntersectionReading reading = IntersectionReading::Clopen) {
    const SetFamily tg = gamma_open_family(s);
    SetFamily base(s.carrier());
    for (SubSet a : all_subsets(s.carrier())) {
        const bool open = tg.contains(a);
        const bool closed = tg.contains(~a);
        if (reading == IntersectionReading::Clopen ? (open && closed) : (open || closed)) {
            base.insert(a);
        }
    }
    std::size_t classes_scanned = 0;
    if (base.size() <= detail::max_scan_family) {
        const std::size_t k = base.size();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
            SubSet meet = SubSet::full_set(s.carrier());
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1) meet = meet & base[i];
            }
            if (!meet.empty()) continue;
            // each empty-intersection class is its own finite subclass, so
            // the instance is certified by the meet just computed
            ++classes_scanned;
        }
    }
    return Verdict::pass({}, "empty-intersection classes scanned: " + std::to_string(classes_scanned));
}

}  // namespace gtop
