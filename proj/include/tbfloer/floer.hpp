#pragma once

#include "tbfloer/twobridge.hpp"
#include "tbfloer/umodule.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tbfloer {

namespace detail {

struct LargeSurgeryData {
    long long spinc = 0;       // folded label |k|
    long long sigma = 0;
    long long sigma_half = 0;
    long long genus = 0;
    SpincInvariants si;

    long long abs_b() const { return si.b < 0 ? -si.b : si.b; }

    // bottom grading of the torsion summand: k-2h when k = sigma' mod 2,
    // k+1-2h otherwise
    long long torsion_bottom() const {
        long long k = spinc;
        return ((k - sigma_half) % 2 == 0) ? k - 2 * si.h : k + 1 - 2 * si.h;
    }
};

inline LargeSurgeryData large_surgery_data(const TwoBridgeKnot& k, long long spinc) {
    AlexanderData d = alexander_data(k);
    LargeSurgeryData out;
    out.spinc = spinc < 0 ? -spinc : spinc;
    out.sigma = d.signature;
    out.sigma_half = d.half_signature;
    out.genus = d.genus;
    out.si = spinc_invariants(d, alexander_polynomial(d), out.spinc);
    return out;
}

}  // namespace detail

// The two case shapes of the large-surgery structure theorem. At sigma = 0
// they produce identical modules (h_k vanishes for k >= 0).
enum class LargeSurgeryBranch { nonnegative_sigma, nonpositive_sigma };

inline UModule hf_plus_large_surgery_branch(const TwoBridgeKnot& k, long long spinc,
                                            LargeSurgeryBranch branch) {
    auto d = detail::large_surgery_data(k, spinc);
    UModule m;
    m.add_free(d.abs_b(), d.spinc - 1);
    if (branch == LargeSurgeryBranch::nonpositive_sigma) {
        m.add_torsion(d.si.h, d.torsion_bottom());
        m.add_tower(d.sigma_half);
    } else {
        m.add_tower(d.sigma_half - 2 * d.si.h);
    }
    return m;
}

// HF^+ of a large positive surgery in the structure s_k. Output gradings are
// relative. Conjugation symmetry folds negative labels.
inline UModule hf_plus_large_surgery(const TwoBridgeKnot& k, long long spinc) {
    long long sigma = signature(k);
    return hf_plus_large_surgery_branch(
        k, spinc,
        sigma >= 0 ? LargeSurgeryBranch::nonnegative_sigma
                   : LargeSurgeryBranch::nonpositive_sigma);
}

// HF-hat of the large surgery, placed by the u-action long exact sequence:
// the kernel of u at grading j and the cokernel of u landing at grading j-1
// both feed the hat group at grading j. Hence the tower contributes one
// class at its bottom, a torsion summand contributes classes at its bottom
// and one above its top, and a u-trivial free summand doubles into gradings
// k-1 and k.
inline HatModule hf_hat_large_surgery(const TwoBridgeKnot& k, long long spinc) {
    auto d = detail::large_surgery_data(k, spinc);
    HatModule hat;
    if (d.sigma >= 0) {
        hat.add(d.sigma_half - 2 * d.si.h, 1);
    } else {
        hat.add(d.sigma_half, 1);
        if (d.si.h > 0) {
            hat.add(d.torsion_bottom(), 1);
            hat.add(d.torsion_bottom() + 2 * d.si.h - 1, 1);
        }
    }
    hat.add(d.spinc - 1, d.abs_b());
    hat.add(d.spinc, d.abs_b());
    return hat;
}

// HF^- of the large surgery: same torsion/free summands one grading lower,
// and a downward tower whose top sits two below the HF^+ tower bottom.
inline UModule hf_minus_large_surgery(const TwoBridgeKnot& k, long long spinc) {
    auto d = detail::large_surgery_data(k, spinc);
    UModule m;
    m.add_free(d.abs_b(), d.spinc - 2);
    long long plus_tower_bottom;
    if (d.sigma <= 0) {
        m.add_torsion(d.si.h, d.torsion_bottom() - 1);
        plus_tower_bottom = d.sigma_half;
    } else {
        plus_tower_bottom = d.sigma_half - 2 * d.si.h;
    }
    m.add_tower(plus_tower_bottom - 2, /*downward=*/true);
    return m;
}

// HF^+ of the zero surgery. For k != 0 the tower disappears and only the
// finite part survives; the module vanishes for |k| >= genus. For k = 0 the
// answer needs twisted coefficients: (Q_0 + V_0) tensored with Z[T,T^-1]
// plus one untwisted tower.
inline UModule hf_plus_zero_surgery(const TwoBridgeKnot& k, long long spinc) {
    auto d = detail::large_surgery_data(k, spinc);
    UModule m;
    if (d.spinc == 0) {
        m.twisted = true;
        m.add_free(d.abs_b(), -1);
        m.add_torsion(d.si.h, d.torsion_bottom());
        m.add_tower(d.sigma_half);
        return m;
    }
    m.add_free(d.abs_b(), d.spinc - 1);
    m.add_torsion(d.si.h, d.torsion_bottom());
    return m;
}

namespace detail {

// Representative of s mod n with the smallest absolute value; the tie at
// n/2 goes to the positive side.
inline long long smallest_representative(long long s, long long n) {
    long long r = ((s % n) + n) % n;
    return (r <= n - r) ? r : r - n;
}

inline UModule surgery_sum(const TwoBridgeKnot& k, long long n, long long spinc,
                           bool negative_surgery) {
    if (n <= 0) throw std::invalid_argument("surgery coefficient must be a positive integer");
    AlexanderData d = alexander_data(k);
    LaurentPoly delta = alexander_polynomial(d);
    const long long s = ((spinc % n) + n) % n;
    const long long i0 = smallest_representative(s, n);
    const long long sigma = d.signature;

    UModule m;
    m.grading_kind = GradingKind::ungraded;
    m.add_tower(std::nullopt);
    long long total_free = 0;

    long long i = s;
    while (i > -d.genus) i -= n;
    for (i += n; i < d.genus; i += n) {
        SpincInvariants si = spinc_invariants(d, delta, i);
        total_free += si.b < 0 ? -si.b : si.b;
        // in positive surgeries the torsion summand of the smallest
        // representative is absorbed when sigma >= 0; in negative surgeries
        // the roles of the two signs swap
        bool include_torsion = negative_surgery ? (sigma >= 0 || i != i0)
                                                : (sigma <= 0 || i != i0);
        if (include_torsion) m.add_torsion(si.h, std::nullopt);
    }
    m.add_free(total_free, std::nullopt);
    return m;
}

}  // namespace detail

// HF^+ of the n surgery, n >= 1, as an ungraded module: one tower plus the
// Q_i and (depending on the sign of the signature) V_i over all i = k mod n.
inline UModule hf_plus_n_surgery(const TwoBridgeKnot& k, long long n, long long spinc) {
    return detail::surgery_sum(k, n, spinc, /*negative_surgery=*/false);
}

// HF^+ of the -n surgery, n >= 1; coincides with the positive surgery on the
// mirror knot.
inline UModule hf_plus_negative_surgery(const TwoBridgeKnot& k, long long n, long long spinc) {
    return detail::surgery_sum(k, n, spinc, /*negative_surgery=*/true);
}

// Correction terms of the +-1 surgeries.
struct DInvariants {
    long long d_plus1 = 0;   // even, <= 0
    long long d_minus1 = 0;  // even, >= 0

    bool operator==(const DInvariants&) const = default;
};

inline DInvariants d_invariants(const TwoBridgeKnot& k) {
    long long sigma = signature(k);
    long long half = sigma / 2;
    DInvariants d;
    long long plus = -2 * ceil_div(sigma, 4);
    d.d_plus1 = plus < 0 ? plus : 0;
    d.d_minus1 = (sigma >= 0) ? 0 : 2 * ceil_div(-half, 2);
    return d;
}

// Recompute the hat-flavor ranks from a graded HF^+ module through the
// kernel/cokernel bookkeeping of the u-action. Used as the independent
// cross-check of hf_hat_large_surgery.
inline HatModule hat_from_plus(const UModule& plus) {
    if (plus.grading_kind != GradingKind::relative || plus.twisted)
        throw std::invalid_argument("hat_from_plus: needs a graded untwisted module");

    auto rank_at = [&](long long g) {
        long long r = 0;
        for (const auto& f : plus.free_parts)
            if (f.grading.value() == g) r += f.rank;
        for (const auto& t : plus.torsion_parts) {
            long long b = t.bottom.value();
            if (g >= b && g <= b + 2 * (t.length - 1) && (g - b) % 2 == 0) ++r;
        }
        for (const auto& t : plus.towers) {
            long long b = t.grading.value();
            bool in = t.downward ? (g <= b && (b - g) % 2 == 0)
                                 : (g >= b && (g - b) % 2 == 0);
            if (in) ++r;
        }
        return r;
    };
    // rank of u mapping grading g to grading g-2
    auto u_rank = [&](long long g) {
        long long r = 0;
        for (const auto& t : plus.torsion_parts) {
            long long b = t.bottom.value();
            if (g - 2 >= b && g <= b + 2 * (t.length - 1) && (g - b) % 2 == 0) ++r;
        }
        for (const auto& t : plus.towers) {
            long long b = t.grading.value();
            if (t.downward) {
                if (g <= b && (b - g) % 2 == 0) ++r;  // injective on a downward tower
            } else {
                if (g - 2 >= b && (g - b) % 2 == 0) ++r;
            }
        }
        return r;
    };

    long long lo = 0, hi = 0;
    bool any = false;
    auto widen = [&](long long g) {
        if (!any) { lo = hi = g; any = true; return; }
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    };
    for (const auto& f : plus.free_parts) widen(f.grading.value());
    for (const auto& t : plus.torsion_parts) {
        widen(t.bottom.value());
        widen(t.bottom.value() + 2 * (t.length - 1));
    }
    for (const auto& t : plus.towers) widen(t.grading.value());

    HatModule hat;
    if (!any) return hat;
    for (long long j = lo - 3; j <= hi + 3; ++j) {
        long long kernel = rank_at(j) - u_rank(j);
        long long cokernel = rank_at(j - 1) - u_rank(j + 1);
        hat.add(j, kernel + cokernel);
    }
    return hat;
}

// Outcome of comparing the zero surgery of a knot against the zero surgery
// of its torus companion: the torsion parts must agree and the free parts
// may differ only in rank, concentrated at grading k-1.
struct TorusDecomposition {
    bool ok = false;
    long long q_rank = 0;
    long long q_grading = 0;
    std::string failure;
};

inline TorusDecomposition torus_decomposition(const TwoBridgeKnot& k, long long spinc) {
    if (spinc == 0)
        throw std::invalid_argument("torus_decomposition: the k = 0 structure is twisted and unsupported");
    const long long s = spinc < 0 ? -spinc : spinc;
    UModule a = hf_plus_zero_surgery(k, s).canonical();
    UModule b = hf_plus_zero_surgery(torus_companion(k), s).canonical();

    TorusDecomposition out;
    out.q_grading = s - 1;
    if (a.torsion_parts != b.torsion_parts) {
        out.failure = "torsion summands differ";
        return out;
    }
    if (!a.towers.empty() || !b.towers.empty()) {
        out.failure = "unexpected tower summand";
        return out;
    }
    long long ra = 0, rb = 0;
    for (const auto& f : a.free_parts) {
        if (f.grading.value() != s - 1) { out.failure = "free summand away from grading k-1"; return out; }
        ra += f.rank;
    }
    for (const auto& f : b.free_parts) {
        if (f.grading.value() != s - 1) { out.failure = "free summand away from grading k-1"; return out; }
        rb += f.rank;
    }
    if (ra < rb) {
        out.failure = "companion free rank exceeds the knot's";
        return out;
    }
    out.ok = true;
    out.q_rank = ra - rb;
    return out;
}

}  // namespace tbfloer
