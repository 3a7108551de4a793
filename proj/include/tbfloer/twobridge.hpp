#pragma once

#include "tbfloer/integers.hpp"
#include "tbfloer/laurent.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbfloer {

// The two-bridge knot K(p,q): p odd and positive, q odd, -p < q < p,
// gcd(p, q) = 1. K(1,1) is the unknot. Instances are produced by
// normalize() and are immutable thereafter.
struct TwoBridgeKnot {
    long long p = 1;
    long long q = 1;

    bool operator==(const TwoBridgeKnot&) const = default;

    std::string name() const {
        return "K(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

// Reduce (p, q) to the canonical representative. Within (-p, p) exactly one
// of the two representatives of q mod p is odd (p is odd); that one is kept.
inline TwoBridgeKnot normalize(long long p, long long q) {
    if (p <= 0) throw std::invalid_argument("normalize: p must be positive");
    if (p % 2 == 0)
        throw std::invalid_argument("normalize: p is even; two-bridge links are not supported");
    if (p == 1) return TwoBridgeKnot{1, 1};
    long long r = ((q % p) + p) % p;  // in [0, p)
    if (r == 0) throw std::invalid_argument("normalize: q must be nonzero mod p");
    if (gcd_ll(p, r) != 1) throw std::invalid_argument("normalize: p and q must be coprime");
    if (r % 2 == 0) r -= p;
    return TwoBridgeKnot{p, r};
}

inline TwoBridgeKnot mirror(const TwoBridgeKnot& k) { return normalize(k.p, -k.q); }

// K(p, q^{-1} mod p) presents the same knot; invariants must agree with
// the original form even though the grading vector itself may differ.
inline TwoBridgeKnot inverse_form(const TwoBridgeKnot& k) {
    if (k.p == 1) return k;
    return normalize(k.p, mod_inverse(k.q, k.p));
}

inline bool is_amphichiral(const TwoBridgeKnot& k) {
    return ((k.q * k.q + 1) % k.p) == 0;
}

// The Alexander grading vector and everything read off from it.
struct AlexanderData {
    std::vector<long long> epsilon;            // values at x_1 .. x_p
    std::map<long long, long long> level_counts;  // grading value -> multiplicity
    long long signature = 0;                   // epsilon_1 - epsilon_p, always even
    long long half_signature = 0;
    long long genus = 0;                       // max epsilon value

    long long count(long long level) const {
        auto it = level_counts.find(level);
        return it == level_counts.end() ? 0 : it->second;
    }
};

// Partial sums of the difference rule eps(x_{i+1}) - eps(x_i) = (-1)^floor(iq/p),
// shifted by the unique constant making the vector antisymmetric under
// i -> p+1-i. The shift is integral exactly because the signature is even.
inline AlexanderData alexander_data(const TwoBridgeKnot& k) {
    AlexanderData d;
    const long long p = k.p, q = k.q;
    std::vector<long long> s(static_cast<std::size_t>(p));
    s[0] = 0;
    for (long long i = 1; i < p; ++i) {
        long long step = (floor_div(i * q, p) % 2 == 0) ? 1 : -1;
        s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - 1)] + step;
    }
    const long long total = s.front() + s.back();
    if (total % 2 != 0)
        throw std::logic_error("alexander_data: odd antisymmetry defect, signature would be odd");
    const long long shift = total / 2;
    d.epsilon.reserve(s.size());
    for (long long v : s) d.epsilon.push_back(v - shift);
    for (long long v : d.epsilon) ++d.level_counts[v];
    d.signature = d.epsilon.front() - d.epsilon.back();
    d.half_signature = d.signature / 2;
    d.genus = 0;
    for (long long v : d.epsilon)
        if (v > d.genus) d.genus = v;
    return d;
}

// Delta_K(t) = (-1)^{eps(x_1)} * sum_k n_k (-t)^k, i.e. a_k = (-1)^{eps(x_1)+k} n_k.
// Normalized so that Delta(1) = 1; |Delta(-1)| = p.
inline LaurentPoly alexander_polynomial(const AlexanderData& d) {
    LaurentPoly poly;
    const long long base = d.epsilon.front();
    for (const auto& [level, n] : d.level_counts) {
        long long sign = ((base + level) % 2 == 0) ? 1 : -1;
        poly.set(level, sign * n);
    }
    return poly;
}

inline LaurentPoly alexander_polynomial(const TwoBridgeKnot& k) {
    return alexander_polynomial(alexander_data(k));
}

inline long long signature(const TwoBridgeKnot& k) { return alexander_data(k).signature; }
inline long long genus(const TwoBridgeKnot& k) { return alexander_data(k).genus; }

inline long long determinant(const TwoBridgeKnot& k) {
    long long v = alexander_polynomial(k).evaluate_at_minus_one();
    return v < 0 ? -v : v;
}

// Per-Spin^c integers u_k, h_k, b_k. Negative labels are folded to |k|
// (conjugation symmetry of the structures s_k and s_{-k}).
struct SpincInvariants {
    long long spinc = 0;  // the label actually evaluated, i.e. |input|
    long long u = 0;      // sum_{i>k} (i-k) a_i
    long long h = 0;      // max(ceil((|sigma/2| - k)/2), 0)
    long long b = 0;      // u_k - h_k; |b_k| is the rank of the u-trivial free summand
};

inline SpincInvariants spinc_invariants(const AlexanderData& d, const LaurentPoly& delta,
                                        long long spinc) {
    SpincInvariants s;
    s.spinc = spinc < 0 ? -spinc : spinc;
    for (long long i = s.spinc + 1; i <= d.genus; ++i)
        s.u += (i - s.spinc) * delta.coeff(i);
    long long abs_half = d.half_signature < 0 ? -d.half_signature : d.half_signature;
    long long h = ceil_div(abs_half - s.spinc, 2);
    s.h = h > 0 ? h : 0;
    s.b = s.u - s.h;
    return s;
}

inline SpincInvariants spinc_invariants(const TwoBridgeKnot& k, long long spinc) {
    AlexanderData d = alexander_data(k);
    return spinc_invariants(d, alexander_polynomial(d), spinc);
}

// The (2,|sigma|+1) torus knot with the same signature; the unknot when
// sigma = 0. Torus knots appear as K(p, +-1) in this parametrization.
inline TwoBridgeKnot torus_companion(const TwoBridgeKnot& k) {
    long long sigma = signature(k);
    if (sigma == 0) return TwoBridgeKnot{1, 1};
    if (sigma < 0) return normalize(-sigma + 1, 1);
    return normalize(sigma + 1, -1);
}

}  // namespace tbfloer
