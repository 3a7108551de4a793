#pragma once

#include "tbfloer/graded_complex.hpp"
#include "tbfloer/twobridge.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tbfloer {

enum class ArrowKind { interior, exterior };

// A differential slot between the consecutive generators x_i, x_{i+1}.
// Every slot is recorded; only the active ones enter the differential.
struct ModelArrow {
    std::size_t source = 0;  // generator indices
    std::size_t target = 0;
    ArrowKind kind = ArrowKind::interior;
    bool active = false;
};

struct ModelGenerator {
    std::string label;
    long long stable_level = 0;  // Alexander grading of the underlying x_i
    long long tower_index = 0;   // 0 in stable/reflected complexes, j < 0 in subcomplexes
    long long grading = 0;       // complex grading
};

// Combinatorial model of the surgery chain complex: the p generators, their
// gradings, and the annular differentials. Carries exactly the arrows the
// construction provides; except in the stable range its homology is not
// claimed to be the full Floer homology.
struct ModelComplex {
    TwoBridgeKnot knot;
    std::optional<long long> reflect_level;
    std::vector<ModelGenerator> generators;
    std::vector<ModelArrow> arrows;

    GradedComplex graded() const {
        std::vector<ComplexGenerator> gens;
        gens.reserve(generators.size());
        for (const auto& g : generators) gens.push_back({g.label, g.grading});
        IntMatrix d(generators.size(), generators.size());
        for (const auto& a : arrows)
            if (a.active) d(a.target, a.source) = 1;
        return GradedComplex(std::move(gens), std::move(d));
    }

    std::vector<long long> grading_vector() const {
        std::vector<long long> v;
        v.reserve(generators.size());
        for (const auto& g : generators) v.push_back(g.grading);
        return v;
    }
};

namespace detail {

// A pair is reflected at level k when both endpoints sit at or above k.
inline bool pair_reflected(long long eps_a, long long eps_b, long long level) {
    return std::min(eps_a, eps_b) >= level;
}

inline ModelComplex build_model(const TwoBridgeKnot& k,
                                std::optional<long long> level) {
    AlexanderData data = alexander_data(k);
    ModelComplex m;
    m.knot = k;
    m.reflect_level = level;
    const std::size_t p = data.epsilon.size();
    m.generators.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
        long long eps = data.epsilon[i];
        long long gr = eps;
        if (level && eps > *level) gr = 2 * *level - eps;
        m.generators.push_back({"x" + std::to_string(i + 1), eps, 0, gr});
    }
    for (std::size_t i = 0; i + 1 < p; ++i) {
        // slots alternate: (x_1,x_2) exterior, (x_2,x_3) interior, ...
        ModelArrow a;
        a.kind = (i % 2 == 1) ? ArrowKind::interior : ArrowKind::exterior;
        const long long ea = data.epsilon[i], eb = data.epsilon[i + 1];
        const bool reflected = level && pair_reflected(ea, eb, *level);
        // interior arrows run in the stable regime and point from the larger
        // Alexander grading to the smaller; when a pair is reflected the
        // exterior arrow switches on instead and points the other way
        if (a.kind == ArrowKind::interior) {
            a.active = !reflected;
            if (ea > eb) { a.source = i; a.target = i + 1; }
            else         { a.source = i + 1; a.target = i; }
        } else {
            a.active = reflected;
            if (ea > eb) { a.source = i + 1; a.target = i; }
            else         { a.source = i; a.target = i + 1; }
        }
        m.arrows.push_back(a);
    }
    return m;
}

}  // namespace detail

// The stable complex: p generators at their Alexander gradings, interior
// differentials on. Trivial single-generator complex for the unknot.
inline ModelComplex stable_complex(const TwoBridgeKnot& k) {
    return detail::build_model(k, std::nullopt);
}

// Reflect a stable complex at a level: generators strictly above the level
// flip to 2*level - eps, reflected pairs trade interior for exterior
// differentials. For level >= genus this is the stable complex again.
inline ModelComplex reflect(const ModelComplex& stable, long long level) {
    bool ok = !stable.reflect_level &&
              stable.generators.size() == static_cast<std::size_t>(stable.knot.p);
    for (const auto& g : stable.generators)
        ok = ok && g.tower_index == 0;
    if (!ok) throw std::invalid_argument("reflect: input must be a stable complex");
    return detail::build_model(stable.knot, level);
}

// The finite subcomplex supporting the interesting part of the surgery
// homology in the structure s_k: generators [x_i, j] with 0 > j >= k - eps_i
// at grading eps_i + 2j. No differentials are populated; the complex is used
// for generator counts and Euler characteristics.
inline ModelComplex surgery_subcomplex(const TwoBridgeKnot& k, long long spinc) {
    AlexanderData data = alexander_data(k);
    ModelComplex m;
    m.knot = k;
    for (std::size_t i = 0; i < data.epsilon.size(); ++i) {
        const long long eps = data.epsilon[i];
        for (long long j = -1; j >= spinc - eps; --j) {
            std::string label = "[x" + std::to_string(i + 1) + "," + std::to_string(j) + "]";
            m.generators.push_back({label, eps, j, eps + 2 * j});
        }
    }
    return m;
}

inline long long euler_characteristic(const ModelComplex& m) {
    long long chi = 0;
    for (const auto& g : m.generators)
        chi += (g.grading % 2 == 0) ? 1 : -1;
    return chi;
}

// chi of the subcomplex equals (-1)^{sigma/2} u_k.
inline bool verify_subcomplex_euler(const TwoBridgeKnot& k, long long spinc) {
    AlexanderData d = alexander_data(k);
    SpincInvariants s = spinc_invariants(d, alexander_polynomial(d), spinc);
    long long expected = (d.half_signature % 2 == 0) ? s.u : -s.u;
    return euler_characteristic(surgery_subcomplex(k, spinc)) == expected;
}

// The stable complex must have homology Z concentrated in grading
// eps(x_1) = sigma/2, with no torsion.
inline bool check_stable_homology(const TwoBridgeKnot& k) {
    AlexanderData d = alexander_data(k);
    HomologySummary h = homology(stable_complex(k).graded());
    if (h.size() != 1) return false;
    const auto& [gr, piece] = *h.begin();
    return gr == d.half_signature && piece.free_rank == 1 && piece.torsion.empty();
}

}  // namespace tbfloer
