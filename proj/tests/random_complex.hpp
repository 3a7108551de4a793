#pragma once

#include "tbfloer/graded_complex.hpp"

#include <random>
#include <string>
#include <vector>

namespace testutil {

struct RandomComplex {
    tbfloer::GradedComplex complex;
    tbfloer::HomologySummary expected;
};

// Direct sum of free generators and two-step pieces x -> m*y, conjugated by
// random grading-preserving unimodular base changes. The conjugation leaves
// both d*d = 0 and the homology intact, so the expected answer is known by
// construction.
inline RandomComplex random_complex(std::mt19937& rng, std::size_t max_gens = 12) {
    using namespace tbfloer;
    std::uniform_int_distribution<int> grading_dist(-2, 2);
    std::uniform_int_distribution<int> coeff_dist(0, 4);

    std::uniform_int_distribution<std::size_t> pair_dist(1, max_gens / 2);
    const std::size_t pairs = pair_dist(rng);
    std::uniform_int_distribution<std::size_t> single_dist(0, max_gens - 2 * pairs);
    const std::size_t singles = single_dist(rng);

    std::vector<ComplexGenerator> gens;
    struct Piece { std::size_t src, dst; long long m; };
    std::vector<Piece> pieces;
    std::map<long long, std::vector<long long>> expected_torsion;
    HomologySummary expected;

    for (std::size_t t = 0; t < pairs; ++t) {
        long long g = grading_dist(rng);
        // weighted toward units so cancellation always has a pivot
        static const long long coeffs[5] = {1, 1, -1, 2, 3};
        long long m = coeffs[coeff_dist(rng)];
        std::size_t src = gens.size();
        gens.push_back({"p" + std::to_string(t) + "s", g});
        gens.push_back({"p" + std::to_string(t) + "t", g - 1});
        pieces.push_back({src, src + 1, m});
        if (m != 1 && m != -1) expected_torsion[g - 1].push_back(m < 0 ? -m : m);
    }
    for (std::size_t t = 0; t < singles; ++t) {
        long long g = grading_dist(rng);
        gens.push_back({"f" + std::to_string(t), g});
        expected[g].free_rank += 1;
    }

    // elementary divisors -> invariant factor chain, via the Smith form of
    // the diagonal matrix they span
    for (auto& [g, ms] : expected_torsion) {
        IntMatrix diag(ms.size(), ms.size());
        for (std::size_t i = 0; i < ms.size(); ++i) diag(i, i) = ms[i];
        auto snf = smith_normal_form(diag);
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (snf.d(i, i) > 1) expected[g].torsion.push_back(snf.d(i, i));
    }
    for (auto it = expected.begin(); it != expected.end();) {
        if (it->second.trivial())
            it = expected.erase(it);
        else
            ++it;
    }

    const std::size_t n = gens.size();
    IntMatrix d(n, n);
    for (const auto& pc : pieces) d(pc.dst, pc.src) = pc.m;

    // conjugate: col_i += f * col_j together with row_j -= f * row_i keeps
    // the matrix expressing d in a new basis of the same graded pieces
    std::map<long long, std::vector<std::size_t>> by_grading;
    for (std::size_t i = 0; i < n; ++i) by_grading[gens[i].grading].push_back(i);
    std::vector<long long> gradings_with_room;
    for (const auto& [g, idx] : by_grading)
        if (idx.size() >= 2) gradings_with_room.push_back(g);
    if (!gradings_with_room.empty()) {
        std::uniform_int_distribution<std::size_t> gsel(0, gradings_with_room.size() - 1);
        std::uniform_int_distribution<int> fsel(0, 3);
        static const long long fs[4] = {-2, -1, 1, 2};
        for (std::size_t step = 0; step < 3 * n; ++step) {
            const auto& idx = by_grading[gradings_with_room[gsel(rng)]];
            std::uniform_int_distribution<std::size_t> isel(0, idx.size() - 1);
            std::size_t a = isel(rng), b = isel(rng);
            if (a == b) continue;
            long long f = fs[fsel(rng)];
            d.add_col_multiple(idx[a], idx[b], f);
            d.add_row_multiple(idx[b], idx[a], -f);
        }
    }

    return RandomComplex{tbfloer::GradedComplex(std::move(gens), std::move(d)), expected};
}

// Any differential entry equal to +-1, as (source label, sink label).
inline std::vector<std::pair<std::string, std::string>> unit_pivots(
    const tbfloer::GradedComplex& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t r = 0; r < c.size(); ++r)
        for (std::size_t col = 0; col < c.size(); ++col) {
            const auto& e = c.differential()(r, col);
            if (e == 1 || e == -1)
                out.emplace_back(c.generators()[col].label, c.generators()[r].label);
        }
    return out;
}

}  // namespace testutil
