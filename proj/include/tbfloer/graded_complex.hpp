#pragma once

#include "tbfloer/smith.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tbfloer {

struct ComplexGenerator {
    std::string label;
    long long grading = 0;
};

// Finitely generated free graded chain complex over the integers. The
// differential matrix is indexed (target, source); construction enforces
// that every entry drops the grading by exactly one and that d*d == 0.
class GradedComplex {
public:
    GradedComplex() : diff_(0, 0) {}

    GradedComplex(std::vector<ComplexGenerator> gens, IntMatrix diff)
        : gens_(std::move(gens)), diff_(std::move(diff)) {
        const std::size_t n = gens_.size();
        if (diff_.rows() != n || diff_.cols() != n)
            throw std::invalid_argument("GradedComplex: differential must be square over the generators");
        std::set<std::string> seen;
        for (const auto& g : gens_)
            if (!seen.insert(g.label).second)
                throw std::invalid_argument("GradedComplex: duplicate generator label '" + g.label + "'");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (diff_(r, c) != 0 && gens_[r].grading != gens_[c].grading - 1)
                    throw std::invalid_argument("GradedComplex: differential entry does not drop grading by 1");
        if (!(diff_ * diff_).is_zero())
            throw std::invalid_argument("GradedComplex: d*d != 0");
    }

    const std::vector<ComplexGenerator>& generators() const { return gens_; }
    const IntMatrix& differential() const { return diff_; }
    std::size_t size() const { return gens_.size(); }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].label == label) return i;
        throw std::invalid_argument("GradedComplex: no generator labelled '" + label + "'");
    }

private:
    std::vector<ComplexGenerator> gens_;
    IntMatrix diff_;
};

struct HomologyPiece {
    long long free_rank = 0;
    std::vector<Int> torsion;  // coefficients > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyPiece&) const = default;
};

// grading -> homology at that grading; trivial gradings are omitted
using HomologySummary = std::map<long long, HomologyPiece>;

namespace detail {

inline std::map<long long, std::vector<std::size_t>> bucket_by_grading(const GradedComplex& c) {
    std::map<long long, std::vector<std::size_t>> by_gr;
    for (std::size_t i = 0; i < c.size(); ++i)
        by_gr[c.generators()[i].grading].push_back(i);
    return by_gr;
}

// Differential block from grading g into grading g-1.
inline IntMatrix grading_block(const GradedComplex& c,
                               const std::map<long long, std::vector<std::size_t>>& by_gr,
                               long long g) {
    auto src = by_gr.find(g);
    auto dst = by_gr.find(g - 1);
    const std::size_t nc = src == by_gr.end() ? 0 : src->second.size();
    const std::size_t nr = dst == by_gr.end() ? 0 : dst->second.size();
    IntMatrix block(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t cidx = 0; cidx < nc; ++cidx)
            block(r, cidx) = c.differential()(dst->second[r], src->second[cidx]);
    return block;
}

}  // namespace detail

// Per-grading homology, free rank plus torsion coefficients, computed with
// the Smith normal form of the grading blocks of the differential.
inline HomologySummary homology(const GradedComplex& c) {
    auto by_gr = detail::bucket_by_grading(c);
    HomologySummary out;
    for (const auto& [g, idx] : by_gr) {
        auto below = smith_normal_form(detail::grading_block(c, by_gr, g));       // d at g
        auto above = smith_normal_form(detail::grading_block(c, by_gr, g + 1));   // d at g+1
        HomologyPiece piece;
        piece.free_rank = static_cast<long long>(idx.size() - below.rank() - above.rank());
        const std::size_t n = std::min(above.d.rows(), above.d.cols());
        for (std::size_t t = 0; t < n; ++t) {
            const Int& e = above.d(t, t);
            if (e > 1) piece.torsion.push_back(e);
        }
        if (!piece.trivial()) out[g] = piece;
    }
    return out;
}

// Cancellation of a unit differential d(source, sink) = +-1: the two
// generators are removed and every other source x picks up the correction
// -d(x, sink) * pivot * d(source). Homology is unchanged.
inline GradedComplex cancel_generator(const GradedComplex& c,
                                      const std::string& source,
                                      const std::string& sink) {
    const std::size_t xs = c.index_of(source);
    const std::size_t ys = c.index_of(sink);
    IntMatrix d = c.differential();
    const Int pivot = d(ys, xs);
    if (pivot != 1 && pivot != -1)
        throw std::invalid_argument("cancel_generator: differential coefficient is not a unit");

    const std::size_t n = c.size();
    for (std::size_t col = 0; col < n; ++col) {
        if (col == xs) continue;
        const Int coeff = d(ys, col);
        if (coeff != 0) d.add_col_multiple(col, xs, -coeff * pivot);
    }

    std::vector<ComplexGenerator> gens;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != xs && i != ys) {
            keep.push_back(i);
            gens.push_back(c.generators()[i]);
        }
    IntMatrix nd(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t cidx = 0; cidx < keep.size(); ++cidx)
            nd(r, cidx) = d(keep[r], keep[cidx]);
    return GradedComplex(std::move(gens), std::move(nd));
}

// Sum over generators of (-1)^grading.
inline long long euler_characteristic(const GradedComplex& c) {
    long long chi = 0;
    for (const auto& g : c.generators())
        chi += (g.grading % 2 == 0) ? 1 : -1;
    return chi;
}

inline long long euler_characteristic(const HomologySummary& h) {
    long long chi = 0;
    for (const auto& [g, piece] : h)
        chi += (g % 2 == 0) ? piece.free_rank : -piece.free_rank;
    return chi;
}

}  // namespace tbfloer
