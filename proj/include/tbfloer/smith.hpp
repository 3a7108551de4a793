#pragma once

#include "tbfloer/matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace tbfloer {

// u * input * v == d, with u, v unimodular and d diagonal, non-negative,
// and each diagonal entry dividing the next.
struct SmithNormalForm {
    IntMatrix d, u, v;

    std::size_t rank() const {
        std::size_t r = 0, n = std::min(d.rows(), d.cols());
        for (std::size_t t = 0; t < n; ++t)
            if (d(t, t) != 0) ++r;
        return r;
    }
};

// Pivot choice: smallest nonzero absolute value, ties broken by (row, col)
// order, so the produced transforms are reproducible.
inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SmithNormalForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;
    const std::size_t rows = d.rows(), cols = d.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        bool settled = false;
        while (!settled) {
            // locate the pivot
            bool found = false;
            std::size_t pr = t, pc = t;
            Int best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Int& e = d(i, j);
                    if (e == 0) continue;
                    Int a = abs(e);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                settled = true;  // remaining block is zero; later steps see it too
                break;
            }
            if (pr != t) { d.swap_rows(t, pr); u.swap_rows(t, pr); }
            if (pc != t) { d.swap_cols(t, pc); v.swap_cols(t, pc); }

            // reduce the pivot column and row; leftover remainders are
            // strictly smaller than the pivot and trigger another round
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                if (q != 0) { d.add_row_multiple(i, t, -q); u.add_row_multiple(i, t, -q); }
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                if (q != 0) { d.add_col_multiple(j, t, -q); v.add_col_multiple(j, t, -q); }
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the rest of the block for the divisibility
            // chain; folding in an offending row shrinks the eventual pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            settled = divides;
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (d(t, t) < 0) { d.negate_row(t); u.negate_row(t); }
    return s;
}

inline std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace tbfloer
