#pragma once

#include "tbfloer/floer.hpp"
#include "tbfloer/twobridge.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbfloer {

// Every normalized K(p,q) with 3 <= p <= max_p: odd p, all odd q coprime to
// p in (-p, p). Deterministic order, p ascending then q ascending.
inline std::vector<TwoBridgeKnot> all_census_knots(long long max_p) {
    std::vector<TwoBridgeKnot> out;
    for (long long p = 3; p <= max_p; p += 2)
        for (long long q = -p + 2; q < p; q += 2)
            if (gcd_ll(p, q) == 1) out.push_back(TwoBridgeKnot{p, q});
    return out;
}

struct CensusRow {
    TwoBridgeKnot knot;
    long long det = 0;
    long long sigma = 0;
    long long genus = 0;
    std::vector<long long> alexander;  // a_{-g} .. a_g
    DInvariants d;
};

// One row per knot with q > 0, listing each unordered {q, q^-1} class once
// through its smaller positive representative.
inline std::vector<CensusRow> census_rows(long long max_p) {
    if (max_p < 3) throw std::invalid_argument("census: no two-bridge knots with p < 3");
    std::vector<CensusRow> rows;
    for (long long p = 3; p <= max_p; p += 2)
        for (long long q = 1; q < p; q += 2) {
            if (gcd_ll(p, q) != 1) continue;
            TwoBridgeKnot k{p, q};
            long long alt = inverse_form(k).q;
            if (alt > 0 && alt < q) continue;  // already listed via the inverse form
            CensusRow row;
            row.knot = k;
            AlexanderData d = alexander_data(k);
            LaurentPoly delta = alexander_polynomial(d);
            row.sigma = d.signature;
            row.genus = d.genus;
            long long det = delta.evaluate_at_minus_one();
            row.det = det < 0 ? -det : det;
            row.alexander = delta.dense_coefficients(-d.genus, d.genus);
            row.d = d_invariants(k);
            rows.push_back(row);
        }
    return rows;
}

inline std::string census_csv_header() {
    return "p,q,det,sigma,genus,alexander,d_plus1,d_minus1";
}

inline std::string census_csv_row(const CensusRow& r) {
    std::ostringstream os;
    os << r.knot.p << ',' << r.knot.q << ',' << r.det << ',' << r.sigma << ',' << r.genus
       << ",\"";
    for (std::size_t i = 0; i < r.alexander.size(); ++i) {
        if (i) os << ';';
        os << r.alexander[i];
    }
    os << "\"," << r.d.d_plus1 << ',' << r.d.d_minus1;
    return os.str();
}

}  // namespace tbfloer
