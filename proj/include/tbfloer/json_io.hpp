#pragma once

#include "tbfloer/census.hpp"
#include "tbfloer/floer.hpp"
#include "tbfloer/twobridge.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace tbfloer {

// Insertion-ordered JSON keeps the documented key order stable, so the
// parse/reserialize round trip is byte-identical.
using json = nlohmann::ordered_json;

inline json to_json(const UModule& module) {
    UModule m = module.canonical();
    json summands = json::array();
    for (const auto& f : m.free_parts) {
        json s{{"type", "free"}, {"rank", f.rank}};
        if (f.grading) s["grading"] = *f.grading;
        summands.push_back(s);
    }
    for (const auto& t : m.torsion_parts) {
        json s{{"type", "torsion"}, {"length", t.length}};
        if (t.bottom) s["bottom"] = *t.bottom;
        summands.push_back(s);
    }
    for (const auto& t : m.towers) {
        json s{{"type", "tower"}};
        if (t.grading) s[t.downward ? "top" : "bottom"] = *t.grading;
        summands.push_back(s);
    }
    json out;
    out["summands"] = summands;
    out["grading_kind"] = m.grading_kind == GradingKind::relative ? "relative" : "ungraded";
    if (m.twisted) out["twisted"] = true;
    return out;
}

inline json to_json(const TwoBridgeKnot& k) { return json{{"p", k.p}, {"q", k.q}}; }

inline json invariants_record(const TwoBridgeKnot& k) {
    AlexanderData d = alexander_data(k);
    LaurentPoly delta = alexander_polynomial(d);
    long long det = delta.evaluate_at_minus_one();
    json inv;
    inv["alexander"] = delta.dense_coefficients(-d.genus, d.genus);
    inv["signature"] = d.signature;
    inv["genus"] = d.genus;
    inv["determinant"] = det < 0 ? -det : det;
    inv["amphichiral"] = is_amphichiral(k);
    DInvariants di = d_invariants(k);
    json out;
    out["knot"] = to_json(k);
    out["invariants"] = inv;
    out["d_invariants"] = json{{"d_plus1", di.d_plus1}, {"d_minus1", di.d_minus1}};
    return out;
}

inline json census_row_record(const CensusRow& r) {
    json out;
    out["knot"] = to_json(r.knot);
    out["det"] = r.det;
    out["sigma"] = r.sigma;
    out["genus"] = r.genus;
    out["alexander"] = r.alexander;
    out["d_plus1"] = r.d.d_plus1;
    out["d_minus1"] = r.d.d_minus1;
    return out;
}

}  // namespace tbfloer
