#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace tbfloer {

// Exact integer type used by the linear-algebra kernel. Everything in this
// library is integer arithmetic; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// Floor division, rounding toward -infinity. Needed for the grading
// recursion exponent floor(i*q/p) when q is negative.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Ceiling division for b > 0, e.g. ceil_div(-1, 2) == 0, ceil_div(3, 2) == 2.
inline long long ceil_div(long long a, long long b) {
    return floor_div(a + b - 1, b);
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Inverse of a modulo m (m > 0, gcd(a, m) == 1), returned in [0, m).
inline long long mod_inverse(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return ((t0 % m) + m) % m;
}

}  // namespace tbfloer
