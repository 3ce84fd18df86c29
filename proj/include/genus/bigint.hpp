#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace genus {

// All counts are exact: entries grow like 4^n and overflow fixed-width
// integers around n = 16, so everything runs on arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) with the usual convention: 0 whenever k < 0, n < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long t = 1; t <= k; ++t) {
        r *= (n - k + t);
        r /= t;  // exact: r is always a binomial coefficient prefix
    }
    return r;
}

inline BigInt pow2(long e) {
    BigInt r = 1;
    return r << e;
}

inline BigInt pow_int(long base, int e) {
    BigInt r = 1;
    for (int t = 0; t < e; ++t) r *= base;
    return r;
}

// True iff q is an integer (denominator 1 after normalization).
inline bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

}  // namespace genus
