#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace green {

// All integer arithmetic in this library is arbitrary precision: group
// orders reach degree n^2 in q and their values overflow any fixed width
// already for moderate n.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_pow(const BigInt& b, int e) {
    BigInt r = 1, x = b;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r *= x;
        if (k > 1) x *= x;
    }
    return r;
}

} // namespace green
