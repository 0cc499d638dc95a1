#pragma once

// Arbitrary-precision integer/rational aliases and small combinatorial
// helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polytype {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(a, b) with the convention C(a, b) = 0 for b < 0 or a < b.
inline Int binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (b > a - b) b = a - b;
    Int result = 1;
    for (long long k = 1; k <= b; ++k) {
        result *= a - b + k;
        result /= k;  // exact: product of k consecutive integers
    }
    return result;
}

/// Least integer >= a/b, for b > 0.
inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: denominator must be positive");
    return (a + b - 1) / b;
}

}  // namespace polytype
