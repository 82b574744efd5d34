#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace charclass {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced to
// lowest terms with a positive denominator, which is the canonical form every
// serialization in this project relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string rat_str(const Rational& r) { return r.str(); }

inline Rational rational_pow(const Rational& base, int exp) {
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace charclass
