#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schroder {

// Arbitrary-precision integers and rationals.  Path counts and series
// coefficients are always exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// True if q divides v exactly.
inline bool divides(const Int& q, const Int& v) { return v % q == 0; }

}  // namespace schroder
