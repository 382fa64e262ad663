// SPDX-License-Identifier: Apache-2.0
//
// Exact scalar arithmetic used everywhere else: arbitrary-precision integers
// and rationals (Boost.Multiprecision backends) plus a few small helpers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace procesi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an exactness assumption fails (non-zero remainder in a division
// that the mathematics guarantees to be exact, a non-integer character value,
// and so on).  These always indicate a bug or a broken convention, never bad
// user input.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

inline Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Exact integer quotient; throws NotDivisible on nonzero remainder.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
    if (b == 0) throw NotDivisible("exact_quotient: division by zero");
    Integer q = a / b;
    if (q * b != a) throw NotDivisible("exact_quotient: remainder nonzero");
    return q;
}

// Rational -> Integer, asserting integrality.
inline Integer rational_to_integer(const Rational& x) {
    if (boost::multiprecision::denominator(x) != 1)
        throw NotDivisible("rational_to_integer: value is not an integer");
    return boost::multiprecision::numerator(x);
}

inline bool fits_int64(const Integer& x) {
    return x >= Integer(INT64_MIN) && x <= Integer(INT64_MAX);
}

}  // namespace procesi
