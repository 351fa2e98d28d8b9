#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ellmean {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with positive denominator
/// (cpp_rational keeps that canonical form on every operation).
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// Rising factorial (a)_n over the exact rationals.
Rational rational_pochhammer(const Rational& a, unsigned n);

/// H_n = 1 + 1/2 + ... + 1/n  (= psi(n+1) + gamma).
Rational harmonic_number(unsigned n);

double to_double(const Rational& q);

}  // namespace ellmean
