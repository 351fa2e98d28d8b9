#include "ellmean/rational.hpp"

namespace ellmean {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational rational_pochhammer(const Rational& a, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

Rational harmonic_number(unsigned n) {
  Rational h = 0;
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ellmean
