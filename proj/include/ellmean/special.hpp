#pragma once

#include <cmath>

#include "ellmean/errors.hpp"

namespace ellmean {

/// Euler's constant, 30 digits.
inline constexpr double euler_gamma = 0.577215664901532860606512090682;

inline constexpr double two_over_pi = 0.636619772367581343075535053490;

/// Modulus r in [0,1] together with its complement r' = sqrt(1 - r^2).
/// The complement is formed as sqrt((1-r)(1+r)) so r near 1 keeps full
/// relative accuracy in r'.
struct Modulus {
  double r;
  double r_comp;

  static Modulus from_r(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("Modulus: r must lie in [0,1]");
    return Modulus{r, std::sqrt((1.0 - r) * (1.0 + r))};
  }
  static Modulus from_complement(double rc) {
    if (!(rc >= 0.0 && rc <= 1.0)) throw DomainError("Modulus: r' must lie in [0,1]");
    return Modulus{std::sqrt((1.0 - rc) * (1.0 + rc)), rc};
  }
};

struct EvalOptions {
  double tol = 1e-14;
  int max_terms = 10000;
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1);  (a)_0 = 1.
double pochhammer(double a, unsigned n);

/// K(r) = (pi/2) F(1/2,1/2;1;r^2) by series.  Throws DomainError at r = 1,
/// ConvergenceError if the truncation rule is not met within max_terms.
double ellip_k(const Modulus& m, const EvalOptions& opts = {});

/// E(r) = (pi/2) F(-1/2,1/2;1;r^2).  Exactly 1 at r = 1.  For r > 0.95 the
/// slowly converging series is routed through the AGM path.
double ellip_e(const Modulus& m, const EvalOptions& opts = {});

/// Independent oracles via the arithmetic-geometric mean iteration.
double ellip_k_agm(const Modulus& m);
double ellip_e_agm(const Modulus& m);

/// Gamma function for x > 0 (Lanczos).  Overflows past x ~ 171.6.
double gamma_fn(double x);

/// log Gamma for x > 0; usable where gamma_fn would overflow.
double lgamma_fn(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// Arc length of the ellipse with semiaxes 1 and r:  l(1,r) = 4 E(r').
double arc_length_ellipse(double r);

}  // namespace ellmean
