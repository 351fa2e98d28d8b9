#pragma once

// Scalar-type-generic kernels shared by the double path and the 50-digit
// verification path (see highprec.hpp).  Everything here is a pure function
// of its arguments.

#include <cmath>
#include <limits>

#include "ellmean/approx_id.hpp"
#include "ellmean/errors.hpp"

namespace ellmean::series {

inline double expm1_t(double x) { return std::expm1(x); }
inline double log1p_t(double x) { return std::log1p(x); }

// exp(x) - 1 forfeits ~|log10 x| leading digits near zero, which the
// multiprecision verification path cannot afford; sum the Taylor series
// there instead.
template <class T>
T expm1_t(const T& x) {
  using std::exp;
  using std::fabs;
  if (fabs(x) > T(1) / 2) return exp(x) - 1;
  T term(x), sum(x);
  const T eps = std::numeric_limits<T>::epsilon();
  for (int n = 2; n < 256; ++n) {
    term *= x / n;
    sum += term;
    if (fabs(term) < fabs(sum) * eps) break;
  }
  return sum;
}

template <class T>
T log1p_t(const T& x) {
  using std::fabs;
  using std::log;
  if (fabs(x) > T(1) / 2) return log(1 + x);
  // 2 atanh(x/(x+2))
  const T z = x / (x + 2);
  const T z2 = z * z;
  T term(z), sum(z);
  const T eps = std::numeric_limits<T>::epsilon();
  for (int n = 3; n < 512; n += 2) {
    term *= z2;
    sum += term / n;
    if (fabs(term) < fabs(sum) * eps) break;
  }
  return 2 * sum;
}

/// expm1(x) - x = x^2/2 + x^3/6 + ..., with full relative accuracy.
template <class T>
T expm1_minus_x(const T& x) {
  using std::fabs;
  if (fabs(x) > T(3) / 4) return expm1_t(x) - x;
  T term = x * x / 2, sum = term;
  const T eps = std::numeric_limits<T>::epsilon();
  for (int n = 3; n < 256; ++n) {
    term *= x / n;
    sum += term;
    if (fabs(term) < fabs(sum) * eps) break;
  }
  return sum;
}

/// log|e^x - 1|, overflow-free for any x and fully accurate near zero.
template <class T>
T log_expm1_abs(const T& x) {
  using std::exp;
  using std::fabs;
  using std::log;
  if (x > 36) return x + log1p_t(T(-exp(-x)));   // e^{-x} below 2e-16
  if (x < -36) return log1p_t(T(-exp(x)));
  return log(fabs(expm1_t(x)));
}

/// F(1/2,1/2;1;r2) = (2/pi) K(r).  Terms obey t_{n+1}/t_n < r2, so the tail
/// past t_n is below t_n r2/(1-r2); truncation stops once both the current
/// term and that bound drop under tol * |sum|.
template <class T>
T hyp_k_sum(const T& r2, int max_terms, const T& tol) {
  using std::fabs;
  T sum(1), term(1);
  const T tail_factor = r2 / (1 - r2);
  for (int n = 0; n < max_terms; ++n) {
    const T h = T(n) + T(1) / 2;
    term *= h * h / ((T(n) + 1) * (T(n) + 1)) * r2;
    sum += term;
    if (fabs(term) < tol * fabs(sum) && fabs(term) * tail_factor < tol * fabs(sum))
      return sum;
  }
  throw ConvergenceError("hyp_k_sum: max_terms exceeded");
}

/// F(-1/2,1/2;1;r2) = (2/pi) E(r).
template <class T>
T hyp_e_sum(const T& r2, int max_terms, const T& tol) {
  using std::fabs;
  T sum(1), term(1);
  const T tail_factor = r2 / (1 - r2);
  for (int n = 0; n < max_terms; ++n) {
    term *= (T(n) - T(1) / 2) * (T(n) + T(1) / 2) / ((T(n) + 1) * (T(n) + 1)) * r2;
    sum += term;
    if (fabs(term) < tol * fabs(sum) && fabs(term) * tail_factor < tol * fabs(sum))
      return sum;
  }
  // the series converges even at r2 = 1, but the geometric tail bound cannot
  // certify it; callers special-case that endpoint
  throw ConvergenceError("hyp_e_sum: max_terms exceeded");
}

/// Generic-branch Stolarsky mean (p != q, pq != 0, a != b, both positive):
/// S = b * (q expm1(pd) / (p expm1(qd)))^{1/(p-q)},  d = ln(a/b).
///
/// The ratio is rewritten through the identity
///   expm1(pd) = expm1(qd) + e^{qd} expm1((p-q) d),
/// so ratio - 1 comes out as a sum of two O(p-q) terms and the exponent
/// log1p(ratio-1)/(p-q) keeps full accuracy even just outside the equal-
/// parameter branch switch.  A plain log-space form covers the overflow
/// and tiny-parameter corners.
template <class T>
T stolarsky_generic(const T& p, const T& q, const T& a, const T& b) {
  using std::exp;
  using std::fabs;
  using std::log;
  const T d = log(a) - log(b);
  const T delta = p - q;
  const T pd = p * d, qd = q * d, dd = delta * d;
  if (fabs(pd) < 500 && fabs(qd) < 500 && fabs(dd) < 500 &&
      fabs(p) > T(1) / 10000 && fabs(q) > T(1) / 10000) {
    const T e_qd = expm1_t(qd);
    // e^{qd} must come from exp directly: expm1(qd) + 1 collapses to the
    // rounding of 1 once qd is far negative
    const T u = (q * exp(qd) * expm1_t(dd) / e_qd - delta) / p;
    return b * exp(log1p_t(u) / delta);
  }
  const T ln_ratio =
      log_expm1_abs(pd) - log_expm1_abs(qd) + log(fabs(q)) - log(fabs(p));
  return b * exp(ln_ratio / delta);
}

/// Equal-parameter branch S_{p,p} (p != 0, a != b, both positive):
/// exp((a^p ln a - b^p ln b)/(a^p - b^p) - 1/p), rearranged to
/// ln b + d - (expm1(pd) - pd)/(p expm1(pd)) with d = ln(a/b), which stays
/// accurate for small pd.
template <class T>
T stolarsky_equal(const T& p, const T& a, const T& b) {
  using std::exp;
  using std::log;
  const T d = log(a) - log(b);
  const T pd = p * d;
  return b * exp(d - expm1_minus_x(pd) / (p * expm1_t(pd)));
}

/// One-sided zero branch S_{p,0} (p != 0, a != b, both positive):
///   b * (expm1(pd)/(pd))^{1/p}.
template <class T>
T stolarsky_q_zero(const T& p, const T& a, const T& b) {
  using std::exp;
  using std::log;
  const T d = log(a) - log(b);
  return b * exp(log(expm1_t(p * d) / (p * d)) / p);
}

/// Closed forms of the catalogued approximations at x = r' in [0,1].
template <class T>
T approx_closed(ApproxId id, const T& x) {
  using std::log;
  using std::pow;
  using std::sqrt;
  if (x == 1) return T(1);
  switch (id) {
    case ApproxId::A1:
      return pow((1 + pow(x, T(3) / 2)) / 2, T(2) / 3);
    case ApproxId::A2:
      return (23 * (1 + x) / 2 - 5 * (2 * x / (1 + x)) - 2 * sqrt((1 + x * x) / 2)) / 16;
    case ApproxId::A3: {
      const T s = 9 * x * x + 14 * x + 9;
      return s * s / (128 * (x + 1) * (x + 1) * (x + 1));
    }
    case ApproxId::A4:
      return (1 + x + x * x) / (2 * (1 + x)) + (1 + x) / 8;
    case ApproxId::A5: {
      if (x == 0) return T(7) / 11;
      const T lx = log(x);
      return T(7) / 11 * expm1_t(T(11) / 4 * lx) / expm1_t(T(7) / 4 * lx);
    }
    case ApproxId::A6:
      return (1 + pow(x, T(5) / 4)) / (1 + pow(x, T(1) / 4));
    case ApproxId::A7:
      return (18 * (1 + x) / 2 - 5 * sqrt(x) + 3 * sqrt((1 + x * x) / 2)) / 16;
    case ApproxId::A8: {
      if (x == 0) return T(16) / 25;
      const T lx = log(x);
      const T u = T(4) / 5 * expm1_t(T(5) / 2 * lx) / expm1_t(2 * lx);
      return u * u;
    }
  }
  throw DomainError("approx_closed: bad id");
}

}  // namespace ellmean::series
