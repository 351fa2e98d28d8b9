#include "ellmean/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "ellmean/approx.hpp"
#include "ellmean/grid.hpp"
#include "ellmean/highprec.hpp"
#include "ellmean/stolarsky.hpp"

namespace ellmean {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
constexpr double endpoint_eps = 1e-6;
constexpr double small_r_switch = 0.1;

double hp_ratio_1mE_over_1mS(double r, double P, double Q) {
  const Real50 rr(r);
  const Real50 num = 1 - hp::hyp_e(rr * rr);
  const Real50 den = 1 - hp::s_mean_of_complement(Real50(P), Real50(Q), rr);
  return static_cast<double>(num / den);
}

}  // namespace

double ratio_F(const Modulus& m) {
  const double r = m.r;
  if (r < endpoint_eps) return 1.0;
  if (r > 1.0 - endpoint_eps) return 11.0 * (pi - 2.0) / (4.0 * pi);
  if (r < small_r_switch) return hp_ratio_1mE_over_1mS(r, 2.75, 1.75);
  const double num = 1.0 - two_over_pi * ellip_e(m);
  const double den = 1.0 - approx_value(ApproxId::A5, m);
  return num / den;
}

double ratio_G(const Modulus& m) {
  const double r = m.r;
  if (r < endpoint_eps) return 1.0;
  if (r > 1.0 - endpoint_eps) return 25.0 * (pi - 2.0) / (9.0 * pi);
  if (r < small_r_switch) return hp_ratio_1mE_over_1mS(r, 2.5, 2.0);
  const double num = 1.0 - two_over_pi * ellip_e(m);
  const double den = 1.0 - approx_value(ApproxId::A8, m);
  return num / den;
}

double ratio_R(double p, const Modulus& m) {
  if (p > 2.25) throw DomainError("ratio_R: need p <= 9/4");
  const double r = m.r;
  if (r < endpoint_eps) return 1.0;
  if (r > 1.0 - endpoint_eps && p > 0.0) return 2.0 / (pi * theta(p, 2.25));
  return two_over_pi * ellip_e(m) / s_family(p, m);
}

double ratio_G1(const Modulus& m) {
  const double r = m.r;
  // The direct 0/0 form only rises above double noise past r ~ 0.085; the
  // exact w_n series converges in a few dozen terms well beyond that, so the
  // switch sits at 0.5 rather than the nominal 0.05.
  if (r < 0.5) {
    // sum_{n>=4} w_n t^{n-4}, t = r^2; w_4 = 3/(5 2^14) at t = 0
    static const std::vector<double> w = [] {
      std::vector<double> v;
      for (unsigned n = 4; n < 68; ++n) v.push_back(to_double(coeff_w(n)));
      return v;
    }();
    const double t = r * r;
    double sum = 0.0, tp = 1.0;
    for (const double wn : w) {
      sum += wn * tp;
      tp *= t;
    }
    return sum;
  }
  const double num = approx_value(ApproxId::A8, m) - two_over_pi * ellip_e(m);
  const double r2 = r * r;
  return num / (r2 * r2 * r2 * r2);
}

// ---- exact ledger behind the A5 error chain --------------------------------

Rational coeff_a(unsigned n) {
  const Rational p = rational_pochhammer(Rational(1, 2), n + 1);
  return Rational(5 * n + 9) * p * p / Rational(factorial(n) * factorial(n + 3));
}

Rational coeff_b(unsigned n) {
  return rational_pochhammer(Rational(7, 8), n) / Rational(factorial(n));
}

Rational coeff_c(unsigned n) {
  const Rational p = rational_pochhammer(Rational(1, 2), n);
  return Rational((BigInt(n) - 1) * (BigInt(n) + 18) * (2 * BigInt(n) + 1)) * p * p /
         Rational(factorial(n) * factorial(n + 3));
}

Rational coeff_d(unsigned n) {
  Rational sum = 8 * coeff_a(n);
  for (unsigned k = 0; k <= n; ++k) sum += coeff_b(n - k) * coeff_c(k);
  return sum;
}

Rational seq_D(unsigned n) {
  if (n < 4) throw DomainError("seq_D: need n >= 4");
  return Rational(8, 7) * coeff_d(n + 1) - coeff_d(n);
}

Rational seq_g1(unsigned n) {
  if (n < 2) throw DomainError("seq_g1: need n >= 2");
  Rational sum = 0;
  for (unsigned k = 2; k <= n; ++k) {
    const Rational alpha(n - k, n - k + 1);
    const Rational beta(BigInt(k - 1) * (k + 18), BigInt(k + 1) * (k + 2) * (k + 3));
    sum += alpha * beta;
  }
  return sum;
}

Rational seq_g1_closed_form(unsigned n) {
  if (n < 2) throw DomainError("seq_g1_closed_form: need n >= 2");
  const BigInt N(n);
  const Rational lead(N * N * N + 7 * N * N - 12 * N + 24,
                      (N + 2) * (N + 3) * (N + 4));
  const Rational tail(N * (11 * N * N + 8 * N + 21),
                      (N + 1) * (N + 2) * (N + 3) * (N + 4));
  return lead * harmonic_number(n) - tail;
}

double seq_g(unsigned n) {
  if (n < 4) throw DomainError("seq_g: need n >= 4");
  const double nn = n;
  const double n78 = std::pow(nn, 7.0 / 8.0);
  const double g78 = gamma_fn(7.0 / 8.0);
  const double t1 = 4.0 / pi * nn * (2 * nn + 1) / ((nn + 1) * (nn + 2) * (nn + 3));
  const double t2 = 3.0 / (7.0 * g78) * n78 / (nn + 1);
  const double t3 = 128.0 / (7.0 * pi) * n78 / (64 * nn - 9) * to_double(seq_g1(n));
  return t1 - t2 + t3;
}

// ---- certificate polynomials -----------------------------------------------

double eval_g2(double x) {
  const double den = (x + 1) * (x * x * x + 7 * x * x - 12 * x + 24);
  const double g78 = gamma_fn(7.0 / 8.0);
  return std::log(x + 0.5) + euler_gamma
       - x * (11 * x * x + 8 * x + 21) / den
       + 7.0 / 32.0 * std::pow(x, 1.0 / 8.0) * (x + 4) * (2 * x + 1) * (64 * x - 9) / den
       - 3.0 * pi / (128.0 * g78) * (64 * x - 9) * (x + 2) * (x + 3) * (x + 4) / den;
}

namespace {

BigInt poly_eval(const BigInt& x, std::span<const long long> coeffs) {
  BigInt acc = 0;
  for (const long long c : coeffs) acc = acc * x + c;
  return acc;
}

double poly_eval(double x, std::span<const long long> coeffs) {
  double acc = 0;
  for (const long long c : coeffs) acc = acc * x + static_cast<double>(c);
  return acc;
}

constexpr long long g3_coeffs[] = {
    896, 7346, 41033, -3438, -149813, -227064, -40824, 864};
constexpr long long g4_coeffs[] = {
    512, 15474, 153661, 638728, 482131, -2496996, -3787398, -2184000, -341712};
constexpr long long g6_coeffs[] = {
    6422528,       40606208,       -29604936,      -195118044,
    -8157468886,   -54727744833,   -28074816632,   -33746602635,
    -132036870576, -76358742474,   -16962249960,   -1692953136,
    -86111424};

}  // namespace

BigInt eval_g3(const BigInt& x) { return poly_eval(x, g3_coeffs); }
BigInt eval_g4(const BigInt& x) { return poly_eval(x, g4_coeffs); }
BigInt eval_g6(const BigInt& x) { return poly_eval(x, g6_coeffs); }

namespace {

Rational poly_eval(const Rational& x, std::span<const long long> coeffs) {
  Rational acc = 0;
  for (const long long c : coeffs) acc = acc * x + c;
  return acc;
}

}  // namespace

Rational eval_g3(const Rational& x) { return poly_eval(x, g3_coeffs); }
Rational eval_g4(const Rational& x) { return poly_eval(x, g4_coeffs); }
Rational eval_g6(const Rational& x) { return poly_eval(x, g6_coeffs); }

double eval_g5(double x) {
  const double g3 = poly_eval(x, g3_coeffs);
  const double g4 = poly_eval(x, g4_coeffs);
  return std::log(g4 / (2 * x + 1)) - std::log(7.0 * g3 / std::pow(x, 7.0 / 8.0));
}

// ---- exact ledger behind the A8 error chain ---------------------------------

Rational coeff_v(unsigned n) {
  if (n < 1) throw DomainError("coeff_v: need n >= 1");
  const BigInt nf = factorial(n);
  return Rational(1, 2) * rational_pochhammer(Rational(1, 2), n - 1) *
         rational_pochhammer(Rational(1, 2), n) / Rational(nf * nf);
}

Rational coeff_u(unsigned n) {
  if (n < 1) throw DomainError("coeff_u: need n >= 1");
  const Rational inv((BigInt(1)), factorial(n + 2));
  return Rational(6, 5) * inv * rational_pochhammer(Rational(1, 2), n - 1) +
         Rational(2, 5) * inv * rational_pochhammer(Rational(3, 4), n);
}

Rational coeff_w(unsigned n) { return coeff_v(n) - coeff_u(n); }

Rational theorem2_gap(unsigned n) {
  if (n < 1) throw DomainError("theorem2_gap: need n >= 1");
  return coeff_v(n + 1) / coeff_v(n) * coeff_u(n) - coeff_u(n + 1);
}

// ---- Scan machinery ----------------------------------------------------------

const char* to_string(Direction d) {
  switch (d) {
    case Direction::increasing: return "increasing";
    case Direction::decreasing: return "decreasing";
    case Direction::non_monotone: return "non-monotone";
  }
  return "?";
}

MonotonicityReport monotonicity_scan(const std::function<double(double)>& f,
                                     double lo, double hi, int n, double tol) {
  if (!(lo < hi) || n < 16) throw DomainError("monotonicity_scan: bad grid");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  const std::vector<double> vals = grid::map(xs, f);

  double viol_up = 0.0, viol_down = 0.0;  // against increasing / decreasing
  int at_up = -1, at_down = -1;
  for (int i = 0; i + 1 < n; ++i) {
    const double step = vals[i + 1] - vals[i];
    if (-step > viol_up) { viol_up = -step; at_up = i; }
    if (step > viol_down) { viol_down = step; at_down = i; }
  }

  MonotonicityReport rep;
  rep.grid_size = n;
  if (viol_up <= tol) {
    rep.direction = Direction::increasing;
    rep.max_violation = viol_up;
    if (at_up >= 0) rep.violation_at = xs[at_up];
  } else if (viol_down <= tol) {
    rep.direction = Direction::decreasing;
    rep.max_violation = viol_down;
    if (at_down >= 0) rep.violation_at = xs[at_down];
  } else {
    rep.direction = Direction::non_monotone;
    if (viol_up <= viol_down) {
      rep.max_violation = viol_up;
      rep.violation_at = xs[at_up];
    } else {
      rep.max_violation = viol_down;
      rep.violation_at = xs[at_down];
    }
  }
  return rep;
}

BoundConstants best_constants(Theorem which) {
  if (which == Theorem::theorem1)
    return {11.0 * (pi - 2.0) / (4.0 * pi), 1.0};
  return {1.0, 25.0 * (pi - 2.0) / (9.0 * pi)};
}

double solve_p0() {
  const auto f = [](double p) { return theta(p, 2.25) - two_over_pi; };
  // coarse sign scan over (0, 9/4], then bisection
  double lo = 0.0, hi = 0.0;
  double prev_p = 0.01, prev_f = f(prev_p);
  for (int i = 2; i <= 225; ++i) {
    const double p = 0.01 * i;
    const double fp = f(p);
    if (prev_f == 0.0) return prev_p;
    if ((prev_f < 0.0) != (fp < 0.0)) { lo = prev_p; hi = p; break; }
    prev_p = p;
    prev_f = fp;
  }
  if (hi == 0.0) throw RootError("solve_p0: no sign change of theta_p - 2/pi on (0, 9/4]");
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::fabs(fm) < 1e-12 && hi - lo < 1e-13) return mid;
    if ((fm < 0.0) == (flo < 0.0)) { lo = mid; flo = fm; } else { hi = mid; }
  }
  return 0.5 * (lo + hi);
}

namespace {

// H(r) for the conjecture profile; *above_one is the exact verdict of
// H > 1, resolved at 50 digits where doubles cannot see the difference.
double conjecture_H(double r, double p0, bool* above_one) {
  if (r < small_r_switch) {
    const Real50 rr(r);
    const Real50 num = 1 - hp::hyp_e(rr * rr);
    const Real50 den = 1 - hp::s_mean_of_complement(Real50(4.5 - p0), Real50(p0), rr);
    if (above_one) *above_one = num > den;
    return static_cast<double>(num / den);
  }
  const Modulus m = Modulus::from_r(r);
  const double num = 1.0 - two_over_pi * ellip_e(m);
  const double den = 1.0 - s_family(p0, m);
  if (above_one) *above_one = num > den;
  return num / den;
}

}  // namespace

ConjectureScan conjecture_scan(int n, double tol) {
  if (n < 100) throw DomainError("conjecture_scan: need n >= 100");
  ConjectureScan out;
  out.p0 = solve_p0();

  const std::vector<double> rs = grid::interior(n);
  std::vector<char> above(n, 0);
  const double p0 = out.p0;
  const std::vector<double> hs = grid::map(rs, [p0](double r) {
    return conjecture_H(r, p0, nullptr);
  });
  for (int i = 0; i < n; ++i) {
    bool flag = false;
    // second pass only where the double profile cannot certify H > 1
    if (hs[i] > 1.0) {
      flag = true;
    } else {
      conjecture_H(rs[i], p0, &flag);
    }
    above[i] = flag ? 1 : 0;
  }

  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (hs[i] > hs[imax]) imax = i;
  out.r0_estimate = rs[imax];

  bool single = true;
  for (int i = 0; i + 1 < n; ++i) {
    const double step = hs[i + 1] - hs[i];
    if (i < imax && -step > tol) single = false;
    if (i >= imax && step > tol) single = false;
  }
  out.single_peaked = single;
  out.pointwise_inequality =
      std::all_of(above.begin(), above.end(), [](char c) { return c != 0; });

  out.profile.reserve(n);
  for (int i = 0; i < n; ++i) out.profile.emplace_back(rs[i], hs[i]);
  return out;
}

bool f7_lower_bound_check(const Modulus& m) {
  const double r = m.r;
  if (!(r > 0.0 && r < 1.0)) throw DomainError("f7_lower_bound_check: need r in (0,1)");
  // Everything scaled by 2/pi: f7 ~ (3pi/16) d_4 r^14 sits far below double
  // noise for small r, so evaluate at 50 digits there.
  if (r < 0.35) {
    const Real50 rr(r);
    const Real50 r2 = rr * rr, r4 = r2 * r2;
    const Real50 hk = hp::hyp_k(r2), he = hp::hyp_e(r2);
    const Real50 f5 = (32 - 14 * r2 - 3 * r4) * hk - (32 + 2 * r2) * he;
    const Real50 f6 = ((128 - 224 * r2 + 93 * r4) * hk - (128 - 160 * r2 + 21 * r4) * he) / 4;
    const Real50 rc = hp::r_comp(rr);
    const Real50 f7 = f5 - pow(rc, Real50(-7) / 4) * f6;
    const Real50 bound = Real50(105) / 32768 * pow(rr, 14) / (8 - 7 * r2);
    return f7 > bound;
  }
  const double r2 = r * r, r4 = r2 * r2;
  const double hk = two_over_pi * (r > 0.9 ? ellip_k_agm(m) : ellip_k(m));
  const double he = two_over_pi * ellip_e(m);
  const double f5 = (32 - 14 * r2 - 3 * r4) * hk - (32 + 2 * r2) * he;
  const double f6 = ((128 - 224 * r2 + 93 * r4) * hk - (128 - 160 * r2 + 21 * r4) * he) / 4;
  const double f7 = f5 - std::pow(m.r_comp, -1.75) * f6;
  const double bound = 105.0 / 32768.0 * std::pow(r, 14) / (8 - 7 * r2);
  return f7 > bound;
}

double h4_shifted_root() {
  const auto h4v = [](double v) {
    return (((((3703 * v + 58560) * v + 347160) * v + 928800) * v + 1014000) * v +
            144000) * v - 288000;
  };
  double lo = 0.0, hi = 1.0;
  if (!(h4v(lo) < 0.0 && h4v(hi) > 0.0)) throw RootError("h4_shifted_root: bad bracket");
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (h4v(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

int sign_E_minus_s_family(double p, const Modulus& m) {
  if (m.r == 0.0) return 0;  // every family member is exact at r = 0
  const double diff = two_over_pi * ellip_e(m) - s_family(p, m);
  if (std::fabs(diff) >= 4e-13) return diff > 0.0 ? 1 : -1;
  const Real50 rr(m.r);
  const Real50 one(1), x = hp::r_comp(rr);
  const Real50 P(4.5 - p), Q(p);
  using std::fabs;
  Real50 s;
  if (fabs(Q) < Real50("1e-9"))
    s = series::stolarsky_q_zero<Real50>(P, one, x);
  else if (fabs(P - Q) < Real50("1e-9"))
    s = series::stolarsky_equal<Real50>((P + Q) / 2, one, x);
  else
    s = series::stolarsky_generic<Real50>(P, Q, one, x);
  const Real50 d = hp::hyp_e(rr * rr) - s;
  if (d == 0) return 0;
  return d > 0 ? 1 : -1;
}

double a7_a8_crossing() {
  // A8 - A7 changes sign exactly once in (0,1): A8 < A7 below the crossing
  // and A8 > A7 above it, so the bracket is taken sign-agnostically.
  const auto diff = [](double x) {
    return series::approx_closed<double>(ApproxId::A8, x) -
           series::approx_closed<double>(ApproxId::A7, x);
  };
  double lo = 0.05, hi = 0.9;
  const double f_lo = diff(lo);
  if (!(f_lo * diff(hi) < 0.0)) throw RootError("a7_a8_crossing: bad bracket");
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (diff(mid) * f_lo > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ellmean
