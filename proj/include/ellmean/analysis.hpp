#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ellmean/rational.hpp"
#include "ellmean/special.hpp"

namespace ellmean {

// ---- Bound-ratio functions ----------------------------------------------

/// F(r) = (1 - (2/pi)E(r)) / (1 - S_{11/4,7/4}(1,r')), strictly decreasing
/// from (0,1) onto (11(pi-2)/(4pi), 1).  Endpoint limits are returned
/// analytically; for r < 0.1 the 0/0 form is evaluated at 50 digits.
double ratio_F(const Modulus& m);

/// G(r) = (1 - (2/pi)E(r)) / (1 - S_{5/2,2}(1,r')), strictly increasing onto
/// (1, 25(pi-2)/(9pi)).
double ratio_G(const Modulus& m);

/// R_p(r) = (2/pi)E(r) / S_{9/2-p,p}(1,r') for p <= 9/4.
double ratio_R(double p, const Modulus& m);

/// G1(r) = (S_{5/2,2}(1,r') - (2/pi)E(r)) / r^8, from ((3/5)2^-14, 16/25-2/pi).
/// Series-based below r = 0.05 (the w_n expansion) to avoid 0/0 noise.
double ratio_G1(const Modulus& m);

// ---- Exact coefficient ledger behind the A5 error chain ------------------

Rational coeff_a(unsigned n);  // (5n+9) (1/2)^2_{n+1} / (n! (n+3)!)
Rational coeff_b(unsigned n);  // (7/8)_n / n!
Rational coeff_c(unsigned n);  // (n-1)(n+18)(2n+1) (1/2)^2_n / (n! (n+3)!)
Rational coeff_d(unsigned n);  // 8 a_n + sum_k b_{n-k} c_k

/// D_n = (8/7) d_{n+1} - d_n.
Rational seq_D(unsigned n);

/// g1(n) = sum_{k=2}^n (n-k)/(n-k+1) * (k-1)(k+18)/((k+1)(k+2)(k+3)),
/// computed both by the direct sum and by the closed form with the exact
/// harmonic number; the two must be identical rationals.
Rational seq_g1(unsigned n);
Rational seq_g1_closed_form(unsigned n);

/// The floating comparison sequence g(n) (contains pi and Gamma(7/8)).
/// Note: implemented exactly as printed; see the ledger on its n >= 52 defect.
double seq_g(unsigned n);

// ---- Certificate polynomials and comparison functions --------------------

double eval_g2(double x);
BigInt eval_g3(const BigInt& x);
BigInt eval_g4(const BigInt& x);
double eval_g5(double x);
BigInt eval_g6(const BigInt& x);

/// Exact-rational evaluation of the same certificate polynomials.
Rational eval_g3(const Rational& x);
Rational eval_g4(const Rational& x);
Rational eval_g6(const Rational& x);

// ---- Exact coefficient ledger behind the A8 error chain ------------------

Rational coeff_v(unsigned n);  // (1/2) (1/2)_{n-1} (1/2)_n / (n! n!)
Rational coeff_u(unsigned n);  // (6/5)(1/2)_{n-1}/(n+2)! + (2/5)(3/4)_n/(n+2)!
Rational coeff_w(unsigned n);  // v_n - u_n

/// (v_{n+1}/v_n) u_n - u_{n+1}; zero at n = 1,2 and positive for n >= 3.
Rational theorem2_gap(unsigned n);

// ---- Scan machinery -------------------------------------------------------

enum class Direction { increasing, decreasing, non_monotone };

struct MonotonicityReport {
  Direction direction;
  double max_violation = 0.0;           // worst wrong-direction step
  std::optional<double> violation_at;   // abscissa of that step
  int grid_size = 0;
};

const char* to_string(Direction d);

/// Evaluates f on an n-point uniform grid over [lo,hi] and classifies the
/// sequence.  Increasing is tried first, so a constant function reports
/// increasing with max_violation 0.
MonotonicityReport monotonicity_scan(const std::function<double(double)>& f,
                                     double lo, double hi, int n,
                                     double tol = 1e-12);

enum class Theorem { theorem1, theorem2 };

struct BoundConstants {
  double lower_best;
  double upper_best;
};

/// theorem1: (11(pi-2)/(4pi), 1), the F range.  theorem2: (1, 25(pi-2)/(9pi)),
/// the G range.
BoundConstants best_constants(Theorem which);

/// Root of theta_p = 2/pi on (0, 9/4], located by coarse sign scan plus
/// bisection to |f| < 1e-12.  Approximately 1.763135.
double solve_p0();

struct ConjectureScan {
  double p0;
  double r0_estimate;          // argmax of H on the grid
  bool single_peaked;          // rises to the peak, falls after, within tol
  bool pointwise_inequality;   // (2/pi)E < S_{9/2-p0,p0}(1,r') at every point
  std::vector<std::pair<double, double>> profile;  // (r, H(r))
};

/// Grid exploration of the closing conjecture's profile
/// H(r) = (1 - (2/pi)E) / (1 - S_{9/2-p0,p0}(1,r')).
ConjectureScan conjecture_scan(int n, double tol = 1e-12);

/// f7(r) = f5(r) - r'^{-7/4} f6(r), the series whose coefficients are d_n,
/// against its lower bound (105 pi / 2^16) r^14 / (8 - 7 r^2).  Evaluated at
/// 50 digits below r = 0.35 where f7 sits under double noise.
bool f7_lower_bound_check(const Modulus& m);

/// Unique positive root of the shifted crossing polynomial h4(v+2), by
/// bisection; certified to lie in (0.399475162, 0.399475163).
double h4_shifted_root();

/// Abscissa x0 of the single A8/A7 crossing in (0,1).
double a7_a8_crossing();

/// Exact sign of (2/pi)E(r) - S_{9/2-p,p}(1,r').  Near r = 0 the difference
/// sits far below double noise (~eps_8 r^8 with eps_8 as small as 1e-8), so
/// ties within 4e-13 are resolved at 50 digits.
int sign_E_minus_s_family(double p, const Modulus& m);

}  // namespace ellmean
