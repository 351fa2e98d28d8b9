#pragma once

#include "ellmean/errors.hpp"

namespace ellmean {

enum class Branch { generic, p_zero, q_zero, equal_nonzero, both_zero };

/// Parameter pair (p,q) of a Stolarsky mean.  Branch classification is a pure
/// function of (p,q): the limit branches engage when |p-q| or |p|, |q| fall
/// under the thresholds below, where the generic formula would lose half its
/// digits to cancellation.
struct MeanParams {
  double p;
  double q;

  Branch branch() const;

  static constexpr double zero_eps = 1e-9;
  static double equal_threshold(double p, double q);
};

/// Argument pair for a bivariate mean.  a must be strictly positive; b = 0 is
/// permitted as the r' = 0 closure point (means are then evaluated by their
/// continuous extension), negative values are rejected.
struct PositivePair {
  double a;
  double b;

  PositivePair(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b >= 0.0))
      throw DomainError("PositivePair: need a > 0 and b >= 0");
  }
};

/// Stolarsky (extended) mean S_{p,q}(a,b) with all limit branches.
/// S(a,a) = a exactly; the result always lies in [min(a,b), max(a,b)].
double stolarsky(const MeanParams& params, const PositivePair& pair);

/// Classical means, each in closed form, independent of stolarsky() so the
/// special-case identities S_{2p,p} = A_p etc. can be cross-validated.
double power_mean(double p, const PositivePair& pair);
double lehmer_mean(double p, const PositivePair& pair);
double heronian_order(double p, const PositivePair& pair);
double log_order(double p, const PositivePair& pair);
double identric_order(double p, const PositivePair& pair);

/// theta_p = ((2c-p)/p)^{1/(2p-2c)} for p in (0,2c), theta_c = e^{-1/c};
/// continuous across p = c.
double theta(double p, double c);

/// Toader mean (2/pi) Integral_0^{pi/2} sqrt(a^2 cos^2 t + b^2 sin^2 t) dt,
/// evaluated through E on the larger/smaller ratio.
double toader_mean(const PositivePair& pair);

}  // namespace ellmean
