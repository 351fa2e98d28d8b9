#include "ellmean/stolarsky.hpp"

#include <algorithm>
#include <cmath>

#include "ellmean/series.hpp"
#include "ellmean/special.hpp"

namespace ellmean {

double MeanParams::equal_threshold(double p, double q) {
  return 1e-6 * (1.0 + std::fabs(p) + std::fabs(q));
}

Branch MeanParams::branch() const {
  const bool pz = std::fabs(p) < zero_eps;
  const bool qz = std::fabs(q) < zero_eps;
  if (pz && qz) return Branch::both_zero;
  if (pz) return Branch::p_zero;
  if (qz) return Branch::q_zero;
  if (std::fabs(p - q) < equal_threshold(p, q)) return Branch::equal_nonzero;
  return Branch::generic;
}

namespace {

// Continuous extension at b = 0 (the r' = 0 closure): for positive
// parameters S_{p,q}(a,0) = a (q/p)^{1/(p-q)} and S_{p,p}(a,0) = a e^{-1/p};
// once either parameter is <= 0 the mean collapses to 0.
double stolarsky_b_zero(const MeanParams& mp, double a) {
  switch (mp.branch()) {
    case Branch::generic:
      if (mp.p < 0.0 || mp.q < 0.0) return 0.0;
      return a * std::exp(std::log(mp.q / mp.p) / (mp.p - mp.q));
    case Branch::equal_nonzero: {
      const double p = 0.5 * (mp.p + mp.q);
      return p > 0.0 ? a * std::exp(-1.0 / p) : 0.0;
    }
    default:
      return 0.0;  // log-mean and geometric branches all vanish with b
  }
}

}  // namespace

double stolarsky(const MeanParams& params, const PositivePair& pair) {
  // canonicalize through the mean's symmetries (S is invariant under both
  // p <-> q and a <-> b), so symmetric calls produce identical bits
  const double a = std::max(pair.a, pair.b), b = std::min(pair.a, pair.b);
  const MeanParams p{std::max(params.p, params.q), std::min(params.p, params.q)};
  if (a == b) return a;
  if (b == 0.0) return stolarsky_b_zero(p, a);

  double value;
  switch (p.branch()) {
    case Branch::both_zero:
      value = std::sqrt(a * b);
      break;
    case Branch::p_zero:
      value = series::stolarsky_q_zero<double>(p.q, a, b);
      break;
    case Branch::q_zero:
      value = series::stolarsky_q_zero<double>(p.p, a, b);
      break;
    case Branch::equal_nonzero:
      value = series::stolarsky_equal<double>(0.5 * (p.p + p.q), a, b);
      break;
    case Branch::generic:
      value = series::stolarsky_generic<double>(p.p, p.q, a, b);
      break;
    default:
      throw DomainError("stolarsky: bad branch");
  }
  return std::clamp(value, b, a);
}

double power_mean(double p, const PositivePair& pair) {
  if (std::fabs(p) < MeanParams::zero_eps) return std::sqrt(pair.a * pair.b);
  if (pair.b == 0.0) return p > 0.0 ? pair.a * std::exp(-std::log(2.0) / p) : 0.0;
  return std::pow((std::pow(pair.a, p) + std::pow(pair.b, p)) / 2.0, 1.0 / p);
}

double lehmer_mean(double p, const PositivePair& pair) {
  const double a = pair.a, b = pair.b;
  return (std::pow(a, p + 1.0) + std::pow(b, p + 1.0)) /
         (std::pow(a, p) + std::pow(b, p));
}

double heronian_order(double p, const PositivePair& pair) {
  if (std::fabs(p) < MeanParams::zero_eps) return std::sqrt(pair.a * pair.b);
  const double x = std::pow(pair.a, p), y = std::pow(pair.b, p);
  return std::pow((x + std::sqrt(x * y) + y) / 3.0, 1.0 / p);
}

double log_order(double p, const PositivePair& pair) {
  if (std::fabs(p) < MeanParams::zero_eps) return std::sqrt(pair.a * pair.b);
  if (pair.a == pair.b) return pair.a;
  if (pair.b == 0.0) return 0.0;
  const double x = std::pow(pair.a, p), y = std::pow(pair.b, p);
  return std::pow((x - y) / (std::log(x) - std::log(y)), 1.0 / p);
}

double identric_order(double p, const PositivePair& pair) {
  if (std::fabs(p) < MeanParams::zero_eps) return std::sqrt(pair.a * pair.b);
  if (pair.a == pair.b) return pair.a;
  if (pair.b == 0.0) return p > 0.0 ? pair.a * std::exp(-1.0 / p) : 0.0;
  const double x = std::pow(pair.a, p), y = std::pow(pair.b, p);
  const double identric = std::exp((x * std::log(x) - y * std::log(y)) / (x - y) - 1.0);
  return std::pow(identric, 1.0 / p);
}

double theta(double p, double c) {
  if (!(c > 0.0)) throw DomainError("theta: need c > 0");
  if (!(p > 0.0 && p < 2.0 * c)) throw DomainError("theta: need p in (0, 2c)");
  const double eps = p - c;
  if (std::fabs(eps) < MeanParams::equal_threshold(p, c)) return std::exp(-1.0 / c);
  // ((2c-p)/p)^{1/(2p-2c)} = exp( log1p(-2 eps/(c+eps)) / (2 eps) )
  return std::exp(std::log1p(-2.0 * eps / (c + eps)) / (2.0 * eps));
}

double toader_mean(const PositivePair& pair) {
  const double a = pair.a, b = pair.b;
  if (a == b) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  const double ratio = lo / hi;
  const Modulus m = Modulus::from_complement(ratio);
  return two_over_pi * hi * ellip_e(m);
}

}  // namespace ellmean
