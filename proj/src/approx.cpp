#include "ellmean/approx.hpp"

#include <cmath>

#include "ellmean/highprec.hpp"
#include "ellmean/series.hpp"
#include "ellmean/stolarsky.hpp"

namespace ellmean {

const char* to_string(ApproxId id) {
  switch (id) {
    case ApproxId::A1: return "A1";
    case ApproxId::A2: return "A2";
    case ApproxId::A3: return "A3";
    case ApproxId::A4: return "A4";
    case ApproxId::A5: return "A5";
    case ApproxId::A6: return "A6";
    case ApproxId::A7: return "A7";
    case ApproxId::A8: return "A8";
  }
  return "?";
}

const LeadingOrderCatalog& default_catalog() {
  // Tabulated (n0, eps) pairs, eps carrying the Delta = A - (2/pi)E sign.
  // A4's entry is stored as tabulated even though the expansion of its own
  // closed form gives 1/2^14; fit_leading_order flags the discrepancy.
  static const LeadingOrderCatalog catalog = {{
      {4, Rational(-1, BigInt(1) << 14)},
      {6, Rational(-3, BigInt(1) << 20)},
      {6, Rational(-1, BigInt(1) << 20)},
      {4, Rational(-263, BigInt(1) << 16)},
      {6, Rational(-1, BigInt(7) << 21)},
      {4, Rational(1, BigInt(1) << 12)},
      {6, Rational(7, BigInt(1) << 20)},
      {4, Rational(3, BigInt(5) << 14)},
  }};
  return catalog;
}

double approx_value(ApproxId id, const Modulus& m) {
  if (m.r == 0.0) return 1.0;  // every catalogued mean of (1,1)
  return series::approx_closed<double>(id, m.r_comp);
}

double s_family(double p, const Modulus& m) {
  return stolarsky(MeanParams{4.5 - p, p}, PositivePair(1.0, m.r_comp));
}

double signed_error(ApproxId id, const Modulus& m, const EvalOptions& opts) {
  return approx_value(id, m) - two_over_pi * ellip_e(m, opts);
}

LeadingOrder leading_order(ApproxId id) {
  return default_catalog()[static_cast<int>(id)];
}

FitResult fit_leading_order(ApproxId id) {
  constexpr int k_lo = 3, k_hi = 10;
  constexpr int n = k_hi - k_lo + 1;

  double logr[n], logd[n];
  Real50 delta[n];
  for (int k = k_lo; k <= k_hi; ++k) {
    const Real50 r = Real50(1) / (1 << k);
    const Real50 d = hp::signed_error(id, r);
    delta[k - k_lo] = d;
    logr[k - k_lo] = -k * std::log(2.0);
    logd[k - k_lo] = static_cast<double>(log(abs(d)));
  }

  // least squares for log|Delta| = slope log r + intercept
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += logr[i];
    sy += logd[i];
    sxx += logr[i] * logr[i];
    sxy += logr[i] * logd[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  const int half_order = static_cast<int>(std::lround(slope / 2.0));

  for (int i = 0; i < n; ++i) {
    const double resid = logd[i] - (slope * logr[i] + intercept);
    if (std::fabs(std::expm1(resid)) > 0.10)
      throw FitError("fit_leading_order: power-law residual above 10%");
  }

  // Richardson extrapolation of Delta / r^{2 n0} from the two smallest radii
  // (the next correction is O(r^2), ratio 4 between adjacent k).
  const Real50 r9 = Real50(1) / (1 << (k_hi - 1));
  const Real50 r10 = Real50(1) / (1 << k_hi);
  const Real50 e9 = delta[n - 2] / pow(r9, 2 * half_order);
  const Real50 e10 = delta[n - 1] / pow(r10, 2 * half_order);
  const Real50 eps = (4 * e10 - e9) / 3;
  return {half_order, static_cast<double>(eps)};
}

}  // namespace ellmean
