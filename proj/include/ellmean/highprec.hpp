#pragma once

// 50-digit floating path used where double cancellation noise would swamp
// the quantities under test: leading-order fits, the small-r branches of the
// theorem ratios, and near-tie resolution in the ordering checks.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ellmean/series.hpp"

namespace ellmean {

using Real50 = boost::multiprecision::cpp_bin_float_50;

namespace hp {

inline Real50 hyp_e(const Real50& r2) {
  return series::hyp_e_sum<Real50>(r2, 100000, Real50("1e-55"));
}
inline Real50 hyp_k(const Real50& r2) {
  return series::hyp_k_sum<Real50>(r2, 100000, Real50("1e-55"));
}
inline Real50 r_comp(const Real50& r) {
  using std::sqrt;
  return sqrt((1 - r) * (1 + r));
}

/// A_id(r') - (2/pi) E(r) at 50 digits.
inline Real50 signed_error(ApproxId id, const Real50& r) {
  return series::approx_closed<Real50>(id, r_comp(r)) - hyp_e(r * r);
}

/// S_{P,Q}(1, r') at 50 digits (generic branch; P != Q, both nonzero).
inline Real50 s_mean_of_complement(const Real50& P, const Real50& Q, const Real50& r) {
  return series::stolarsky_generic<Real50>(P, Q, Real50(1), r_comp(r));
}

}  // namespace hp
}  // namespace ellmean
