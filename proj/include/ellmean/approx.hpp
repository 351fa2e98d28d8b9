#pragma once

#include <array>

#include "ellmean/approx_id.hpp"
#include "ellmean/rational.hpp"
#include "ellmean/special.hpp"

namespace ellmean {

/// Leading error term of an approximation:  Delta(r) = coefficient * r^{2*half_order}
/// + O(r^{2*half_order+2}), in the signed_error convention Delta = A - (2/pi)E.
/// Lower approximations (A1..A5) therefore carry negative coefficients, upper
/// ones (A6..A8) positive.
struct LeadingOrder {
  int half_order;
  Rational coefficient;
};

/// The tabulated (n0, eps) pairs.  Injectable so the verification layer can be
/// exercised against a corrupted catalog.
using LeadingOrderCatalog = std::array<LeadingOrder, 8>;
const LeadingOrderCatalog& default_catalog();

/// A_id(r') by its closed form.  Exact limits at the endpoints: 1 at r = 0,
/// and at r = 1 the x -> 0 value of the closed form (7/11 for A5, 16/25 for A8, ...).
double approx_value(ApproxId id, const Modulus& m);

/// S_{9/2-p, p}(1, r'), the one-parameter family the catalog is drawn from.
double s_family(double p, const Modulus& m);

/// Delta(r) = A_id(r') - (2/pi) E(r);  <= 0 for A1..A5, >= 0 for A6..A8.
double signed_error(ApproxId id, const Modulus& m, const EvalOptions& opts = {});

LeadingOrder leading_order(ApproxId id);

struct FitResult {
  int half_order;
  double coefficient;
};

/// Numerical confirmation of leading_order: evaluates signed_error at
/// r = 2^-k, k = 3..10 (at 50 digits -- the signal is ~1e-44 at the smallest
/// abscissa), fits log|Delta| against log r, and extrapolates the
/// coefficient.  Throws FitError if the power-law residuals exceed 10%.
FitResult fit_leading_order(ApproxId id);

}  // namespace ellmean
