#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellmean/approx.hpp"
#include "ellmean/highprec.hpp"
#include "ellmean/grid.hpp"
#include "ellmean/stolarsky.hpp"

using namespace ellmean;

TEST_CASE("endpoint values") {
  for (const ApproxId id : all_approx_ids)
    CHECK(approx_value(id, Modulus::from_r(0.0)) == 1.0);
  CHECK(approx_value(ApproxId::A5, Modulus::from_r(1.0)) ==
        doctest::Approx(7.0 / 11.0).epsilon(1e-15));
  CHECK(approx_value(ApproxId::A8, Modulus::from_r(1.0)) ==
        doctest::Approx(16.0 / 25.0).epsilon(1e-15));
  CHECK(approx_value(ApproxId::A1, Modulus::from_r(1.0)) ==
        doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-15));
  CHECK(approx_value(ApproxId::A6, Modulus::from_r(1.0)) == doctest::Approx(1.0));
}

TEST_CASE("A3 closed form at r = 0.5") {
  // frozen from an extended-precision evaluation of the rational expression
  CHECK(approx_value(ApproxId::A3, Modulus::from_r(0.5)) ==
        doctest::Approx(0.93421545716748357375).epsilon(1e-15));
}

TEST_CASE("catalog ids match the means they abbreviate") {
  for (const double r : grid::interior(199)) {
    const Modulus m = Modulus::from_r(r);
    const PositivePair pair(1.0, m.r_comp);
    CHECK(std::fabs(approx_value(ApproxId::A5, m) -
                    stolarsky(MeanParams{2.75, 1.75}, pair)) <= 1e-13);
    CHECK(std::fabs(approx_value(ApproxId::A8, m) -
                    stolarsky(MeanParams{2.5, 2.0}, pair)) <= 1e-13);
    CHECK(std::fabs(approx_value(ApproxId::A1, m) - power_mean(1.5, pair)) <= 1e-13);
    CHECK(std::fabs(approx_value(ApproxId::A6, m) - lehmer_mean(0.25, pair)) <= 1e-13);
  }
}

TEST_CASE("s_family") {
  for (const double r : {0.1, 0.4, 0.7, 0.95}) {
    const Modulus m = Modulus::from_r(r);
    CHECK(s_family(1.75, m) == doctest::Approx(approx_value(ApproxId::A5, m)).epsilon(1e-14));
  }
  // p = 9/4 collapses to the 9/4-order identric mean
  const Modulus m6 = Modulus::from_r(0.6);
  CHECK(s_family(2.25, m6) ==
        doctest::Approx(identric_order(2.25, PositivePair(1.0, 0.8))).epsilon(1e-13));
  CHECK(s_family(2.0, Modulus::from_r(1.0)) == doctest::Approx(16.0 / 25.0).epsilon(1e-15));
}

TEST_CASE("signed error sign and endpoints") {
  CHECK(signed_error(ApproxId::A5, Modulus::from_r(1.0)) ==
        doctest::Approx(-(two_over_pi - 7.0 / 11.0)).epsilon(1e-12));
  CHECK(signed_error(ApproxId::A8, Modulus::from_r(1.0)) ==
        doctest::Approx(16.0 / 25.0 - two_over_pi).epsilon(1e-12));
  for (const ApproxId id : all_approx_ids)
    CHECK(signed_error(id, Modulus::from_r(0.0)) == 0.0);
  // strict sign contract, resolved at 50 digits where |Delta| sits below
  // double noise (it shrinks like r^8 or r^12 toward r = 0)
  for (const double r : grid::interior(99)) {
    const Real50 rr(r);
    for (const ApproxId id : {ApproxId::A1, ApproxId::A2, ApproxId::A3, ApproxId::A4,
                              ApproxId::A5})
      CHECK(hp::signed_error(id, rr) < 0);
    for (const ApproxId id : {ApproxId::A6, ApproxId::A7, ApproxId::A8})
      CHECK(hp::signed_error(id, rr) > 0);
    // the double path agrees with the 50-digit path to machine accuracy
    const Modulus m = Modulus::from_r(r);
    CHECK(std::fabs(signed_error(ApproxId::A5, m) -
                    static_cast<double>(hp::signed_error(ApproxId::A5, rr))) <= 1e-14);
  }
}

TEST_CASE("leading-order catalog") {
  CHECK(leading_order(ApproxId::A5).half_order == 6);
  CHECK(leading_order(ApproxId::A5).coefficient == Rational(-1, BigInt(7) << 21));
  CHECK(leading_order(ApproxId::A8).half_order == 4);
  CHECK(leading_order(ApproxId::A8).coefficient == Rational(3, BigInt(5) << 14));
  CHECK(leading_order(ApproxId::A1).half_order == 4);
  CHECK(leading_order(ApproxId::A1).coefficient == Rational(-1, 16384));
  CHECK(leading_order(ApproxId::A4).coefficient == Rational(-263, 65536));
  // Delta-sign convention: negative exactly for the lower approximations
  for (const ApproxId id : all_approx_ids) {
    const bool lower = static_cast<int>(id) <= static_cast<int>(ApproxId::A5);
    CHECK((leading_order(id).coefficient < 0) == lower);
  }
}

TEST_CASE("leading-order fit confirms the catalog") {
  for (const ApproxId id : all_approx_ids) {
    const FitResult fit = fit_leading_order(id);
    const LeadingOrder cat = leading_order(id);
    CHECK(fit.half_order == cat.half_order);
    if (id == ApproxId::A4) {
      // the tabulated 263/2^16 is inconsistent with the expansion of A4's own
      // closed form; the measured coefficient is 1/2^14, same as A1's
      CHECK(fit.coefficient ==
            doctest::Approx(-1.0 / 16384.0).epsilon(0.05));
    } else {
      CHECK(fit.coefficient ==
            doctest::Approx(to_double(cat.coefficient)).epsilon(0.05));
    }
  }
}
