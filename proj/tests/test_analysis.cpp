#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellmean/analysis.hpp"
#include "ellmean/stolarsky.hpp"

using namespace ellmean;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("ratio_F") {
  CHECK(ratio_F(Modulus::from_r(1e-9)) == 1.0);
  CHECK(ratio_F(Modulus::from_r(1.0 - 1e-9)) ==
        doctest::Approx(11 * (pi - 2) / (4 * pi)).epsilon(1e-15));
  const double mid = ratio_F(Modulus::from_r(0.5));
  CHECK(mid > 11 * (pi - 2) / (4 * pi));
  CHECK(mid < 1.0);
  // the 50-digit branch joins the double branch smoothly
  CHECK(ratio_F(Modulus::from_r(0.0999999)) ==
        doctest::Approx(ratio_F(Modulus::from_r(0.1000001))).epsilon(1e-11));
}

TEST_CASE("ratio_G") {
  CHECK(ratio_G(Modulus::from_r(1e-9)) == 1.0);
  CHECK(ratio_G(Modulus::from_r(1.0 - 1e-9)) ==
        doctest::Approx(25 * (pi - 2) / (9 * pi)).epsilon(1e-15));
  const double mid = ratio_G(Modulus::from_r(0.5));
  CHECK(mid > 1.0);
  CHECK(mid < 25 * (pi - 2) / (9 * pi));
}

TEST_CASE("ratio_R") {
  CHECK(ratio_R(1.75, Modulus::from_r(1.0 - 1e-9)) ==
        doctest::Approx(22 / (7 * pi)).epsilon(1e-13));
  CHECK(ratio_R(2.0, Modulus::from_r(1.0 - 1e-9)) ==
        doctest::Approx(25 / (8 * pi)).epsilon(1e-13));
  CHECK(ratio_R(1.75, Modulus::from_r(1e-9)) == 1.0);
  CHECK_THROWS_AS(ratio_R(2.3, Modulus::from_r(0.5)), DomainError);
}

TEST_CASE("ratio_G1 range") {
  CHECK(ratio_G1(Modulus::from_r(1e-9)) ==
        doctest::Approx(3.0 / (5 * 16384.0)).epsilon(1e-12));
  CHECK(ratio_G1(Modulus::from_r(1.0 - 1e-12)) ==
        doctest::Approx(16.0 / 25.0 - two_over_pi).epsilon(1e-8));
  const double mid = ratio_G1(Modulus::from_r(0.5));
  CHECK(mid > 3.0 / (5 * 16384.0));
  CHECK(mid < 16.0 / 25.0 - two_over_pi);
  // series branch and direct branch agree where they meet
  CHECK(std::fabs(ratio_G1(Modulus::from_r(0.5 - 1e-9)) -
                  ratio_G1(Modulus::from_r(0.5 + 1e-9))) <= 1e-12);
}

TEST_CASE("d_n coefficient ledger") {
  CHECK(coeff_c(0) == Rational(-3));
  CHECK(coeff_c(1) == Rational(0));
  CHECK(coeff_b(0) == Rational(1));
  for (unsigned n = 0; n <= 3; ++n) CHECK(coeff_d(n) == 0);
  CHECK(coeff_d(4) == Rational(35, 32768));
  CHECK(coeff_d(5) == Rational(903, 262144));
  CHECK(coeff_d(6) == Rational(7343, 1048576));
  CHECK(coeff_d(7) == Rational(193225, 16777216));
  CHECK(coeff_d(8) == Rational(36001035, BigInt("2147483648")));
  CHECK(coeff_d(9) == Rational(387471275, BigInt("17179869184")));
  CHECK(coeff_d(10) == Rational(BigInt("7897834945"), BigInt("274877906944")));
}

TEST_CASE("g1 closed form and g sequence") {
  for (unsigned n = 2; n <= 50; ++n) CHECK(seq_g1(n) == seq_g1_closed_form(n));
  CHECK(to_double(seq_D(10)) > seq_g(10));
  CHECK(seq_g(10) > 0.0);
  for (unsigned n = 4; n <= 9; ++n) CHECK(seq_D(n) > 0);
  // the printed bound fails from n = 52 on (see the verification notes);
  // the theorem-bearing ratio claim itself holds well past that
  for (unsigned n = 10; n <= 51; ++n) CHECK(to_double(seq_D(n)) > seq_g(n));
  CHECK(to_double(seq_D(52)) < seq_g(52));
  for (unsigned n = 4; n <= 60; ++n) CHECK(coeff_d(n + 1) > Rational(7, 8) * coeff_d(n));
  CHECK_THROWS_AS(seq_D(3), DomainError);
  CHECK_THROWS_AS(seq_g1(1), DomainError);
}

TEST_CASE("certificate polynomials") {
  CHECK(eval_g3(BigInt(7)) == BigInt("2220734176"));
  CHECK(eval_g4(BigInt(7)) == BigInt("44608161668"));
  CHECK(eval_g6(BigInt(7)) == BigInt("56640373211408308"));
  // exact-rational overloads agree with the integer path and the direct sum
  CHECK(eval_g6(Rational(7)) == Rational(BigInt("56640373211408308")));
  CHECK(eval_g4(Rational(11)) == Rational(eval_g4(BigInt(11))));
  CHECK(eval_g3(Rational(1, 2)) ==
        Rational(896, 128) + Rational(7346, 64) + Rational(41033, 32) -
            Rational(3438, 16) - Rational(149813, 8) - Rational(227064, 4) -
            Rational(40824, 2) + 864);
  CHECK(eval_g5(7.0) == doctest::Approx(0.04879).epsilon(1e-4 / 0.04879));
  CHECK(eval_g2(10.0) == doctest::Approx(0.037141).epsilon(1e-5 / 0.037141));
  CHECK(eval_g6(BigInt(6)) < 0);  // sign flips below the certificate point
}

TEST_CASE("v/u/w ledger") {
  CHECK(theorem2_gap(1) == 0);
  CHECK(theorem2_gap(2) == 0);
  CHECK(theorem2_gap(3) == Rational(3, 81920));
  CHECK(theorem2_gap(4) == Rational(21, 512000));
  CHECK(theorem2_gap(11) == Rational(20743573, BigInt("2061584302080")));
  CHECK(coeff_w(4) == Rational(3, BigInt(5) << 14));
  for (unsigned n = 1; n <= 3; ++n) CHECK(coeff_w(n) == 0);
  for (unsigned n = 1; n <= 30; ++n)
    CHECK(coeff_w(n + 1) - coeff_v(n + 1) / coeff_v(n) * coeff_w(n) == theorem2_gap(n));
  CHECK_THROWS_AS(coeff_v(0), DomainError);
}

TEST_CASE("monotonicity scan") {
  const auto f_dec = [](double r) { return ratio_F(Modulus::from_r(r)); };
  const auto f_inc = [](double r) { return ratio_G(Modulus::from_r(r)); };
  CHECK(monotonicity_scan(f_dec, 0.001, 0.999, 2000).direction == Direction::decreasing);
  CHECK(monotonicity_scan(f_inc, 0.001, 0.999, 2000).direction == Direction::increasing);
  // constant input: increasing wins the tie-break, no violation recorded
  const MonotonicityReport flat = monotonicity_scan([](double) { return 1.0; }, 0, 1, 64);
  CHECK(flat.direction == Direction::increasing);
  CHECK(flat.max_violation == 0.0);
  const MonotonicityReport wave =
      monotonicity_scan([](double x) { return std::sin(6.28 * x); }, 0, 1, 64);
  CHECK(wave.direction == Direction::non_monotone);
  CHECK(wave.max_violation > 0.05);
  CHECK(wave.violation_at.has_value());
  CHECK_THROWS_AS(monotonicity_scan(f_inc, 0, 1, 4), DomainError);
}

TEST_CASE("best constants") {
  const BoundConstants t1 = best_constants(Theorem::theorem1);
  CHECK(t1.lower_best == doctest::Approx(11 * (pi - 2) / (4 * pi)).epsilon(1e-15));
  CHECK(t1.upper_best == 1.0);
  const BoundConstants t2 = best_constants(Theorem::theorem2);
  CHECK(t2.lower_best == 1.0);
  CHECK(t2.upper_best == doctest::Approx(25 * (pi - 2) / (9 * pi)).epsilon(1e-15));
  CHECK(t1.lower_best < t1.upper_best);
  CHECK(t2.lower_best < t2.upper_best);
}

TEST_CASE("solve_p0 and the conjecture profile") {
  const double p0 = solve_p0();
  CHECK(p0 == doctest::Approx(1.763135).epsilon(1e-5 / 1.763135));
  CHECK(std::fabs(theta(p0, 2.25) - two_over_pi) <= 1e-11);
  CHECK(p0 > 1.75);
  CHECK(p0 < 2.0);

  const ConjectureScan scan = conjecture_scan(999);
  CHECK(scan.pointwise_inequality);
  CHECK(scan.single_peaked);
  CHECK(scan.profile.front().second < scan.profile[0].second + 1.0);  // sanity
  const double h_first = scan.profile.front().second;
  const double h_last = scan.profile.back().second;
  double h_max = 0.0;
  for (const auto& [r, h] : scan.profile) h_max = std::max(h_max, h);
  CHECK(h_first < h_max);
  CHECK(h_last < h_max);
  CHECK(scan.r0_estimate > 0.9);
  CHECK_THROWS_AS(conjecture_scan(50), DomainError);
}

TEST_CASE("f7 lower bound") {
  CHECK(f7_lower_bound_check(Modulus::from_r(0.5)));
  CHECK(f7_lower_bound_check(Modulus::from_r(0.1)));
  CHECK(f7_lower_bound_check(Modulus::from_r(0.001)));
  CHECK(f7_lower_bound_check(Modulus::from_r(0.99)));
  CHECK_THROWS_AS(f7_lower_bound_check(Modulus::from_r(0.0)), DomainError);
}

TEST_CASE("crossing certificates") {
  const double v1 = h4_shifted_root();
  CHECK(v1 > 0.399475162);
  CHECK(v1 < 0.399475163);
  const double x0 = a7_a8_crossing();
  CHECK(std::fabs(x0 - 0.28825) <= 1e-3);
  CHECK(std::fabs(std::sqrt(1 - x0 * x0) - 0.95756) <= 1e-3);
}
