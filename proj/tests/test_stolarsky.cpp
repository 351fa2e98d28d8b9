#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellmean/quadrature.hpp"
#include "ellmean/stolarsky.hpp"

using namespace ellmean;

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double e_const = 2.71828182845904523536;
}  // namespace

TEST_CASE("branch classification") {
  CHECK(MeanParams{2.0, 1.0}.branch() == Branch::generic);
  CHECK(MeanParams{0.0, 1.0}.branch() == Branch::p_zero);
  CHECK(MeanParams{1.0, 0.0}.branch() == Branch::q_zero);
  CHECK(MeanParams{1.0, 1.0}.branch() == Branch::equal_nonzero);
  CHECK(MeanParams{0.0, 0.0}.branch() == Branch::both_zero);
  CHECK(MeanParams{2.0, 2.0 + 1e-9}.branch() == Branch::equal_nonzero);
}

TEST_CASE("stolarsky branch values") {
  CHECK(stolarsky(MeanParams{2, 1}, PositivePair(3, 1)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{1, 0}, PositivePair(e_const, 1)) ==
        doctest::Approx(e_const - 1).epsilon(1e-14));
  CHECK(stolarsky(MeanParams{2.75, 1.75}, PositivePair(1, 0.8)) ==
        doctest::Approx(0.90277992729674048734).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{0, 0}, PositivePair(4, 9)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{3, 3}, PositivePair(5, 5)) == 5.0);
}

TEST_CASE("continuous extension at b = 0") {
  CHECK(stolarsky(MeanParams{2.75, 1.75}, PositivePair(1, 0)) ==
        doctest::Approx(7.0 / 11.0).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{2.5, 2.0}, PositivePair(1, 0)) ==
        doctest::Approx(16.0 / 25.0).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{2.25, 2.25}, PositivePair(1, 0)) ==
        doctest::Approx(std::exp(-4.0 / 9.0)).epsilon(1e-15));
  CHECK(stolarsky(MeanParams{-1.0, 3.0}, PositivePair(1, 0)) == 0.0);
  CHECK_THROWS_AS(PositivePair(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(PositivePair(1.0, -0.5), DomainError);
}

TEST_CASE("classical means") {
  CHECK(power_mean(1, PositivePair(3, 5)) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(power_mean(2, PositivePair(1, 7)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lehmer_mean(0.25, PositivePair(1, 1)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(power_mean(0, PositivePair(4, 9)) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(heronian_order(1, PositivePair(1, 4)) == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(log_order(1, PositivePair(e_const, 1)) == doctest::Approx(e_const - 1).epsilon(1e-14));
  CHECK(identric_order(1, PositivePair(2, 1)) == doctest::Approx(4.0 / e_const).epsilon(1e-14));
}

TEST_CASE("theta") {
  CHECK(theta(2.25, 2.25) == doctest::Approx(std::exp(-4.0 / 9.0)).epsilon(1e-15));
  CHECK(theta(2.0, 2.25) == doctest::Approx(16.0 / 25.0).epsilon(1e-15));
  CHECK(theta(1.75, 2.25) == doctest::Approx(7.0 / 11.0).epsilon(1e-15));
  // continuity across p = c
  CHECK(theta(2.25 - 1e-8, 2.25) == doctest::Approx(theta(2.25, 2.25)).epsilon(1e-10));
  CHECK_THROWS_AS(theta(0.0, 2.25), DomainError);
  CHECK_THROWS_AS(theta(4.5, 2.25), DomainError);
  CHECK_THROWS_AS(theta(-1.0, 2.25), DomainError);
}

TEST_CASE("toader mean") {
  CHECK(toader_mean(PositivePair(3, 3)) == 3.0);
  CHECK(toader_mean(PositivePair(1, 0)) == doctest::Approx(2.0 / pi).epsilon(1e-15));
  CHECK(toader_mean(PositivePair(2, 1)) ==
        doctest::Approx(1.5419644251900400365).epsilon(1e-13));
  // defining integral
  const double a = 2.0, b = 1.0;
  const double integral = 2.0 / pi *
                          quadrature::integrate(
                              [a, b](double t) {
                                const double c = std::cos(t), s = std::sin(t);
                                return std::sqrt(a * a * c * c + b * b * s * s);
                              },
                              0.0, pi / 2);
  CHECK(std::fabs(toader_mean(PositivePair(a, b)) - integral) <= 1e-10);
  CHECK(toader_mean(PositivePair(1, 2)) == toader_mean(PositivePair(2, 1)));
}

TEST_CASE("toader-mean forms of the sharp bounds") {
  std::mt19937 rng(218);
  std::uniform_real_distribution<double> ua(1.0, 2.0), ub(3.0, 6.0);
  for (int i = 0; i < 50; ++i) {
    const PositivePair pair(ua(rng), ub(rng));
    const double t = toader_mean(pair);
    const double s5 = stolarsky(MeanParams{2.75, 1.75}, pair);
    const double s8 = stolarsky(MeanParams{2.5, 2.0}, pair);
    CHECK(s5 < t);
    CHECK(t < 22.0 / (7 * pi) * s5);
    CHECK(25.0 / (8 * pi) * s8 < t);
    CHECK(t < s8);
  }
}

TEST_CASE("symmetry, homogeneity, mean property") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> upq(-4.0, 4.0), uab(0.05, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double p = upq(rng), q = upq(rng), a = uab(rng), b = uab(rng);
    const double s = stolarsky(MeanParams{p, q}, PositivePair(a, b));
    // canonicalization makes the symmetric calls bitwise identical
    CHECK(s == stolarsky(MeanParams{q, p}, PositivePair(a, b)));
    CHECK(s == stolarsky(MeanParams{p, q}, PositivePair(b, a)));
    CHECK(s >= std::min(a, b));
    CHECK(s <= std::max(a, b));
    for (const double lam : {0.1, 10.0}) {
      const double sl = stolarsky(MeanParams{p, q}, PositivePair(lam * a, lam * b));
      CHECK(std::fabs(sl - lam * s) / lam <= 1e-13 * std::max(1.0, s));
    }
  }
}

TEST_CASE("special cases of the family") {
  std::mt19937 rng(778);
  std::uniform_real_distribution<double> up(-4.0, 4.0), uab(0.05, 20.0);
  for (int i = 0; i < 100; ++i) {
    double p = up(rng);
    if (std::fabs(p) < 0.05) p = 0.5;
    const PositivePair pair(uab(rng), uab(rng));
    CHECK(stolarsky(MeanParams{2 * p, p}, pair) ==
          doctest::Approx(power_mean(p, pair)).epsilon(1e-12));
    CHECK(stolarsky(MeanParams{1.5 * p, 0.5 * p}, pair) ==
          doctest::Approx(heronian_order(p, pair)).epsilon(1e-12));
    CHECK(stolarsky(MeanParams{p, 0}, pair) ==
          doctest::Approx(log_order(p, pair)).epsilon(1e-12));
    CHECK(stolarsky(MeanParams{p, p}, pair) ==
          doctest::Approx(identric_order(p, pair)).epsilon(1e-12));
  }
}
