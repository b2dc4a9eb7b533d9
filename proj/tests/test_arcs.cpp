#include <gtest/gtest.h>

#include <random>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/nonlinear.hpp"
#include "fuzzyspec/spectrum.hpp"
#include "support/generators.hpp"

using namespace fuzzyspec;

namespace {

const ArcSystem kHalf({{0.0, kPi}});

QuadratureConfig simpson(double tol = 1e-12) {
  QuadratureConfig q;
  q.rule = QuadratureRule::composite_simpson;
  q.tolerance = tol;
  return q;
}

}  // namespace

TEST(ArcSystem, RejectsBadOrdering) {
  EXPECT_THROW(ArcSystem({{0.0, 1.0}, {0.5, 2.0}}), ValidationError);
  EXPECT_THROW(ArcSystem({{1.0, 1.0}}), ValidationError);
  EXPECT_THROW(ArcSystem({{0.0, 1.0}, {2.0, kTwoPi + 0.5}}), ValidationError);
  EXPECT_THROW(ArcSystem({{0.0, 1e-10}}), ValidationError);
  EXPECT_NO_THROW(ArcSystem({{0.0, 1e-10}}, 0.0));
}

TEST(ArcSystem, CanonicalRotation) {
  const ArcSystem a({{1.0, 2.0}, {3.0, 7.0}});
  const ArcSystem c = a.canonical();
  EXPECT_EQ(c[0].xi, 0.0);
  EXPECT_DOUBLE_EQ(c[1].xi, 2.0);
  EXPECT_DOUBLE_EQ(c[1].eta, 6.0);
  EXPECT_TRUE(c.is_canonical());
  EXPECT_FALSE(a.is_canonical());
}

TEST(CrispSpectrum, HalfCircle) {
  const HermitianSpectrum c = crisp_spectrum(kHalf, 3);
  EXPECT_NEAR(c.coeffs[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[1] - cplx(0.0, 1.0 / kPi)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[2]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[3] - cplx(0.0, 1.0 / (3.0 * kPi))), 0.0, 1e-15);
}

TEST(CrispSpectrum, NearFullArc) {
  double prev = 0.0;
  for (double eps : {1e-1, 1e-3, 1e-6}) {
    const double c0 = crisp_spectrum(ArcSystem({{0.0, kTwoPi - eps}}), 0).coeffs[0].real();
    EXPECT_GT(c0, prev);
    EXPECT_NEAR(c0, 1.0, eps);
    prev = c0;
  }
}

TEST(CrispSpectrum, TwoArcsHaveOnlyEvenHarmonics) {
  // Period pi: odd harmonics vanish; values from an mpmath quadrature oracle.
  const ArcSystem a({{0.0, kPi / 2}, {kPi, 3 * kPi / 2}});
  const HermitianSpectrum c = crisp_spectrum(a, 3);
  EXPECT_NEAR(c.coeffs[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.coeffs[2] - cplx(0.0, 0.318309886183791)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c.coeffs[3]), 0.0, 1e-15);
}

TEST(CrispSpectrum, AgreesWithQuadratureOfIndicator) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const ArcSystem a = gen::random_arc_system(rng, 1 + trial % 6, 0.05);
    const MembershipFunction f = MembershipFunction::analytic(
        "indicator", [&a](double t) { return a.contains(t) ? 1.0 : 0.0; }, [&a] {
          std::vector<double> b;
          for (const Arc& arc : a.arcs()) b.insert(b.end(), {wrap_angle(arc.xi), wrap_angle(arc.eta)});
          return b;
        }());
    const HermitianSpectrum exact = crisp_spectrum(a, 32);
    const HermitianSpectrum quad = fourier_coefficients(f, 32, simpson());
    for (int k = 0; k <= 32; ++k) EXPECT_NEAR(std::abs(exact.coeffs[k] - quad.coeffs[k]), 0.0, 1e-10) << k;
  }
}

TEST(SignPolynomial, HalfCircleIsTwoSine) {
  const TrigPolynomial p = sign_polynomial(kHalf);
  ASSERT_EQ(p.degree, 1);
  EXPECT_NEAR(p(kPi / 2), 2.0, 1e-14);
  EXPECT_NEAR(p(3 * kPi / 2), -2.0, 1e-14);
  EXPECT_NEAR(std::abs(p.coefficient(1)), 1.0, 1e-15);
}

TEST(SignPolynomial, SignPatternOnRandomSystems) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 100; ++trial) {
    const ArcSystem a = gen::random_arc_system(rng, 1 + trial % 6, 0.02);
    const TrigPolynomial p = sign_polynomial(a);
    ASSERT_EQ(p.degree, a.size());
    EXPECT_NEAR(std::abs(p.coefficient(a.size())), 1.0, 1e-12);
    for (int k = 0; k <= p.degree; ++k)
      EXPECT_NEAR(std::abs(p.coefficient(-k) - std::conj(p.coefficient(k))), 0.0, 1e-12);
    for (int j = 0; j < 1000; ++j) {
      const double t = angle(rng);
      const double product = sign_polynomial_product(a, t);
      const double expansion = p(t);
      EXPECT_NEAR(expansion, product, 1e-9 * (1.0 + std::abs(product)));
      if (std::abs(product) < 1e-12) continue;
      EXPECT_EQ(product > 0.0, a.contains(t)) << "trial " << trial << " t " << t;
    }
  }
}

TEST(SignPolynomial, LeadingCoefficientPhase) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 6; ++n) {
    const ArcSystem a = gen::random_arc_system(rng, n);
    double half_sum = 0.0;
    for (const Arc& arc : a.arcs()) half_sum += 0.5 * (arc.xi + arc.eta);
    const cplx expected = (n % 2 == 1 ? 1.0 : -1.0) * std::polar(1.0, -half_sum);
    EXPECT_NEAR(std::abs(sign_polynomial(a).coefficient(n) - expected), 0.0, 1e-12);
  }
}

TEST(SignPolynomial, PairsPositivelyWithIndicatorMinusFuzzy) {
  // integral (chi - f) P >= 0 whenever 0 <= f <= 1.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ArcSystem a = gen::random_arc_system(rng, 1 + trial % 4);
    const MembershipFunction f = gen::random_trapezoid_mixture(rng);
    const MembershipFunction chi = MembershipFunction::arcs(a);
    const TrigPolynomial p = sign_polynomial(a);
    const int n = p.degree;
    const HermitianSpectrum cf = fourier_coefficients(f, n);
    const HermitianSpectrum cc = fourier_coefficients(chi, n);
    double pairing = 0.0;
    for (int k = -n; k <= n; ++k) pairing += ((cc.at(k) - cf.at(k)) * p.coefficient(k)).real();
    EXPECT_GE(pairing, -1e-12);
  }
}

TEST(RationalExpansion, HalfCircle) {
  const std::vector<cplx> r = rational_expansion(kHalf, 5);
  EXPECT_NEAR(std::abs(r[0] - 1.0), 0.0, 1e-15);
  for (int k = 1; k <= 5; ++k) EXPECT_NEAR(std::abs(r[k] - 2.0), 0.0, 1e-14);
}

TEST(RationalExpansion, EmptyProduct) {
  const std::vector<cplx> r = rational_expansion(ArcSystem(), 4);
  EXPECT_EQ(r[0], cplx(1.0, 0.0));
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(r[k], cplx(0.0, 0.0));
}

TEST(RationalExpansion, MatchesExponentialOfHardySeries) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ArcSystem a = gen::random_arc_system(rng, 1 + trial % 6);
    const HermitianSpectrum c = crisp_spectrum(a, 16);
    const std::vector<cplx> e = exp_series_oracle(hardy_series(c), 16);
    const std::vector<cplx> r = rational_expansion(a, 16);
    const cplx scale = std::polar(1.0, kTwoPi * c.c0());
    for (int k = 0; k <= 16; ++k) EXPECT_NEAR(std::abs(scale * e[k] - r[k]), 0.0, 1e-10) << k;
  }
}
