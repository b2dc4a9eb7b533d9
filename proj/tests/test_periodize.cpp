#include <gtest/gtest.h>

#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/periodize.hpp"
#include "fuzzyspec/spectrum.hpp"

using namespace fuzzyspec;

TEST(Schwartz, Families) {
  const SchwartzFunction g = SchwartzFunction::gaussian(1.0, 0.5);
  EXPECT_EQ(g(0.0), 1.0);
  EXPECT_NEAR(g.transform(0.0), 0.5 * std::sqrt(kTwoPi), 1e-15);
  EXPECT_TRUE(g.has_transform());
  const SchwartzFunction b = SchwartzFunction::bump(1.0, 0.5, 0.8);
  EXPECT_NEAR(b(1.0), 0.8, 1e-15);
  EXPECT_EQ(b(1.6), 0.0);
  EXPECT_THROW(b.transform(1.0), UnsupportedError);
  EXPECT_THROW(SchwartzFunction::gaussian(1.0, -1.0), ValidationError);
}

TEST(Schwartz, TailBoundDecreases) {
  const SchwartzFunction g = SchwartzFunction::gaussian(1.0, 2.0);
  double prev = g.tail_bound(1);
  for (int t = 2; t < 10; ++t) {
    const double b = g.tail_bound(t);
    EXPECT_LE(b, prev);
    prev = b;
  }
  EXPECT_EQ(SchwartzFunction::bump(1.0, 0.5, 1.0).tail_bound(1), 0.0);
}

TEST(Periodize, GaussianPeak) {
  const Periodization p = periodize(SchwartzFunction::gaussian(1.0, 0.5));
  EXPECT_NEAR(p(0.0), 1.0, 1e-12);
  EXPECT_GE(p.max_value, 1.0);
  EXPECT_EQ(p.samples.size(), 1024u);
  EXPECT_NEAR(p.membership()(0.0), 1.0, 1e-9);
  const Periodization zero = periodize(SchwartzFunction::gaussian(0.0, 0.5));
  EXPECT_EQ(zero(1.0), 0.0);
}

TEST(Periodize, BumpIsItsOwnPeriodization) {
  const SchwartzFunction b = SchwartzFunction::bump(2.0, 0.7, 0.9);
  const Periodization p = periodize(b, 4);
  for (double x : {1.5, 2.0, 2.6, 4.0}) EXPECT_EQ(p(x), b(x));
}

TEST(Periodize, OvershootRejected) {
  EXPECT_THROW(periodize(SchwartzFunction::gaussian(1.0, 3.0)).membership(), DomainError);
}

TEST(Poisson, GaussianClosedForm) {
  const PoissonReport r = poisson_check(SchwartzFunction::gaussian(1.0, 0.5), 8);
  EXPECT_NEAR(r.closed_form[0].real(), 0.19947114020071633897, 1e-15);
  EXPECT_NEAR(r.closed_form[3].real(), 0.064758797832945863807, 1e-15);
  EXPECT_NEAR(r.quadrature[0].real(), 0.19947114020071633897, 1e-9);
  EXPECT_LT(r.max_residual, 1e-9);
  EXPECT_THROW(poisson_check(SchwartzFunction::bump(1.0, 0.5, 1.0), 4), UnsupportedError);
}

TEST(Poisson, WideGaussian) {
  const PoissonReport r = poisson_check(SchwartzFunction::gaussian(0.4, 1.2), 6);
  EXPECT_LT(r.max_residual, 1e-9);
}

TEST(DefuzzOnLine, Gaussian) {
  const ReconstructionResult r = defuzz_on_line(SchwartzFunction::gaussian(1.0, 0.3), 3);
  EXPECT_EQ(r.arcs.size(), 3);
  EXPECT_LT(r.max_residual(), 1e-5);
}

TEST(DefuzzOnLine, BumpArcLength) {
  const SchwartzFunction b = SchwartzFunction::bump(3.0, 1.0, 1.0);
  const ReconstructionResult r = defuzz_on_line(b, 1);
  ASSERT_EQ(r.arcs.size(), 1);
  const double area = r.arcs[0].eta - r.arcs[0].xi;
  const HermitianSpectrum c = fourier_coefficients(periodize(b).membership(), 0);
  EXPECT_NEAR(area, kTwoPi * c.c0(), 1e-6);
}
