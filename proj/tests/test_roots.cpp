#include <gtest/gtest.h>

#include <algorithm>

#include "fuzzyspec/roots.hpp"
#include "fuzzyspec/types.hpp"

using namespace fuzzyspec;

namespace {

std::vector<cplx> from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> p{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] -= r * p[i];
      q[i + 1] += p[i];
    }
    p = q;
  }
  return p;
}

double set_distance(std::vector<cplx> want, std::vector<cplx> got) {
  double worst = 0.0;
  for (const cplx& w : want) {
    auto best = std::min_element(got.begin(), got.end(),
                                 [&](const cplx& a, const cplx& b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*best - w));
    got.erase(best);
  }
  return worst;
}

}  // namespace

TEST(Roots, KnownPolynomials) {
  const std::vector<cplx> p{-1.0, 0.0, 1.0};
  const RootReport r = polynomial_roots(p);
  EXPECT_FALSE(r.used_fallback);
  EXPECT_LT(set_distance({1.0, -1.0}, r.roots), 1e-14);

  std::vector<cplx> unit;
  for (int j = 0; j < 6; ++j) unit.push_back(std::polar(1.0, 0.3 + j));
  EXPECT_LT(set_distance(unit, polynomial_roots(from_roots(unit)).roots), 1e-10);
}

TEST(Roots, AberthFallback) {
  std::vector<cplx> want;
  for (int j = 0; j < 8; ++j) want.push_back(std::polar(1.0 + 0.1 * j, 0.7 * j));
  RootOptions opts;
  opts.qr_max_iterations = 1;
  const RootReport r = polynomial_roots(from_roots(want), opts);
  EXPECT_TRUE(r.used_fallback);
  EXPECT_LT(set_distance(want, r.roots), 1e-9);
}

TEST(Roots, DegreeZeroAndLinear) {
  EXPECT_TRUE(polynomial_roots(std::vector<cplx>{2.0}).roots.empty());
  const RootReport r = polynomial_roots(std::vector<cplx>{cplx(0.0, 2.0), 1.0});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(std::abs(r.roots[0] - cplx(0.0, -2.0)), 0.0, 1e-15);
}
