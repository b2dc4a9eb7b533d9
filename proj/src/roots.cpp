#include "fuzzyspec/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "fuzzyspec/detail/kernels.hpp"
#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

RootReport polynomial_roots(std::span<const cplx> ascending, const RootOptions& opts) {
  std::vector<cplx> p(ascending.begin(), ascending.end());
  while (!p.empty() && p.back() == cplx{0.0, 0.0}) p.pop_back();
  if (p.empty()) throw ValidationError("zero polynomial has no finite root set");
  for (const cplx& c : p)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw NumericError("non-finite polynomial coefficient");
  const int n = static_cast<int>(p.size()) - 1;
  RootReport report;
  if (n == 0) return report;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  if (opts.qr_max_iterations > 0) solver.setMaxIterations(opts.qr_max_iterations);
  solver.compute(companion, false);
  if (solver.info() == Eigen::Success) {
    for (int i = 0; i < n; ++i) report.roots.push_back(solver.eigenvalues()(i));
    return report;
  }

  // Fallback: Aberth from points spread on a circle of the Cauchy radius.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i] / p[n]));
  radius = 0.5 * (1.0 + radius);
  std::vector<cplx> roots;
  for (int i = 0; i < n; ++i) roots.push_back(std::polar(radius, kTwoPi * (i + 0.25) / n));
  const double worst = detail::aberth(p, roots, opts.aberth_tolerance, opts.aberth_max_iterations);
  if (!(worst < 1e-8)) throw NumericError("root finder did not converge", worst);
  report.roots = std::move(roots);
  report.used_fallback = true;
  return report;
}

}  // namespace fuzzyspec
