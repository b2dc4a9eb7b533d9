#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fuzzyspec/membership.hpp"
#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

enum class QuadratureRule { composite_simpson, piecewise_exact };

/// piecewise_exact integrates segment representations in closed form and
/// falls back to Simpson for functions without one; composite_simpson always
/// uses Simpson (split at breakpoints, panels doubled until converged).
struct QuadratureConfig {
  QuadratureRule rule = QuadratureRule::piecewise_exact;
  int panels = 64;
  double tolerance = kQuadratureTolerance;
  int max_panels = 1 << 21;

  void validate() const;
};

/// c_0..c_max_k under the e^{+ikt} kernel with 1/(2pi) normalisation.
HermitianSpectrum fourier_coefficients(const MembershipFunction& f, int max_k,
                                       const QuadratureConfig& q = {});

/// Simpson evaluation of (1/2pi) int_0^{2pi} fn(t) e^{ikt} dt, k = 0..max_k.
/// Endpoints of each piece are sampled just inside the piece so jumps at
/// breakpoints do not pollute the rule.
HermitianSpectrum simpson_coefficients(const std::function<double(double)>& fn,
                                       std::span<const double> breakpoints, int max_k,
                                       const QuadratureConfig& q);

/// (1/2pi) int f^2.
double mean_square(const MembershipFunction& f, const QuadratureConfig& q = {});

struct BoundCheck {
  int k;
  double value;   // c_0 for k = 0, |c_k| otherwise
  double margin;  // distance to the violated side; negative on failure
  bool pass;
};

struct ValidationReport {
  bool pass = true;
  std::vector<BoundCheck> entries;
};

/// Checks 0 <= c_0 <= 1 and |c_k| <= sqrt(2)/pi for k >= 1, each up to tol.
ValidationReport validate_fuzzy_spectrum(const HermitianSpectrum& s, double tol = kExactTolerance);

/// ||f||^2 - sum_{|k| <= max_k} |c_k|^2 (normalised L2 norm).
double parseval_residual(const MembershipFunction& f, int max_k, const QuadratureConfig& q = {});

}  // namespace fuzzyspec
