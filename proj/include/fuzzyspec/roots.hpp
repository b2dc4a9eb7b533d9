#pragma once

#include <span>
#include <vector>

#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

struct RootOptions {
  /// Iteration budget handed to the companion-matrix QR (Schur) solver.
  int qr_max_iterations = 0;  // 0 keeps the solver default
  int aberth_max_iterations = 500;
  double aberth_tolerance = 1e-15;
};

struct RootReport {
  std::vector<cplx> roots;
  bool used_fallback = false;
};

/// All roots of sum_k p[k] z^k. Eigenvalues of the companion matrix are the
/// primary method; Aberth iteration takes over when QR does not converge.
RootReport polynomial_roots(std::span<const cplx> ascending, const RootOptions& opts = {});

}  // namespace fuzzyspec
