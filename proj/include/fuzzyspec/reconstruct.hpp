#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzyspec/arcs.hpp"
#include "fuzzyspec/membership.hpp"
#include "fuzzyspec/roots.hpp"
#include "fuzzyspec/spectrum.hpp"
#include "fuzzyspec/toeplitz.hpp"

namespace fuzzyspec {

inline constexpr double kClosedFormMatchTolerance = 1e-9;
inline constexpr double kQuadratureMatchTolerance = 1e-6;

struct DefuzzConfig {
  QuadratureConfig quadrature;
  /// 0 selects 1e-9 for closed-form coefficient paths and 1e-6 otherwise.
  double match_tolerance = 0.0;
  double root_tolerance = kRootTolerance;
  /// Means this close to 0 or 1 short-circuit to the empty or full set.
  double degenerate_mean = 1e-12;
  /// Relative D_m below this value makes the pipeline first try an exact
  /// m-arc fit of the input itself (the input is numerically crisp of order m).
  double saturation = 1e-12;
  RootOptions roots;
};

enum class CrispKind { arcs, empty, full };

struct ReconstructionDiagnostics {
  std::vector<double> d_relative;  // D_k / Had(T_k) of the extended sequence, k = 0..n
  std::vector<double> mu;          // node weights, sorted like the arcs
  double node_radius_error = 0.0;  // max ||alpha| - 1| before projection
  double end_radius_error = 0.0;   // same for the right-endpoint polynomial
  double canonical_rotation = 0.0; // add to every endpoint to bring xi_1 to 0
  bool saturated = false;          // result came from an exact lower-order fit
};

struct ReconstructionResult {
  CrispKind kind = CrispKind::arcs;
  ArcSystem arcs;
  /// Phase of the extension: sum of the xi_r mod 2pi.
  double lambda = 0.0;
  bool anchored = true;
  int match_window = 0;
  std::vector<double> residuals;  // |c_k(f) - c_k(chi)|, k = 0..n-1
  double tolerance = 0.0;
  ReconstructionDiagnostics diagnostics;
  std::vector<std::string> warnings;

  double max_residual() const;
};

/// Crisp set whose first n Fourier coefficients equal those of f.
///
/// Without lambda the extension is anchored: among the one-parameter family of
/// solutions the one with a left endpoint at angle 0 is returned, so the arcs
/// are canonical. With lambda the member with sum(xi) = lambda mod 2pi is
/// returned as is (general position).
ReconstructionResult defuzz(const MembershipFunction& f, int n, std::optional<double> lambda = std::nullopt,
                            const DefuzzConfig& cfg = {});

/// Same pipeline starting from precomputed coefficients c_0..c_{n-1}.
ReconstructionResult defuzz_spectrum(const HermitianSpectrum& c, int n, std::optional<double> lambda,
                                     const DefuzzConfig& cfg, double tolerance);

struct SweepEntry {
  int n = 0;
  std::optional<ReconstructionResult> result;
  std::string error;  // empty on success
};

/// defuzz for n = 1..n_max (anchored); failures are recorded per n.
std::vector<SweepEntry> approximation_sequence(const MembershipFunction& f, int n_max, const DefuzzConfig& cfg = {});

struct MatchReport {
  std::vector<double> residuals;  // k = 0..n-1
  double max_residual = 0.0;
};

MatchReport verify_match(const MembershipFunction& f, const ArcSystem& arcs, int n, const QuadratureConfig& q = {});

}  // namespace fuzzyspec
