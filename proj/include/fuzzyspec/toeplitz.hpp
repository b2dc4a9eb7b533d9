#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "fuzzyspec/nonlinear.hpp"
#include "fuzzyspec/roots.hpp"
#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultZeroTolerance = 1e-9;
inline constexpr double kRootTolerance = 1e-6;

struct ToeplitzMatrices {
  ComplexMatrix t;  // (k+1) x (k+1), entries s_{j-i}
  ComplexMatrix w;  // k x k, entries s_{1-i+j}
};

/// T_k and W_k of the hermitian extension of ns.s; needs s_0..s_k.
ToeplitzMatrices build_matrices(const NonlinearSpectrum& ns, int k);

/// Determinants D_k = det T_k and F_k = det W_k for k = 0..K.
struct ToeplitzAnalysis {
  int window = 0;                       // K
  std::vector<double> d;                // D_0..D_K
  std::vector<cplx> f;                  // f[k] = F_k; f[0] = 1 (empty determinant)
  std::vector<double> tol_scale;        // Hadamard bound of T_k
  std::vector<double> imag_residue;     // |Im det T_k| as computed
  std::vector<double> expansion_gap;    // |LU - cofactor expansion| for k <= 4, else 0

  double relative(int k) const { return tol_scale.at(k) > 0.0 ? d.at(k) / tol_scale.at(k) : 0.0; }
  /// D_{k-1}^2 - D_{k-2} D_k - |F_k|^2 divided by Had(T_{k-1})^2 (D_{-1} = 1).
  double identity_residual(int k) const;
};

ToeplitzAnalysis determinant_sequence(const NonlinearSpectrum& ns, int window);

struct OrderVerdict {
  bool finite = false;
  int order = 0;              // n when finite, otherwise the window K
  bool degenerate = false;    // zero sequence (order 0)
  std::vector<int> tail_violations;  // k > n with D_k not negligible

  std::string describe() const;
};

/// Least n with D_n <= zero_tol * tol_scale[n]; negative D_k beyond the
/// tolerance throws InvalidSequenceError.
OrderVerdict classify_order(const ToeplitzAnalysis& ta, double zero_tol = kDefaultZeroTolerance);

/// Coefficients (ascending) of the order-n polynomial whose roots are the
/// nodes of the decomposition; checks the order-n precondition.
std::vector<cplx> node_polynomial(const NonlinearSpectrum& ns, int n,
                                    double zero_tol = kDefaultZeroTolerance);

struct UnitRootDecomposition {
  std::vector<cplx> alpha;     // unimodular nodes sorted by argument in [0, 2pi)
  std::vector<double> mu;      // positive weights
  double residual = 0.0;       // max |s_k - sum mu alpha^k| over |k| < n
  double radius_error = 0.0;   // max ||alpha| - 1| before projection
};

/// s_k = sum_r mu_r alpha_r^k with |alpha_r| = 1, mu_r > 0.
UnitRootDecomposition unit_root_decompose(const NonlinearSpectrum& ns, int n,
                                          double zero_tol = kDefaultZeroTolerance,
                                          double root_tol = kRootTolerance,
                                          const RootOptions& roots = {});

struct Extension {
  cplx s_n;
  NonlinearSpectrum extended;  // s_0..s_n
  double d_n_relative = 0.0;   // recomputed D_n / tol_scale[n]
  double phase_error = 0.0;    // |arg F_n - lambda| mod 2pi
};

/// Chooses s_n so that F_n = D_{n-1} e^{i lambda}, which forces D_n = 0.
/// Uses s_0..s_{n-1} of ns; requires D_0..D_{n-1} > 0.
Extension caratheodory_extend(const NonlinearSpectrum& ns, int n, double lambda,
                              double zero_tol = kDefaultZeroTolerance);

/// Cofactor of s_n in F_n, equal to (-1)^{n-1} D_{n-2} (D_{-1} = 1).
cplx corner_cofactor(const NonlinearSpectrum& ns, int n);

}  // namespace fuzzyspec
