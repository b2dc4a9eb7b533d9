#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace fuzzyspec {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Bound on |c_k|, k != 0, for fuzzy subsets of the circle.
inline const double kCoefficientBound = std::numbers::sqrt2 / std::numbers::pi;

/// Default absolute tolerance for closed-form (exact) coefficient paths.
inline constexpr double kExactTolerance = 1e-10;
/// Default absolute tolerance for quadrature paths.
inline constexpr double kQuadratureTolerance = 1e-8;

/// Fourier coefficients c_0..c_max_k of a real function on [0, 2pi).
///
/// Convention: c_k = (1/2pi) * integral_0^{2pi} f(t) exp(+ikt) dt. Negative
/// indices are implied by c_{-k} = conj(c_k).
struct HermitianSpectrum {
  std::vector<cplx> coeffs;

  int max_k() const { return static_cast<int>(coeffs.size()) - 1; }
  double c0() const { return coeffs.at(0).real(); }
  /// c_k for any integer k, negative indices by conjugation.
  cplx at(int k) const {
    return k >= 0 ? coeffs.at(k) : std::conj(coeffs.at(-k));
  }
  /// a_k = 2 Re c_k, b_k = 2 Im c_k (cosine and sine coefficients).
  double a(int k) const { return 2.0 * coeffs.at(k).real(); }
  double b(int k) const { return 2.0 * coeffs.at(k).imag(); }
};

/// Reduces an angle to [0, 2pi).
inline double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace fuzzyspec
