#pragma once

#include <vector>

#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

/// Nonlinear coefficients s_0..s_max_k of a fuzzy set together with its mean.
///
/// Convention: exp(-2 pi i h(z)) = 1 - i e^{-i pi c0} sum_{k>=0} s_k z^k with
/// s_0 = 2 sin(pi c0), where h is the Hardy map. Negative indices follow
/// s_{-k} = conj(s_k).
struct NonlinearSpectrum {
  double c0 = 0.0;
  std::vector<cplx> s;

  int max_k() const { return static_cast<int>(s.size()) - 1; }
  cplx at(int k) const { return k >= 0 ? s.at(k) : std::conj(s.at(-k)); }
};

/// Taylor coefficients of h(f)(z) = sum_{k>=0} c_k z^k.
struct HardySeries {
  std::vector<cplx> taylor;
};

enum class Branch { lower, upper };

/// The non-negative coefficient window, taylor[k] = c_k. Rejects complex c_0.
HardySeries hardy_series(const HermitianSpectrum& s, double tol = kExactTolerance);

/// Taylor coefficients 0..max_k of exp(-2 pi i h(z)) by the recurrence
/// k E_k = sum_{j=1..k} j g_j E_{k-j}, g = -2 pi i h.
std::vector<cplx> exp_series_oracle(const HardySeries& h, int max_k);

/// Triangular recursion s_k = 2pi [e^{-i pi c0} c_k - i sum_{r<k} (1 - r/k) c_{k-r} s_r].
/// c_0 outside [0, 1] throws DomainError; c_0 in {0, 1} gives the zero sequence.
NonlinearSpectrum c_to_s(const HermitianSpectrum& c, int max_k);

/// Inverse recursion; uses ns.c0 as the mean.
HermitianSpectrum s_to_c(const NonlinearSpectrum& ns, int max_k);

/// Inverse recursion with c_0 = asin(s_0 / 2) / pi on the chosen branch.
HermitianSpectrum s_to_c(const std::vector<cplx>& s, Branch branch, int max_k);

/// Mean recovered from s_0 in [0, 2]: lower branch in [0, 1/2], upper in [1/2, 1].
double c0_from_s0(double s0, Branch branch);

/// s_k read off the exponential series: s_0 = 2 sin(pi c0), s_k = i e^{i pi c0} E_k.
NonlinearSpectrum nonlinear_from_exponential(const std::vector<cplx>& e, double c0);

/// Normal form 1 - i e^{i pi c0} sum_{k>=1} s_k z^k, which equals
/// e^{2 pi i c0} exp(-2 pi i h(z)); for a crisp set this is the rational product.
std::vector<cplx> normalized_series(const NonlinearSpectrum& ns);

}  // namespace fuzzyspec
