#pragma once

#include <span>
#include <vector>

#include "fuzzyspec/types.hpp"

namespace fuzzyspec {

/// Minimum arc length accepted by default when building an ArcSystem.
inline constexpr double kDegeneracyThreshold = 1e-9;

struct Arc {
  double xi;
  double eta;
};

/// A crisp subset of the circle made of n disjoint closed arcs [xi_r, eta_r].
///
/// Endpoints satisfy xi_1 < eta_1 < xi_2 < ... < xi_n < eta_n < xi_1 + 2pi with
/// xi_1 in [0, 2pi); the last arc may run past 2pi and wrap. The system is
/// canonical (a crisp subset of order n in the strict sense) when xi_1 == 0.
/// n == 0 is the empty set.
class ArcSystem {
 public:
  ArcSystem() = default;

  /// Validates ordering and minimum arc length; throws ValidationError.
  explicit ArcSystem(std::vector<Arc> arcs,
                     double min_length = kDegeneracyThreshold);

  static ArcSystem from_endpoints(std::span<const double> xi,
                                  std::span<const double> eta,
                                  double min_length = kDegeneracyThreshold);

  int size() const { return static_cast<int>(arcs_.size()); }
  bool empty() const { return arcs_.empty(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& operator[](int r) const { return arcs_.at(r); }

  bool is_canonical() const { return arcs_.empty() || arcs_.front().xi == 0.0; }

  /// Total measure divided by 2pi, i.e. the mean value c_0.
  double mean() const;
  double min_arc_length() const;
  double min_gap() const;
  /// Sum of the left endpoints.
  double xi_sum() const;

  /// Indicator value at any real t (periodic, arcs closed).
  bool contains(double t) const;

  /// Copy rotated by -xi_1 so that the first arc starts at 0.
  ArcSystem canonical() const;
  /// Copy rotated by +angle (counter-clockwise).
  ArcSystem rotated(double angle) const;

 private:
  std::vector<Arc> arcs_;
};

/// Exact spectrum: c_0 = sum(eta-xi)/2pi, c_k = sum(e^{ik eta}-e^{ik xi})/(2pi k i).
HermitianSpectrum crisp_spectrum(const ArcSystem& arcs, int max_k);

/// Real trigonometric polynomial stored by its coefficients P_{-n}..P_n.
struct TrigPolynomial {
  int degree = 0;
  std::vector<cplx> coeffs;  // coeffs[k + degree] = P_k

  cplx coefficient(int k) const { return coeffs.at(k + degree); }
  /// sum_k P_k e^{ikx}; real up to rounding.
  double operator()(double x) const;
};

/// The sign-detecting polynomial of an arc system:
/// P(x) = -4^n prod_{e in endpoints} sin((x - e)/2), positive on the open
/// arcs and negative on the open gaps, with |P_n| = 1.
TrigPolynomial sign_polynomial(const ArcSystem& arcs);

/// Direct product evaluation of the sign polynomial (no Fourier expansion).
double sign_polynomial_product(const ArcSystem& arcs, double x);

/// Taylor coefficients 0..max_k of prod_r (1 - z e^{i eta_r}) / (1 - z e^{i xi_r}).
std::vector<cplx> rational_expansion(const ArcSystem& arcs, int max_k);

}  // namespace fuzzyspec
