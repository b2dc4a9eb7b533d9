#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzyspec/membership.hpp"
#include "fuzzyspec/reconstruct.hpp"
#include "fuzzyspec/spectrum.hpp"

namespace fuzzyspec {

/// A rapidly decreasing fuzzy subset of the real line from a closed family.
///
/// gaussian: amplitude * exp(-x^2 / (2 sigma^2)).
/// bump: height * exp(1 - 1 / (1 - u^2)) for u = (x - center) / width, |u| < 1.
class SchwartzFunction {
 public:
  enum class Family { gaussian, bump };

  static SchwartzFunction gaussian(double amplitude, double sigma);
  static SchwartzFunction bump(double center, double width, double height);

  Family family() const { return family_; }
  std::string name() const;
  double amplitude() const { return amplitude_; }
  double sigma() const { return sigma_; }
  double center() const { return center_; }
  double width() const { return width_; }

  double operator()(double x) const;

  bool has_transform() const { return family_ == Family::gaussian; }
  /// Line transform int f(x) e^{i omega x} dx; throws UnsupportedError for bumps.
  double transform(double omega) const;

  /// Bound on sum_{|k| > terms} f(x + 2 pi k) over x in [0, 2pi).
  double tail_bound(int terms) const;
  /// Points of [0, 2pi) where the periodization is not smooth.
  std::vector<double> breakpoints() const;

 private:
  Family family_ = Family::gaussian;
  double amplitude_ = 0.0;
  double sigma_ = 1.0;
  double center_ = 0.0;
  double width_ = 1.0;
};

inline constexpr double kOvershootTolerance = 1e-9;

struct Periodization {
  SchwartzFunction source;
  int terms = 0;
  double truncation_bound = 0.0;
  double max_value = 0.0;
  std::vector<double> samples;  // on the grid 2 pi j / N
  std::vector<std::string> warnings;

  /// sum_{|k| <= terms} f(x + 2 pi k), unclipped.
  double operator()(double x) const;
  /// The periodization as a fuzzy set: values above 1 by at most the
  /// overshoot tolerance are clipped, larger excursions throw DomainError.
  MembershipFunction membership() const;
  /// Sample values in the MembershipFunction sample format (clipped as above).
  MembershipFunction sampled() const;
};

/// Default number of translates on each side; raised automatically until the
/// tail bound drops below tail_tolerance when auto_terms is set.
inline constexpr int kDefaultTerms = 16;

Periodization periodize(const SchwartzFunction& f, int terms = kDefaultTerms, int grid = 1024,
                        bool auto_terms = true, double tail_tolerance = kQuadratureTolerance);

struct PoissonReport {
  std::vector<cplx> quadrature;   // c_k of the periodization, k = 0..max_k
  std::vector<cplx> closed_form;  // (1/2pi) f^(k)
  std::vector<double> residuals;
  double max_residual = 0.0;
};

/// Compares the periodization's coefficients with the sampled line transform.
PoissonReport poisson_check(const SchwartzFunction& f, int max_k, int terms = kDefaultTerms,
                            const QuadratureConfig& q = {});

/// Defuzzifies the periodization. When the family has a closed-form transform
/// the residuals are taken against (1/2pi) f^(k); otherwise against quadrature.
ReconstructionResult defuzz_on_line(const SchwartzFunction& f, int n, std::optional<double> lambda = std::nullopt,
                                    const DefuzzConfig& cfg = {}, int terms = kDefaultTerms);

}  // namespace fuzzyspec
