#include "fuzzyspec/periodize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace {

QuadratureConfig simpson_of(const QuadratureConfig& q) {
  QuadratureConfig out = q;
  out.rule = QuadratureRule::composite_simpson;
  if (out.panels < 8) out.panels = 8;
  out.panels += out.panels % 2;
  return out;
}

}  // namespace

SchwartzFunction SchwartzFunction::gaussian(double amplitude, double sigma) {
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) throw ValidationError("gaussian amplitude must lie in [0, 1]");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ValidationError("gaussian sigma must be positive");
  SchwartzFunction f;
  f.family_ = Family::gaussian;
  f.amplitude_ = amplitude;
  f.sigma_ = sigma;
  return f;
}

SchwartzFunction SchwartzFunction::bump(double center, double width, double height) {
  if (!(height >= 0.0 && height <= 1.0)) throw ValidationError("bump height must lie in [0, 1]");
  if (!(width > 0.0) || !std::isfinite(width)) throw ValidationError("bump width must be positive");
  if (!std::isfinite(center)) throw ValidationError("bump center must be finite");
  SchwartzFunction f;
  f.family_ = Family::bump;
  f.amplitude_ = height;
  f.center_ = center;
  f.width_ = width;
  return f;
}

std::string SchwartzFunction::name() const { return family_ == Family::gaussian ? "gaussian" : "bump"; }

double SchwartzFunction::operator()(double x) const {
  if (family_ == Family::gaussian) return amplitude_ * std::exp(-x * x / (2.0 * sigma_ * sigma_));
  const double u = (x - center_) / width_;
  if (std::abs(u) >= 1.0) return 0.0;
  return amplitude_ * std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double SchwartzFunction::transform(double omega) const {
  if (family_ != Family::gaussian) throw UnsupportedError("no closed-form line transform for the " + name() + " family");
  return amplitude_ * sigma_ * std::sqrt(kTwoPi) * std::exp(-0.5 * sigma_ * sigma_ * omega * omega);
}

double SchwartzFunction::tail_bound(int terms) const {
  if (terms < 1) throw ValidationError("terms must be at least 1");
  if (family_ == Family::gaussian) {
    // The nearest omitted translate is at distance >= 2 pi terms; successive ones decay geometrically.
    const double a = 2.0 * sigma_ * sigma_;
    const double d = kTwoPi * terms;
    const double ratio = std::exp(-kTwoPi * kTwoPi * (2.0 * terms + 1.0) / a);
    return 2.0 * amplitude_ * std::exp(-d * d / a) / (1.0 - ratio);
  }
  // Translates k whose support meets [0, 2pi).
  const double lo = std::floor((center_ - width_ - kTwoPi) / kTwoPi);
  const double hi = std::ceil((center_ + width_) / kTwoPi);
  const double reach = std::max(std::abs(lo), std::abs(hi));
  return reach <= terms ? 0.0 : amplitude_;
}

std::vector<double> SchwartzFunction::breakpoints() const {
  if (family_ == Family::gaussian) return {};
  if (width_ >= kPi) return {};
  return {wrap_angle(center_ - width_), wrap_angle(center_ + width_)};
}

double Periodization::operator()(double x) const {
  double acc = 0.0;
  for (int k = -terms; k <= terms; ++k) acc += source(x + kTwoPi * k);
  return acc;
}

MembershipFunction Periodization::membership() const {
  if (max_value > 1.0 + kOvershootTolerance) {
    std::ostringstream os;
    os << "periodization reaches " << max_value << " > 1: not a fuzzy set";
    throw DomainError(os.str());
  }
  Periodization copy = *this;
  auto fn = [copy](double t) { return std::clamp(copy(t), 0.0, 1.0); };
  return MembershipFunction::analytic("periodized " + source.name(), fn, source.breakpoints());
}

MembershipFunction Periodization::sampled() const {
  if (max_value > 1.0 + kOvershootTolerance) {
    std::ostringstream os;
    os << "periodization reaches " << max_value << " > 1: not a fuzzy set";
    throw DomainError(os.str());
  }
  std::vector<double> v = samples;
  for (double& x : v) x = std::clamp(x, 0.0, 1.0);
  return MembershipFunction::samples(std::move(v));
}

Periodization periodize(const SchwartzFunction& f, int terms, int grid, bool auto_terms, double tail_tolerance) {
  if (terms < 1) throw ValidationError("terms must be at least 1");
  if (grid < 1) throw ValidationError("grid size must be positive");
  Periodization p;
  p.source = f;
  p.terms = terms;
  while (auto_terms && f.tail_bound(p.terms) > tail_tolerance && p.terms < (1 << 16)) p.terms *= 2;
  p.truncation_bound = f.tail_bound(p.terms);
  p.samples.resize(grid);
  p.max_value = 0.0;
  for (int j = 0; j < grid; ++j) {
    p.samples[j] = p(kTwoPi * j / grid);
    p.max_value = std::max(p.max_value, p.samples[j]);
  }
  // The gaussian peaks at 0 (a grid point); the bump peaks at its center.
  if (f.family() == SchwartzFunction::Family::bump) p.max_value = std::max(p.max_value, p(wrap_angle(f.center())));
  if (p.max_value > 1.0 + kOvershootTolerance) {
    p.warnings.push_back("periodization exceeds 1: overlapping translates");
  } else if (p.max_value > 1.0) {
    p.warnings.push_back("periodization exceeds 1 within tolerance; values are clipped");
  }
  return p;
}

PoissonReport poisson_check(const SchwartzFunction& f, int max_k, int terms, const QuadratureConfig& q) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  if (!f.has_transform()) throw UnsupportedError("no closed-form line transform for the " + f.name() + " family");
  const Periodization p = periodize(f, terms, 8);
  const std::vector<double> br = f.breakpoints();
  const HermitianSpectrum c = simpson_coefficients([&p](double t) { return p(t); }, br, max_k, simpson_of(q));
  PoissonReport report;
  report.quadrature = c.coeffs;
  for (int k = 0; k <= max_k; ++k) {
    const cplx closed = f.transform(static_cast<double>(k)) / kTwoPi;
    report.closed_form.push_back(closed);
    report.residuals.push_back(std::abs(c.coeffs[k] - closed));
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  return report;
}

ReconstructionResult defuzz_on_line(const SchwartzFunction& f, int n, std::optional<double> lambda,
                                    const DefuzzConfig& cfg, int terms) {
  if (n < 1) throw ValidationError("order n must be at least 1");
  const Periodization p = periodize(f, terms);
  const MembershipFunction m = p.membership();
  DefuzzConfig local = cfg;
  local.quadrature = simpson_of(cfg.quadrature);
  const double tol = cfg.match_tolerance > 0.0 ? cfg.match_tolerance : kQuadratureMatchTolerance;
  const HermitianSpectrum c = fourier_coefficients(m, n - 1, local.quadrature);
  ReconstructionResult res = defuzz_spectrum(c, n, lambda, local, tol);
  for (const std::string& w : p.warnings) res.warnings.push_back(w);
  if (f.has_transform()) {
    HermitianSpectrum line;
    for (int k = 0; k < n; ++k) line.coeffs.push_back(f.transform(static_cast<double>(k)) / kTwoPi);
    HermitianSpectrum chi{std::vector<cplx>(n, cplx{0.0, 0.0})};
    if (res.kind == CrispKind::arcs) chi = crisp_spectrum(res.arcs, n - 1);
    if (res.kind == CrispKind::full) chi.coeffs[0] = 1.0;
    for (int k = 0; k < n; ++k) res.residuals[k] = std::abs(line.coeffs[k] - chi.coeffs[k]);
  }
  return res;
}

}  // namespace fuzzyspec
