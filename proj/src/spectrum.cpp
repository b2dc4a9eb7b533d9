#include "fuzzyspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace {

double sinc(double x) { return std::abs(x) < 1e-4 ? 1.0 - x * x / 6.0 + x * x * x * x / 120.0 : std::sin(x) / x; }

// (sin x - x cos x) / x^3, which loses all digits to cancellation near 0.
double odd_moment(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0;
  }
  return (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

// int_{t0}^{t1} v(t) e^{ikt} dt for the linear piece.
cplx segment_integral(const Segment& s, int k) {
  const double a = 0.5 * (s.t1 - s.t0);
  const double mid = 0.5 * (s.t1 + s.t0);
  const double vm = 0.5 * (s.v0 + s.v1);
  const double dv = 0.5 * (s.v1 - s.v0);
  if (k == 0) return vm * 2.0 * a;
  const double x = k * a;
  const cplx body{vm * 2.0 * a * sinc(x), 2.0 * dv * a * a * k * odd_moment(x)};
  return std::polar(1.0, k * mid) * body;
}

HermitianSpectrum exact_coefficients(const std::vector<Segment>& segs, int max_k) {
  HermitianSpectrum out;
  out.coeffs.assign(max_k + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= max_k; ++k) {
    cplx acc{0.0, 0.0};
    for (const Segment& s : segs) acc += segment_integral(s, k);
    out.coeffs[k] = acc / kTwoPi;
  }
  out.coeffs[0] = out.coeffs[0].real();
  return out;
}

std::vector<double> partition(std::span<const double> breakpoints) {
  std::vector<double> cuts{0.0};
  std::vector<double> inner(breakpoints.begin(), breakpoints.end());
  std::sort(inner.begin(), inner.end());
  for (double b : inner)
    if (b > cuts.back() + 1e-12 && b < kTwoPi - 1e-12) cuts.push_back(b);
  cuts.push_back(kTwoPi);
  return cuts;
}

std::vector<cplx> simpson_pass(const std::function<double(double)>& fn, const std::vector<double>& cuts,
                               const std::vector<int>& panels, int max_k) {
  std::vector<cplx> acc(max_k + 1, cplx{0.0, 0.0});
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double a = cuts[p];
    const double b = cuts[p + 1];
    const int m = panels[p];
    const double h = (b - a) / m;
    // Piece endpoints are sampled slightly inside so one-sided limits are used at jumps.
    const double nudge = 1e-13 * (b - a);
    for (int j = 0; j <= m; ++j) {
      const double t = a + j * h;
      const double weight = (j == 0 || j == m) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      double probe = t;
      if (j == 0) probe = std::max(a + nudge, std::nextafter(a, b));
      if (j == m) probe = std::min(b - nudge, std::nextafter(b, a));
      const double v = fn(probe) * weight * h / 3.0;
      const cplx step = std::polar(1.0, t);
      cplx phase{1.0, 0.0};
      for (int k = 0; k <= max_k; ++k) {
        acc[k] += v * phase;
        phase *= step;
      }
    }
  }
  for (cplx& c : acc) c /= kTwoPi;
  return acc;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(tolerance > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  if (panels < 1) throw ValidationError("quadrature panels must be positive");
  if (rule == QuadratureRule::composite_simpson && (panels < 8 || panels % 2 != 0))
    throw ValidationError("Simpson quadrature needs an even panel count of at least 8");
  if (max_panels < panels) throw ValidationError("max_panels below the initial panel count");
}

HermitianSpectrum simpson_coefficients(const std::function<double(double)>& fn,
                                       std::span<const double> breakpoints, int max_k,
                                       const QuadratureConfig& q) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  const std::vector<double> cuts = partition(breakpoints);
  const std::size_t pieces = cuts.size() - 1;
  const int base = std::max(q.panels, 8);
  std::vector<int> panels(pieces);
  for (std::size_t p = 0; p < pieces; ++p) {
    const double share = (cuts[p + 1] - cuts[p]) / kTwoPi;
    int m = std::max(2, static_cast<int>(std::ceil(base * share)));
    panels[p] = m + (m % 2);
  }
  std::vector<cplx> prev = simpson_pass(fn, cuts, panels, max_k);
  double change = 0.0;
  for (;;) {
    long total = 0;
    for (int& m : panels) total += (m *= 2);
    if (total > q.max_panels)
      throw NumericError("quadrature did not converge within the panel budget", change);
    std::vector<cplx> next = simpson_pass(fn, cuts, panels, max_k);
    change = 0.0;
    for (int k = 0; k <= max_k; ++k) change = std::max(change, std::abs(next[k] - prev[k]));
    prev = std::move(next);
    if (change < q.tolerance) break;
  }
  HermitianSpectrum out;
  out.coeffs = std::move(prev);
  out.coeffs[0] = out.coeffs[0].real();
  return out;
}

HermitianSpectrum fourier_coefficients(const MembershipFunction& f, int max_k, const QuadratureConfig& q) {
  q.validate();
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  if (q.rule == QuadratureRule::piecewise_exact) {
    if (f.arc_system()) return crisp_spectrum(*f.arc_system(), max_k);
    if (f.segments()) return exact_coefficients(*f.segments(), max_k);
  }
  return simpson_coefficients([&f](double t) { return f(t); }, f.breakpoints(), max_k, q);
}

double mean_square(const MembershipFunction& f, const QuadratureConfig& q) {
  q.validate();
  if (q.rule == QuadratureRule::piecewise_exact && f.segments()) {
    double acc = 0.0;
    for (const Segment& s : *f.segments())
      acc += (s.t1 - s.t0) * (s.v0 * s.v0 + s.v0 * s.v1 + s.v1 * s.v1) / 3.0;
    return acc / kTwoPi;
  }
  auto sq = [&f](double t) {
    const double v = f(t);
    return v * v;
  };
  return simpson_coefficients(sq, f.breakpoints(), 0, q).coeffs[0].real();
}

ValidationReport validate_fuzzy_spectrum(const HermitianSpectrum& s, double tol) {
  ValidationReport report;
  for (int k = 0; k <= s.max_k(); ++k) {
    BoundCheck check{k, 0.0, 0.0, true};
    if (k == 0) {
      const cplx c0 = s.coeffs[0];
      check.value = c0.real();
      check.margin = std::min(c0.real(), 1.0 - c0.real());
      check.pass = check.margin >= -tol && std::abs(c0.imag()) <= tol;
    } else {
      check.value = std::abs(s.coeffs[k]);
      check.margin = kCoefficientBound - check.value;
      check.pass = check.margin >= -tol;
    }
    report.pass = report.pass && check.pass;
    report.entries.push_back(check);
  }
  return report;
}

double parseval_residual(const MembershipFunction& f, int max_k, const QuadratureConfig& q) {
  const HermitianSpectrum c = fourier_coefficients(f, max_k, q);
  double energy = c.coeffs[0].real() * c.coeffs[0].real();
  for (int k = 1; k <= max_k; ++k) energy += 2.0 * std::norm(c.coeffs[k]);
  return mean_square(f, q) - energy;
}

}  // namespace fuzzyspec
