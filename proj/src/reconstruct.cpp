#include "fuzzyspec/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/detail/kernels.hpp"
#include "fuzzyspec/detail/unit_roots.hpp"
#include "fuzzyspec/errors.hpp"
#include "fuzzyspec/nonlinear.hpp"

namespace fuzzyspec {

namespace {

using detail::wide_complex;
using detail::wide_real;

// Below this relative size D_{n-1} carries no significant digits even in wide precision.
const wide_real kPrecisionFloor("1e-85");

double relative_det(const std::vector<wide_complex>& s, int k) {
  const detail::Mat<wide_complex> t = detail::toeplitz_t(s, k);
  const wide_real scale = detail::hadamard_bound(t);
  if (scale == 0) return 0.0;
  return static_cast<double>(detail::lu_determinant(t).real() / scale);
}

std::vector<double> residuals_against(const HermitianSpectrum& c, const HermitianSpectrum& chi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(std::abs(c.coeffs[k] - chi.coeffs[k]));
  return out;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

struct Built {
  ArcSystem arcs;
  std::vector<double> mu;
  double node_radius_error = 0.0;
  double end_radius_error = 0.0;
};

// Arcs from the nonlinear window s_0..s_m of an order-m sequence: left
// endpoints are the nodes, right endpoints the roots of the truncated product
// exp(-2 pi i h) * prod (1 - z alpha_r).
Built arcs_from_sequence(const std::vector<wide_complex>& s, double c0, int m, bool anchor, const DefuzzConfig& cfg) {
  Built out;
  std::vector<wide_complex> alpha = detail::wide_roots(detail::node_polynomial_coefficients(s, m), cfg.roots);
  for (wide_complex& a : alpha) {
    const wide_real r = detail::cabs(a);
    out.node_radius_error = std::max(out.node_radius_error, std::abs(static_cast<double>(r) - 1.0));
    a /= r;
  }
  if (out.node_radius_error > cfg.root_tolerance)
    throw NumericError("left-endpoint root off the unit circle", out.node_radius_error);

  std::vector<std::pair<double, wide_complex>> nodes;
  for (const wide_complex& a : alpha) nodes.emplace_back(wrap_angle(static_cast<double>(detail::carg(a))), a);
  if (anchor) {
    auto nearest = std::min_element(nodes.begin(), nodes.end(), [](const auto& l, const auto& r) {
      return std::abs(std::remainder(l.first, kTwoPi)) < std::abs(std::remainder(r.first, kTwoPi));
    });
    nearest->first = 0.0;
    nearest->second = wide_complex(1);
  }
  std::sort(nodes.begin(), nodes.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t r = 1; r < nodes.size(); ++r)
    if (!(nodes[r].first > nodes[r - 1].first)) throw ReconstructionError("repeated left endpoint", 0.0);

  std::vector<wide_complex> sorted;
  for (const auto& nd : nodes) sorted.push_back(nd.second);
  for (const wide_complex& w : detail::vandermonde_weights(sorted, s)) {
    const double mu = static_cast<double>(w.real());
    if (!(mu > 0.0)) {
      std::ostringstream os;
      os << "non-positive node weight " << mu << ": sequence is not of order " << m;
      throw InvalidSequenceError(os.str());
    }
    out.mu.push_back(mu);
  }

  const wide_real pi = detail::scalar_traits<wide_complex>::pi();
  const wide_real wc0(c0);
  std::vector<wide_complex> e(m + 1);
  e[0] = detail::unit<wide_complex>(-2 * pi * wc0);
  const wide_complex factor = wide_complex(0, -1) * detail::unit<wide_complex>(-pi * wc0);
  for (int k = 1; k <= m; ++k) e[k] = factor * s[k];
  std::vector<wide_complex> den{wide_complex(1)};
  for (const wide_complex& a : sorted) {
    std::vector<wide_complex> next(den.size() + 1, wide_complex(0));
    for (std::size_t i = 0; i < den.size(); ++i) {
      next[i] += den[i];
      next[i + 1] -= den[i] * a;
    }
    den = std::move(next);
  }
  std::vector<wide_complex> num(m + 1, wide_complex(0));
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= k; ++j) num[k] += e[k - j] * den[j];

  std::vector<double> ends;
  for (const wide_complex& z : detail::wide_roots(num, cfg.roots)) {
    const wide_real r = detail::cabs(z);
    out.end_radius_error = std::max(out.end_radius_error, std::abs(static_cast<double>(r) - 1.0));
    ends.push_back(wrap_angle(-static_cast<double>(detail::carg(z))));
  }
  if (out.end_radius_error > cfg.root_tolerance)
    throw NumericError("right-endpoint root off the unit circle", out.end_radius_error);
  if (static_cast<int>(ends.size()) != m) throw ReconstructionError("right-endpoint polynomial lost degree", 0.0);

  // Each gap (xi_r, xi_{r+1}) must receive exactly one right endpoint.
  std::vector<int> owner_count(m, 0);
  std::vector<double> eta(m, 0.0);
  for (double t : ends) {
    int r = m - 1;
    for (int q = 0; q < m; ++q)
      if (nodes[q].first < t) r = q;
    ++owner_count[r];
    eta[r] = t > nodes[r].first ? t : t + kTwoPi;
  }
  for (int r = 0; r < m; ++r) {
    if (owner_count[r] != 1) {
      std::ostringstream os;
      os << "endpoints do not interleave: " << owner_count[r] << " right endpoints after xi_" << r;
      throw ReconstructionError(os.str(), 0.0);
    }
  }
  std::vector<Arc> arcs;
  for (int r = 0; r < m; ++r) arcs.push_back({nodes[r].first, eta[r]});
  out.arcs = ArcSystem(std::move(arcs), 0.0);
  return out;
}

void finish(ReconstructionResult& res, const HermitianSpectrum& c, int n) {
  const HermitianSpectrum chi = crisp_spectrum(res.arcs, n - 1);
  res.residuals = residuals_against(c, chi, n);
  for (const Arc& a : res.arcs.arcs()) {
    if (a.eta - a.xi < kDegeneracyThreshold) {
      std::ostringstream os;
      os << "near-degenerate arc [" << a.xi << ", " << a.eta << "]";
      res.warnings.push_back(os.str());
    }
  }
  if (!res.arcs.empty()) {
    res.diagnostics.canonical_rotation = res.arcs[0].xi == 0.0 ? 0.0 : kTwoPi - res.arcs[0].xi;
    res.lambda = wrap_angle(res.arcs.xi_sum());
  }
  const double worst = res.max_residual();
  if (!(worst < res.tolerance)) {
    std::ostringstream os;
    os << "reconstructed arcs miss the spectrum: max residual " << worst << " >= " << res.tolerance;
    throw ReconstructionError(os.str(), worst);
  }
}

}  // namespace

double ReconstructionResult::max_residual() const { return max_of(residuals); }

ReconstructionResult defuzz_spectrum(const HermitianSpectrum& c, int n, std::optional<double> lambda,
                                     const DefuzzConfig& cfg, double tolerance) {
  if (n < 1) throw ValidationError("order n must be at least 1");
  if (c.max_k() < n - 1) throw ValidationError("spectrum window shorter than the order");
  if (lambda && !std::isfinite(*lambda)) throw ValidationError("lambda must be finite");
  ReconstructionResult res;
  res.match_window = n;
  res.tolerance = tolerance;
  res.anchored = !lambda.has_value();

  const double c0 = c.coeffs[0].real();
  if (!(c0 >= -cfg.degenerate_mean && c0 <= 1.0 + cfg.degenerate_mean)) throw DomainError("c_0 outside [0, 1]");
  if (c0 <= cfg.degenerate_mean || c0 >= 1.0 - cfg.degenerate_mean) {
    res.kind = c0 <= cfg.degenerate_mean ? CrispKind::empty : CrispKind::full;
    HermitianSpectrum chi{std::vector<cplx>(n, cplx{0.0, 0.0})};
    if (res.kind == CrispKind::full) chi.coeffs[0] = 1.0;
    res.residuals = residuals_against(c, chi, n);
    if (lambda) res.lambda = *lambda;
    if (!(res.max_residual() < tolerance))
      throw ReconstructionError("degenerate mean but non-degenerate spectrum", res.max_residual());
    return res;
  }

  std::vector<wide_complex> cw;
  for (int k = 0; k < n; ++k) cw.push_back(detail::widen(c.coeffs[k]));
  cw[0] = wide_complex(wide_real(c0));
  std::vector<wide_complex> s = detail::c_to_s(cw, wide_real(c0), n - 1);

  for (int k = 0; k < n; ++k) {
    const double rel = relative_det(s, k);
    if (rel < -cfg.saturation) {
      std::ostringstream os;
      os << "D_" << k << " negative (relative " << rel << "): coefficients are not those of a fuzzy set";
      throw InvalidSequenceError(os.str());
    }
    if (rel < cfg.saturation && k >= 1) {
      // Numerically crisp of order k already: an exact k-arc fit may match all n coefficients.
      try {
        std::vector<wide_complex> head(s.begin(), s.begin() + k + 1);
        Built b = arcs_from_sequence(head, c0, k, false, cfg);
        ReconstructionResult fit = res;
        fit.arcs = std::move(b.arcs);
        fit.diagnostics.mu = std::move(b.mu);
        fit.diagnostics.node_radius_error = b.node_radius_error;
        fit.diagnostics.end_radius_error = b.end_radius_error;
        fit.diagnostics.saturated = true;
        for (int j = 0; j < n; ++j) fit.diagnostics.d_relative.push_back(relative_det(s, j));
        fit.warnings.push_back("input is numerically crisp of order " + std::to_string(k));
        finish(fit, c, n);
        return fit;
      } catch (const Error&) {
        // fall through to the regular extension
      }
      break;
    }
  }

  {
    const detail::Mat<wide_complex> t = detail::toeplitz_t(s, n - 1);
    const wide_real rel = detail::lu_determinant(t).real() / detail::hadamard_bound(t);
    if (rel < kPrecisionFloor)
      throw NumericError("Toeplitz determinants exhausted working precision", static_cast<double>(rel));
  }

  s.push_back(wide_complex(0));
  wide_complex s_n;
  if (lambda) {
    s_n = detail::cofactor_extension(s, n, wide_real(*lambda));
  } else if (!detail::anchored_extension(s, n, s_n)) {
    throw NumericError("anchored extension is singular");
  }
  s[n] = s_n;

  Built b = arcs_from_sequence(s, c0, n, !lambda.has_value(), cfg);
  res.arcs = std::move(b.arcs);
  res.diagnostics.mu = std::move(b.mu);
  res.diagnostics.node_radius_error = b.node_radius_error;
  res.diagnostics.end_radius_error = b.end_radius_error;
  for (int k = 0; k <= n; ++k) res.diagnostics.d_relative.push_back(relative_det(s, k));
  finish(res, c, n);
  if (lambda) res.lambda = wrap_angle(*lambda);
  return res;
}

ReconstructionResult defuzz(const MembershipFunction& f, int n, std::optional<double> lambda, const DefuzzConfig& cfg) {
  if (n < 1) throw ValidationError("order n must be at least 1");
  double tol = cfg.match_tolerance;
  if (tol <= 0.0) {
    const bool closed_form = cfg.quadrature.rule == QuadratureRule::piecewise_exact && f.segments().has_value();
    tol = closed_form ? kClosedFormMatchTolerance : kQuadratureMatchTolerance;
  }
  const HermitianSpectrum c = fourier_coefficients(f, n - 1, cfg.quadrature);
  return defuzz_spectrum(c, n, lambda, cfg, tol);
}

std::vector<SweepEntry> approximation_sequence(const MembershipFunction& f, int n_max, const DefuzzConfig& cfg) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  std::vector<SweepEntry> out;
  for (int n = 1; n <= n_max; ++n) {
    SweepEntry e;
    e.n = n;
    try {
      e.result = defuzz(f, n, std::nullopt, cfg);
    } catch (const Error& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

MatchReport verify_match(const MembershipFunction& f, const ArcSystem& arcs, int n, const QuadratureConfig& q) {
  if (n < 1) throw ValidationError("window n must be at least 1");
  const HermitianSpectrum c = fourier_coefficients(f, n - 1, q);
  const HermitianSpectrum chi = crisp_spectrum(arcs, n - 1);
  MatchReport report;
  report.residuals = residuals_against(c, chi, n);
  report.max_residual = max_of(report.residuals);
  return report;
}

}  // namespace fuzzyspec
