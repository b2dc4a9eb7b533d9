#include "fuzzyspec/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/detail/kernels.hpp"
#include "fuzzyspec/detail/unit_roots.hpp"
#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace detail {

std::vector<wide_complex> wide_roots(const std::vector<wide_complex>& ascending, const RootOptions& opts) {
  std::vector<cplx> guess_poly;
  for (const wide_complex& c : ascending) guess_poly.push_back(narrow(c));
  std::vector<wide_complex> roots;
  for (const cplx& r : polynomial_roots(guess_poly, opts).roots) roots.push_back(widen(r));
  const wide_real worst = aberth(ascending, roots, wide_real("1e-90"), 200);
  if (!(worst < wide_real("1e-40"))) throw NumericError("wide root polishing did not converge", static_cast<double>(worst));
  return roots;
}

}  // namespace detail

namespace {

void require_window(const NonlinearSpectrum& ns, int k) {
  if (k < 0) throw ValidationError("matrix index must be non-negative");
  if (k > ns.max_k()) {
    std::ostringstream os;
    os << "window too short: need s_0..s_" << k << ", have up to s_" << ns.max_k();
    throw ValidationError(os.str());
  }
}

ComplexMatrix to_eigen(const detail::Mat<cplx>& m) {
  ComplexMatrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

void check_order_precondition(const NonlinearSpectrum& ns, int n, double zero_tol) {
  if (n < 1) throw PreconditionError("order must be at least 1");
  require_window(ns, n);
  const ToeplitzAnalysis ta = determinant_sequence(ns, n);
  for (int k = 0; k < n; ++k) {
    if (!(ta.relative(k) > zero_tol)) {
      std::ostringstream os;
      os << "order-" << n << " precondition violated: D_" << k << " is not positive (relative " << ta.relative(k) << ")";
      throw PreconditionError(os.str());
    }
  }
  if (std::abs(ta.relative(n)) > zero_tol) {
    std::ostringstream os;
    os << "order-" << n << " precondition violated: D_" << n << " is not negligible (relative " << ta.relative(n) << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

ToeplitzMatrices build_matrices(const NonlinearSpectrum& ns, int k) {
  require_window(ns, k);
  return {to_eigen(detail::toeplitz_t(ns.s, k)), to_eigen(detail::toeplitz_w(ns.s, k))};
}

double ToeplitzAnalysis::identity_residual(int k) const {
  if (k < 1 || k > window) throw ValidationError("identity residual needs 1 <= k <= window");
  const double d_km2 = k >= 2 ? d[k - 2] : 1.0;
  const double scale = tol_scale[k - 1];
  const double lhs = d[k - 1] * d[k - 1] - d_km2 * d[k];
  const double diff = lhs - std::norm(f[k]);
  return scale > 0.0 ? diff / (scale * scale) : diff;
}

ToeplitzAnalysis determinant_sequence(const NonlinearSpectrum& ns, int window) {
  require_window(ns, window);
  ToeplitzAnalysis ta;
  ta.window = window;
  ta.f.push_back(cplx{1.0, 0.0});
  for (int k = 0; k <= window; ++k) {
    const detail::Mat<cplx> t = detail::toeplitz_t(ns.s, k);
    const cplx det = detail::lu_determinant(t);
    double gap = 0.0;
    if (k <= 4) gap = std::abs(det - detail::laplace_determinant(t));
    ta.d.push_back(det.real());
    ta.imag_residue.push_back(std::abs(det.imag()));
    ta.tol_scale.push_back(detail::hadamard_bound(t));
    ta.expansion_gap.push_back(gap);
    if (k >= 1) ta.f.push_back(detail::lu_determinant(detail::toeplitz_w(ns.s, k)));
  }
  return ta;
}

std::string OrderVerdict::describe() const {
  std::ostringstream os;
  if (finite)
    os << "finite order " << order << (degenerate ? " (zero sequence)" : "");
  else
    os << "infinite order up to " << order;
  return os.str();
}

OrderVerdict classify_order(const ToeplitzAnalysis& ta, double zero_tol) {
  if (!(zero_tol > 0.0)) throw ValidationError("zero tolerance must be positive");
  for (int k = 0; k <= ta.window; ++k) {
    if (ta.d[k] < -zero_tol * ta.tol_scale[k]) {
      std::ostringstream os;
      os << "D_" << k << " = " << ta.d[k] << " is negative: not the spectrum of a fuzzy set";
      throw InvalidSequenceError(os.str());
    }
  }
  OrderVerdict v;
  for (int k = 0; k <= ta.window; ++k) {
    if (ta.d[k] <= zero_tol * ta.tol_scale[k]) {
      v.finite = true;
      v.order = k;
      v.degenerate = k == 0;
      for (int j = k + 1; j <= ta.window; ++j)
        if (ta.d[j] > zero_tol * ta.tol_scale[j]) v.tail_violations.push_back(j);
      return v;
    }
  }
  v.order = ta.window;
  return v;
}

std::vector<cplx> node_polynomial(const NonlinearSpectrum& ns, int n, double zero_tol) {
  check_order_precondition(ns, n, zero_tol);
  return detail::node_polynomial_coefficients(ns.s, n);
}

UnitRootDecomposition unit_root_decompose(const NonlinearSpectrum& ns, int n, double zero_tol, double root_tol,
                                          const RootOptions& roots) {
  check_order_precondition(ns, n, zero_tol);
  using detail::wide_complex;
  std::vector<wide_complex> s;
  for (int k = 0; k <= n; ++k) s.push_back(detail::widen(ns.s[k]));
  const std::vector<wide_complex> alpha = detail::wide_roots(detail::node_polynomial_coefficients(s, n), roots);

  UnitRootDecomposition out;
  std::vector<wide_complex> projected;
  for (const wide_complex& a : alpha) {
    const detail::wide_real r = detail::cabs(a);
    out.radius_error = std::max(out.radius_error, std::abs(static_cast<double>(r) - 1.0));
    projected.push_back(a / r);
  }
  if (out.radius_error > root_tol)
    throw NumericError("root off the unit circle beyond tolerance", out.radius_error);
  std::sort(projected.begin(), projected.end(), [](const wide_complex& a, const wide_complex& b) {
    return wrap_angle(static_cast<double>(detail::carg(a))) < wrap_angle(static_cast<double>(detail::carg(b)));
  });
  const std::vector<wide_complex> mu = detail::vandermonde_weights(projected, s);
  for (int r = 0; r < n; ++r) {
    const double m = static_cast<double>(mu[r].real());
    if (!(m > 0.0)) {
      std::ostringstream os;
      os << "weight mu_" << r << " = " << m << " is not positive";
      throw InvalidSequenceError(os.str());
    }
    out.alpha.push_back(detail::narrow(projected[r]));
    out.mu.push_back(m);
  }
  for (int k = -(n - 1); k <= n - 1; ++k) {
    cplx model{0.0, 0.0};
    for (int r = 0; r < n; ++r) model += out.mu[r] * std::pow(out.alpha[r], k);
    out.residual = std::max(out.residual, std::abs(model - ns.at(k)));
  }
  return out;
}

cplx corner_cofactor(const NonlinearSpectrum& ns, int n) {
  if (n < 1) throw ValidationError("order must be at least 1");
  require_window(ns, std::max(n - 2, 0));
  std::vector<cplx> s = ns.s;
  if (static_cast<int>(s.size()) < n + 1) s.resize(n + 1);
  return detail::corner_cofactor(s, n);
}

Extension caratheodory_extend(const NonlinearSpectrum& ns, int n, double lambda, double zero_tol) {
  if (n < 1) throw ValidationError("order must be at least 1");
  require_window(ns, n - 1);
  std::vector<cplx> s(ns.s.begin(), ns.s.begin() + n);
  NonlinearSpectrum head{ns.c0, s};
  const ToeplitzAnalysis before = determinant_sequence(head, n - 1);
  for (int k = 0; k < n; ++k) {
    if (!(before.relative(k) > zero_tol)) {
      std::ostringstream os;
      os << "extension needs D_0..D_" << n - 1 << " > 0; D_" << k << " relative " << before.relative(k);
      throw PreconditionError(os.str());
    }
  }
  s.push_back(cplx{0.0, 0.0});
  const cplx a = detail::corner_cofactor(s, n);
  if (std::abs(a) == 0.0) throw NumericError("vanishing corner cofactor");
  Extension out;
  out.s_n = detail::cofactor_extension(s, n, lambda);
  s[n] = out.s_n;
  out.extended = NonlinearSpectrum{ns.c0, s};
  const ToeplitzAnalysis after = determinant_sequence(out.extended, n);
  out.d_n_relative = after.relative(n);
  out.phase_error = std::abs(std::remainder(std::arg(after.f[n]) - lambda, kTwoPi));
  return out;
}

}  // namespace fuzzyspec
