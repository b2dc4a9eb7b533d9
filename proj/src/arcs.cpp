#include "fuzzyspec/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace {

std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// prod_r (1 - z e^{i theta_r}) in ascending powers of z.
std::vector<cplx> unit_factor_product(const std::vector<double>& angles) {
  std::vector<cplx> poly{cplx{1.0, 0.0}};
  for (double th : angles) poly = multiply(poly, {cplx{1.0, 0.0}, -std::polar(1.0, th)});
  return poly;
}

}  // namespace

ArcSystem::ArcSystem(std::vector<Arc> arcs, double min_length) : arcs_(std::move(arcs)) {
  auto fail = [](int r, const std::string& msg) {
    std::ostringstream os;
    os << "arc " << r << ": " << msg;
    throw ValidationError(os.str());
  };
  for (std::size_t r = 0; r < arcs_.size(); ++r) {
    const Arc& a = arcs_[r];
    if (!std::isfinite(a.xi) || !std::isfinite(a.eta)) fail(static_cast<int>(r), "non-finite endpoint");
    if (!(a.eta > a.xi) || a.eta - a.xi < min_length)
      fail(static_cast<int>(r), "degenerate arc (eta - xi below threshold)");
    if (r > 0 && !(a.xi > arcs_[r - 1].eta))
      fail(static_cast<int>(r), "arcs must be disjoint and increasing");
  }
  if (!arcs_.empty()) {
    if (arcs_.front().xi < 0.0 || arcs_.front().xi >= kTwoPi)
      fail(0, "first left endpoint must lie in [0, 2pi)");
    if (!(arcs_.back().eta < arcs_.front().xi + kTwoPi))
      fail(size() - 1, "arcs overlap across the 2pi wrap");
  }
}

ArcSystem ArcSystem::from_endpoints(std::span<const double> xi, std::span<const double> eta,
                                    double min_length) {
  if (xi.size() != eta.size()) throw ValidationError("xi and eta must have equal length");
  std::vector<Arc> arcs;
  arcs.reserve(xi.size());
  for (std::size_t r = 0; r < xi.size(); ++r) arcs.push_back({xi[r], eta[r]});
  return ArcSystem(std::move(arcs), min_length);
}

double ArcSystem::mean() const {
  double total = 0.0;
  for (const Arc& a : arcs_) total += a.eta - a.xi;
  return total / kTwoPi;
}

double ArcSystem::min_arc_length() const {
  double m = kTwoPi;
  for (const Arc& a : arcs_) m = std::min(m, a.eta - a.xi);
  return m;
}

double ArcSystem::min_gap() const {
  if (arcs_.empty()) return kTwoPi;
  double m = arcs_.front().xi + kTwoPi - arcs_.back().eta;
  for (std::size_t r = 1; r < arcs_.size(); ++r) m = std::min(m, arcs_[r].xi - arcs_[r - 1].eta);
  return m;
}

double ArcSystem::xi_sum() const {
  double s = 0.0;
  for (const Arc& a : arcs_) s += a.xi;
  return s;
}

bool ArcSystem::contains(double t) const {
  if (arcs_.empty()) return false;
  const double base = arcs_.front().xi;
  double u = base + wrap_angle(t - base);
  // Closed arc across the wrap: the point base + 2pi is the same as base.
  for (const Arc& a : arcs_)
    if (u >= a.xi && u <= a.eta) return true;
  return false;
}

ArcSystem ArcSystem::rotated(double angle) const {
  if (arcs_.empty()) return *this;
  std::vector<Arc> moved;
  moved.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    const double start = wrap_angle(a.xi + angle);
    moved.push_back({start, start + (a.eta - a.xi)});
  }
  std::sort(moved.begin(), moved.end(), [](const Arc& l, const Arc& r) { return l.xi < r.xi; });
  return ArcSystem(std::move(moved), 0.0);
}

ArcSystem ArcSystem::canonical() const {
  if (arcs_.empty()) return *this;
  std::vector<Arc> moved;
  moved.reserve(arcs_.size());
  const double base = arcs_.front().xi;
  for (const Arc& a : arcs_) moved.push_back({a.xi - base, a.eta - base});
  moved.front().xi = 0.0;
  return ArcSystem(std::move(moved), 0.0);
}

HermitianSpectrum crisp_spectrum(const ArcSystem& arcs, int max_k) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  HermitianSpectrum out;
  out.coeffs.assign(max_k + 1, cplx{0.0, 0.0});
  out.coeffs[0] = arcs.mean();
  for (int k = 1; k <= max_k; ++k) {
    cplx acc{0.0, 0.0};
    for (const Arc& a : arcs.arcs()) {
      // (e^{ik eta} - e^{ik xi}) / (2pi k i), written to stay accurate for short arcs.
      const double half = 0.5 * (a.eta - a.xi);
      const double mid = 0.5 * (a.eta + a.xi);
      acc += std::polar(std::sin(k * half) / (kPi * k), k * mid);
    }
    out.coeffs[k] = acc;
  }
  return out;
}

double TrigPolynomial::operator()(double x) const {
  cplx acc{0.0, 0.0};
  for (int k = -degree; k <= degree; ++k) acc += coefficient(k) * std::polar(1.0, k * x);
  return acc.real();
}

TrigPolynomial sign_polynomial(const ArcSystem& arcs) {
  const int n = arcs.size();
  // prod_e sin((x-e)/2) = (2i)^{-2n} e^{-inx} prod_e (e^{-ie/2} w - e^{ie/2}), w = e^{ix}.
  std::vector<cplx> q{cplx{1.0, 0.0}};
  for (const Arc& a : arcs.arcs()) {
    for (double e : {a.xi, a.eta}) q = multiply(q, {-std::polar(1.0, 0.5 * e), std::polar(1.0, -0.5 * e)});
  }
  TrigPolynomial p;
  p.degree = n;
  p.coeffs.resize(2 * n + 1);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // -4^n / (2i)^{2n} = -(-1)^n
  for (int k = -n; k <= n; ++k) p.coeffs[k + n] = sign * q[k + n];
  return p;
}

double sign_polynomial_product(const ArcSystem& arcs, double x) {
  double prod = -1.0;
  for (const Arc& a : arcs.arcs()) prod *= 4.0 * std::sin(0.5 * (x - a.xi)) * std::sin(0.5 * (x - a.eta));
  return prod;
}

std::vector<cplx> rational_expansion(const ArcSystem& arcs, int max_k) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  std::vector<double> xi, eta;
  for (const Arc& a : arcs.arcs()) {
    xi.push_back(a.xi);
    eta.push_back(a.eta);
  }
  const std::vector<cplx> num = unit_factor_product(eta);
  const std::vector<cplx> den = unit_factor_product(xi);
  std::vector<cplx> out(max_k + 1, cplx{0.0, 0.0});
  for (int k = 0; k <= max_k; ++k) {
    cplx acc = k < static_cast<int>(num.size()) ? num[k] : cplx{0.0, 0.0};
    for (int j = 1; j <= std::min<int>(k, static_cast<int>(den.size()) - 1); ++j) acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

}  // namespace fuzzyspec
