#include "fuzzyspec/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuzzyspec/detail/kernels.hpp"
#include "fuzzyspec/errors.hpp"

namespace fuzzyspec {

namespace {

constexpr double kMeanSlack = 1e-12;

void check_window(int available, int max_k) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  if (max_k > available) {
    std::ostringstream os;
    os << "window too short: max_k " << max_k << " exceeds available " << available;
    throw ValidationError(os.str());
  }
}

}  // namespace

HardySeries hardy_series(const HermitianSpectrum& s, double tol) {
  if (s.coeffs.empty()) throw ValidationError("empty spectrum");
  if (std::abs(s.coeffs[0].imag()) > tol) throw ValidationError("c_0 must be real");
  HardySeries h{s.coeffs};
  h.taylor[0] = s.coeffs[0].real();
  return h;
}

std::vector<cplx> exp_series_oracle(const HardySeries& h, int max_k) {
  check_window(static_cast<int>(h.taylor.size()) - 1, max_k);
  std::vector<cplx> g(max_k + 1);
  for (int k = 0; k <= max_k; ++k) g[k] = cplx{0.0, -kTwoPi} * h.taylor[k];
  std::vector<cplx> e(max_k + 1, cplx{0.0, 0.0});
  e[0] = std::exp(g[0]);
  for (int k = 1; k <= max_k; ++k) {
    cplx acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * g[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return e;
}

NonlinearSpectrum c_to_s(const HermitianSpectrum& c, int max_k) {
  check_window(c.max_k(), max_k);
  double c0 = c.coeffs[0].real();
  if (!(c0 >= -kMeanSlack && c0 <= 1.0 + kMeanSlack)) {
    std::ostringstream os;
    os << "c_0 = " << c0 << " outside [0, 1]";
    throw DomainError(os.str());
  }
  c0 = std::clamp(c0, 0.0, 1.0);
  NonlinearSpectrum out{c0, std::vector<cplx>(max_k + 1, cplx{0.0, 0.0})};
  // A mean of 0 or 1 forces f to vanish or be full almost everywhere.
  if (c0 == 0.0 || c0 == 1.0) return out;
  out.s = detail::c_to_s(c.coeffs, c0, max_k);
  return out;
}

HermitianSpectrum s_to_c(const NonlinearSpectrum& ns, int max_k) {
  check_window(ns.max_k(), max_k);
  if (std::abs(ns.s[0]) > 2.0 + kMeanSlack) throw DomainError("|s_0| > 2 has no fuzzy preimage");
  if (!(ns.c0 >= 0.0 && ns.c0 <= 1.0)) throw DomainError("c_0 outside [0, 1]");
  return HermitianSpectrum{detail::s_to_c(ns.s, ns.c0, max_k)};
}

HermitianSpectrum s_to_c(const std::vector<cplx>& s, Branch branch, int max_k) {
  if (s.empty()) throw ValidationError("empty nonlinear spectrum");
  return s_to_c(NonlinearSpectrum{c0_from_s0(s[0].real(), branch), s}, max_k);
}

double c0_from_s0(double s0, Branch branch) {
  if (std::abs(s0) > 2.0 + kMeanSlack) throw DomainError("|s_0| > 2 has no fuzzy preimage");
  if (s0 < -kMeanSlack) throw DomainError("s_0 < 0 has no fuzzy preimage");
  const double lower = std::asin(std::clamp(0.5 * s0, 0.0, 1.0)) / kPi;
  return branch == Branch::lower ? lower : 1.0 - lower;
}

NonlinearSpectrum nonlinear_from_exponential(const std::vector<cplx>& e, double c0) {
  NonlinearSpectrum out{c0, std::vector<cplx>(e.size(), cplx{0.0, 0.0})};
  if (e.empty()) return out;
  out.s[0] = 2.0 * std::sin(kPi * c0);
  const cplx factor = cplx{0.0, 1.0} * std::polar(1.0, kPi * c0);
  for (std::size_t k = 1; k < e.size(); ++k) out.s[k] = factor * e[k];
  return out;
}

std::vector<cplx> normalized_series(const NonlinearSpectrum& ns) {
  std::vector<cplx> out(ns.s.size(), cplx{0.0, 0.0});
  if (out.empty()) return out;
  out[0] = 1.0;
  const cplx factor = cplx{0.0, -1.0} * std::polar(1.0, kPi * ns.c0);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = factor * ns.s[k];
  return out;
}

}  // namespace fuzzyspec
