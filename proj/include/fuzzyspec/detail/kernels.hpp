#pragma once

// Algorithms shared by the double-precision public API and the wide-precision
// reconstruction pipeline. C is std::complex<double> or wide_complex.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fuzzyspec/detail/wide.hpp"

namespace fuzzyspec::detail {

template <class C>
using real_t = typename scalar_traits<C>::real;

template <class C>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<C> a;

  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, C(0)) {}
  C& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const C& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

template <class C>
C cconj(const C& z) {
  return C(z.real(), -z.imag());
}

template <class C>
real_t<C> cabs(const C& z) {
  using std::abs;
  return abs(z);
}

template <class C>
real_t<C> carg(const C& z) {
  using std::atan2;
  return atan2(z.imag(), z.real());
}

template <class C>
C unit(const real_t<C>& theta) {
  using std::cos;
  using std::sin;
  return C(cos(theta), sin(theta));
}

/// s_j for any integer j from the stored window s_0.. via s_{-j} = conj(s_j).
template <class C>
C hermitian(const std::vector<C>& s, int j) {
  return j >= 0 ? s.at(j) : cconj(s.at(-j));
}

template <class C>
std::vector<C> c_to_s(const std::vector<C>& c, const real_t<C>& c0, int max_k) {
  using R = real_t<C>;
  using std::cos;
  using std::sin;
  const R pi = scalar_traits<C>::pi();
  const R two_pi = pi * 2;
  const C phase(cos(pi * c0), -sin(pi * c0));
  const C i(R(0), R(1));
  std::vector<C> s(max_k + 1, C(0));
  s[0] = C(sin(pi * c0) * 2, R(0));
  for (int k = 1; k <= max_k; ++k) {
    C acc(0);
    for (int r = 1; r < k; ++r) acc += (R(1) - R(r) / R(k)) * c[k - r] * s[r];
    s[k] = two_pi * (phase * c[k] - i * acc);
  }
  return s;
}

template <class C>
std::vector<C> s_to_c(const std::vector<C>& s, const real_t<C>& c0, int max_k) {
  using R = real_t<C>;
  using std::cos;
  using std::sin;
  const R pi = scalar_traits<C>::pi();
  const R two_pi = pi * 2;
  const C phase(cos(pi * c0), sin(pi * c0));
  const C i(R(0), R(1));
  std::vector<C> c(max_k + 1, C(0));
  c[0] = C(c0, R(0));
  for (int k = 1; k <= max_k; ++k) {
    C acc(0);
    for (int r = 1; r < k; ++r) acc += (R(1) - R(r) / R(k)) * c[k - r] * s[r];
    c[k] = phase * (s[k] / two_pi + i * acc);
  }
  return c;
}

/// T_k: (k+1) x (k+1), entry (i, j) = s_{j-i}.
template <class C>
Mat<C> toeplitz_t(const std::vector<C>& s, int k) {
  Mat<C> m(k + 1, k + 1);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) m(i, j) = hermitian(s, j - i);
  return m;
}

/// W_k: T_k without its first column and last row, entry (i, j) = s_{1-i+j}.
template <class C>
Mat<C> toeplitz_w(const std::vector<C>& s, int k) {
  Mat<C> m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = hermitian(s, 1 - i + j);
  return m;
}

template <class C>
C lu_determinant(Mat<C> m) {
  const int n = m.rows;
  C det(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (cabs(m(r, col)) > cabs(m(piv, col))) piv = r;
    if (cabs(m(piv, col)) == 0) return C(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const C f = m(r, col) / m(col, col);
      for (int j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

/// Cofactor expansion along the first row; meant for small matrices only.
template <class C>
C laplace_determinant(const Mat<C>& m) {
  const int n = m.rows;
  if (n == 0) return C(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  C det(0);
  for (int j = 0; j < n; ++j) {
    Mat<C> minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const C term = m(0, j) * laplace_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

/// Product of the Euclidean row norms, an upper bound for |det|.
template <class C>
real_t<C> hadamard_bound(const Mat<C>& m) {
  using std::sqrt;
  real_t<C> bound(1);
  for (int i = 0; i < m.rows; ++i) {
    real_t<C> row(0);
    for (int j = 0; j < m.cols; ++j) {
      const C& z = m(i, j);
      row += z.real() * z.real() + z.imag() * z.imag();
    }
    bound *= sqrt(row);
  }
  return bound;
}

/// Gaussian elimination with partial pivoting; throws on an exactly singular pivot.
template <class C>
std::vector<C> solve(Mat<C> m, std::vector<C> b) {
  const int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (cabs(m(r, col)) > cabs(m(piv, col))) piv = r;
    if (cabs(m(piv, col)) == 0) throw std::domain_error("singular linear system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const C f = m(r, col) / m(col, col);
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<C> x(n, C(0));
  for (int r = n - 1; r >= 0; --r) {
    C acc = b[r];
    for (int j = r + 1; j < n; ++j) acc -= m(r, j) * x[j];
    x[r] = acc / m(r, r);
  }
  return x;
}

/// Coefficients (ascending powers of z) of the determinant whose first row is
/// 1, z, ..., z^n and whose row r = 1..n holds s_{j-r+1}, j = 0..n.
template <class C>
std::vector<C> node_polynomial_coefficients(const std::vector<C>& s, int n) {
  std::vector<C> p(n + 1, C(0));
  for (int j = 0; j <= n; ++j) {
    Mat<C> minor(n, n);
    for (int r = 1; r <= n; ++r)
      for (int c = 0, cc = 0; c <= n; ++c)
        if (c != j) minor(r - 1, cc++) = hermitian(s, c - r + 1);
    const C d = lu_determinant(std::move(minor));
    p[j] = (j % 2 == 0) ? d : -d;
  }
  return p;
}

/// Cofactor of the corner entry s_n in F_n = det W_n: (-1)^{n-1} D_{n-2}.
template <class C>
C corner_cofactor(const std::vector<C>& s, int n) {
  if (n == 1) return C(1);
  const C d = lu_determinant(toeplitz_t(s, n - 2));
  return (n % 2 == 0) ? -C(d.real()) : C(d.real());
}

/// s_n making D_n vanish with arg F_n = lambda; s must hold indices 0..n
/// (the entry at n is ignored).
template <class C>
C cofactor_extension(std::vector<C> s, int n, const real_t<C>& lambda) {
  s.at(n) = C(0);
  const C b = lu_determinant(toeplitz_w(s, n));
  const C a = corner_cofactor(s, n);
  const real_t<C> d_prev = lu_determinant(toeplitz_t(s, n - 1)).real();
  return (d_prev * unit<C>(lambda) - b) / a;
}

/// s_n for which z = 1 is a root of the order-n polynomial, i.e. the flat
/// extension with a node at angle 0. Returns false when the value of the
/// polynomial at 1 does not depend on s_n.
template <class C>
bool anchored_extension(std::vector<C> s, int n, C& out) {
  auto at_one = [&](const C& value) {
    s.at(n) = value;
    C total(0);
    for (const C& p : node_polynomial_coefficients(s, n)) total += p;
    return total;
  };
  const C p0 = at_one(C(0));
  const C slope = at_one(C(1)) - p0;
  if (cabs(slope) == 0) return false;
  out = -p0 / slope;
  return true;
}

template <class C>
void horner(const std::vector<C>& p, const C& z, C& value, C& deriv) {
  value = C(0);
  deriv = C(0);
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    deriv = deriv * z + value;
    value = value * z + p[k];
  }
}

/// Simultaneous Aberth-Ehrlich iteration from the given starting points.
/// Returns the largest relative correction of the final sweep.
template <class C>
real_t<C> aberth(const std::vector<C>& p, std::vector<C>& roots, const real_t<C>& tol, int max_iterations) {
  const int n = static_cast<int>(roots.size());
  real_t<C> worst(0);
  for (int it = 0; it < max_iterations; ++it) {
    worst = real_t<C>(0);
    for (int i = 0; i < n; ++i) {
      C value, deriv;
      horner(p, roots[i], value, deriv);
      if (cabs(value) == 0) continue;
      const C ratio = value / deriv;
      C repulsion(0);
      for (int j = 0; j < n; ++j)
        if (j != i) repulsion += C(1) / (roots[i] - roots[j]);
      const C step = ratio / (C(1) - ratio * repulsion);
      roots[i] -= step;
      const real_t<C> scale = cabs(roots[i]) > real_t<C>(1) ? cabs(roots[i]) : real_t<C>(1);
      const real_t<C> rel = cabs(step) / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  return worst;
}

/// Weights mu with sum_r mu_r alpha_r^k = s_k for k = 0..n-1.
template <class C>
std::vector<C> vandermonde_weights(const std::vector<C>& alpha, const std::vector<C>& s) {
  const int n = static_cast<int>(alpha.size());
  Mat<C> v(n, n);
  for (int r = 0; r < n; ++r) {
    C power(1);
    for (int k = 0; k < n; ++k) {
      v(k, r) = power;
      power *= alpha[r];
    }
  }
  std::vector<C> rhs(s.begin(), s.begin() + n);
  return solve(std::move(v), std::move(rhs));
}

}  // namespace fuzzyspec::detail
