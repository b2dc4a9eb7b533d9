#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

namespace fuzzyspec::detail {

// 100 decimal digits: enough headroom for the near-singular Toeplitz systems
// met when a fuzzy set is close to crisp.
using wide_real = boost::multiprecision::cpp_bin_float_100;
using wide_complex = boost::multiprecision::cpp_complex_100;

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
  using real = double;
  static double pi() { return 3.14159265358979323846; }
};

template <>
struct scalar_traits<wide_complex> {
  using real = wide_real;
  static wide_real pi() { return boost::math::constants::pi<wide_real>(); }
};

inline wide_complex widen(const std::complex<double>& z) { return wide_complex(wide_real(z.real()), wide_real(z.imag())); }
inline std::complex<double> narrow(const wide_complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace fuzzyspec::detail
