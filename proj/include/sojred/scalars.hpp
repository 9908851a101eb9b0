#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <complex>

namespace sojred {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer scalar. Never silently overflows.
using BigInt = mp::cpp_int;

/// Working-precision real scalar: x86-64 long double, 64-bit significand.
using Real = long double;
using Cplx = std::complex<Real>;

/// Escalation ladder for the covariant computation: binary floats with
/// significand widths doubling from the 64-bit working precision.
template <unsigned Bits>
using WideReal = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;
template <unsigned Bits>
using WideCplx =
    mp::number<mp::complex_adaptor<mp::cpp_bin_float<Bits, mp::digit_base_2>>, mp::et_off>;

// Scalar glue so numeric code can be written once for long double and the
// wide types. For long double the complex type is std::complex; the wide
// types use boost's complex adaptor, whose API differs slightly.

template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<long double> {
  using Complex = std::complex<long double>;
  static constexpr unsigned significand_bits = 64;
  static long double to_working(const long double& x) { return x; }
  static long double from_bigint(const BigInt& n) { return n.convert_to<long double>(); }
  static Complex make_complex(const long double& re, const long double& im) {
    return Complex(re, im);
  }
};

template <unsigned Bits>
struct ScalarTraits<WideReal<Bits>> {
  using Complex = WideCplx<Bits>;
  static constexpr unsigned significand_bits = Bits;
  static long double to_working(const WideReal<Bits>& x) {
    return x.template convert_to<long double>();
  }
  static WideReal<Bits> from_bigint(const BigInt& n) {
    return WideReal<Bits>(n);
  }
  static Complex make_complex(const WideReal<Bits>& re, const WideReal<Bits>& im) {
    Complex z(re);
    z.imag(im);
    return z;
  }
};

template <class R>
using ComplexOf = typename ScalarTraits<R>::Complex;

template <class R>
R scalar_eps() {
  return std::numeric_limits<R>::epsilon();
}

/// Round half away from zero (the tie rule used throughout size reduction).
template <class R>
R round_half_away(const R& x) {
  using std::ceil;
  using std::floor;
  return x >= R(0) ? floor(x + R(0.5L)) : ceil(x - R(0.5L));
}

/// Nearest even integer, same tie rule applied to x/2.
template <class R>
R round_to_even_integer(const R& x) {
  return R(2) * round_half_away(R(x / R(2)));
}

inline BigInt real_to_bigint(const Real& x) {
  return BigInt(std::llroundl(x));
}

}  // namespace sojred
