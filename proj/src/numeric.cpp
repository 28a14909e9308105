#include "fps/numeric.hpp"

namespace fps {

namespace {

Complex integer_power(Complex base, long long e) {
  if (e < 0) return 1.0 / integer_power(base, -e);
  Complex result = 1.0;
  Complex square = base;
  while (e > 0) {
    if (e & 1) result *= square;
    e >>= 1;
    if (e > 0) square *= square;
  }
  return result;
}

}  // namespace

Complex principal_power(Complex base, Complex exponent) {
  if (exponent == Complex(0.0)) return Complex(1.0);  // 0^0 := 1
  if (exponent.imag() == 0.0) {
    const double e = exponent.real();
    if (e == std::floor(e) && std::abs(e) <= 1024.0) {
      return integer_power(base, static_cast<long long>(e));
    }
    if (base.imag() == 0.0 && base.real() > 0.0) {
      return Complex(std::pow(base.real(), e));
    }
  }
  return std::pow(base, exponent);
}

}  // namespace fps
