#include "fps/series.hpp"

#include <cmath>
#include <utility>

namespace fps {

namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("Series: coefficient vector must not be empty");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!is_finite(coeffs_[n])) {
      throw std::invalid_argument("Series: non-finite coefficient at index " +
                                  std::to_string(n));
    }
  }
}

Series Series::zero(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  return Series(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

Series Series::truncated(int new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw std::invalid_argument("Series::truncated: order out of range");
  }
  return Series(std::vector<Complex>(coeffs_.begin(),
                                     coeffs_.begin() + new_order + 1));
}

Series Series::resized(int new_order) const {
  if (new_order < 0) {
    throw std::invalid_argument("Series::resized: negative order");
  }
  std::vector<Complex> out(coeffs_);
  out.resize(static_cast<std::size_t>(new_order) + 1, Complex(0.0));
  return Series(std::move(out));
}

BinomialExponent::BinomialExponent(Complex value) : value_(value) {
  // Exact check: a natural number representable without rounding.
  is_natural_ = value.imag() == 0.0 && value.real() >= 1.0 &&
                value.real() == std::floor(value.real()) &&
                value.real() <= 9007199254740992.0;  // 2^53
}

const char* to_string(ExistenceReason reason) {
  switch (reason) {
    case ExistenceReason::ModulusLessThanOne:
      return "ModulusLessThanOne";
    case ExistenceReason::NaturalExponentPolynomial:
      return "NaturalExponentPolynomial";
    case ExistenceReason::ConstantSeriesConvergent:
      return "ConstantSeriesConvergent";
    case ExistenceReason::Fails:
      return "Fails";
  }
  return "?";
}

Series cauchy_product(const Series& f, const Series& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(
        "cauchy_product: order mismatch (" + std::to_string(f.order()) +
        " vs " + std::to_string(g.order()) + ")");
  }
  const int n_max = f.order();
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int k = 0; k <= n; ++k) acc += f[k] * g[n - k];
    out[n] = acc;
  }
  return Series(std::move(out));
}

Series derivative(const Series& f) {
  if (f.order() < 1) {
    throw std::invalid_argument(
        "derivative: an order-0 series has no order-(-1) derivative");
  }
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 0; n < f.order(); ++n) {
    out[n] = static_cast<double>(n + 1) * f[n + 1];
  }
  return Series(std::move(out));
}

Complex binomial_coefficient(Complex a, int n) {
  if (n < 0) throw std::invalid_argument("binomial_coefficient: n < 0");
  Complex result = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex factor = a - static_cast<double>(k);
    if (factor == Complex(0.0)) return Complex(0.0);
    result *= factor / static_cast<double>(k + 1);
  }
  return result;
}

ExistenceVerdict can_compose_binomial(const Series& f,
                                      const BinomialExponent& a) {
  if (a.is_natural()) {
    return {true, ExistenceReason::NaturalExponentPolynomial};
  }
  if (!(std::abs(f[0]) < 1.0)) {
    return {false, ExistenceReason::Fails};
  }
  bool constant = true;
  for (int n = 1; n <= f.order(); ++n) {
    if (f[n] != Complex(0.0)) {
      constant = false;
      break;
    }
  }
  return {true, constant ? ExistenceReason::ConstantSeriesConvergent
                         : ExistenceReason::ModulusLessThanOne};
}

}  // namespace fps
