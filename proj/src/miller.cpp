#include "fps/miller.hpp"

#include <cmath>
#include <utility>

namespace fps {

namespace {

CompositionError existence_error(const Series& f, ExistenceVerdict verdict) {
  return CompositionError(
      "composition B_a(f) does not exist: |b0| = " +
          std::to_string(std::abs(f[0])) +
          ", but a binomial composition with a non-natural exponent "
          "requires |b0| < 1",
      verdict);
}

}  // namespace

Series miller_recursive(const Series& f, const BinomialExponent& a) {
  const ExistenceVerdict verdict = can_compose_binomial(f, a);
  if (!verdict.exists) throw existence_error(f, verdict);
  const Complex w = 1.0 + f[0];
  if (w == Complex(0.0)) {
    // Only reachable for natural a; the polynomial (1+f)^a is fine but
    // the recurrence divides by 1 + b0.
    throw DomainError(
        "miller_recursive: 1 + b0 = 0, the recurrence is undefined; expand "
        "the polynomial (1+f)^a directly for natural exponents with b0 = -1");
  }
  const Complex av = a.value();
  const int n_max = f.order();
  std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = principal_power(w, av);
  if (n_max >= 1) c[1] = av * c[0] * f[1] / w;
  for (int n = 2; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int k = 1; k <= n; ++k) {
      acc += f[k] * c[n - k] *
             (static_cast<double>(k) * av - static_cast<double>(n - k));
    }
    c[n] = acc / (static_cast<double>(n) * w);
  }
  return Series(std::move(c));
}

Series miller_original(const Series& f, const BinomialExponent& a) {
  if (f[0] != Complex(0.0)) {
    throw std::invalid_argument(
        "miller_original: requires a nonunit series (b0 = 0 exactly); use "
        "miller_recursive for general b0");
  }
  const Complex av = a.value();
  const int n_max = f.order();
  std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      acc += (av * static_cast<double>(n - k) - static_cast<double>(k)) *
             c[k] * f[n - k];
    }
    c[n] = acc / static_cast<double>(n);
  }
  return Series(std::move(c));
}

}  // namespace fps
