// Shared complex-arithmetic helpers.
#pragma once

#include <cmath>
#include <complex>

namespace fps {

using Complex = std::complex<double>;

/// w^a on the principal branch of the logarithm (argument in (-pi, pi]).
///
/// Exact real integer exponents are evaluated by binary powering, and a
/// positive real base with a real exponent stays in real arithmetic, so
/// results such as w^1 = w and (1.5)^{1/2} = sqrt(1.5) carry no imaginary
/// dust. Everything else goes through exp(a log w).
Complex principal_power(Complex base, Complex exponent);

// Neumaier-compensated accumulator. Alternating sums with heavy
// cancellation (determinant expansions, explicit composition sums) keep
// the low-order bits of every addend.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace fps
