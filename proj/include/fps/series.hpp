// One-variable truncated formal power series over complex doubles.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fps/numeric.hpp"

namespace fps {

/// A formal power series truncated at an inclusive order N:
/// coeffs()[n] is the coefficient of z^n for n = 0..N.
///
/// Immutable after construction. All stored coefficients are finite;
/// construction rejects NaN/Inf.
class Series {
 public:
  /// Builds a series from its coefficient vector; the order is
  /// coeffs.size() - 1. Throws std::invalid_argument if the vector is
  /// empty or contains a non-finite value.
  explicit Series(std::vector<Complex> coeffs);

  static Series zero(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](int n) const {
    return coeffs_[static_cast<std::size_t>(n)];
  }

  /// Drops coefficients above new_order (requires new_order <= order()).
  Series truncated(int new_order) const;
  /// Truncates or zero-pads to the requested order.
  Series resized(int new_order) const;

 private:
  std::vector<Complex> coeffs_;
};

/// The exponent a of the binomial series B_a(z) = sum_n binom(a, n) z^n.
/// Natural exponents (positive real integers) make B_a a polynomial, which
/// changes the composition-existence rule; naturality is detected exactly
/// at construction.
class BinomialExponent {
 public:
  explicit BinomialExponent(Complex value);

  Complex value() const { return value_; }
  bool is_natural() const { return is_natural_; }
  /// The exponent as an integer; only meaningful when is_natural().
  long long natural_value() const {
    return static_cast<long long>(value_.real());
  }

 private:
  Complex value_;
  bool is_natural_;
};

enum class ExistenceReason {
  ModulusLessThanOne,         // non-constant f with |b0| < 1
  NaturalExponentPolynomial,  // a natural: B_a is a polynomial
  ConstantSeriesConvergent,   // constant f with |b0| < 1
  Fails,
};

const char* to_string(ExistenceReason reason);

struct ExistenceVerdict {
  bool exists;
  ExistenceReason reason;
};

/// Base class for mathematically impossible requests (as opposed to
/// malformed input): failed composition existence, non-invertible series.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a binomial composition is requested outside its existence
/// domain; carries the verdict that rejected it.
class CompositionError : public DomainError {
 public:
  CompositionError(const std::string& what, ExistenceVerdict verdict)
      : DomainError(what), verdict_(verdict) {}
  const ExistenceVerdict& verdict() const { return verdict_; }

 private:
  ExistenceVerdict verdict_;
};

/// Coefficientwise convolution h_n = sum_{k=0}^n f_k g_{n-k}.
/// Both inputs must have the same order; the result keeps it.
Series cauchy_product(const Series& f, const Series& g);

/// Formal derivative, order N-1. Requires order >= 1.
Series derivative(const Series& f);

/// Generalized binomial coefficient a(a-1)...(a-n+1)/n!. The falling
/// factorial is evaluated left to right with an early exit on an exact
/// zero factor, so binom(a, n) = 0 exactly for natural a < n.
Complex binomial_coefficient(Complex a, int n);

/// Existence of B_a o f. B_a is a polynomial for natural a, hence composes
/// with everything; otherwise the composition exists iff |b0| < 1. The
/// constant-series case uses the same |b0| < 1 rule (the boundary circle
/// is rejected uniformly).
ExistenceVerdict can_compose_binomial(const Series& f,
                                      const BinomialExponent& a);

}  // namespace fps
