// Worked applications of the composition machinery: monomial-shift closed
// forms, series inversion, and a Taylor-method ODE demo.
#pragma once

#include <functional>

#include "fps/series.hpp"

namespace fps {

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Coefficients of B_a o (b0 + z^nbar) in closed form:
///   c_0 = (1+b0)^a,
///   c_{k nbar} = (a/k) (1+b0)^{a-k} binom(a-1, k-1),   k >= 1,
/// and zero elsewhere. Requires |b0| < 1 and nbar >= 2.
Series monomial_shift_coeffs(Complex b0, int nbar, Complex a, int order);

/// Multiplicative inverse by the convolution recurrence
///   c_0 = 1/b0,  c_n = -(1/b0) sum_{k=1}^n b_k c_{n-k}.
/// Throws NotInvertibleError when the constant term is zero.
Series invert_series_recursive(const Series& f);

/// A partition of n into distinct part sizes with multiplicities:
/// strictly increasing parts, sum part*multiplicity = n.
struct PartitionPart {
  int part;
  int multiplicity;
};
using Partition = std::vector<PartitionPart>;

/// Visits every partition of n >= 1 exactly once, largest parts first.
void for_each_partition(int n,
                        const std::function<void(const Partition&)>& visit);

/// Multiplicative inverse of a series with b0 = 1 exactly, as the closed
/// combinatorial sum over partitions n1 k1 + ... + nm km = n:
///   c_n = sum (-1)^{K} K!/(k1!...km!) b_{n1}^{k1}...b_{nm}^{km},
/// with K = k1+...+km. Weights use exact 64-bit factorials, which bounds
/// the order at 20; this is the verification path, not the production
/// one. Throws NotInvertibleError unless b0 == 1 (rescale first:
/// f^{-1} = b0^{-1} (f/b0)^{-1}).
Series invert_series_explicit(const Series& f);

struct OdeGridRow {
  double x;
  double y;         // value of the degree-N polynomial solution
  double residual;  // y'(x) - sqrt(1 + e^{x^2}/2) y(x)
};

struct OdeSolution {
  int degree;
  Series c_coeffs;  // Taylor coefficients of (1 + e^{x^2}/2)^{1/2}
  Series a_coeffs;  // Taylor coefficients of the solution y
  std::vector<OdeGridRow> grid;
};

/// Degree-N polynomial solution of y' = (1 + e^{x^2}/2)^{1/2} y, y(0) = 1:
/// the right-hand factor F = B_{1/2} o (e^{x^2}/2) comes from the Miller
/// recurrence, and a_n = (1/n) sum_{i<n} a_i c_{n-1-i} equates the
/// coefficients of y' = F y. The grid tabulates y and the defect
/// y' - sqrt(1 + e^{x^2}/2) y at x = 0, step, ..., x_max.
OdeSolution ode_epsilon_solution(int degree, double grid_step,
                                 double x_max = 1.0);

}  // namespace fps
