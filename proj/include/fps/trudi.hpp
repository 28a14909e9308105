// Hessenberg determinants by the generalized Trudi expansion, and the
// explicit (non-recursive) form of the Miller coefficients built on it.
#pragma once

#include <cstdint>
#include <vector>

#include "fps/series.hpp"

namespace fps {

/// Dense n x n complex matrix with a_{i,j} = 0 for j > i+1 (lower
/// Hessenberg). Indices are 1-based to match the usual determinant
/// notation. The zero structure is validated at construction.
class HessenbergMatrix {
 public:
  HessenbergMatrix(int n, std::vector<Complex> row_major);

  int size() const { return n_; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  int n_;
  std::vector<Complex> entries_;
};

/// Enumerates the integer compositions of m in lexicographic order,
/// starting at (1,1,...,1) and ending at (m). A composition is the gap
/// sequence (s1-s0, ..., sl-s_{l-1}) of a subset {s1<...<sl} of [m] with
/// sl = m and s0 = 0; there are exactly 2^{m-1} of them.
class CompositionIter {
 public:
  explicit CompositionIter(int m);

  const std::vector<int>& gaps() const { return gaps_; }

  /// Moves to the lexicographic successor; false once (m) was consumed.
  bool advance();

 private:
  std::vector<int> gaps_;
};

struct TrudiEvaluation {
  Complex value;
  std::uint64_t terms;  // number of signed products summed
};

/// det A as the signed sum over subsets {s1<...<sl} of [n] with sl = n:
///   sum_l (-1)^{n-l} sum_subsets  prod_q a_{s_q, s_{q-1}+1}
///                                 * prod_{k not in subset} a_{k,k+1}.
/// Terms are accumulated in enumeration order with compensated summation;
/// the term count is always 2^{n-1}.
TrudiEvaluation trudi_det_terms(const HessenbergMatrix& A);
Complex trudi_det(const HessenbergMatrix& A);

/// Specialization for a constant superdiagonal a_{k,k+1} = a:
///   det A = sum_l (-a)^{n-l} sum_subsets prod_q a_{s_q, s_{q-1}+1}.
/// Throws std::invalid_argument when the superdiagonal is not constant.
Complex trudi_det_constant_superdiag(const HessenbergMatrix& A, Complex a);

/// Closed-form Miller coefficients: for n >= 2,
///   c_n = a(1+b0)^{a-1} [ b_n + sum_{j=1}^{n-1} b_j sum_{l=1}^{n-j}
///         (1+b0)^{-l} sum_{{s}..subsets of [n-j]}
///         prod_q (a(s_q - s_{q-1}) - s_{q-1} - j)/(s_q + j) * b_{s_q-s_{q-1}} ].
///
/// The subset sums are exponential in the order (2^{n-1} products for
/// c_n), so the order is capped at max_order; raise it deliberately for
/// larger verification runs. Natural exponents are outside the theorem
/// and are delegated to miller_recursive.
Series miller_explicit(const Series& f, const BinomialExponent& a,
                       int max_order = 20);

}  // namespace fps
