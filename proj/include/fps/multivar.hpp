// Truncated q-variable formal power series and the multivariable form of
// the generalized Miller recursion.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "fps/series.hpp"

namespace fps {

/// Exact binomial count C(n, k) for the small arguments used by the
/// multi-index layout.
std::uint64_t binomial_count(int n, int k);

/// Number of multi-indices c in N_0^q with |c| <= order: C(order + q, q).
std::size_t multi_index_count(int q, int order);

/// Rank of a multi-index in the degree-graded layout: indices are sorted
/// by total degree, and within a degree lexicographically with the first
/// coordinate decreasing ((d,0,..,0) first, (0,..,0,d) last).
std::size_t multi_rank(std::span<const int> c);

/// Advances c through the layout order (theta, degree 1, ...). Returns
/// false instead of moving past the last index of degree max_degree.
bool next_multi_index(std::vector<int>& c, int max_degree);

/// A q-variable series truncated at total degree N, stored densely in
/// multi_rank order (every index of degree <= N is present). Immutable.
class MultiSeries {
 public:
  MultiSeries(int vars, int order, std::vector<Complex> coeffs);

  static MultiSeries zero(int vars, int order);

  int vars() const { return q_; }
  int order() const { return order_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& at_rank(std::size_t rank) const { return coeffs_[rank]; }
  const Complex& at(std::span<const int> index) const {
    return coeffs_[multi_rank(index)];
  }
  const Complex& at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }
  /// The constant term f_theta.
  const Complex& theta() const { return coeffs_[0]; }

  /// Drops all coefficients of degree > new_order.
  MultiSeries truncated(int new_order) const;

 private:
  int q_;
  int order_;
  std::vector<Complex> coeffs_;
};

/// h_c = sum_{a + b = c} f_a g_b for all |c| <= N. Inputs must agree in
/// dimension and order.
MultiSeries multivar_cauchy_product(const MultiSeries& f,
                                    const MultiSeries& g);

/// Formal partial derivative along the given 1-based axis:
/// (D_i f)_c = (c_i + 1) f_{c + e^i}, result order N-1. Requires N >= 1.
MultiSeries partial_derivative(const MultiSeries& f, int axis);

/// Coefficients of B_r o f for a q-variable f with |f_theta| < 1:
///   h_theta = (1 + f_theta)^r,
/// and each deeper coefficient h_{c + e^i} from the identity
///   (B_1 o f) D_i(B_r o f) = r (B_r o f) D_i f,
/// equating the X^c coefficient and solving for the leading term:
///   (c_i+1)(1+f_theta) h_{c+e^i} =
///       r sum_{b <= c} (b_i+1) f_{b+e^i} h_{c-b}
///       - sum_{b <= c, b != c} (b_i+1) f_{c-b} h_{b+e^i}.
///
/// Each index is computed once, via its smallest positive axis; in debug
/// builds every multi-axis index is recomputed along a second axis and
/// the two values are asserted to agree.
MultiSeries multivar_miller_recursive(const MultiSeries& f,
                                      const BinomialExponent& r);

/// One step of the recursion above: the value of h at `target` computed
/// via `axis` (1-based, target[axis-1] > 0), reading every lower-degree
/// coefficient from `known` (laid out in multi_rank order, filled for all
/// degrees < |target|). Exposed so axis-independence can be verified.
Complex multivar_miller_axis_step(const MultiSeries& f, Complex r,
                                  std::span<const int> target, int axis,
                                  std::span<const Complex> known);

}  // namespace fps
