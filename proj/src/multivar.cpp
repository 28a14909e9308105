#include "fps/multivar.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <utility>

namespace fps {

std::uint64_t binomial_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::size_t multi_index_count(int q, int order) {
  return static_cast<std::size_t>(binomial_count(order + q, q));
}

std::size_t multi_rank(std::span<const int> c) {
  const int q = static_cast<int>(c.size());
  const int degree = std::accumulate(c.begin(), c.end(), 0);
  // All indices of strictly smaller degree come first.
  std::size_t rank = binomial_count(degree + q - 1, q);
  // Within the degree block, tuples with a larger coordinate at the first
  // differing position come first.
  int remaining = degree;
  for (int i = 0; i < q - 1; ++i) {
    const int excess = remaining - c[i] - 1;
    if (excess >= 0) rank += binomial_count(excess + q - i - 1, q - i - 1);
    remaining -= c[i];
  }
  return rank;
}

bool next_multi_index(std::vector<int>& c, int max_degree) {
  const int q = static_cast<int>(c.size());
  for (int i = q - 2; i >= 0; --i) {
    if (c[i] > 0) {
      int tail = 0;
      for (int k = i + 1; k < q; ++k) {
        tail += c[k];
        c[k] = 0;
      }
      c[i] -= 1;
      c[i + 1] = tail + 1;
      return true;
    }
  }
  const int degree = std::accumulate(c.begin(), c.end(), 0);
  if (degree >= max_degree) return false;
  std::fill(c.begin(), c.end(), 0);
  c[0] = degree + 1;
  return true;
}

MultiSeries::MultiSeries(int vars, int order, std::vector<Complex> coeffs)
    : q_(vars), order_(order), coeffs_(std::move(coeffs)) {
  if (q_ < 1) throw std::invalid_argument("MultiSeries: q must be >= 1");
  if (order_ < 0) throw std::invalid_argument("MultiSeries: negative order");
  if (coeffs_.size() != multi_index_count(q_, order_)) {
    throw std::invalid_argument(
        "MultiSeries: dense layout for q = " + std::to_string(q_) +
        ", order " + std::to_string(order_) + " needs " +
        std::to_string(multi_index_count(q_, order_)) + " coefficients, got " +
        std::to_string(coeffs_.size()));
  }
  for (const Complex& z : coeffs_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("MultiSeries: non-finite coefficient");
    }
  }
}

MultiSeries MultiSeries::zero(int vars, int order) {
  return MultiSeries(vars, order,
                     std::vector<Complex>(multi_index_count(vars, order)));
}

MultiSeries MultiSeries::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_) {
    throw std::invalid_argument("MultiSeries::truncated: order out of range");
  }
  // The layout is degree-graded, so the truncation is a prefix.
  return MultiSeries(
      q_, new_order,
      std::vector<Complex>(coeffs_.begin(),
                           coeffs_.begin() + multi_index_count(q_, new_order)));
}

namespace {

// Calls fn(a) for every multi-index a <= box (coordinatewise), where
// coordinate `fixed_axis` (if >= 0) stays pinned at box[fixed_axis].
template <typename Fn>
void for_each_sub_index(std::span<const int> box, int fixed_axis, Fn&& fn) {
  const int q = static_cast<int>(box.size());
  std::vector<int> a(q, 0);
  if (fixed_axis >= 0) a[fixed_axis] = box[fixed_axis];
  while (true) {
    fn(std::span<const int>(a));
    int i = 0;
    while (i < q && (i == fixed_axis || a[i] == box[i])) {
      if (i != fixed_axis) a[i] = 0;
      ++i;
    }
    if (i == q) return;
    ++a[i];
  }
}

}  // namespace

MultiSeries multivar_cauchy_product(const MultiSeries& f,
                                    const MultiSeries& g) {
  if (f.vars() != g.vars()) {
    throw std::invalid_argument(
        "multivar_cauchy_product: dimension mismatch (" +
        std::to_string(f.vars()) + " vs " + std::to_string(g.vars()) + ")");
  }
  if (f.order() != g.order()) {
    throw std::invalid_argument("multivar_cauchy_product: order mismatch (" +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()) + ")");
  }
  const int q = f.vars();
  const int n_max = f.order();
  std::vector<Complex> out(multi_index_count(q, n_max));
  std::vector<int> target(q, 0);
  std::vector<int> diff(q);
  std::size_t target_rank = 0;
  do {
    Complex acc = 0.0;
    for_each_sub_index(target, -1, [&](std::span<const int> a) {
      for (int i = 0; i < q; ++i) diff[i] = target[i] - a[i];
      acc += f.at_rank(multi_rank(a)) * g.at_rank(multi_rank(diff));
    });
    out[target_rank] = acc;
    ++target_rank;
  } while (next_multi_index(target, n_max));
  return MultiSeries(q, n_max, std::move(out));
}

MultiSeries partial_derivative(const MultiSeries& f, int axis) {
  if (axis < 1 || axis > f.vars()) {
    throw std::invalid_argument("partial_derivative: axis out of range");
  }
  if (f.order() < 1) {
    throw std::invalid_argument(
        "partial_derivative: an order-0 series has no truncated derivative");
  }
  const int q = f.vars();
  const int ax = axis - 1;
  std::vector<Complex> out(multi_index_count(q, f.order() - 1));
  std::vector<int> c(q, 0);
  std::size_t rank = 0;
  do {
    c[ax] += 1;
    const Complex& lifted = f.at_rank(multi_rank(c));
    c[ax] -= 1;
    out[rank] = static_cast<double>(c[ax] + 1) * lifted;
    ++rank;
  } while (next_multi_index(c, f.order() - 1));
  return MultiSeries(q, f.order() - 1, std::move(out));
}

Complex multivar_miller_axis_step(const MultiSeries& f, Complex r,
                                  std::span<const int> target, int axis,
                                  std::span<const Complex> known) {
  const int q = f.vars();
  const int ax = axis - 1;
  if (ax < 0 || ax >= q || target[ax] < 1) {
    throw std::invalid_argument(
        "multivar_miller_axis_step: axis coordinate must be positive");
  }
  const Complex w = 1.0 + f.theta();
  std::vector<int> c(target.begin(), target.end());
  c[ax] -= 1;
  const int c_ax = c[ax];
  std::vector<int> lifted(q);
  std::vector<int> diff(q);
  Complex num = 0.0;
  // (c_i+1)(1+f_theta) h_{c+e^i}
  //   = r sum_{b<=c} (b_i+1) f_{b+e^i} h_{c-b}
  //     - sum_{b<=c, b!=c} (b_i+1) f_{c-b} h_{b+e^i}
  for_each_sub_index(c, -1, [&](std::span<const int> b) {
    for (int i = 0; i < q; ++i) {
      lifted[i] = b[i] + (i == ax ? 1 : 0);
      diff[i] = c[i] - b[i];
    }
    const double coeff = static_cast<double>(b[ax] + 1);
    const std::size_t lifted_rank = multi_rank(lifted);
    const std::size_t diff_rank = multi_rank(diff);
    num += r * coeff * f.at_rank(lifted_rank) * known[diff_rank];
    if (diff_rank != 0) {  // b != c
      num -= coeff * f.at_rank(diff_rank) * known[lifted_rank];
    }
  });
  return num / (static_cast<double>(c_ax + 1) * w);
}

MultiSeries multivar_miller_recursive(const MultiSeries& f,
                                      const BinomialExponent& r) {
  if (!(std::abs(f.theta()) < 1.0)) {
    throw CompositionError(
        "composition B_r(f) does not exist: |f_theta| = " +
            std::to_string(std::abs(f.theta())) +
            ", but the multivariable binomial composition requires "
            "|f_theta| < 1",
        {false, ExistenceReason::Fails});
  }
  const int q = f.vars();
  const int n_max = f.order();
  const Complex rv = r.value();
  std::vector<Complex> h(multi_index_count(q, n_max));
  h[0] = principal_power(1.0 + f.theta(), rv);
  std::vector<int> target(q, 0);
  std::size_t target_rank = 0;
  while (next_multi_index(target, n_max)) {
    ++target_rank;
    int axis = 1;
    while (target[axis - 1] == 0) ++axis;
    h[target_rank] =
        multivar_miller_axis_step(f, rv, target, axis, std::span(h));
#ifndef NDEBUG
    // The recursion must not depend on which positive axis raised the
    // degree; probe one alternative.
    for (int alt = axis + 1; alt <= q; ++alt) {
      if (target[alt - 1] == 0) continue;
      const Complex other =
          multivar_miller_axis_step(f, rv, target, alt, std::span(h));
      assert(std::abs(other - h[target_rank]) <=
             1e-10 * std::max(1.0, std::abs(h[target_rank])));
      break;
    }
#endif
  }
  return MultiSeries(q, n_max, std::move(h));
}

}  // namespace fps
