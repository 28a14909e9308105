#include "fps/trudi.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fps/miller.hpp"

namespace fps {

HessenbergMatrix::HessenbergMatrix(int n, std::vector<Complex> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ < 1) throw std::invalid_argument("HessenbergMatrix: n must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("HessenbergMatrix: expected " +
                                std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 2; j <= n_; ++j) {
      if (at(i, j) != Complex(0.0)) {
        throw std::invalid_argument(
            "HessenbergMatrix: entry (" + std::to_string(i) + "," +
            std::to_string(j) + ") above the superdiagonal must be zero");
      }
    }
  }
}

CompositionIter::CompositionIter(int m) {
  if (m < 1) throw std::invalid_argument("CompositionIter: m must be >= 1");
  gaps_.assign(static_cast<std::size_t>(m), 1);
}

bool CompositionIter::advance() {
  if (gaps_.size() == 1) return false;
  const int last = gaps_.back();
  gaps_.pop_back();
  gaps_.back() += 1;
  gaps_.insert(gaps_.end(), static_cast<std::size_t>(last) - 1, 1);
  return true;
}

TrudiEvaluation trudi_det_terms(const HessenbergMatrix& A) {
  const int n = A.size();
  ComplexSum acc;
  std::uint64_t terms = 0;
  std::vector<char> in_subset(static_cast<std::size_t>(n) + 1, 0);
  CompositionIter iter(n);
  do {
    const auto& gaps = iter.gaps();
    const int l = static_cast<int>(gaps.size());
    std::fill(in_subset.begin(), in_subset.end(), 0);
    Complex term = ((n - l) % 2 == 0) ? 1.0 : -1.0;
    int s_prev = 0;
    for (int gap : gaps) {
      const int s = s_prev + gap;
      in_subset[s] = 1;
      term *= A.at(s, s_prev + 1);
      s_prev = s;
    }
    for (int k = 1; k < n; ++k) {
      if (!in_subset[k]) term *= A.at(k, k + 1);
    }
    acc.add(term);
    ++terms;
  } while (iter.advance());
  return {acc.value(), terms};
}

Complex trudi_det(const HessenbergMatrix& A) {
  return trudi_det_terms(A).value;
}

Complex trudi_det_constant_superdiag(const HessenbergMatrix& A, Complex a) {
  const int n = A.size();
  for (int k = 1; k < n; ++k) {
    if (A.at(k, k + 1) != a) {
      throw std::invalid_argument(
          "trudi_det_constant_superdiag: superdiagonal entry (" +
          std::to_string(k) + "," + std::to_string(k + 1) +
          ") differs from the given constant");
    }
  }
  ComplexSum acc;
  CompositionIter iter(n);
  do {
    const auto& gaps = iter.gaps();
    const int l = static_cast<int>(gaps.size());
    Complex term = principal_power(-a, Complex(static_cast<double>(n - l)));
    int s_prev = 0;
    for (int gap : gaps) {
      const int s = s_prev + gap;
      term *= A.at(s, s_prev + 1);
      s_prev = s;
    }
    acc.add(term);
  } while (iter.advance());
  return acc.value();
}

Series miller_explicit(const Series& f, const BinomialExponent& a,
                       int max_order) {
  const ExistenceVerdict verdict = can_compose_binomial(f, a);
  if (!verdict.exists) {
    throw CompositionError(
        "composition B_a(f) does not exist: |b0| = " +
            std::to_string(std::abs(f[0])) + " >= 1",
        verdict);
  }
  if (a.is_natural()) return miller_recursive(f, a);
  if (f.order() > max_order) {
    throw std::invalid_argument(
        "miller_explicit: order " + std::to_string(f.order()) +
        " exceeds the cap " + std::to_string(max_order) +
        " (the expansion sums 2^(n-1) products per coefficient); pass a "
        "larger max_order to override");
  }

  const Complex w = 1.0 + f[0];
  const Complex av = a.value();
  const int n_max = f.order();
  std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = principal_power(w, av);
  const Complex scale = av * principal_power(w, av - 1.0);
  if (n_max >= 1) c[1] = scale * f[1];

  std::vector<Complex> w_inv_pow(static_cast<std::size_t>(n_max) + 1);
  w_inv_pow[0] = 1.0;
  for (int l = 1; l <= n_max; ++l) w_inv_pow[l] = w_inv_pow[l - 1] / w;

  for (int n = 2; n <= n_max; ++n) {
    ComplexSum total;
    total.add(f[n]);
    for (int j = 1; j <= n - 1; ++j) {
      if (f[j] == Complex(0.0)) continue;
      ComplexSum inner;
      CompositionIter iter(n - j);
      do {
        const auto& gaps = iter.gaps();
        Complex term = w_inv_pow[gaps.size()];
        int s_prev = 0;
        for (int gap : gaps) {
          const int s = s_prev + gap;
          term *= (av * static_cast<double>(gap) -
                   static_cast<double>(s_prev) - static_cast<double>(j)) /
                  static_cast<double>(s + j) * f[gap];
          s_prev = s;
        }
        inner.add(term);
      } while (iter.advance());
      total.add(f[j] * inner.value());
    }
    c[n] = scale * total.value();
  }
  return Series(std::move(c));
}

}  // namespace fps
