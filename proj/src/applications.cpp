#include "fps/applications.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "fps/miller.hpp"

namespace fps {

Series monomial_shift_coeffs(Complex b0, int nbar, Complex a, int order) {
  if (nbar < 2) {
    throw std::invalid_argument("monomial_shift_coeffs: nbar must be >= 2");
  }
  if (order < 0) {
    throw std::invalid_argument("monomial_shift_coeffs: negative order");
  }
  if (!(std::abs(b0) < 1.0)) {
    throw CompositionError(
        "composition B_a(b0 + z^nbar) does not exist: |b0| = " +
            std::to_string(std::abs(b0)) + ", the closed form needs |b0| < 1",
        {false, ExistenceReason::Fails});
  }
  const Complex w = 1.0 + b0;
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(0.0));
  c[0] = principal_power(w, a);
  for (int k = 1; k * nbar <= order; ++k) {
    c[static_cast<std::size_t>(k) * nbar] =
        a / static_cast<double>(k) *
        principal_power(w, a - static_cast<double>(k)) *
        binomial_coefficient(a - 1.0, k - 1);
  }
  return Series(std::move(c));
}

Series invert_series_recursive(const Series& f) {
  if (f[0] == Complex(0.0)) {
    throw NotInvertibleError(
        "invert_series_recursive: the constant term is zero, the series "
        "has no multiplicative inverse");
  }
  const int n_max = f.order();
  std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = 1.0 / f[0];
  for (int n = 1; n <= n_max; ++n) {
    Complex acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += f[k] * c[n - k];
    c[n] = -acc / f[0];
  }
  return Series(std::move(c));
}

namespace {

void partition_rec(int remaining, int max_part, Partition& stack,
                   const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    Partition ascending(stack.rbegin(), stack.rend());
    visit(ascending);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    for (int mult = remaining / part; mult >= 1; --mult) {
      stack.push_back({part, mult});
      partition_rec(remaining - part * mult, part - 1, stack, visit);
      stack.pop_back();
    }
  }
}

constexpr int kMaxExplicitOrder = 20;

std::array<std::uint64_t, kMaxExplicitOrder + 1> factorial_table() {
  std::array<std::uint64_t, kMaxExplicitOrder + 1> fact{};
  fact[0] = 1;
  for (int i = 1; i <= kMaxExplicitOrder; ++i) fact[i] = fact[i - 1] * i;
  return fact;
}

}  // namespace

void for_each_partition(int n,
                        const std::function<void(const Partition&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
  Partition stack;
  partition_rec(n, n, stack, visit);
}

Series invert_series_explicit(const Series& f) {
  if (f[0] != Complex(1.0)) {
    throw NotInvertibleError(
        "invert_series_explicit: requires b0 = 1 exactly; rescale first "
        "(f^{-1} = b0^{-1} (f/b0)^{-1}) or use invert_series_recursive");
  }
  const int n_max = f.order();
  if (n_max > kMaxExplicitOrder) {
    throw std::invalid_argument(
        "invert_series_explicit: order " + std::to_string(n_max) +
        " overflows the exact 64-bit factorial weights (max " +
        std::to_string(kMaxExplicitOrder) +
        "); use invert_series_recursive");
  }
  static const auto fact = factorial_table();
  std::vector<Complex> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    ComplexSum acc;
    for_each_partition(n, [&](const Partition& parts) {
      int mult_sum = 0;
      Complex monomial = 1.0;
      for (const auto& [part, mult] : parts) {
        mult_sum += mult;
        for (int i = 0; i < mult; ++i) monomial *= f[part];
      }
      // Multinomial K!/(k1!...km!), exact at every intermediate division.
      std::uint64_t weight = fact[mult_sum];
      for (const auto& [part, mult] : parts) weight /= fact[mult];
      const double signed_weight =
          (mult_sum % 2 == 0) ? static_cast<double>(weight)
                              : -static_cast<double>(weight);
      acc.add(signed_weight * monomial);
    });
    c[n] = acc.value();
  }
  return Series(std::move(c));
}

namespace {

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

}  // namespace

OdeSolution ode_epsilon_solution(int degree, double grid_step, double x_max) {
  if (degree < 1) {
    throw std::invalid_argument("ode_epsilon_solution: degree must be >= 1");
  }
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("ode_epsilon_solution: grid_step must be > 0");
  }
  if (x_max < 0.0) {
    throw std::invalid_argument("ode_epsilon_solution: x_max must be >= 0");
  }
  const int n_max = degree;

  // e^{x^2}/2 truncated: coefficient of x^{2m} is 1/(2 m!), odd ones zero.
  std::vector<Complex> b(static_cast<std::size_t>(n_max) + 1, Complex(0.0));
  double fact = 1.0;
  for (int m = 0; 2 * m <= n_max; ++m) {
    if (m > 0) fact *= static_cast<double>(m);
    b[static_cast<std::size_t>(2 * m)] = Complex(0.5 / fact);
  }
  const Series c = miller_recursive(Series(std::move(b)),
                                    BinomialExponent(Complex(0.5)));

  // y' = F y coefficientwise: n a_n = sum_{i<n} a_i c_{n-1-i}.
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += a[i] * c[n - 1 - i].real();
    a[n] = acc / static_cast<double>(n);
  }

  std::vector<double> da(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    da[n - 1] = static_cast<double>(n) * a[n];
  }

  const int steps = static_cast<int>(std::floor(x_max / grid_step + 0.5));
  std::vector<OdeGridRow> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double x = static_cast<double>(k) * grid_step;
    const double y = horner(a, x);
    const double dy = horner(da, x);
    // Same power path as the series constant term, so the defect at
    // x = 0 is an exact zero.
    const double rhs = std::pow(1.0 + 0.5 * std::exp(x * x), 0.5);
    grid.push_back({x, y, dy - rhs * y});
  }

  std::vector<Complex> a_complex(a.begin(), a.end());
  return OdeSolution{degree, c, Series(std::move(a_complex)),
                     std::move(grid)};
}

}  // namespace fps
