// J.C.P. Miller recurrences for the coefficients of B_a o f.
#pragma once

#include "fps/series.hpp"

namespace fps {

/// Coefficients of B_a o f by the generalized Miller recurrence:
///   c_0 = (1+b0)^a   (principal branch),
///   c_1 = a c_0 b_1 / (1+b0),
///   c_n = 1/(n(1+b0)) * sum_{k=1}^n b_k c_{n-k} [k a - (n-k)],  n >= 2.
///
/// Requires can_compose_binomial(f, a).exists; throws CompositionError
/// (carrying the verdict) otherwise. Natural exponents run through the
/// same recurrence, which additionally needs 1 + b0 != 0; the b0 = -1
/// polynomial case is rejected with DomainError.
Series miller_recursive(const Series& f, const BinomialExponent& a);

/// The classical Miller recurrence for nonunit f (b0 = 0 exactly):
///   c_0 = 1,  c_n = 1/n * sum_{k=0}^{n-1} [a(n-k) - k] c_k b_{n-k}.
/// Agrees with miller_recursive on its domain.
Series miller_original(const Series& f, const BinomialExponent& a);

}  // namespace fps
