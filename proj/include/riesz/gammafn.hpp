#pragma once

namespace riesz {

/// Digamma psi_0(x) for x > 0: upward recurrence to x >= 10, then the
/// Bernoulli asymptotic series through x^{-12}. Absolute error < 1e-13.
double digamma(double x);

}  // namespace riesz
