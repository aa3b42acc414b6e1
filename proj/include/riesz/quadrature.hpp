#pragma once

#include <functional>

namespace riesz {

/// Adaptive Gauss-Legendre integration of f over [a, b] to absolute
/// tolerance abs_tol. Each panel is accepted when a 15-point rule agrees
/// with its two-half refinement within the panel's share of the budget;
/// panels split recursively otherwise (depth-capped), which concentrates
/// nodes at integrable endpoint singularities (log, x^{-alpha}).
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol);

/// Fixed Gauss-Legendre nodes/weights on [-1, 1] for n in {4, 6, 10, 16}.
struct GaussNodes {
    std::vector<double> node;
    std::vector<double> weight;
};
const GaussNodes& gauss_rule(int n);

}  // namespace riesz
