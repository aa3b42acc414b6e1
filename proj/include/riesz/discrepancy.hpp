#pragma once

#include <cstdint>
#include <vector>

#include "riesz/energy.hpp"
#include "riesz/sphere.hpp"

namespace riesz {

struct CapDiscrepancyEstimate {
    double value;
    Cap argmax_cap;
    long centers_tested;
    bool is_lower_bound;  // always true: the candidate family is finite
};

/// Lower bound on sup over caps of |#(X in D)/N - sigma(D)/omega_d|.
/// Candidate centers are the configuration points, their antipodes, and
/// centers_budget uniform random centers (stream-keyed by seed, so a larger
/// budget extends the same center sequence). Per center, both the open and
/// the closed count are scored at every point threshold; the normalized cap
/// measure comes from quadrature with tolerance 1e-12.
CapDiscrepancyEstimate cap_discrepancy(const Configuration& config, long centers_budget,
                                       std::uint64_t seed, int workers = 0);

/// Same sweep over an explicit candidate-center list (rotation tests use it).
CapDiscrepancyEstimate cap_discrepancy_with_centers(const Configuration& config,
                                                    const std::vector<std::vector<double>>& centers,
                                                    int workers = 0);

struct IdentityReport {
    double lhs;
    double rhs;
    double residual;
    double quadrature_tol;
};

/// Exact decomposition of the off-diagonal cap-average energy, checked through
/// two independent evaluation paths. With mu_i the normalized indicator of the
/// cap of radius eps*N^{-1/d} at x_i and mu their mean minus uniform:
///   (1/N^2) sum_{i!=j} double-int R_s dmu_i dmu_j
///     = E_s(sigma~) + E_s(mu) - (1/N) * (double cap average at t = 1).
IdentityReport stolarsky_decomposition_check(const Configuration& config, const RieszParams& params,
                                             double epsilon, double tol = 1e-8, int workers = 0);

struct SmoothingDefect {
    double defect;       // (1/N^2) sum_{i!=j} |R_s(x_i,x_j) - double cap average|
    double bound_scale;  // eps^2 (N^{-2/d} + N^{-1+s/d})
};

/// Requires scaled separation >= 8*epsilon (caps must stay disjoint).
SmoothingDefect smoothing_defect(const Configuration& config, const RieszParams& params,
                                 double epsilon, int workers = 0);

/// Normalized mean-value excess (double cap average minus kernel) / r^2 for
/// caps of radius r at centers a, b. Valid for d > 2, 0 < s < d-2, or the
/// logarithmic kernel at any d >= 2; r <= 0.01.
double mean_value_check(const RieszParams& params, const SpherePoint& a, const SpherePoint& b,
                        double r);

}  // namespace riesz
