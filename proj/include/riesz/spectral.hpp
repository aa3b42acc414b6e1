#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "riesz/energy.hpp"
#include "riesz/sphere.hpp"

namespace riesz {

/// Gegenbauer polynomial C_ell^alpha(t) by the three-term recurrence,
/// normalized so C_ell^alpha(1) = binom(2 alpha + ell - 1, ell).
double gegenbauer(double alpha, int ell, double t);

/// C_ell^{(d-1)/2}(t) / C_ell^{(d-1)/2}(1). Runs the recurrence on the
/// normalized ratio itself, which stays in [-1, 1] for every degree.
double gegenbauer_ratio(int d, int ell, double t);

/// C_ell^{(d-1)/2}(1) = binom(ell + d - 2, d - 2).
double gegenbauer_at_one(int d, int ell);

/// dim of the degree-ell spherical harmonics on S^d:
/// h_ell = (2 ell + d - 1)/(d - 1) * binom(ell + d - 2, d - 2).
long long harmonic_dimension(int d, int ell);

/// Degree-ell reproducing (zonal) kernel Z_ell(t) = (h_ell / omega_d) *
/// C_ell^{(d-1)/2}(t) / C_ell^{(d-1)/2}(1).
double zonal_kernel(int d, int ell, double t);

/// Terminating 3F2(-ell, b, c; e, f; 1), summed as ell+1 Pochhammer terms.
double hyp3f2_terminating(int ell, double b, double c, double e, double f);

/// Eigenvalue of the spherical Riesz transform on degree-ell harmonics:
///   s > 0:          A_{ell,s} = 2^{d-s} pi^{d/2} Gamma((d-s)/2) Gamma(s/2+ell)
///                               / (Gamma(s/2) Gamma(d-s/2+ell))
///   s = 0, ell >= 1: A_{ell,0} = 2^{d-1} pi^{d/2} Gamma(d/2) Gamma(ell) / Gamma(d+ell)
///   s = 0, ell = 0:  omega_d * E_0(sigma~).
/// The normalization is pinned by three independent routes: direct quadrature
/// of the Funk-Hecke integral, A_{0,s} = omega_d E_s(sigma~), and the
/// Newtonian case A_{ell,d-1} = omega_d (d-1)/(2 ell + d - 1).
/// Log-Gamma arithmetic, stable for ell up to 1e4.
double riesz_eigenvalue(int d, double s, int ell);

/// Independent oracle for riesz_eigenvalue: adaptive quadrature of
/// omega_{d-1}/(2^{s/2} C_ell(1)) * int_{-1}^{1} C_ell(t)(1-t)^{(d-s)/2-1}(1+t)^{(d-2)/2} dt
/// (for s = 0 the profile is -log(2-2t)/2 against the plain weight).
double riesz_eigenvalue_quadrature(int d, double s, int ell);

/// Funk-Hecke coefficient of the cap indicator,
/// lambda_ell(r) = omega_{d-1}/C_ell(1) * int_{1-r^2/2}^{1} C_ell(t)(1-t^2)^{(d-2)/2} dt,
/// by adaptive quadrature (absolute tolerance 1e-13 * omega_{d-1}).
double cap_multiplier(int d, int ell, double r);

/// All of lambda_0..lambda_L at once through the exact antiderivative
/// lambda_ell = omega_{d-1} (1-t0^2)^{d/2} (d-1) C_{ell-1}^{(d+1)/2}(t0)
///              / (ell (ell+d-1) C_ell^{(d-1)/2}(1)),   t0 = 1 - r^2/2,
/// one recurrence pass, no quadrature. Agrees with cap_multiplier.
std::vector<double> cap_multipliers(int d, int L, double r);

/// Per-degree spectral data for fixed (d, s) up to truncation degree L;
/// optionally carries cap multipliers for a stored radius r.
struct SpectralTable {
    int d;
    double s;
    bool is_log;
    int L;
    double r;  // 0 when no cap multipliers are stored
    std::vector<double> A;
    std::vector<long long> h;
    std::vector<double> lam;

    static SpectralTable build(const RieszParams& params, int L, double r = 0.0);
};

struct SobolevDiscrepancyResult {
    double value;
    double epsilon;
    double radius;  // epsilon * N^{-1/d}
    int L_used;
    double tail_estimate;
};

/// Dual Sobolev norm of the cap-smoothed counting measure minus the uniform
/// measure: D^2 = sum_{ell>=1} (1+ell^2)^{(s-d)/2} (lambda_ell(r)/(N sigma(D_r)))^2 S_ell,
/// S_ell = sum_{i,j} Z_ell(<x_i,x_j>), r = epsilon N^{-1/d}. The ell = 0 term
/// vanishes because the measure has total mass zero.
SobolevDiscrepancyResult sobolev_discrepancy(const Configuration& config, const RieszParams& params,
                                             double epsilon, double tol = 1e-8, int workers = 0);

/// Double cap average of the Riesz kernel over two caps of radius r whose
/// centers have inner product t; spectrally this is
/// sum_ell A_ell (lambda_ell(r)/sigma(D_r))^2 Z_ell(t). Two routes are used:
/// caps separated by at least one diameter integrate the subtracted kernel
/// directly (product Gauss rules in the zonal frame, which converge
/// spectrally there), while touching/overlapping caps and the self term
/// stream the zonal series with degree doubling until the partial sums
/// settle. evaluate() is const and thread-safe.
class PairCapEvaluator {
public:
    PairCapEvaluator(const RieszParams& params, double r, double tol = 1e-9);

    /// Throws convergence_error (carrying the partial sum) if the series
    /// route exhausts its hard degree cap.
    double evaluate(double t) const;

    double cap_area_value() const { return sigma_; }

private:
    RieszParams params_;
    double r_;
    double tol_;
    double sigma_;
    double theta_;  // opening angle: r = 2 sin(theta/2)

    double quadrature_route(double t) const;
    double series_route(double t) const;
};

/// One-shot version of PairCapEvaluator.
double pair_cap_energy(const RieszParams& params, double r, double t, double tol = 1e-9);

namespace detail {
/// sum_{ell>=1} weight(ell) (lambda_ell/(N sigma))^2 S_ell with the shared
/// truncation rule; used by sobolev_discrepancy (Sobolev weight) and the
/// decomposition identity (weight A_ell). Reports degrees used and the
/// last-block tail magnitude on the sum scale. `lambda_scale` optionally
/// replaces lambda_ell for ell >= 1 (testing hook); empty means the true
/// multipliers.
struct MuEnergySum {
    double sum = 0.0;
    int L_used = 0;
    double tail = 0.0;
};
MuEnergySum spectral_mu_sum(const Configuration& config, double r,
                            const std::function<double(int)>& weight, double tol, int L_max,
                            int workers, bool zero_multipliers = false);

/// Same quantity driven to convergence by degree doubling (terms are
/// nonnegative, so stalled doubling bounds the tail). Used where an absolute
/// target matters more than the per-term truncation rule.
MuEnergySum spectral_mu_converged(const Configuration& config, double r,
                                  const std::function<double(int)>& weight, double rel_tol,
                                  double abs_floor, int workers);
}  // namespace detail

}  // namespace riesz
