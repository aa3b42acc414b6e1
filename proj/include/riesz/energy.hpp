#pragma once

#include <optional>
#include <span>
#include <vector>

#include "riesz/sphere.hpp"

namespace riesz {

/// Kernel parameters: dimension d >= 2 and exponent 0 <= s < d.
/// s = 0 always means the logarithmic kernel -log|x-y|.
struct RieszParams {
    int d;
    double s;
    bool is_log;

    RieszParams(int d_, double s_);
    static RieszParams logarithmic(int d_) { return RieszParams(d_, 0.0); }
    static RieszParams from_label(int d_, const SLabel& label) { return RieszParams(d_, label.value); }
    SLabel label() const { return is_log ? SLabel::logarithmic() : SLabel::riesz(s); }
};

struct EnergyStats {
    double energy;
    double gap;
    std::optional<double> log_coeff_context;
};

/// R_s(x,y) = |x-y|^{-s} for s > 0, -log|x-y| for s = 0.
/// Throws singularity_error when |x-y| < 1e-15.
double riesz_kernel(const RieszParams& params, std::span<const double> x, std::span<const double> y);

/// E_s(X_N) = sum over ordered pairs i != j of R_s(x_i, x_j). Computed as
/// twice the compensated i<j sum in a fixed blocked order, so the value is
/// bitwise reproducible for any worker count.
double discrete_energy(const Configuration& config, const RieszParams& params, int workers = 0);

/// Tangent gradients of E_s: for each i the ambient derivative
/// g_i = -2s sum_{j != i} (x_i - x_j) |x_i - x_j|^{-s-2}   (s > 0; -2 sum (x_i-x_j)|x_i-x_j|^{-2} at s = 0)
/// projected onto the tangent space, g - <g, x_i> x_i. Flat N*(d+1) layout.
std::vector<double> energy_gradient(const Configuration& config, const RieszParams& params,
                                    int workers = 0);

/// Continuous energy of the normalized surface measure:
/// E_s = 2^{d-s-1} Gamma((d+1)/2) Gamma((d-s)/2) / (sqrt(pi) Gamma(d-s/2)),
/// E_0 = (psi_0(d) - psi_0(d/2))/2 - log 2.
double continuous_energy(const RieszParams& params);

/// Normalized second-order energy statistic:
///   s > 0: (E_s(X) - E_s N^2) / N^{1+s/d}
///   s = 0: (E_0(X) - E_0 N^2 + (1/d) N log N) / N,
/// with log_coeff_context = (E_0(X) - E_0 N^2)/(N log N) for s = 0, N >= 2.
EnergyStats energy_gap(const Configuration& config, const RieszParams& params, int workers = 0);

namespace detail {
// Raw-buffer versions used by the optimizer's inner loop (no Configuration
// re-validation per evaluation). pts is flat row-major, n points, width d+1.
double energy_flat(const double* pts, int n, const RieszParams& params, int workers);
void gradient_flat(const double* pts, int n, const RieszParams& params, double* grad_out,
                   int workers);
}  // namespace detail

}  // namespace riesz
