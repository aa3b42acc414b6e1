#pragma once

#include <cstdint>
#include <utility>

#include "riesz/energy.hpp"
#include "riesz/sphere.hpp"

namespace riesz {

/// Worst relative error between <tangent grad_i, v> and the central finite
/// difference of the energy under the tangent perturbation
/// x_i -> normalize(x_i + tau v), step 1e-5, two random directions per point.
double gradient_fd_error(const Configuration& config, const RieszParams& params, int workers = 0,
                         std::uint64_t seed = 424242);

/// Residual-decay probe of the Helmholtz identity between Riesz kernels:
///   s > 0:  (-Lap + s(2d-2-s)/4) R_s = s(d-2-s) R_{s+2}
///   s = 0:  -Lap R_0 = (d-2) R_2 - (d-1)/2
/// with the spherical Laplacian approximated by a second-order ambient stencil
/// on the degree-0 homogeneous extension. Returns {min, max} over n_pairs
/// random (x, x0) of residual(h) / residual(h/2) at h = 2e-3; second-order
/// decay puts the ratio near 4.
std::pair<double, double> laplace_identity_ratio_range(int d, double s, int n_pairs,
                                                       std::uint64_t seed = 77777);

}  // namespace riesz
