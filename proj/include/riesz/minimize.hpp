#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/energy.hpp"
#include "riesz/sphere.hpp"

namespace riesz {

enum class InitScheme { random, spiral, from_file };

struct MinimizeOptions {
    int max_iters = 20000;
    double grad_tol = 1e-8;       // scaled by N^{s/d} at the stopping test
    double stall_tol = 1e-13;     // relative energy decrease over stall_window
    int stall_window = 60;
    int restarts = 1;
    std::uint64_t seed = 0;
    InitScheme init = InitScheme::random;
    std::string init_path;        // used by InitScheme::from_file
    std::string cache_dir;        // empty disables the SPHPTS cache
    int workers = 0;
};

struct MinimizeResult {
    Configuration config;
    double energy;
    double grad_inf_norm;  // max_i || tangent grad_i ||_2 at the returned iterate
    long iters;
    int restart_index;
    bool converged;        // gradient criterion met (not just stalled)
    std::vector<double> restart_energies;
};

/// Backtracking line search could not find a decrease after 60 halvings;
/// carries the best iterate found so far.
class stagnation_error : public std::runtime_error {
public:
    stagnation_error(std::string msg, std::shared_ptr<MinimizeResult> best_so_far)
        : std::runtime_error(std::move(msg)), best(std::move(best_so_far)) {}
    std::shared_ptr<MinimizeResult> best;
};

/// Projected gradient descent on (S^d)^N with Armijo backtracking
/// (c1 = 1e-4, initial step 1/N, growth x1.3 on acceptance, halving on
/// rejection) and retraction by per-point renormalization. Runs
/// opts.restarts independent starts and returns the lowest energy
/// (ties within 1e-12 break towards the lower restart index).
/// Deterministic in (d, s, N, opts). When opts.cache_dir is set, results are
/// stored as SPHPTS files keyed by (d, s, N, seed, grad_tol) and reused.
MinimizeResult minimize_energy(int d, const RieszParams& params, int N, const MinimizeOptions& opts);

/// Cache file name for a minimization, e.g. "riesz_d2_s1_N64_seed7_gtol1e-08.sphpts".
std::string cache_file_name(int d, const RieszParams& params, int N, std::uint64_t seed,
                            double grad_tol);

/// Generalized spiral points on S^2 (warm start for d = 2).
std::vector<double> spiral_points(int n);

}  // namespace riesz
