#include "riesz/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>

#include "riesz/common.hpp"
#include "riesz/rng.hpp"

namespace riesz {

namespace {

constexpr double kArmijoC1 = 1e-4;
constexpr int kMaxHalvings = 60;

std::vector<double> random_points(int d, int n, std::uint64_t seed, std::uint64_t stream) {
    CounterRng rng(seed, stream);
    const int width = d + 1;
    std::vector<double> flat(static_cast<std::size_t>(n) * width);
    for (int i = 0; i < n; ++i) {
        double* p = flat.data() + static_cast<std::size_t>(i) * width;
        double nrm;
        do {
            nrm = 0.0;
            for (int k = 0; k < width; ++k) {
                p[k] = rng.next_gaussian();
                nrm += p[k] * p[k];
            }
            nrm = std::sqrt(nrm);
        } while (!(nrm > 1e-8));
        for (int k = 0; k < width; ++k) p[k] /= nrm;
    }
    return flat;
}

void retract(std::vector<double>& pts, int width) {
    const int n = static_cast<int>(pts.size()) / width;
    for (int i = 0; i < n; ++i) {
        double* p = pts.data() + static_cast<std::size_t>(i) * width;
        double nrm = 0.0;
        for (int k = 0; k < width; ++k) nrm += p[k] * p[k];
        nrm = std::sqrt(nrm);
        for (int k = 0; k < width; ++k) p[k] /= nrm;
    }
}

double grad_inf_norm(const std::vector<double>& grad, int width) {
    const int n = static_cast<int>(grad.size()) / width;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double* g = grad.data() + static_cast<std::size_t>(i) * width;
        double sq = 0.0;
        for (int k = 0; k < width; ++k) sq += g[k] * g[k];
        worst = std::max(worst, sq);
    }
    return std::sqrt(worst);
}

struct DescentOutcome {
    std::vector<double> pts;
    double energy;
    double grad_inf;
    long iters;
    bool converged;
};

DescentOutcome descend(std::vector<double> pts, const RieszParams& params, int n,
                       const MinimizeOptions& opts, const MinimizeResult* best_so_far) {
    const int width = params.d + 1;
    const double grad_threshold = opts.grad_tol * std::pow(n, params.s / params.d);

    double energy = detail::energy_flat(pts.data(), n, params, opts.workers);
    std::vector<double> grad(pts.size());
    std::vector<double> trial(pts.size());
    std::vector<double> energy_window;
    double step = 1.0 / n;
    long iters = 0;
    double ginf = 0.0;

    for (; iters < opts.max_iters; ++iters) {
        detail::gradient_flat(pts.data(), n, params, grad.data(), opts.workers);
        double gnorm2 = 0.0;
        for (double g : grad) gnorm2 += g * g;
        ginf = grad_inf_norm(grad, width);
        if (ginf <= grad_threshold) return {std::move(pts), energy, ginf, iters, true};

        // Stall detection: relative decrease over the trailing window.
        energy_window.push_back(energy);
        const int w = std::max(opts.stall_window, 1);
        if (static_cast<int>(energy_window.size()) > w) {
            const double before = energy_window[energy_window.size() - 1 - w];
            if (before - energy < opts.stall_tol * std::max(std::abs(energy), 1.0))
                return {std::move(pts), energy, ginf, iters, false};
        }

        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            for (std::size_t k = 0; k < pts.size(); ++k) trial[k] = pts[k] - step * grad[k];
            retract(trial, width);
            const double e_trial = detail::energy_flat(trial.data(), n, params, opts.workers);
            if (e_trial <= energy - kArmijoC1 * step * gnorm2) {
                pts.swap(trial);
                energy = e_trial;
                step *= 1.3;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            std::shared_ptr<MinimizeResult> best;
            if (best_so_far) best = std::make_shared<MinimizeResult>(*best_so_far);
            throw stagnation_error("minimize_energy: line search failed after 60 halvings", best);
        }
    }
    return {std::move(pts), energy, ginf, iters, false};
}

MinimizeResult package(const RieszParams& params, DescentOutcome out, int restart_index,
                       std::uint64_t seed, std::vector<double> restart_energies) {
    ConfigMeta meta;
    meta.s = params.label();
    meta.seed = seed;
    meta.energy = out.energy;
    meta.grad_norm = out.grad_inf;
    Configuration config(params.d, std::move(out.pts), meta);
    return MinimizeResult{std::move(config), out.energy, out.grad_inf, out.iters,
                          restart_index, out.converged, std::move(restart_energies)};
}

}  // namespace

std::vector<double> spiral_points(int n) {
    // Generalized spiral: latitudes equispaced in z, golden-ish azimuth march.
    std::vector<double> flat(static_cast<std::size_t>(n) * 3);
    double phi = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double z = -1.0 + (2.0 * k - 1.0) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        if (k > 1 && rho > 1e-12) phi += 3.6 / (rho * std::sqrt(static_cast<double>(n)));
        double* p = flat.data() + static_cast<std::size_t>(k - 1) * 3;
        p[0] = rho * std::cos(phi);
        p[1] = rho * std::sin(phi);
        p[2] = z;
        double nrm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        for (int c = 0; c < 3; ++c) p[c] /= nrm;
    }
    return flat;
}

std::string cache_file_name(int d, const RieszParams& params, int N, std::uint64_t seed,
                            double grad_tol) {
    return "riesz_d" + std::to_string(d) + "_s" + params.label().str() + "_N" + std::to_string(N) +
           "_seed" + std::to_string(seed) + "_gtol" + format_double(grad_tol) + ".sphpts";
}

MinimizeResult minimize_energy(int d, const RieszParams& params, int N, const MinimizeOptions& opts) {
    if (N < 2) throw std::invalid_argument("minimize_energy: N must be >= 2");
    if (params.d != d) throw std::invalid_argument("minimize_energy: d mismatch with params");
    if (opts.max_iters < 1) throw std::invalid_argument("minimize_energy: max_iters must be >= 1");
    if (!(opts.grad_tol > 0.0)) throw std::invalid_argument("minimize_energy: grad_tol must be > 0");
    if (opts.restarts < 1) throw std::invalid_argument("minimize_energy: restarts must be >= 1");

    std::filesystem::path cache_path;
    if (!opts.cache_dir.empty()) {
        cache_path = std::filesystem::path(opts.cache_dir) /
                     cache_file_name(d, params, N, opts.seed, opts.grad_tol);
        if (std::filesystem::exists(cache_path)) {
            Configuration config = read_config(cache_path.string());
            if (config.dim() == d && config.size() == N) {
                const double energy = discrete_energy(config, params, opts.workers);
                const std::vector<double> grad = energy_gradient(config, params, opts.workers);
                const double ginf = grad_inf_norm(grad, d + 1);
                config.meta().energy = energy;
                config.meta().grad_norm = ginf;
                const bool conv = ginf <= opts.grad_tol * std::pow(N, params.s / params.d);
                return MinimizeResult{std::move(config), energy, ginf, 0, 0, conv, {}};
            }
        }
    }

    std::vector<double> restart_energies;
    restart_energies.reserve(opts.restarts);
    std::optional<DescentOutcome> best;
    int best_restart = -1;
    MinimizeResult* best_result_ptr = nullptr;
    std::optional<MinimizeResult> best_packaged;  // only for stagnation payloads

    for (int k = 0; k < opts.restarts; ++k) {
        std::vector<double> start;
        if (k == 0 && opts.init == InitScheme::from_file) {
            Configuration init = read_config(opts.init_path);
            if (init.dim() != d || init.size() != N)
                throw std::invalid_argument("minimize_energy: init file has wrong d or N");
            start.assign(init.coords().begin(), init.coords().end());
        } else if (k == 0 && opts.init == InitScheme::spiral && d == 2) {
            start = spiral_points(N);
        } else {
            start = random_points(d, N, opts.seed, rng_stream::kMinimizeRestartBase + k);
        }
        DescentOutcome out = descend(std::move(start), params, N, opts, best_result_ptr);
        restart_energies.push_back(out.energy);
        // Lowest energy wins; ties within 1e-12 keep the earlier restart.
        if (!best || out.energy < best->energy - 1e-12) {
            best = std::move(out);
            best_restart = k;
            best_packaged = package(params, DescentOutcome(*best), best_restart, opts.seed, {});
            best_result_ptr = &*best_packaged;
        }
    }

    MinimizeResult result =
        package(params, std::move(*best), best_restart, opts.seed, std::move(restart_energies));
    if (!cache_path.empty()) {
        std::filesystem::create_directories(cache_path.parent_path());
        write_config(result.config, cache_path.string());
    }
    return result;
}

}  // namespace riesz
