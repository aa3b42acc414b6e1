#include "riesz/energy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "riesz/common.hpp"
#include "riesz/gammafn.hpp"
#include "riesz/kahan.hpp"
#include "riesz/parallel.hpp"

namespace riesz {

namespace {

constexpr double kSingularDist2 = 1e-30;  // (1e-15)^2

// Kernel value from squared distance; specialized branches keep the O(N^2)
// loops off the generic pow path for the exponents the sweeps actually use.
enum class KernelKind { log_case, inv_sqrt, inverse, inv_square, generic };

KernelKind classify(const RieszParams& p) {
    if (p.is_log) return KernelKind::log_case;
    if (p.s == 1.0) return KernelKind::inv_sqrt;
    if (p.s == 2.0) return KernelKind::inverse;
    if (p.s == 4.0) return KernelKind::inv_square;
    return KernelKind::generic;
}

template <KernelKind kind>
inline double kernel_from_d2(double d2, double s) {
    if constexpr (kind == KernelKind::log_case) return -0.5 * std::log(d2);
    if constexpr (kind == KernelKind::inv_sqrt) return 1.0 / std::sqrt(d2);
    if constexpr (kind == KernelKind::inverse) return 1.0 / d2;
    if constexpr (kind == KernelKind::inv_square) return 1.0 / (d2 * d2);
    return std::pow(d2, -0.5 * s);
}

// Gradient weight w with g_i = sum_j w(d2_ij) (x_i - x_j):
// w = -2 s |x-y|^{-s-2} for s > 0, w = -2 |x-y|^{-2} for s = 0.
template <KernelKind kind>
inline double grad_weight_from_d2(double d2, double s) {
    if constexpr (kind == KernelKind::log_case) return -2.0 / d2;
    if constexpr (kind == KernelKind::inv_sqrt) return -2.0 / (d2 * std::sqrt(d2));
    if constexpr (kind == KernelKind::inverse) return -4.0 / (d2 * d2);
    if constexpr (kind == KernelKind::inv_square) return -8.0 / (d2 * d2 * d2);
    return -2.0 * s * std::pow(d2, -0.5 * (s + 2.0));
}

struct RowChunks {
    std::vector<int> row_begin;  // chunk c covers rows [row_begin[c], row_begin[c+1])
};

// Fixed chunking by upper-triangle pair count; independent of worker count.
RowChunks make_row_chunks(int n) {
    constexpr long kPairsPerChunk = 1 << 14;
    RowChunks rc;
    rc.row_begin.push_back(0);
    long acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += n - 1 - i;
        if (acc >= kPairsPerChunk && i + 1 < n) {
            rc.row_begin.push_back(i + 1);
            acc = 0;
        }
    }
    rc.row_begin.push_back(n);
    return rc;
}

template <KernelKind kind>
double energy_impl(const double* pts, int n, int width, double s, int workers) {
    const RowChunks rc = make_row_chunks(n);
    const std::size_t n_chunks = rc.row_begin.size() - 1;
    std::vector<double> partial(n_chunks, 0.0);
    std::vector<std::pair<int, int>> bad(n_chunks, {-1, -1});

    parallel_chunks(n_chunks, workers, [&](std::size_t c) {
        KahanSum sum;
        for (int i = rc.row_begin[c]; i < rc.row_begin[c + 1]; ++i) {
            const double* a = pts + static_cast<std::size_t>(i) * width;
            for (int j = i + 1; j < n; ++j) {
                const double* b = pts + static_cast<std::size_t>(j) * width;
                double d2 = 0.0;
                for (int k = 0; k < width; ++k) {
                    const double diff = a[k] - b[k];
                    d2 += diff * diff;
                }
                if (d2 < kSingularDist2) {
                    if (bad[c].first < 0) bad[c] = {i, j};
                    continue;
                }
                sum.add(kernel_from_d2<kind>(d2, s));
            }
        }
        partial[c] = sum.value();
    });

    for (const auto& [i, j] : bad)
        if (i >= 0)
            throw singularity_error("discrete_energy: points " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are closer than 1e-15",
                                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    KahanSum total;
    for (double v : partial) total.add(v);
    return 2.0 * total.value();
}

template <KernelKind kind>
void gradient_impl(const double* pts, int n, int width, double s, double* grad, int workers) {
    const RowChunks rc = make_row_chunks(n);
    const std::size_t n_chunks = rc.row_begin.size() - 1;
    std::vector<std::pair<int, int>> bad(n_chunks, {-1, -1});

    parallel_chunks(n_chunks, workers, [&](std::size_t c) {
        std::vector<double> acc(width);
        for (int i = rc.row_begin[c]; i < rc.row_begin[c + 1]; ++i) {
            const double* a = pts + static_cast<std::size_t>(i) * width;
            for (int k = 0; k < width; ++k) acc[k] = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double* b = pts + static_cast<std::size_t>(j) * width;
                double d2 = 0.0;
                for (int k = 0; k < width; ++k) {
                    const double diff = a[k] - b[k];
                    d2 += diff * diff;
                }
                if (d2 < kSingularDist2) {
                    if (bad[c].first < 0) bad[c] = {std::min(i, j), std::max(i, j)};
                    continue;
                }
                const double w = grad_weight_from_d2<kind>(d2, s);
                for (int k = 0; k < width; ++k) acc[k] += w * (a[k] - b[k]);
            }
            // Tangent projection g - <g, x> x.
            double dot = 0.0;
            for (int k = 0; k < width; ++k) dot += acc[k] * a[k];
            double* g = grad + static_cast<std::size_t>(i) * width;
            for (int k = 0; k < width; ++k) g[k] = acc[k] - dot * a[k];
        }
    });

    for (const auto& [i, j] : bad)
        if (i >= 0)
            throw singularity_error("energy_gradient: points " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are closer than 1e-15",
                                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

}  // namespace

RieszParams::RieszParams(int d_, double s_) : d(d_), s(s_), is_log(s_ == 0.0) {
    if (d < 2) throw std::invalid_argument("RieszParams: d must be >= 2");
    if (!(s >= 0.0 && s < d)) throw std::invalid_argument("RieszParams: s must lie in [0, d)");
}

double riesz_kernel(const RieszParams& params, std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || static_cast<int>(x.size()) != params.d + 1)
        throw std::invalid_argument("riesz_kernel: coordinate size must be d+1");
    double d2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double diff = x[k] - y[k];
        d2 += diff * diff;
    }
    if (d2 < kSingularDist2)
        throw singularity_error("riesz_kernel: points closer than 1e-15", 0, 1);
    if (params.is_log) return -0.5 * std::log(d2);
    return std::pow(d2, -0.5 * params.s);
}

namespace detail {

double energy_flat(const double* pts, int n, const RieszParams& params, int workers) {
    const int width = params.d + 1;
    switch (classify(params)) {
        case KernelKind::log_case: return energy_impl<KernelKind::log_case>(pts, n, width, params.s, workers);
        case KernelKind::inv_sqrt: return energy_impl<KernelKind::inv_sqrt>(pts, n, width, params.s, workers);
        case KernelKind::inverse: return energy_impl<KernelKind::inverse>(pts, n, width, params.s, workers);
        case KernelKind::inv_square: return energy_impl<KernelKind::inv_square>(pts, n, width, params.s, workers);
        case KernelKind::generic: break;
    }
    return energy_impl<KernelKind::generic>(pts, n, width, params.s, workers);
}

void gradient_flat(const double* pts, int n, const RieszParams& params, double* grad_out,
                   int workers) {
    const int width = params.d + 1;
    switch (classify(params)) {
        case KernelKind::log_case: gradient_impl<KernelKind::log_case>(pts, n, width, params.s, grad_out, workers); return;
        case KernelKind::inv_sqrt: gradient_impl<KernelKind::inv_sqrt>(pts, n, width, params.s, grad_out, workers); return;
        case KernelKind::inverse: gradient_impl<KernelKind::inverse>(pts, n, width, params.s, grad_out, workers); return;
        case KernelKind::inv_square: gradient_impl<KernelKind::inv_square>(pts, n, width, params.s, grad_out, workers); return;
        case KernelKind::generic: gradient_impl<KernelKind::generic>(pts, n, width, params.s, grad_out, workers); return;
    }
}

}  // namespace detail

double discrete_energy(const Configuration& config, const RieszParams& params, int workers) {
    if (config.dim() != params.d)
        throw std::invalid_argument("discrete_energy: dimension mismatch between config and params");
    return detail::energy_flat(config.coords().data(), config.size(), params, workers);
}

std::vector<double> energy_gradient(const Configuration& config, const RieszParams& params,
                                    int workers) {
    if (config.dim() != params.d)
        throw std::invalid_argument("energy_gradient: dimension mismatch between config and params");
    std::vector<double> grad(config.coords().size());
    detail::gradient_flat(config.coords().data(), config.size(), params, grad.data(), workers);
    return grad;
}

double continuous_energy(const RieszParams& params) {
    const int d = params.d;
    if (params.is_log) return 0.5 * (digamma(d) - digamma(0.5 * d)) - std::log(2.0);
    const double s = params.s;
    return std::exp((d - s - 1.0) * std::log(2.0) + std::lgamma(0.5 * (d + 1)) +
                    std::lgamma(0.5 * (d - s)) - 0.5 * std::log(kPi) - std::lgamma(d - 0.5 * s));
}

EnergyStats energy_gap(const Configuration& config, const RieszParams& params, int workers) {
    const double energy = discrete_energy(config, params, workers);
    const double n = config.size();
    const double cont = continuous_energy(params);
    EnergyStats out{energy, 0.0, std::nullopt};
    if (params.is_log) {
        const double excess = energy - cont * n * n;
        out.gap = (excess + n * std::log(n) / params.d) / n;
        if (config.size() >= 2) out.log_coeff_context = excess / (n * std::log(n));
    } else {
        out.gap = (energy - cont * n * n) / std::pow(n, 1.0 + params.s / params.d);
    }
    return out;
}

}  // namespace riesz
