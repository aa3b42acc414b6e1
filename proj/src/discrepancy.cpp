#include "riesz/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "riesz/common.hpp"
#include "riesz/kahan.hpp"
#include "riesz/parallel.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectral.hpp"

namespace riesz {

namespace {

struct CenterBest {
    double value = -1.0;
    double threshold = 1.0;   // inner product defining the cap boundary
    bool closed_branch = false;
    std::size_t center_index = 0;
};

// Scores one center: sort inner products descending, then score both the
// open count (#t_j > v) and closed count (#t_j >= v) at each distinct value.
// F(v) is accumulated segment by segment from t = 1 downward, so the
// quadrature cost is one short panel per threshold.
CenterBest score_center(const Configuration& config, const std::vector<double>& center,
                        std::size_t center_index) {
    const int n = config.size();
    const int d = config.dim();
    const int width = d + 1;
    const double omega = sphere_area(d);
    const double ring = sphere_area(d - 1);
    const double expo = 0.5 * (d - 2);

    std::vector<double> dots(n);
    for (int i = 0; i < n; ++i) {
        const auto p = config.point(i);
        double acc = 0.0;
        for (int k = 0; k < width; ++k) acc += center[k] * p[k];
        dots[i] = std::clamp(acc, -1.0, 1.0);
    }
    std::sort(dots.begin(), dots.end(), std::greater<double>());

    CenterBest best;
    best.center_index = center_index;
    KahanSum area_above;  // sigma({t > v}) accumulated from v = 1 downward
    double prev = 1.0;
    const double seg_tol = 1e-12 * omega / (n + 1);
    auto weight = [&](double t) { return std::pow((1.0 - t) * (1.0 + t), expo); };

    int i = 0;
    while (i < n) {
        const double v = dots[i];
        int j = i;
        while (j < n && dots[j] == v) ++j;  // ties share a threshold
        area_above.add(integrate(weight, v, prev, seg_tol) * ring);
        prev = v;
        const double f = std::min(area_above.value() / omega, 1.0);
        const double open_count = i;    // # { t_j > v }
        const double closed_count = j;  // # { t_j >= v }
        const double cand_open = std::abs(open_count / n - f);
        const double cand_closed = std::abs(closed_count / n - f);
        if (cand_open > best.value) best = {cand_open, v, false, center_index};
        if (cand_closed > best.value) best = {cand_closed, v, true, center_index};
        i = j;
    }
    return best;
}

Cap witness_cap(const std::vector<double>& center, const CenterBest& best) {
    // Nudge the boundary so the open witness cap reproduces the scored count:
    // outward to capture boundary points (closed branch), inward to exclude
    // them (open branch). The shift survives the sqrt/square round-trip of a
    // recount and moves the cap measure by ~1e-13.
    const double shift = 1e-13 * (1.0 + std::abs(best.threshold));
    double v = best.closed_branch ? best.threshold - shift : best.threshold + shift;
    v = std::clamp(v, -1.0, 1.0);
    const double r = std::sqrt(std::max(2.0 * (1.0 - v), 0.0));
    return Cap(SpherePoint(center), std::clamp(r, 1e-12, 2.0));
}

}  // namespace

CapDiscrepancyEstimate cap_discrepancy_with_centers(const Configuration& config,
                                                    const std::vector<std::vector<double>>& centers,
                                                    int workers) {
    if (centers.empty()) throw std::invalid_argument("cap_discrepancy: needs at least one center");
    std::vector<CenterBest> bests(centers.size());
    parallel_chunks(centers.size(), workers, [&](std::size_t c) {
        bests[c] = score_center(config, centers[c], c);
    });
    // First strictly-better candidate wins: deterministic for any worker count.
    CenterBest overall;
    for (const auto& b : bests)
        if (b.value > overall.value) overall = b;
    return CapDiscrepancyEstimate{overall.value, witness_cap(centers[overall.center_index], overall),
                                  static_cast<long>(centers.size()), true};
}

CapDiscrepancyEstimate cap_discrepancy(const Configuration& config, long centers_budget,
                                       std::uint64_t seed, int workers) {
    if (centers_budget < 1) throw std::invalid_argument("cap_discrepancy: centers_budget must be >= 1");
    const int n = config.size();
    const int width = config.dim() + 1;
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<std::size_t>(2 * n) + centers_budget);
    for (int i = 0; i < n; ++i) {
        const auto p = config.point(i);
        centers.emplace_back(p.begin(), p.end());
        std::vector<double> anti(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) anti[k] = -p[k];
        centers.push_back(std::move(anti));
    }
    CounterRng rng(seed, rng_stream::kCapCenters);
    for (long c = 0; c < centers_budget; ++c) {
        std::vector<double> p(width);
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
        centers.push_back(std::move(p));
    }
    return cap_discrepancy_with_centers(config, centers, workers);
}

IdentityReport stolarsky_decomposition_check(const Configuration& config, const RieszParams& params,
                                             double epsilon, double tol, int workers) {
    if (config.dim() != params.d)
        throw std::invalid_argument("stolarsky_decomposition_check: dimension mismatch");
    const int n = config.size();
    const double r = epsilon * std::pow(static_cast<double>(n), -1.0 / params.d);
    if (!(r > 0.0 && r <= 2.0))
        throw std::invalid_argument("stolarsky_decomposition_check: cap radius out of (0, 2]");

    const PairCapEvaluator eval(params, r, 0.1 * tol);

    // Left side: off-diagonal double cap averages, pair by pair.
    double lhs = 0.0;
    if (n >= 2) {
        const int width = params.d + 1;
        const double* pts = config.coords().data();
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<double> vals(pairs.size());
        parallel_chunks(pairs.size(), workers, [&](std::size_t p) {
            const auto [i, j] = pairs[p];
            const double* a = pts + static_cast<std::size_t>(i) * width;
            const double* b = pts + static_cast<std::size_t>(j) * width;
            double dot = 0.0;
            for (int k = 0; k < width; ++k) dot += a[k] * b[k];
            vals[p] = eval.evaluate(std::clamp(dot, -1.0, 1.0));
        });
        KahanSum sum;
        for (double v : vals) sum.add(v);
        lhs = 2.0 * sum.value() / (static_cast<double>(n) * n);
    }

    // Right side through the spectral route: E_s(sigma~) + E_s(mu) - (1/N) <self>.
    const double cont = continuous_energy(params);
    auto weight = [&](int ell) { return riesz_eigenvalue(params.d, params.s, ell); };
    const auto mu = detail::spectral_mu_converged(config, r, weight, 0.1 * tol, 0.1 * tol, workers);
    const double self_avg = eval.evaluate(1.0);
    const double rhs = cont + mu.sum - self_avg / n;

    return IdentityReport{lhs, rhs, std::abs(lhs - rhs), tol};
}

SmoothingDefect smoothing_defect(const Configuration& config, const RieszParams& params,
                                 double epsilon, int workers) {
    if (config.dim() != params.d) throw std::invalid_argument("smoothing_defect: dimension mismatch");
    if (config.size() < 2) throw std::invalid_argument("smoothing_defect: needs at least 2 points");
    if (!(epsilon > 0.0)) throw std::invalid_argument("smoothing_defect: epsilon must be positive");
    const SeparationStats sep = separation(config);
    if (!(sep.scaled >= 8.0 * epsilon))
        throw std::invalid_argument(
            "smoothing_defect: scaled separation below 8*epsilon; caps would overlap");

    const int n = config.size();
    const double r = epsilon * std::pow(static_cast<double>(n), -1.0 / params.d);
    const PairCapEvaluator eval(params, r, 1e-11);
    const int width = params.d + 1;
    const double* pts = config.coords().data();

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<double> vals(pairs.size());
    parallel_chunks(pairs.size(), workers, [&](std::size_t p) {
        const auto [i, j] = pairs[p];
        const double* a = pts + static_cast<std::size_t>(i) * width;
        const double* b = pts + static_cast<std::size_t>(j) * width;
        double dot = 0.0;
        double d2 = 0.0;
        for (int k = 0; k < width; ++k) {
            dot += a[k] * b[k];
            const double diff = a[k] - b[k];
            d2 += diff * diff;
        }
        const double kernel = params.is_log ? -0.5 * std::log(d2) : std::pow(d2, -0.5 * params.s);
        vals[p] = std::abs(kernel - eval.evaluate(std::clamp(dot, -1.0, 1.0)));
    });
    KahanSum sum;
    for (double v : vals) sum.add(v);
    const double nn = static_cast<double>(n) * n;
    const double scale = epsilon * epsilon *
                         (std::pow(static_cast<double>(n), -2.0 / params.d) +
                          std::pow(static_cast<double>(n), -1.0 + params.s / params.d));
    return SmoothingDefect{2.0 * sum.value() / nn, scale};
}

double mean_value_check(const RieszParams& params, const SpherePoint& a, const SpherePoint& b,
                        double r) {
    const bool subcritical = params.d > 2 && params.s > 0.0 && params.s < params.d - 2;
    const bool log_case = params.is_log && params.d >= 2;
    if (!subcritical && !log_case)
        throw std::invalid_argument(
            "mean_value_check: needs d > 2 with 0 < s < d-2, or the logarithmic kernel");
    if (!(r > 0.0 && r <= 0.01))
        throw std::invalid_argument("mean_value_check: r must lie in (0, 0.01]");
    if (a.dim() != params.d || b.dim() != params.d)
        throw std::invalid_argument("mean_value_check: dimension mismatch");

    double dot = 0.0;
    for (int k = 0; k <= params.d; ++k) dot += a.coords()[k] * b.coords()[k];
    dot = std::clamp(dot, -1.0, 1.0);
    const double avg = pair_cap_energy(params, r, dot, 1e-12);
    const double kernel = riesz_kernel(params, a.view(), b.view());
    return (avg - kernel) / (r * r);
}

}  // namespace riesz
