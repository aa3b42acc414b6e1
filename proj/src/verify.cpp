#include "riesz/verify.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "riesz/checks.hpp"
#include "riesz/common.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/minimize.hpp"
#include "riesz/parallel.hpp"
#include "riesz/rng.hpp"
#include "riesz/sweep.hpp"

namespace riesz {

namespace {

constexpr std::uint64_t kVerifySeed = 20210907;

struct Suite {
    VerifyLevel level;
    int workers;
    std::vector<CheckResult> results;

    int lmax() const { return level == VerifyLevel::fast ? 50 : 200; }
    int nmax() const { return level == VerifyLevel::fast ? 64 : 1024; }

    void add(const std::string& name, bool passed, double value, const std::string& detail) {
        results.push_back({name, passed, value, detail});
    }
};

std::vector<double> north_pole(int d) {
    std::vector<double> p(static_cast<std::size_t>(d) + 1, 0.0);
    p.back() = 1.0;
    return p;
}

std::vector<double> random_rotation(int dim, std::uint64_t stream) {
    // Gram-Schmidt on a gaussian matrix; rows form the orthonormal frame.
    CounterRng rng(kVerifySeed, rng_stream::kVerify + stream);
    std::vector<double> q(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i) {
        double* row = q.data() + static_cast<std::size_t>(i) * dim;
        for (int k = 0; k < dim; ++k) row[k] = rng.next_gaussian();
        for (int j = 0; j < i; ++j) {
            const double* prev = q.data() + static_cast<std::size_t>(j) * dim;
            double dot = 0.0;
            for (int k = 0; k < dim; ++k) dot += row[k] * prev[k];
            for (int k = 0; k < dim; ++k) row[k] -= dot * prev[k];
        }
        double nrm = 0.0;
        for (int k = 0; k < dim; ++k) nrm += row[k] * row[k];
        nrm = std::sqrt(nrm);
        for (int k = 0; k < dim; ++k) row[k] /= nrm;
    }
    return q;
}

std::vector<double> apply_rotation(std::span<const double> p, const std::vector<double>& q) {
    const int dim = static_cast<int>(p.size());
    std::vector<double> out(p.size());
    for (int r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (int k = 0; k < dim; ++k) acc += q[static_cast<std::size_t>(r) * dim + k] * p[k];
        out[r] = acc;
    }
    double nrm = 0.0;
    for (double v : out) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : out) v /= nrm;
    return out;
}

Configuration rotate_config(const Configuration& config, const std::vector<double>& q) {
    std::vector<double> out;
    out.reserve(config.coords().size());
    for (int i = 0; i < config.size(); ++i) {
        const auto rotated = apply_rotation(config.point(i), q);
        out.insert(out.end(), rotated.begin(), rotated.end());
    }
    return Configuration(config.dim(), std::move(out), config.meta());
}

std::vector<double> s_grid(int d) {
    const double cand[] = {0.0, 0.5, static_cast<double>(d - 2), static_cast<double>(d - 1),
                           d - 0.5};
    std::vector<double> uniq;
    for (double s : cand) {
        if (s < 0.0 || s >= d) continue;
        bool dup = false;
        for (double u : uniq) dup = dup || u == s;
        if (!dup) uniq.push_back(s);
    }
    return uniq;
}

// ---------------- sphere_core ----------------

void check_sphere(Suite& st) {
    {
        double min_gap = 1e300;
        bool mono = true;
        for (int d = 2; d <= 4; ++d) {
            double prev = 0.0;
            for (int k = 1; k <= 20; ++k) {
                const double a = cap_area(d, 0.1 * k);
                min_gap = std::min(min_gap, a - prev);
                mono = mono && a > prev;
                prev = a;
            }
        }
        st.add("sphere.cap_area_monotone", mono && min_gap > 0.0, min_gap,
               "strictly increasing in r for d=2..4");
    }
    {
        double worst = 0.0;
        for (int d = 2; d <= 5; ++d)
            worst = std::max(worst, std::abs(cap_area(d, 2.0) / sphere_area(d) - 1.0));
        st.add("sphere.cap_area_full_sphere", worst <= 1e-12, worst,
               "cap_area(d,2) = omega_d to rel 1e-12, d=2..5");
    }
    {
        double worst = 0.0;
        for (int d = 2; d <= 4; ++d) {
            const double vol = ball_volume(d);
            for (double r : {1e-2, 5e-3, 2.5e-3})
                worst = std::max(worst, std::abs(cap_area(d, r) / std::pow(r, d) / vol - 1.0));
        }
        st.add("sphere.cap_area_small_r_ball_limit", worst <= 0.01, worst,
               "cap_area/r^d within 1% of unit-ball volume for r <= 1e-2");
    }
    {
        const int n = 100000;
        double worst_sigmas = 0.0;
        for (int d : {2, 3}) {
            const Configuration cfg = sample_uniform(d, n, kVerifySeed + d);
            const Cap cap(SpherePoint(north_pole(d)), 0.8);
            const double p = cap_area(d, 0.8) / sphere_area(d);
            const double expect = n * p;
            const double sd = std::sqrt(n * p * (1.0 - p));
            const auto counts = cap.count(cfg);
            worst_sigmas = std::max(worst_sigmas, std::abs(counts.strict - expect) / sd);
        }
        st.add("sphere.uniform_cap_binomial", worst_sigmas <= 4.0, worst_sigmas,
               "empirical cap count within 4 sigma of binomial at n=1e5, d=2,3");
    }
    {
        bool ok = true;
        double worst = 1e300;
        for (int d : {2, 3}) {
            const auto sep = separation(sample_uniform(d, st.nmax(), kVerifySeed + 7 + d));
            ok = ok && sep.min_dist > 0.0;
            worst = std::min(worst, sep.min_dist);
        }
        st.add("sphere.separation_positive", ok, worst, "uniform samples have positive separation");
    }
}

// ---------------- kernels_energy ----------------

void check_energy(Suite& st) {
    {
        double worst = 0.0;
        for (int d : {2, 3}) {
            const int n = std::min(st.nmax(), 48);
            const Configuration cfg = sample_uniform(d, n, kVerifySeed + 11 + d);
            const auto q = random_rotation(d + 1, 17 + d);
            const Configuration rot = rotate_config(cfg, q);
            for (double s : {0.0, 1.0}) {
                const RieszParams params(d, s);
                const double e0 = discrete_energy(cfg, params, st.workers);
                const double e1 = discrete_energy(rot, params, st.workers);
                worst = std::max(worst, std::abs(e1 - e0) / std::abs(e0));
            }
        }
        st.add("energy.rotation_invariance", worst <= 1e-10, worst,
               "relative energy change under random rotation <= 1e-10");
    }
    {
        const int n = 32;
        const Configuration cfg = sample_uniform(2, n, kVerifySeed + 23);
        std::vector<double> perm_coords;
        for (int i = n - 1; i >= 0; --i) {
            const auto p = cfg.point(i);
            perm_coords.insert(perm_coords.end(), p.begin(), p.end());
        }
        const Configuration perm(2, std::move(perm_coords), cfg.meta());
        const RieszParams params(2, 1.0);
        const double e0 = discrete_energy(cfg, params, st.workers);
        const double e1 = discrete_energy(perm, params, st.workers);
        const double rel = std::abs(e1 - e0) / std::abs(e0);
        st.add("energy.permutation_invariance", rel <= 1e-12, rel,
               "energy invariant under point permutation, rel 1e-12");
    }
    {
        double worst = 0.0;
        for (int d : {2, 3, 4}) {
            for (double s : s_grid(d)) {
                const RieszParams params(d, s);
                const Configuration cfg = sample_uniform(d, 5, kVerifySeed + 31 + d);
                worst = std::max(worst, gradient_fd_error(cfg, params, st.workers));
            }
        }
        st.add("energy.gradient_fd", worst <= 1e-5, worst,
               "tangent gradient matches central differences, rel 1e-5");
    }
    {
        double lo = 1e300, hi = 0.0;
        const struct {
            int d;
            double s;
        } cases[] = {{3, 0.5}, {4, 1.0}, {2, 0.0}, {3, 0.0}};
        for (const auto& c : cases) {
            const auto range = laplace_identity_ratio_range(c.d, c.s, 20);
            lo = std::min(lo, range.first);
            hi = std::max(hi, range.second);
        }
        const bool ok = lo >= 3.4 && hi <= 4.6;
        st.add("energy.laplace_riesz_ratio", ok, lo,
               "halving h scales the Helmholtz identity residual by [3.4, 4.6]; worst low=" +
                   format_double(lo) + " high=" + format_double(hi));
    }
}

// ---------------- spectral ----------------

void check_spectral(Suite& st) {
    const struct {
        int d;
        double s;
    } pairs[] = {{2, 0.0}, {2, 1.0}, {3, 1.0}, {3, 2.0}, {4, 1.5}, {4, 2.0}};
    {
        double worst = 0.0;
        const int lmax = st.level == VerifyLevel::fast ? 12 : 30;
        for (const auto& p : pairs) {
            const SpectralTable table = SpectralTable::build(RieszParams(p.d, p.s), lmax);
            const CheckResult r = verify_detail::check_eigenvalue_table(table, lmax, 1e-8);
            worst = std::max(worst, r.value);
        }
        st.add("spectral.eigenvalue_quadrature_oracle", worst <= 1e-8, worst,
               "closed form matches Funk-Hecke quadrature, rel 1e-8");
    }
    {
        double worst_ratio = 0.0;
        for (const auto& p : pairs) {
            double lo = 1e300, hi = 0.0;
            for (int ell = 1; ell <= st.lmax(); ++ell) {
                const double v = riesz_eigenvalue(p.d, p.s, ell) *
                                 (1.0 + std::pow(static_cast<double>(ell), p.d - p.s));
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            worst_ratio = std::max(worst_ratio, hi / lo);
        }
        st.add("spectral.eigenvalue_asymptotics", worst_ratio <= 10.0, worst_ratio,
               "A_ell (1 + ell^{d-s}) has max/min <= 10 over ell <= lmax");
    }
    {
        double worst = 0.0;
        for (int d : {2, 3, 4}) {
            for (double s : s_grid(d)) {
                if (s == 0.0) continue;
                const double a0 = riesz_eigenvalue(d, s, 0);
                const double ref = sphere_area(d) * continuous_energy(RieszParams(d, s));
                worst = std::max(worst, std::abs(a0 / ref - 1.0));
            }
        }
        st.add("spectral.A0_equals_omega_continuous", worst <= 1e-12, worst,
               "A_{0,s} = omega_d E_s(sigma~), rel 1e-12");
    }
    {
        double worst = 0.0;
        for (int d : {2, 3, 4}) {
            const double omega = sphere_area(d);
            for (int ell = 0; ell <= 100; ++ell) {
                const double ref = omega * (d - 1.0) / (2.0 * ell + d - 1.0);
                worst = std::max(worst, std::abs(riesz_eigenvalue(d, d - 1.0, ell) / ref - 1.0));
            }
        }
        st.add("spectral.newtonian_eigenvalues", worst <= 1e-12, worst,
               "A_{ell,d-1} = omega_d (d-1)/(2 ell + d - 1), rel 1e-12");
    }
    {
        double worst = 0.0;
        for (int d : {3, 4, 5}) {
            const double cd = 2.0 * std::pow(kPi, 0.5 * d) / std::exp(std::lgamma(0.5 * d));
            for (int ell = 0; ell <= 100; ++ell) {
                const double ref = cd / (static_cast<double>(ell) * (ell + d - 1.0) / (d - 2.0) + 0.25 * d);
                worst = std::max(worst, std::abs(riesz_eigenvalue(d, d - 2.0, ell) / ref - 1.0));
            }
        }
        st.add("spectral.critical_eigenvalues", worst <= 1e-12, worst,
               "A_{ell,d-2} matches the Helmholtz fundamental-solution form, rel 1e-12");
    }
    {
        double worst = 0.0;
        const struct {
            int d;
            double s;
        } iter_cases[] = {{4, 1.0}, {4, 1.5}, {5, 0.5}, {5, 2.0}, {5, 2.5}};
        for (const auto& c : iter_cases) {
            for (int ell = 0; ell <= 100; ++ell) {
                const double lhs = riesz_eigenvalue(c.d, c.s + 2.0, ell) / riesz_eigenvalue(c.d, c.s, ell);
                const double rhs = (static_cast<double>(ell) * (ell + c.d - 1.0) +
                                    c.s * (2.0 * c.d - 2.0 - c.s) / 4.0) /
                                   (c.s * (c.d - 2.0 - c.s));
                worst = std::max(worst, std::abs(lhs / rhs - 1.0));
            }
        }
        st.add("spectral.iteration_identity", worst <= 1e-10, worst,
               "A_{ell,s+2}/A_{ell,s} = (ell(ell+d-1) + s(2d-2-s)/4)/(s(d-2-s)), rel 1e-10");
    }
    {
        double worst = 0.0;
        for (int d : {2, 3, 4}) {
            for (double r : {0.5, 1.0, 0.01}) {
                const auto lam = cap_multipliers(d, 10, r);
                worst = std::max(worst, std::abs(lam[0] / cap_area(d, r) - 1.0));
                for (int ell : {1, 3, 10}) {
                    const double quad = cap_multiplier(d, ell, r);
                    const double scale = std::max(std::abs(lam[ell]), 1e-13 * sphere_area(d - 1));
                    worst = std::max(worst, std::abs(quad - lam[ell]) / scale);
                }
            }
        }
        st.add("spectral.cap_multiplier_consistency", worst <= 1e-9, worst,
               "quadrature and antiderivative routes for lambda_ell agree (scaled tol 1e-9)");
    }
    {
        double worst = 0.0;
        for (int d : {2, 3, 4})
            for (int ell : {1, 4})
                worst = std::max(worst, std::abs(cap_multiplier(d, ell, 2.0)) / sphere_area(d - 1));
        st.add("spectral.cap_multiplier_orthogonality", worst <= 1e-12, worst,
               "lambda_ell(r=2) vanishes for ell >= 1 (Gegenbauer orthogonality)");
    }
    {
        // Sandwich between the energy quadratic form and the dual Sobolev norm
        // for random band-limited coefficient masses with zero mean part.
        double margin = 1e300;
        bool ok = true;
        CounterRng rng(kVerifySeed, rng_stream::kVerify + 41);
        for (int d : {2, 3}) {
            for (double s : {0.5, 1.0}) {
                double lo = 1e300, hi = 0.0;
                for (int ell = 1; ell <= 20; ++ell) {
                    const double v = riesz_eigenvalue(d, s, ell) *
                                     std::pow(1.0 + static_cast<double>(ell) * ell, 0.5 * (d - s));
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                for (int trial = 0; trial < 5; ++trial) {
                    double energy = 0.0, norm = 0.0;
                    for (int ell = 1; ell <= 20; ++ell) {
                        const double mass = rng.next_double();
                        energy += riesz_eigenvalue(d, s, ell) * mass;
                        norm += std::pow(1.0 + static_cast<double>(ell) * ell, 0.5 * (s - d)) * mass;
                    }
                    const double ratio = energy / norm;
                    ok = ok && ratio >= lo * (1.0 - 1e-12) && ratio <= hi * (1.0 + 1e-12);
                    margin = std::min({margin, ratio / lo, hi / ratio});
                }
            }
        }
        st.add("spectral.energy_sobolev_sandwich", ok, margin,
               "E_s(h)/||h||^2 lies inside [min, max] of A_ell (1+ell^2)^{(d-s)/2}");
    }
    {
        const Configuration one = sample_uniform(2, 1, kVerifySeed + 5);
        const RieszParams params(2, 0.0);
        const auto zero = detail::spectral_mu_sum(
            one, 0.2, [](int) { return 1.0; }, 1e-8, 400, st.workers, /*zero_multipliers=*/true);
        st.add("sobolev.degenerate_zero_multipliers", zero.sum == 0.0, zero.sum,
               "all lambda_ell = 0 for ell >= 1 forces a zero spectral sum");
    }
    {
        // Single point: S_ell = Z_ell(1) = (2 ell + 1)/omega_2; sum the series
        // directly with independently computed pieces.
        const Configuration one = sample_uniform(2, 1, kVerifySeed + 6);
        const double eps = 0.2;
        const auto res = sobolev_discrepancy(one, RieszParams(2, 0.0), eps, 1e-10, st.workers);
        const double sigma = cap_area(2, eps);
        double direct = 0.0;
        for (int ell = 1; ell <= res.L_used; ++ell) {
            const double lam = cap_multiplier(2, ell, eps);
            direct += std::pow(1.0 + static_cast<double>(ell) * ell, -1.0) *
                      (lam / sigma) * (lam / sigma) * (2.0 * ell + 1.0) / sphere_area(2);
        }
        const double rel = std::abs(res.value - std::sqrt(direct)) / std::sqrt(direct);
        st.add("sobolev.single_point_series", rel <= 1e-6, rel,
               "N=1 value matches a directly summed series at equal truncation, rel 1e-6");
    }
    {
        // Antipodal pair: odd-degree zonal sums vanish, so the Sobolev value
        // must match the even-degree-only direct series.
        std::vector<double> flat = north_pole(2);
        const auto south = [&] {
            auto p = north_pole(2);
            p.back() = -1.0;
            return p;
        }();
        flat.insert(flat.end(), south.begin(), south.end());
        ConfigMeta meta;
        const Configuration two(2, flat, meta);
        const double eps = 0.2;
        const double n = 2.0;
        const double r = eps / std::sqrt(n);
        const auto res = sobolev_discrepancy(two, RieszParams(2, 1.0), eps, 1e-10, st.workers);
        const double sigma = cap_area(2, r);
        double direct = 0.0;
        for (int ell = 2; ell <= res.L_used; ell += 2) {
            const double lam = cap_multiplier(2, ell, r);
            const double z1 = (2.0 * ell + 1.0) / sphere_area(2);
            const double s_ell = 2.0 * z1 + 2.0 * z1 * gegenbauer_ratio(2, ell, -1.0);
            direct += std::pow(1.0 + static_cast<double>(ell) * ell, -0.5) *
                      (lam / (n * sigma)) * (lam / (n * sigma)) * s_ell;
        }
        const double rel = std::abs(res.value - std::sqrt(direct)) / std::sqrt(direct);
        st.add("sobolev.antipodal_even_degrees_only", rel <= 1e-6, rel,
               "antipodal pair: even-degree-only series reproduces the value, rel 1e-6");
    }
    {
        const double val = pair_cap_energy(RieszParams(2, 1.0), 1e-3, 0.0, 1e-10);
        const double ref = 1.0 / std::sqrt(2.0);
        const double err = std::abs(val - ref);
        st.add("pair_cap.small_r_kernel_limit", err <= 1e-3, err,
               "double cap average at r=1e-3, t=0 approaches R_1(sqrt(2)) within 1e-3");
    }
}

// ---------------- minimize ----------------

void check_minimize(Suite& st) {
    const int restarts = st.level == VerifyLevel::fast ? 5 : 20;
    {
        MinimizeOptions opts;
        opts.restarts = restarts;
        opts.seed = kVerifySeed;
        opts.workers = st.workers;
        const auto res = minimize_energy(2, RieszParams(2, 1.0), 2, opts);
        double dot = 0.0;
        for (int k = 0; k < 3; ++k) dot += res.config.point(0)[k] * res.config.point(1)[k];
        const bool ok = std::abs(res.energy - 1.0) <= 1e-9 && std::abs(dot + 1.0) <= 1e-6;
        st.add("minimize.antipodal_pair", ok, res.energy,
               "N=2, s=1: energy 1.0 within 1e-9 and <x1,x2> = -1 within 1e-6");
    }
    {
        MinimizeOptions opts;
        opts.restarts = restarts;
        opts.seed = kVerifySeed + 1;
        opts.workers = st.workers;
        const auto res = minimize_energy(2, RieszParams(2, 1.0), 4, opts);
        const double ref = 12.0 / std::sqrt(8.0 / 3.0);
        double worst_dot = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                double dot = 0.0;
                for (int k = 0; k < 3; ++k) dot += res.config.point(i)[k] * res.config.point(j)[k];
                worst_dot = std::max(worst_dot, std::abs(dot + 1.0 / 3.0));
            }
        const bool ok = std::abs(res.energy - ref) <= 1e-8 && worst_dot <= 1e-5;
        st.add("minimize.tetrahedron", ok, res.energy - ref,
               "N=4, s=1: tetrahedron energy within 1e-8, pairwise dots -1/3 within 1e-5");
    }
    {
        MinimizeOptions opts;
        opts.restarts = restarts;
        opts.seed = kVerifySeed + 2;
        opts.workers = st.workers;
        const auto res = minimize_energy(2, RieszParams::logarithmic(2), 3, opts);
        const double ref = -3.0 * std::log(3.0);
        st.add("minimize.equilateral_log", std::abs(res.energy - ref) <= 1e-8, res.energy - ref,
               "N=3, s=log: energy -3 log 3 within 1e-8");
    }
    {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = kVerifySeed + 3;
        opts.init = InitScheme::spiral;
        opts.workers = st.workers;
        const int n = std::min(st.nmax(), 64);
        const auto a = minimize_energy(2, RieszParams(2, 1.0), n, opts);
        const auto b = minimize_energy(2, RieszParams(2, 1.0), n, opts);
        bool identical = a.energy == b.energy && a.iters == b.iters;
        for (std::size_t k = 0; identical && k < a.config.coords().size(); ++k)
            identical = a.config.coords()[k] == b.config.coords()[k];
        // spiral start bounds the result from above
        std::vector<double> start = spiral_points(n);
        ConfigMeta meta;
        const double e_start = discrete_energy(Configuration(2, start, meta), RieszParams(2, 1.0),
                                               st.workers);
        double worst_norm = 0.0;
        for (int i = 0; i < n; ++i) {
            double nrm = 0.0;
            for (double v : a.config.point(i)) nrm += v * v;
            worst_norm = std::max(worst_norm, std::abs(std::sqrt(nrm) - 1.0));
        }
        const bool ok = identical && a.energy <= e_start && worst_norm <= 1e-12;
        st.add("minimize.determinism_monotone_unitnorm", ok, a.energy - e_start,
               "reruns bitwise identical; energy below the spiral start; unit norms");
    }
    {
        const int n = std::min(st.nmax(), 128);
        double worst = 1e300;
        for (double s : {0.0, 1.0}) {
            MinimizeOptions opts;
            opts.restarts = 1;
            opts.seed = kVerifySeed + 4;
            opts.init = InitScheme::spiral;
            opts.workers = st.workers;
            const auto res = minimize_energy(2, RieszParams(2, s), n, opts);
            worst = std::min(worst, separation(res.config).scaled);
        }
        st.add("minimize.scaled_separation", worst >= 1.0, worst,
               "returned minimizers keep min distance * sqrt(N) >= 1 (d=2, s in {0,1})");
    }
    {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = kVerifySeed + 5;
        opts.workers = st.workers;
        const auto res = minimize_energy(3, RieszParams(3, 1.0), 12, opts);
        const double err = gradient_fd_error(res.config, RieszParams(3, 1.0), st.workers);
        st.add("minimize.returned_gradient_fd", err <= 1e-5, err,
               "gradient at the returned iterate matches finite differences");
    }
}

// ---------------- discrepancy ----------------

void check_discrepancy(Suite& st) {
    {
        std::vector<double> flat = north_pole(2);
        auto south = north_pole(2);
        south.back() = -1.0;
        flat.insert(flat.end(), south.begin(), south.end());
        ConfigMeta meta;
        const Configuration two(2, flat, meta);
        const auto est = cap_discrepancy(two, 1000, kVerifySeed, st.workers);
        st.add("discrepancy.two_point_value", std::abs(est.value - 0.5) <= 0.01, est.value,
               "antipodal pair on S^2: estimate 1/2 within 0.01");
    }
    {
        const int n = std::min(st.nmax(), 64);
        const Configuration cfg = sample_uniform(2, n, kVerifySeed + 51);
        std::vector<std::vector<double>> centers;
        CounterRng rng(kVerifySeed + 52, rng_stream::kVerify);
        for (int c = 0; c < 64; ++c) {
            std::vector<double> p(3);
            double nrm = 0.0;
            for (int k = 0; k < 3; ++k) {
                p[k] = rng.next_gaussian();
                nrm += p[k] * p[k];
            }
            nrm = std::sqrt(nrm);
            for (double& v : p) v /= nrm;
            centers.push_back(std::move(p));
        }
        const auto base = cap_discrepancy_with_centers(cfg, centers, st.workers);
        const auto q = random_rotation(3, 61);
        const Configuration rot = rotate_config(cfg, q);
        std::vector<std::vector<double>> rot_centers;
        for (const auto& c : centers) rot_centers.push_back(apply_rotation(c, q));
        const auto mapped = cap_discrepancy_with_centers(rot, rot_centers, st.workers);
        const double diff = std::abs(base.value - mapped.value);
        st.add("discrepancy.cap_rotation_invariance", diff <= 1e-9, diff,
               "value invariant under simultaneous rotation of points and centers");
    }
    {
        double worst = 0.0;
        const int n = st.level == VerifyLevel::fast ? 8 : 20;
        for (int d : {2, 3}) {
            std::vector<double> svals{0.0, 1.0, static_cast<double>(d - 1)};
            for (double s : svals) {
                const Configuration cfg = sample_uniform(d, n, kVerifySeed + 71 + d);
                const auto rep =
                    stolarsky_decomposition_check(cfg, RieszParams(d, s), 0.2, 1e-9, st.workers);
                worst = std::max(worst, rep.residual);
            }
        }
        st.add("discrepancy.stolarsky_identity", worst <= 1e-6, worst,
               "decomposition identity residual <= 1e-6 (random configs)");
    }
    {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = kVerifySeed + 8;
        opts.init = InitScheme::spiral;
        opts.workers = st.workers;
        const auto res = minimize_energy(2, RieszParams(2, 1.0), 64, opts);
        const auto d1 = smoothing_defect(res.config, RieszParams(2, 1.0), 0.2, st.workers);
        const auto d2 = smoothing_defect(res.config, RieszParams(2, 1.0), 0.1, st.workers);
        const bool ok = d1.defect >= 0.0 && d2.defect >= 0.0 && d2.defect < d1.defect;
        st.add("discrepancy.defect_epsilon_monotone", ok, d2.defect / d1.defect,
               "smoothing defect decreases when epsilon halves");
    }
    if (st.level == VerifyLevel::full) {
        // Random point sets should be visibly worse than minimizers.
        const int n = 500;
        std::vector<double> random_vals;
        for (int seed = 0; seed < 11; ++seed) {
            const Configuration cfg = sample_uniform(2, n, kVerifySeed + 100 + seed);
            random_vals.push_back(cap_discrepancy(cfg, 400, kVerifySeed, st.workers).value);
        }
        std::sort(random_vals.begin(), random_vals.end());
        const double random_median = random_vals[random_vals.size() / 2];
        std::vector<double> min_vals;
        for (int seed = 0; seed < 3; ++seed) {
            MinimizeOptions opts;
            opts.restarts = 1;
            opts.seed = kVerifySeed + 200 + seed;
            opts.init = seed == 0 ? InitScheme::spiral : InitScheme::random;
            opts.workers = st.workers;
            const auto res = minimize_energy(2, RieszParams(2, 1.0), n, opts);
            min_vals.push_back(cap_discrepancy(res.config, 400, kVerifySeed, st.workers).value);
        }
        std::sort(min_vals.begin(), min_vals.end());
        const double min_median = min_vals[min_vals.size() / 2];
        st.add("discrepancy.random_vs_minimizer_ordering", random_median >= 2.0 * min_median,
               random_median / min_median,
               "median cap discrepancy of uniform samples >= 2x that of minimizers (N=500)");
    }
    {
        std::vector<std::pair<double, double>> pairs;
        for (int n : {64, 128, 256, 512, 1024}) pairs.emplace_back(n, std::pow(n, -1.0 / 3.0));
        const FitResult fit = fit_exponent(pairs);
        const bool ok = std::abs(fit.slope + 1.0 / 3.0) <= 1e-12 && fit.std_error <= 1e-12;
        st.add("fit.exact_power_law", ok, fit.slope, "exact N^{-1/3} data recovers slope -1/3");
    }
}

}  // namespace

namespace verify_detail {

CheckResult check_eigenvalue_table(const SpectralTable& table, int lmax, double rel_tol) {
    const int top = std::min(lmax, table.L);
    std::vector<double> err(static_cast<std::size_t>(top) + 1);
    parallel_chunks(static_cast<std::size_t>(top) + 1, 0, [&](std::size_t ell) {
        const double oracle = riesz_eigenvalue_quadrature(table.d, table.s, static_cast<int>(ell));
        err[ell] = std::abs(table.A[ell] - oracle) / std::abs(oracle);
    });
    double worst = 0.0;
    for (double e : err) worst = std::max(worst, e);
    return CheckResult{"spectral.eigenvalue_quadrature_oracle", worst <= rel_tol, worst,
                       "closed form vs quadrature oracle, rel tol " + format_double(rel_tol)};
}

}  // namespace verify_detail

std::vector<CheckResult> run_verify(VerifyLevel level, int workers) {
    Suite st{level, workers, {}};
    check_sphere(st);
    check_energy(st);
    check_spectral(st);
    check_minimize(st);
    check_discrepancy(st);
    return st.results;
}

bool verify_all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string verify_report_json(const std::vector<CheckResult>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"detail", c.detail}});
    nlohmann::json out{{"checks", arr}, {"all_passed", verify_all_passed(checks)}};
    return out.dump(2);
}

}  // namespace riesz
