#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riesz/checks.hpp"
#include "riesz/common.hpp"
#include "riesz/energy.hpp"
#include "riesz/gammafn.hpp"

#include "support/oracles.hpp"

using namespace riesz;

namespace {

Configuration antipodal_pair() {
    std::vector<double> flat{0, 0, 1, 0, 0, -1};
    ConfigMeta meta;
    return Configuration(2, flat, meta);
}

Configuration tetrahedron() {
    const double a = 1.0 / std::sqrt(3.0);
    std::vector<double> flat{a, a, a, a, -a, -a, -a, a, -a, -a, -a, a};
    ConfigMeta meta;
    return Configuration(2, flat, meta);
}

Configuration great_circle_triangle() {
    std::vector<double> flat;
    for (int k = 0; k < 3; ++k) {
        const double phi = 2.0 * kPi * k / 3.0;
        flat.insert(flat.end(), {std::cos(phi), std::sin(phi), 0.0});
    }
    ConfigMeta meta;
    return Configuration(2, flat, meta);
}

}  // namespace

TEST_CASE("riesz_kernel reference values") {
    const std::vector<double> north{0, 0, 1}, south{0, 0, -1}, east{1, 0, 0};
    CHECK(riesz_kernel(RieszParams(2, 1.0), north, south) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(riesz_kernel(RieszParams::logarithmic(2), north, south) ==
          doctest::Approx(-std::log(2.0)).epsilon(1e-15));
    const std::vector<double> n4{0, 0, 0, 1}, e4{1, 0, 0, 0};
    CHECK(riesz_kernel(RieszParams(3, 2.5), n4, e4) ==
          doctest::Approx(std::pow(2.0, -1.25)).epsilon(1e-14));
    CHECK_THROWS_AS(riesz_kernel(RieszParams(2, 1.0), north, north), singularity_error);
}

TEST_CASE("RieszParams validates its range and flags the log case") {
    CHECK(RieszParams(2, 0.0).is_log);
    CHECK_FALSE(RieszParams(2, 1.0).is_log);
    CHECK_THROWS_AS(RieszParams(2, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(RieszParams(2, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(RieszParams(1, 0.5), std::invalid_argument);
}

TEST_CASE("discrete_energy on closed-form configurations") {
    CHECK(discrete_energy(antipodal_pair(), RieszParams(2, 1.0)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(discrete_energy(great_circle_triangle(), RieszParams(2, 1.0)) ==
          doctest::Approx(6.0 / std::sqrt(3.0)).epsilon(1e-13));
    // 12 ordered pairs at distance sqrt(8/3)
    CHECK(discrete_energy(tetrahedron(), RieszParams::logarithmic(2)) ==
          doctest::Approx(-6.0 * std::log(8.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("discrete_energy agrees with the brute-force pair loop") {
    for (int d : {2, 3}) {
        const Configuration cfg = sample_uniform(d, 40, 17);
        for (double s : {0.0, 0.5, 1.0, d - 0.5}) {
            const RieszParams params(d, s);
            const double fast = discrete_energy(cfg, params);
            const double brute = test::brute_force_energy(cfg.coords(), cfg.size(), d, s);
            CHECK(fast == doctest::Approx(brute).epsilon(1e-12));
        }
    }
}

TEST_CASE("coincident points raise a singularity error naming the pair") {
    std::vector<double> flat{0, 0, 1, 1e-16, 0, std::sqrt(1.0 - 1e-32), 1, 0, 0};
    ConfigMeta meta;
    const Configuration cfg(2, flat, meta);
    try {
        discrete_energy(cfg, RieszParams(2, 1.0));
        FAIL("expected singularity_error");
    } catch (const singularity_error& e) {
        CHECK(e.pair_i == 0);
        CHECK(e.pair_j == 1);
    }
}

TEST_CASE("gradient vanishes at symmetric critical configurations") {
    for (const auto& cfg : {antipodal_pair(), tetrahedron()}) {
        const auto grad = energy_gradient(cfg, RieszParams(2, 1.0));
        for (double g : grad) CHECK(std::abs(g) <= 1e-10);
    }
    const auto grad_log = energy_gradient(antipodal_pair(), RieszParams::logarithmic(2));
    for (double g : grad_log) CHECK(std::abs(g) <= 1e-12);
}

TEST_CASE("gradient matches central finite differences across the (d, s) grid") {
    for (int d : {2, 3, 4}) {
        std::vector<double> svals{0.0, 0.5, static_cast<double>(d - 2),
                                  static_cast<double>(d - 1), d - 0.5};
        for (double s : svals) {
            if (s < 0.0 || s >= d) continue;
            const Configuration cfg = sample_uniform(d, 5, 23 + d);
            CAPTURE(d);
            CAPTURE(s);
            CHECK(gradient_fd_error(cfg, RieszParams(d, s)) <= 1e-5);
        }
    }
}

TEST_CASE("continuous_energy: Gamma formula, digamma branch, Monte Carlo oracle") {
    CHECK(continuous_energy(RieszParams(2, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(continuous_energy(RieszParams(3, 2.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(continuous_energy(RieszParams::logarithmic(2)) ==
          doctest::Approx(0.5 - std::log(2.0)).epsilon(1e-14));

    const auto mc1 = test::mc_sphere_energy(2, 1.0, 1000000, 5);
    CHECK(std::abs(mc1.mean - 1.0) <= 3.0 * mc1.std_error);
    const auto mc0 = test::mc_sphere_energy(2, 0.0, 1000000, 6);
    CHECK(std::abs(mc0.mean - (0.5 - std::log(2.0))) <= 3.0 * mc0.std_error);
}

TEST_CASE("digamma reference values") {
    const double euler = 0.5772156649015329;
    CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-13));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-13));
    CHECK(digamma(0.5) == doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK(digamma(6.0) == doctest::Approx(-euler + 137.0 / 60.0).epsilon(1e-13));
}

TEST_CASE("energy_gap closed forms") {
    const auto riesz_stats = energy_gap(antipodal_pair(), RieszParams(2, 1.0));
    CHECK(riesz_stats.gap == doctest::Approx((1.0 - 4.0) / std::pow(2.0, 1.5)).epsilon(1e-14));
    CHECK_FALSE(riesz_stats.log_coeff_context.has_value());

    // E0 = -2 log 2, E0(sigma~) = 1/2 - log 2, N = 2, d = 2:
    // gap = (-2 log2 - 4 (1/2 - log2) + log2) / 2 = (3 log2 - 2) / 2
    const auto log_stats = energy_gap(antipodal_pair(), RieszParams::logarithmic(2));
    const double expected = (3.0 * std::log(2.0) - 2.0) / 2.0;
    CHECK(log_stats.gap == doctest::Approx(expected).epsilon(1e-13));
    CHECK(log_stats.log_coeff_context.has_value());
}

TEST_CASE("energy is invariant under rotations and permutations") {
    const Configuration cfg = sample_uniform(2, 30, 57);
    // rotate by a fixed rotation about z then a flip
    std::vector<double> rotated;
    const double c = std::cos(0.7), s = std::sin(0.7);
    for (int i = 0; i < cfg.size(); ++i) {
        const auto p = cfg.point(i);
        rotated.insert(rotated.end(), {c * p[0] - s * p[1], s * p[0] + c * p[1], -p[2]});
    }
    ConfigMeta meta;
    const Configuration rot(2, rotated, meta);
    const RieszParams params(2, 1.0);
    CHECK(discrete_energy(rot, params) ==
          doctest::Approx(discrete_energy(cfg, params)).epsilon(1e-12));

    std::vector<double> permuted;
    for (int i = cfg.size() - 1; i >= 0; --i) {
        const auto p = cfg.point(i);
        permuted.insert(permuted.end(), p.begin(), p.end());
    }
    const Configuration perm(2, permuted, meta);
    CHECK(discrete_energy(perm, params) ==
          doctest::Approx(discrete_energy(cfg, params)).epsilon(1e-13));
}

TEST_CASE("energy is identical for any worker count") {
    const Configuration cfg = sample_uniform(2, 300, 3);
    const RieszParams params(2, 1.0);
    const double e1 = discrete_energy(cfg, params, 1);
    const double e2 = discrete_energy(cfg, params, 2);
    const double e4 = discrete_energy(cfg, params, 4);
    CHECK(e1 == e2);
    CHECK(e1 == e4);
    const auto g1 = energy_gradient(cfg, params, 1);
    const auto g3 = energy_gradient(cfg, params, 3);
    for (std::size_t k = 0; k < g1.size(); ++k) CHECK(g1[k] == g3[k]);
}

TEST_CASE("Helmholtz identity between Riesz kernels holds at second order") {
    const struct {
        int d;
        double s;
    } cases[] = {{3, 0.5}, {4, 1.0}, {2, 0.0}, {3, 0.0}};
    for (const auto& c : cases) {
        CAPTURE(c.d);
        CAPTURE(c.s);
        const auto [lo, hi] = laplace_identity_ratio_range(c.d, c.s, 20);
        CHECK(lo >= 3.4);
        CHECK(hi <= 4.6);
    }
}
