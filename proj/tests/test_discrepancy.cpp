#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riesz/common.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/minimize.hpp"
#include "riesz/spectral.hpp"

#include "support/oracles.hpp"

using namespace riesz;

namespace {

Configuration antipodal_pair() {
    std::vector<double> flat{0, 0, 1, 0, 0, -1};
    ConfigMeta meta;
    return Configuration(2, flat, meta);
}

}  // namespace

TEST_CASE("single point: shrinking caps witness discrepancy near 1") {
    const Configuration one = sample_uniform(2, 1, 5);
    const auto est = cap_discrepancy(one, 1000, 9);
    CHECK(est.value >= 0.99);
    CHECK(est.is_lower_bound);
    CHECK(est.centers_tested == 2 + 1000);
}

TEST_CASE("antipodal pair: hemisphere caps witness 1/2") {
    const auto est = cap_discrepancy(antipodal_pair(), 1000, 4);
    CHECK(est.value == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("the witness cap reproduces the reported discrepancy") {
    const Configuration cfg = sample_uniform(2, 40, 21);
    const auto est = cap_discrepancy(cfg, 500, 10);
    const auto counts = est.argmax_cap.count(cfg);
    const double measure =
        cap_area(2, est.argmax_cap.radius) / sphere_area(2);
    const double strict_disc = std::abs(static_cast<double>(counts.strict) / cfg.size() - measure);
    CHECK(strict_disc == doctest::Approx(est.value).epsilon(1e-6));
}

TEST_CASE("a larger center budget can only raise the estimate (seed-nested)") {
    const Configuration cfg = sample_uniform(2, 25, 8);
    const auto small = cap_discrepancy(cfg, 100, 77);
    const auto large = cap_discrepancy(cfg, 10000, 77);
    CHECK(large.value >= small.value);
}

TEST_CASE("cap discrepancy is invariant under simultaneous rotation") {
    const Configuration cfg = sample_uniform(2, 30, 14);
    std::vector<std::vector<double>> centers;
    CounterRng rng(1234, 55);
    for (int c = 0; c < 40; ++c) {
        std::vector<double> p(3);
        double nrm = 0.0;
        for (int k = 0; k < 3; ++k) {
            p[k] = rng.next_gaussian();
            nrm += p[k] * p[k];
        }
        nrm = std::sqrt(nrm);
        for (double& v : p) v /= nrm;
        centers.push_back(p);
    }
    const auto base = cap_discrepancy_with_centers(cfg, centers);

    const double co = std::cos(1.1), si = std::sin(1.1);
    auto rot = [&](std::span<const double> p) {
        return std::vector<double>{co * p[0] - si * p[2], p[1], si * p[0] + co * p[2]};
    };
    std::vector<double> rotated;
    for (int i = 0; i < cfg.size(); ++i) {
        const auto q = rot(cfg.point(i));
        rotated.insert(rotated.end(), q.begin(), q.end());
    }
    ConfigMeta meta;
    const Configuration cfg_rot(2, rotated, meta);
    std::vector<std::vector<double>> centers_rot;
    for (const auto& c : centers) centers_rot.push_back(rot(c));
    const auto mapped = cap_discrepancy_with_centers(cfg_rot, centers_rot);
    CHECK(base.value == doctest::Approx(mapped.value).epsilon(1e-10));
}

TEST_CASE("decomposition identity: exact cases and random configurations") {
    SUBCASE("N = 1 reduces to the diagonal relation") {
        const Configuration one = sample_uniform(2, 1, 3);
        const auto rep = stolarsky_decomposition_check(one, RieszParams(2, 1.0), 0.2);
        CHECK(rep.lhs == 0.0);
        CHECK(rep.residual <= 1e-6);
    }
    SUBCASE("N = 2 antipodal, s = 1") {
        const auto rep = stolarsky_decomposition_check(antipodal_pair(), RieszParams(2, 1.0), 0.2);
        CHECK(rep.residual <= 1e-6);
    }
    SUBCASE("random N = 12, s = log") {
        const Configuration cfg = sample_uniform(2, 12, 99);
        const auto rep = stolarsky_decomposition_check(cfg, RieszParams::logarithmic(2), 0.2);
        CHECK(rep.residual <= 1e-6);
    }
    SUBCASE("d = 3 across the s grid") {
        const Configuration cfg = sample_uniform(3, 10, 41);
        for (double s : {0.0, 1.0, 2.0}) {
            CAPTURE(s);
            const auto rep = stolarsky_decomposition_check(cfg, RieszParams(3, s), 0.2);
            CHECK(rep.residual <= 1e-6);
        }
    }
}

TEST_CASE("decomposition left side agrees with Monte Carlo") {
    // Off-diagonal cap averages for the antipodal pair: one distinct pair value.
    const double r = 0.2 / std::sqrt(2.0);
    const double direct = pair_cap_energy(RieszParams(2, 1.0), r, -1.0);
    const auto mc = test::mc_pair_cap_energy_s2(1.0, r, -1.0, 1000000, 31);
    CHECK(std::abs(direct - mc.mean) <= 3.0 * mc.std_error);
}

TEST_CASE("smoothing defect: two-point assembly, sign, epsilon scaling") {
    std::vector<double> flat{0, 0, 0, 1, 0, 0, 0, -1};
    ConfigMeta meta;
    const Configuration two(3, flat, meta);
    const RieszParams params(3, 1.0);
    const auto sd = smoothing_defect(two, params, 0.1);
    const double r = 0.1 * std::pow(2.0, -1.0 / 3.0);
    const double single =
        std::abs(0.5 - pair_cap_energy(params, r, -1.0, 1e-10));
    CHECK(sd.defect == doctest::Approx(2.0 * single / 4.0).epsilon(1e-8));
    CHECK(sd.defect >= 0.0);

    MinimizeOptions opts;
    opts.restarts = 1;
    opts.seed = 6;
    opts.init = InitScheme::spiral;
    opts.max_iters = 3000;
    const auto res = minimize_energy(2, RieszParams(2, 1.0), 64, opts);
    const auto d1 = smoothing_defect(res.config, RieszParams(2, 1.0), 0.1);
    const auto d2 = smoothing_defect(res.config, RieszParams(2, 1.0), 0.05);
    CHECK(d2.defect < d1.defect);
    const double ratio = d1.defect / d2.defect;
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
    CHECK(d1.bound_scale ==
          doctest::Approx(0.01 * (std::pow(64.0, -1.0) + std::pow(64.0, -0.5))).epsilon(1e-12));
}

TEST_CASE("smoothing defect enforces the separation precondition") {
    // two nearly coincident points plus a far one: scaled separation tiny
    std::vector<double> flat{0, 0, 1, 1e-3, 0, std::sqrt(1.0 - 1e-6), 1, 0, 0};
    ConfigMeta meta;
    const Configuration cfg(2, flat, meta);
    CHECK_THROWS_AS(smoothing_defect(cfg, RieszParams(2, 1.0), 0.2), std::invalid_argument);
}

TEST_CASE("mean value check: bounded excess, log constant, superharmonic sign") {
    const SpherePoint a(std::vector<double>{1, 0, 0, 0, 0});
    const SpherePoint b(std::vector<double>{0, 1, 0, 0, 0});
    const double orth = mean_value_check(RieszParams(4, 1.0), a, b, 0.005);
    CHECK(orth <= 10.0);

    const SpherePoint c(std::vector<double>{1, 0, 0, 0});
    const SpherePoint cm(std::vector<double>{-1, 0, 0, 0});
    const double log_anti = mean_value_check(RieszParams::logarithmic(3), c, cm, 0.005);
    CHECK(log_anti <= 2.0 / 3.0 + 0.1);

    // nearby centers in the superharmonic region: excess is non-positive
    const double t = 0.955;
    const SpherePoint bn = SpherePoint::normalized({t, std::sqrt(1.0 - t * t), 0, 0, 0});
    CHECK(mean_value_check(RieszParams(4, 1.0), a, bn, 0.005) <= 1e-6);

    CHECK_THROWS_AS(mean_value_check(RieszParams(2, 1.0), c, cm, 0.005), std::invalid_argument);
    CHECK_THROWS_AS(mean_value_check(RieszParams(4, 1.0), a, b, 0.05), std::invalid_argument);
}

TEST_CASE("mean value excess stays bounded as r shrinks") {
    const SpherePoint a(std::vector<double>{1, 0, 0, 0, 0});
    const SpherePoint b(std::vector<double>{0, 1, 0, 0, 0});
    double v1 = mean_value_check(RieszParams(4, 1.0), a, b, 0.01);
    double v2 = mean_value_check(RieszParams(4, 1.0), a, b, 0.005);
    CHECK(std::abs(v2) <= std::abs(v1) * 1.5 + 1e-9);
}
