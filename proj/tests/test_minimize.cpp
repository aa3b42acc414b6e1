#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "riesz/checks.hpp"
#include "riesz/energy.hpp"
#include "riesz/minimize.hpp"

using namespace riesz;

TEST_CASE("two points relax to an antipodal pair") {
    MinimizeOptions opts;
    opts.restarts = 5;
    opts.seed = 11;
    const auto res = minimize_energy(2, RieszParams(2, 1.0), 2, opts);
    CHECK(res.energy == doctest::Approx(1.0).epsilon(1e-9));
    double dot = 0.0;
    for (int k = 0; k < 3; ++k) dot += res.config.point(0)[k] * res.config.point(1)[k];
    CHECK(dot == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(res.converged);
    CHECK(res.restart_energies.size() == 5);
}

TEST_CASE("four points relax to the regular tetrahedron") {
    MinimizeOptions opts;
    opts.restarts = 20;
    opts.seed = 5;
    const auto res = minimize_energy(2, RieszParams(2, 1.0), 4, opts);
    CHECK(res.energy == doctest::Approx(12.0 / std::sqrt(8.0 / 3.0)).epsilon(1e-9));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            double dot = 0.0;
            for (int k = 0; k < 3; ++k) dot += res.config.point(i)[k] * res.config.point(j)[k];
            CHECK(dot == doctest::Approx(-1.0 / 3.0).epsilon(1e-5));
        }
}

TEST_CASE("three log-energy points form an equilateral great-circle triangle") {
    MinimizeOptions opts;
    opts.restarts = 20;
    opts.seed = 2;
    const auto res = minimize_energy(2, RieszParams::logarithmic(2), 3, opts);
    CHECK(res.energy == doctest::Approx(-3.0 * std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("minimizer results are deterministic and keep the invariants") {
    MinimizeOptions opts;
    opts.restarts = 2;
    opts.seed = 31;
    opts.init = InitScheme::spiral;
    const auto a = minimize_energy(2, RieszParams(2, 1.0), 48, opts);
    const auto b = minimize_energy(2, RieszParams(2, 1.0), 48, opts);
    CHECK(a.energy == b.energy);
    CHECK(a.iters == b.iters);
    CHECK(a.restart_index == b.restart_index);
    for (std::size_t k = 0; k < a.config.coords().size(); ++k)
        CHECK(a.config.coords()[k] == b.config.coords()[k]);

    for (int i = 0; i < a.config.size(); ++i) {
        double nrm = 0.0;
        for (double v : a.config.point(i)) nrm += v * v;
        CHECK(std::abs(std::sqrt(nrm) - 1.0) <= 1e-12);
    }
    // energy must not exceed the spiral start it descended from
    ConfigMeta meta;
    const double start_energy =
        discrete_energy(Configuration(2, spiral_points(48), meta), RieszParams(2, 1.0));
    CHECK(a.energy < start_energy);
    CHECK(a.grad_inf_norm >= 0.0);
    // gradient at the returned iterate still matches finite differences
    CHECK(gradient_fd_error(a.config, RieszParams(2, 1.0)) <= 1e-5);
}

TEST_CASE("identical results for different worker counts") {
    for (double s : {0.0, 1.0}) {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = 13;
        opts.max_iters = 300;
        opts.workers = 1;
        const auto one = minimize_energy(2, RieszParams(2, s), 96, opts);
        opts.workers = 2;
        const auto two = minimize_energy(2, RieszParams(2, s), 96, opts);
        CHECK(one.energy == two.energy);
        for (std::size_t k = 0; k < one.config.coords().size(); ++k)
            CHECK(one.config.coords()[k] == two.config.coords()[k]);
    }
}

TEST_CASE("scaled separation of minimizers stays above 1") {
    for (double s : {0.0, 1.0}) {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = 3;
        opts.init = InitScheme::spiral;
        opts.max_iters = 4000;
        const auto res = minimize_energy(2, RieszParams(2, s), 128, opts);
        CHECK(separation(res.config).scaled >= 1.0);
    }
}

TEST_CASE("minimizer gap statistic is negative for moderate N (s=1, d=2)") {
    for (int n : {100, 400}) {
        MinimizeOptions opts;
        opts.restarts = 1;
        opts.seed = 17;
        opts.init = InitScheme::spiral;
        opts.max_iters = 6000;
        const auto res = minimize_energy(2, RieszParams(2, 1.0), n, opts);
        const auto stats = energy_gap(res.config, RieszParams(2, 1.0));
        CAPTURE(n);
        CHECK(stats.gap < 0.0);
    }
}

TEST_CASE("SPHPTS cache is written and reused") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "riesz_cache_test").string();
    fs::remove_all(dir);
    MinimizeOptions opts;
    opts.restarts = 2;
    opts.seed = 9;
    opts.cache_dir = dir;
    const auto first = minimize_energy(2, RieszParams(2, 1.0), 16, opts);
    const fs::path expect =
        fs::path(dir) / cache_file_name(2, RieszParams(2, 1.0), 16, 9, opts.grad_tol);
    CHECK(fs::exists(expect));
    const auto cached = minimize_energy(2, RieszParams(2, 1.0), 16, opts);
    CHECK(cached.iters == 0);  // served from the cache
    CHECK(cached.energy == first.energy);
    for (std::size_t k = 0; k < first.config.coords().size(); ++k)
        CHECK(cached.config.coords()[k] == first.config.coords()[k]);
    fs::remove_all(dir);
}

TEST_CASE("bad options are rejected") {
    MinimizeOptions opts;
    opts.restarts = 0;
    CHECK_THROWS_AS(minimize_energy(2, RieszParams(2, 1.0), 8, opts), std::invalid_argument);
    opts.restarts = 1;
    CHECK_THROWS_AS(minimize_energy(2, RieszParams(2, 1.0), 1, opts), std::invalid_argument);
    opts.grad_tol = 0.0;
    CHECK_THROWS_AS(minimize_energy(2, RieszParams(2, 1.0), 8, opts), std::invalid_argument);
}

TEST_CASE("from-file initialization descends from the given configuration") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "riesz_init.sphpts").string();
    write_config(sample_uniform(2, 12, 4), path);
    MinimizeOptions opts;
    opts.restarts = 1;
    opts.seed = 1;
    opts.init = InitScheme::from_file;
    opts.init_path = path;
    opts.max_iters = 500;
    const auto res = minimize_energy(2, RieszParams(2, 1.0), 12, opts);
    const double start = discrete_energy(read_config(path), RieszParams(2, 1.0));
    CHECK(res.energy < start);
    fs::remove(path);
}
