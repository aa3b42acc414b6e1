#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "riesz/discrepancy.hpp"
#include "riesz/minimize.hpp"
#include "riesz/parallel.hpp"
#include "riesz/spectral.hpp"
#include "riesz/sweep.hpp"
#include "riesz/verify.hpp"

namespace py = pybind11;
using namespace riesz;

namespace {

// s may be a float (0.0 means the logarithmic kernel) or the string "log".
double parse_s(const py::object& s) {
    if (py::isinstance<py::str>(s)) {
        if (s.cast<std::string>() == "log") return 0.0;
        throw py::value_error("s must be a float or the string 'log'");
    }
    return s.cast<double>();
}

Configuration config_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& pts) {
    if (pts.ndim() != 2 || pts.shape(1) < 3)
        throw py::value_error("points must be an (N, d+1) array with d >= 2");
    const int n = static_cast<int>(pts.shape(0));
    const int width = static_cast<int>(pts.shape(1));
    std::vector<double> flat(static_cast<std::size_t>(n) * width);
    std::copy(pts.data(), pts.data() + flat.size(), flat.begin());
    ConfigMeta meta;
    return Configuration(width - 1, std::move(flat), meta);
}

py::array_t<double> array_from_config(const Configuration& config) {
    const int width = config.dim() + 1;
    py::array_t<double> out({config.size(), width});
    std::copy(config.coords().begin(), config.coords().end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riesz energy minimizers on S^d: energies, spectra, discrepancies";

    m.def("set_workers", &set_default_workers, py::arg("n"),
          "Default worker-thread count (0 = hardware).");

    m.def("sample_uniform",
          [](int d, int n, std::uint64_t seed) { return array_from_config(sample_uniform(d, n, seed)); },
          py::arg("d"), py::arg("n"), py::arg("seed") = 0,
          "n i.i.d. points from the uniform measure on S^d, as an (n, d+1) array.");

    m.def("cap_area", &cap_area, py::arg("d"), py::arg("r"),
          "Surface measure of a spherical cap of chord radius r.");

    m.def("separation",
          [](const py::array_t<double>& pts) {
              const auto stats = separation(config_from_array(pts));
              return py::make_tuple(stats.min_dist, stats.scaled);
          },
          py::arg("points"), "(min pairwise distance, scaled by N^{1/d}).");

    m.def("discrete_energy",
          [](const py::array_t<double>& pts, const py::object& s) {
              const Configuration cfg = config_from_array(pts);
              return discrete_energy(cfg, RieszParams(cfg.dim(), parse_s(s)));
          },
          py::arg("points"), py::arg("s"));

    m.def("energy_gradient",
          [](const py::array_t<double>& pts, const py::object& s) {
              const Configuration cfg = config_from_array(pts);
              const auto grad = energy_gradient(cfg, RieszParams(cfg.dim(), parse_s(s)));
              py::array_t<double> out({cfg.size(), cfg.dim() + 1});
              std::copy(grad.begin(), grad.end(), out.mutable_data());
              return out;
          },
          py::arg("points"), py::arg("s"), "Tangent gradients, same shape as points.");

    m.def("continuous_energy",
          [](int d, const py::object& s) { return continuous_energy(RieszParams(d, parse_s(s))); },
          py::arg("d"), py::arg("s"));

    m.def("energy_gap",
          [](const py::array_t<double>& pts, const py::object& s) {
              const Configuration cfg = config_from_array(pts);
              const auto stats = energy_gap(cfg, RieszParams(cfg.dim(), parse_s(s)));
              py::dict out;
              out["energy"] = stats.energy;
              out["gap"] = stats.gap;
              if (stats.log_coeff_context) out["log_coeff_context"] = *stats.log_coeff_context;
              return out;
          },
          py::arg("points"), py::arg("s"));

    m.def("gegenbauer", &gegenbauer, py::arg("alpha"), py::arg("ell"), py::arg("t"));
    m.def("hyp3f2_terminating", &hyp3f2_terminating, py::arg("ell"), py::arg("b"), py::arg("c"),
          py::arg("e"), py::arg("f"));
    m.def("harmonic_dimension", &harmonic_dimension, py::arg("d"), py::arg("ell"));
    m.def("riesz_eigenvalue",
          [](int d, const py::object& s, int ell) { return riesz_eigenvalue(d, parse_s(s), ell); },
          py::arg("d"), py::arg("s"), py::arg("ell"));
    m.def("riesz_eigenvalue_quadrature",
          [](int d, const py::object& s, int ell) { return riesz_eigenvalue_quadrature(d, parse_s(s), ell); },
          py::arg("d"), py::arg("s"), py::arg("ell"), "Funk-Hecke quadrature oracle.");
    m.def("cap_multiplier", &cap_multiplier, py::arg("d"), py::arg("ell"), py::arg("r"));
    m.def("cap_multipliers", &cap_multipliers, py::arg("d"), py::arg("L"), py::arg("r"));

    m.def("sobolev_discrepancy",
          [](const py::array_t<double>& pts, const py::object& s, double epsilon, double tol) {
              const Configuration cfg = config_from_array(pts);
              const auto res = sobolev_discrepancy(cfg, RieszParams(cfg.dim(), parse_s(s)), epsilon, tol);
              py::dict out;
              out["value"] = res.value;
              out["epsilon"] = res.epsilon;
              out["radius"] = res.radius;
              out["L_used"] = res.L_used;
              out["tail_estimate"] = res.tail_estimate;
              return out;
          },
          py::arg("points"), py::arg("s"), py::arg("epsilon") = 0.2, py::arg("tol") = 1e-8);

    m.def("pair_cap_energy",
          [](int d, const py::object& s, double r, double t, double tol) {
              return pair_cap_energy(RieszParams(d, parse_s(s)), r, t, tol);
          },
          py::arg("d"), py::arg("s"), py::arg("r"), py::arg("t"), py::arg("tol") = 1e-9);

    m.def("cap_discrepancy",
          [](const py::array_t<double>& pts, long centers_budget, std::uint64_t seed) {
              const auto est = cap_discrepancy(config_from_array(pts), centers_budget, seed);
              py::dict out;
              out["value"] = est.value;
              out["center"] = est.argmax_cap.center.coords();
              out["radius"] = est.argmax_cap.radius;
              out["centers_tested"] = est.centers_tested;
              out["is_lower_bound"] = est.is_lower_bound;
              return out;
          },
          py::arg("points"), py::arg("centers_budget") = 1000, py::arg("seed") = 0);

    m.def("stolarsky_decomposition_check",
          [](const py::array_t<double>& pts, const py::object& s, double epsilon, double tol) {
              const Configuration cfg = config_from_array(pts);
              const auto rep =
                  stolarsky_decomposition_check(cfg, RieszParams(cfg.dim(), parse_s(s)), epsilon, tol);
              py::dict out;
              out["lhs"] = rep.lhs;
              out["rhs"] = rep.rhs;
              out["residual"] = rep.residual;
              out["quadrature_tol"] = rep.quadrature_tol;
              return out;
          },
          py::arg("points"), py::arg("s"), py::arg("epsilon") = 0.2, py::arg("tol") = 1e-8);

    m.def("smoothing_defect",
          [](const py::array_t<double>& pts, const py::object& s, double epsilon) {
              const Configuration cfg = config_from_array(pts);
              const auto sd = smoothing_defect(cfg, RieszParams(cfg.dim(), parse_s(s)), epsilon);
              return py::make_tuple(sd.defect, sd.bound_scale);
          },
          py::arg("points"), py::arg("s"), py::arg("epsilon"),
          "(defect, eps^2 (N^{-2/d} + N^{-1+s/d})); needs scaled separation >= 8 eps.");

    m.def("mean_value_check",
          [](int d, const py::object& s, const std::vector<double>& a, const std::vector<double>& b,
             double r) {
              return mean_value_check(RieszParams(d, parse_s(s)), SpherePoint(a), SpherePoint(b), r);
          },
          py::arg("d"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("r"));

    m.def("minimize_energy",
          [](int d, const py::object& s, int n, std::uint64_t seed, int restarts, double grad_tol,
             int max_iters, const std::string& init, const std::string& cache_dir) {
              MinimizeOptions opts;
              opts.seed = seed;
              opts.restarts = restarts;
              opts.grad_tol = grad_tol;
              opts.max_iters = max_iters;
              opts.cache_dir = cache_dir;
              if (init == "spiral") {
                  opts.init = InitScheme::spiral;
              } else if (init == "random") {
                  opts.init = InitScheme::random;
              } else {
                  throw py::value_error("init must be 'random' or 'spiral'");
              }
              const auto res = minimize_energy(d, RieszParams(d, parse_s(s)), n, opts);
              py::dict out;
              out["points"] = array_from_config(res.config);
              out["energy"] = res.energy;
              out["grad_inf_norm"] = res.grad_inf_norm;
              out["iters"] = res.iters;
              out["restart_index"] = res.restart_index;
              out["converged"] = res.converged;
              out["restart_energies"] = res.restart_energies;
              return out;
          },
          py::arg("d"), py::arg("s"), py::arg("n"), py::arg("seed") = 0, py::arg("restarts") = 1,
          py::arg("grad_tol") = 1e-8, py::arg("max_iters") = 20000, py::arg("init") = "random",
          py::arg("cache_dir") = "");

    m.def("fit_exponent",
          [](const std::vector<std::pair<double, double>>& pairs) {
              const auto fit = fit_exponent(pairs);
              return py::make_tuple(fit.slope, fit.std_error);
          },
          py::arg("pairs"), "OLS slope of log(value) vs log(N); returns (slope, stderr).");

    m.def("write_config",
          [](const py::array_t<double>& pts, const std::string& path, const py::object& s,
             std::uint64_t seed) {
              Configuration cfg = config_from_array(pts);
              cfg.meta().s = parse_s(s) == 0.0 ? SLabel::logarithmic() : SLabel::riesz(parse_s(s));
              cfg.meta().seed = seed;
              write_config(cfg, path);
          },
          py::arg("points"), py::arg("path"), py::arg("s") = "log", py::arg("seed") = 0);

    m.def("read_config",
          [](const std::string& path) { return array_from_config(read_config(path)); },
          py::arg("path"));

    m.def("verify",
          [](const std::string& level) {
              const auto checks =
                  run_verify(level == "full" ? VerifyLevel::full : VerifyLevel::fast);
              py::list out;
              for (const auto& c : checks) {
                  py::dict item;
                  item["name"] = c.name;
                  item["passed"] = c.passed;
                  item["value"] = c.value;
                  item["detail"] = c.detail;
                  out.append(item);
              }
              return out;
          },
          py::arg("level") = "fast");
}
