#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "riesz/common.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/minimize.hpp"
#include "riesz/parallel.hpp"
#include "riesz/spectral.hpp"
#include "riesz/sweep.hpp"
#include "riesz/verify.hpp"

namespace {

riesz::SLabel parse_s(const std::string& text) {
    if (text == "log") return riesz::SLabel::logarithmic();
    return riesz::SLabel::riesz(std::stod(text));
}

riesz::InitScheme parse_init(const std::string& text) {
    if (text == "random") return riesz::InitScheme::random;
    if (text == "spiral") return riesz::InitScheme::spiral;
    if (text == "from-file") return riesz::InitScheme::from_file;
    throw CLI::ValidationError("--init must be random, spiral or from-file");
}

nlohmann::json separation_json(const riesz::Configuration& config) {
    const auto sep = riesz::separation(config);
    return {{"min_dist", sep.min_dist}, {"scaled", sep.scaled}};
}

int cmd_minimize(int d, const std::string& s_text, int n, std::uint64_t seed, int restarts,
                 double grad_tol, int max_iters, const std::string& init,
                 const std::string& init_file, const std::string& out,
                 const std::string& cache_dir, int workers) {
    const riesz::SLabel s = parse_s(s_text);
    const riesz::RieszParams params = riesz::RieszParams::from_label(d, s);
    riesz::MinimizeOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.grad_tol = grad_tol;
    opts.max_iters = max_iters;
    opts.init = parse_init(init);
    opts.init_path = init_file;
    opts.cache_dir = cache_dir;
    opts.workers = workers;
    const riesz::MinimizeResult res = riesz::minimize_energy(d, params, n, opts);
    if (!out.empty()) riesz::write_config(res.config, out);
    nlohmann::json report{{"d", d},
                          {"s", s.str()},
                          {"N", n},
                          {"energy", res.energy},
                          {"grad_inf_norm", res.grad_inf_norm},
                          {"iters", res.iters},
                          {"restart_index", res.restart_index},
                          {"converged", res.converged},
                          {"restart_energies", res.restart_energies},
                          {"separation", separation_json(res.config)}};
    if (!out.empty()) report["path"] = out;
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_discrepancy(const std::string& in, const std::string& s_text, double epsilon,
                    long centers_budget, std::uint64_t seed, const std::string& out, int workers) {
    const riesz::Configuration config = riesz::read_config(in);
    const riesz::SLabel s = s_text.empty() ? config.meta().s : parse_s(s_text);
    const riesz::RieszParams params = riesz::RieszParams::from_label(config.dim(), s);
    const auto sob = riesz::sobolev_discrepancy(config, params, epsilon, 1e-8, workers);
    const auto cap = riesz::cap_discrepancy(config, centers_budget, seed, workers);
    nlohmann::json report{
        {"d", config.dim()},
        {"N", config.size()},
        {"s", s.str()},
        {"sobolev", {{"value", sob.value}, {"epsilon", sob.epsilon}, {"radius", sob.radius},
                     {"L_used", sob.L_used}, {"tail_estimate", sob.tail_estimate}}},
        {"cap", {{"value", cap.value},
                 {"center", std::vector<double>(cap.argmax_cap.center.coords())},
                 {"radius", cap.argmax_cap.radius},
                 {"centers_tested", cap.centers_tested},
                 {"is_lower_bound", cap.is_lower_bound}}},
        {"separation", separation_json(config)}};
    const std::string text = report.dump(2);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        f << text << "\n";
    }
    std::cout << text << "\n";
    return 0;
}

int cmd_spectrum(int d, const std::string& s_text, int L, double r, const std::string& out) {
    const riesz::SLabel s = parse_s(s_text);
    const riesz::RieszParams params = riesz::RieszParams::from_label(d, s);
    const riesz::SpectralTable table = riesz::SpectralTable::build(params, L, r);
    std::ostringstream csv;
    csv << "ell,A,h,lambda\n";
    for (int ell = 0; ell <= L; ++ell) {
        csv << ell << ',' << riesz::format_double17(table.A[ell]) << ',' << table.h[ell] << ',';
        if (!table.lam.empty()) csv << riesz::format_double17(table.lam[ell]);
        csv << '\n';
    }
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("spectrum: cannot open " + out);
        f << csv.str();
        std::cout << "wrote " << out << "\n";
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, int workers) {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) throw std::runtime_error("sweep: cannot open config " + config_path);
    std::stringstream buffer;
    buffer << f.rdbuf();
    const riesz::SweepConfig cfg = riesz::sweep_config_from_json(buffer.str());
    const riesz::SweepResult result = riesz::run_sweep(cfg, workers);
    std::cout << riesz::sweep_result_to_json(result) << "\n";
    return 0;
}

int cmd_verify(const std::string& level_text, const std::string& out, int workers) {
    riesz::VerifyLevel level;
    if (level_text == "fast") {
        level = riesz::VerifyLevel::fast;
    } else if (level_text == "full") {
        level = riesz::VerifyLevel::full;
    } else {
        throw CLI::ValidationError("--level must be fast or full");
    }
    const auto checks = riesz::run_verify(level, workers);
    for (const auto& c : checks)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  value="
                  << riesz::format_double(c.value) << "  (" << c.detail << ")\n";
    const std::string text = riesz::verify_report_json(checks);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        f << text << "\n";
    }
    std::cout << (riesz::verify_all_passed(checks) ? "all checks passed" : "FAILURES present")
              << "\n";
    return riesz::verify_all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz energy minimizers on S^d: energies, spectra, discrepancies"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = hardware)")->capture_default_str();

    // minimize
    auto* mini = app.add_subcommand("minimize", "minimize the Riesz s-energy of N points");
    int d = 2, n = 64, restarts = 1, max_iters = 20000;
    std::string s_text = "log", init = "random", init_file, out, cache_dir, in, config_path;
    std::uint64_t seed = 0;
    double grad_tol = 1e-8, epsilon = 0.2;
    long centers_budget = 1000;
    mini->add_option("--d", d, "sphere dimension (S^d)")->capture_default_str();
    mini->add_option("--s", s_text, "Riesz exponent or 'log'")->capture_default_str();
    mini->add_option("--n", n, "number of points")->required();
    mini->add_option("--seed", seed, "random seed")->capture_default_str();
    mini->add_option("--restarts", restarts, "independent starts")->capture_default_str();
    mini->add_option("--grad-tol", grad_tol, "gradient tolerance (scaled by N^{s/d})")
        ->capture_default_str();
    mini->add_option("--max-iters", max_iters, "iteration cap")->capture_default_str();
    mini->add_option("--init", init, "random | spiral | from-file")->capture_default_str();
    mini->add_option("--init-file", init_file, "SPHPTS start for --init from-file");
    mini->add_option("--out", out, "write the minimizer as SPHPTS");
    mini->add_option("--cache-dir", cache_dir, "SPHPTS cache directory");

    // discrepancy
    auto* disc = app.add_subcommand("discrepancy", "Sobolev and cap discrepancies of a point file");
    disc->add_option("--in", in, "SPHPTS input file")->required();
    disc->add_option("--s", s_text, "Riesz exponent or 'log' (default: file header)");
    disc->add_option("--epsilon", epsilon, "cap scale: radius = epsilon N^{-1/d}")
        ->capture_default_str();
    disc->add_option("--centers-budget", centers_budget, "random candidate cap centers")
        ->capture_default_str();
    disc->add_option("--seed", seed, "seed for candidate centers")->capture_default_str();
    disc->add_option("--out", out, "also write the JSON report here");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "tabulate eigenvalues A_ell, dims h_ell, cap multipliers");
    int L = 100;
    double cap_r = 0.0;
    spectrum->add_option("--d", d, "sphere dimension")->capture_default_str();
    spectrum->add_option("--s", s_text, "Riesz exponent or 'log'")->required();
    spectrum->add_option("--L", L, "truncation degree")->capture_default_str();
    spectrum->add_option("--r", cap_r, "cap radius for lambda_ell column (omit for none)")
        ->capture_default_str();
    spectrum->add_option("--out", out, "CSV output path (stdout if omitted)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run an N-sweep from a JSON config");
    sweep->add_option("--config", config_path, "SweepConfig JSON path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::string level = "fast";
    verify->add_option("--level", level, "fast | full")->capture_default_str();
    verify->add_option("--out", out, "also write the JSON report here");

    // cap-area
    auto* area = app.add_subcommand("cap-area", "surface measure of a spherical cap");
    double r = 1.0;
    area->add_option("--d", d, "sphere dimension")->required();
    area->add_option("--r", r, "chord radius in (0, 2]")->required();

    CLI11_PARSE(app, argc, argv);
    if (workers > 0) riesz::set_default_workers(workers);

    try {
        if (app.got_subcommand(mini))
            return cmd_minimize(d, s_text, n, seed, restarts, grad_tol, max_iters, init, init_file,
                                out, cache_dir, workers);
        if (app.got_subcommand(disc))
            return cmd_discrepancy(in, disc->count("--s") ? s_text : std::string(), epsilon,
                                   centers_budget, seed, out, workers);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(d, s_text, L, cap_r, out);
        if (app.got_subcommand(sweep)) return cmd_sweep(config_path, workers);
        if (app.got_subcommand(verify)) return cmd_verify(level, out, workers);
        if (app.got_subcommand(area)) {
            std::cout << riesz::format_double17(riesz::cap_area(d, r)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
