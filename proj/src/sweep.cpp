#include "riesz/sweep.hpp"

#include <cmath>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "riesz/common.hpp"
#include "riesz/discrepancy.hpp"
#include "riesz/minimize.hpp"
#include "riesz/spectral.hpp"

namespace riesz {

namespace {

// Least squares for y = a*f(N) + b*N over the sweep rows; returns a.
double leading_coefficient(const std::vector<std::pair<double, double>>& ny,
                           const std::function<double(double)>& f) {
    double s11 = 0.0, s12 = 0.0, s22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (const auto& [n, y] : ny) {
        const double x1 = f(n);
        const double x2 = n;
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        r1 += x1 * y;
        r2 += x2 * y;
    }
    const double det = s11 * s22 - s12 * s12;
    if (det == 0.0) throw std::invalid_argument("gap regression: singular design");
    return (r1 * s22 - r2 * s12) / det;
}

void write_csv_row(std::ofstream& csv, const SweepRow& row) {
    csv << row.N << ',' << format_double17(row.energy) << ',' << format_double17(row.gap) << ','
        << format_double17(row.sobolev_D) << ',' << format_double17(row.cap_D) << ','
        << format_double17(row.scaled_separation) << ',' << format_double17(row.grad_inf_norm)
        << '\n';
    csv.flush();
}

}  // namespace

FitResult fit_exponent(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 4) throw std::invalid_argument("fit_exponent: needs at least 4 pairs");
    std::vector<double> xs, ys;
    xs.reserve(pairs.size());
    ys.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(pairs[i].second > 0.0))
            throw std::invalid_argument("fit_exponent: nonpositive value at row " + std::to_string(i));
        xs.push_back(std::log(pairs[i].first));
        ys.push_back(std::log(pairs[i].second));
    }
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_exponent: all N equal");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double res = ys[i] - (intercept + slope * xs[i]);
        ss_res += res * res;
    }
    const double stderr_slope = std::sqrt(ss_res / (n - 2.0) / sxx);
    return FitResult{slope, stderr_slope};
}

SweepResult run_sweep(const SweepConfig& cfg, int workers) {
    if (cfg.N_list.empty()) throw std::invalid_argument("run_sweep: empty N_list");
    for (std::size_t i = 0; i < cfg.N_list.size(); ++i) {
        if (cfg.N_list[i] < 2)
            throw std::invalid_argument("run_sweep: every N must be >= 2");
        if (i > 0 && cfg.N_list[i] <= cfg.N_list[i - 1])
            throw std::invalid_argument("run_sweep: N_list must be strictly increasing");
    }
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("run_sweep: epsilon must be positive");

    const RieszParams params = RieszParams::from_label(cfg.d, cfg.s);

    std::ofstream csv;
    if (!cfg.outputs.csv_path.empty()) {
        csv.open(cfg.outputs.csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("run_sweep: cannot open CSV " + cfg.outputs.csv_path);
        csv << kSweepCsvHeader << '\n';
        csv.flush();
    }

    SweepResult result;
    for (int n : cfg.N_list) {
        try {
            MinimizeOptions opts;
            opts.restarts = cfg.restarts;
            opts.seed = cfg.seed;
            opts.max_iters = 8000;  // rows are insensitive to the slow tail of the descent
            opts.init = cfg.d == 2 ? InitScheme::spiral : InitScheme::random;
            opts.cache_dir = cfg.outputs.cache_dir;
            opts.workers = workers;
            const MinimizeResult min = minimize_energy(cfg.d, params, n, opts);

            const EnergyStats stats = energy_gap(min.config, params, workers);
            const SobolevDiscrepancyResult sob =
                sobolev_discrepancy(min.config, params, cfg.epsilon, 1e-8, workers);
            const CapDiscrepancyEstimate cap =
                cap_discrepancy(min.config, cfg.centers_budget, cfg.seed, workers);
            const SeparationStats sep = separation(min.config);

            SweepRow row{n, stats.energy, stats.gap, sob.value, cap.value, sep.scaled,
                         min.grad_inf_norm};
            result.rows.push_back(row);
            if (csv.is_open()) write_csv_row(csv, row);
        } catch (const std::exception& e) {
            throw std::runtime_error("run_sweep: N=" + std::to_string(n) + ": " + e.what());
        }
    }

    if (result.rows.size() >= 4) {
        std::vector<std::pair<double, double>> sob_pairs, cap_pairs, gap_pairs;
        for (const auto& row : result.rows) {
            sob_pairs.emplace_back(row.N, row.sobolev_D);
            cap_pairs.emplace_back(row.N, row.cap_D);
            const double n = row.N;
            gap_pairs.emplace_back(n, row.energy - continuous_energy(params) * n * n);
        }
        const FitResult sob_fit = fit_exponent(sob_pairs);
        const FitResult cap_fit = fit_exponent(cap_pairs);
        result.fits.sobolev_slope = sob_fit.slope;
        result.fits.sobolev_slope_stderr = sob_fit.std_error;
        result.fits.cap_slope = cap_fit.slope;
        result.fits.cap_slope_stderr = cap_fit.std_error;
        if (params.is_log) {
            result.fits.gap_coeff =
                leading_coefficient(gap_pairs, [](double n) { return n * std::log(n); });
        } else {
            const double expo = 1.0 + params.s / params.d;
            result.fits.gap_coeff =
                leading_coefficient(gap_pairs, [expo](double n) { return std::pow(n, expo); });
        }
        result.fits.present = true;
    }

    if (!cfg.outputs.json_path.empty()) {
        std::ofstream js(cfg.outputs.json_path, std::ios::binary);
        if (!js) throw std::runtime_error("run_sweep: cannot open JSON " + cfg.outputs.json_path);
        js << sweep_result_to_json(result) << '\n';
    }
    return result;
}

std::string sweep_result_to_json(const SweepResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : result.rows) {
        rows.push_back({{"N", row.N},
                        {"energy", row.energy},
                        {"gap", row.gap},
                        {"sobolev_D", row.sobolev_D},
                        {"cap_D", row.cap_D},
                        {"scaled_separation", row.scaled_separation},
                        {"grad_inf_norm", row.grad_inf_norm}});
    }
    nlohmann::json out{{"rows", rows}};
    if (result.fits.present) {
        out["fits"] = {{"sobolev_slope", result.fits.sobolev_slope},
                       {"sobolev_slope_stderr", result.fits.sobolev_slope_stderr},
                       {"cap_slope", result.fits.cap_slope},
                       {"cap_slope_stderr", result.fits.cap_slope_stderr},
                       {"gap_coeff", result.fits.gap_coeff}};
    }
    return out.dump(2);
}

SweepConfig sweep_config_from_json(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    SweepConfig cfg;
    cfg.d = j.at("d").get<int>();
    const auto& s = j.at("s");
    if (s.is_string()) {
        if (s.get<std::string>() != "log")
            throw std::invalid_argument("sweep config: s must be a number or \"log\"");
        cfg.s = SLabel::logarithmic();
    } else {
        cfg.s = SLabel::riesz(s.get<double>());
    }
    cfg.N_list = j.at("N_list").get<std::vector<int>>();
    cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("centers_budget")) cfg.centers_budget = j.at("centers_budget").get<long>();
    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        if (o.contains("csv_path")) cfg.outputs.csv_path = o.at("csv_path").get<std::string>();
        if (o.contains("json_path")) cfg.outputs.json_path = o.at("json_path").get<std::string>();
        if (o.contains("cache_dir")) cfg.outputs.cache_dir = o.at("cache_dir").get<std::string>();
    }
    return cfg;
}

}  // namespace riesz
