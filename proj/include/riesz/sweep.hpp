#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riesz/sphere.hpp"

namespace riesz {

struct SweepOutputs {
    std::string csv_path;
    std::string json_path;
    std::string cache_dir;
};

struct SweepConfig {
    int d = 2;
    SLabel s;
    std::vector<int> N_list;
    double epsilon = 0.2;
    int restarts = 1;
    std::uint64_t seed = 0;
    long centers_budget = 1000;
    SweepOutputs outputs;
};

struct SweepRow {
    int N;
    double energy;
    double gap;
    double sobolev_D;
    double cap_D;
    double scaled_separation;
    double grad_inf_norm;
};

struct SweepFits {
    double sobolev_slope = 0.0;
    double sobolev_slope_stderr = 0.0;
    double cap_slope = 0.0;
    double cap_slope_stderr = 0.0;
    double gap_coeff = 0.0;
    bool present = false;  // fits are computed only when |N_list| >= 4
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepFits fits;
};

struct FitResult {
    double slope;
    double std_error;
};

/// OLS slope of log(value) against log(N). Needs >= 4 pairs, all values > 0.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& pairs);

/// For each N: minimize (cache-assisted), then energy gap, Sobolev and cap
/// discrepancies and separation; rows stream to the CSV as they finish.
/// Fits: log-log slopes for sobolev_D and cap_D, and the leading coefficient
/// of E(N) - E_cont N^2 regressed on {N log N, N} for the logarithmic case
/// (on {N^{1+s/d}, N} otherwise).
SweepResult run_sweep(const SweepConfig& cfg, int workers = 0);

/// Sweep CSV header, fixed by the file contract.
inline constexpr const char* kSweepCsvHeader =
    "N,energy,gap,sobolev_D,cap_D,scaled_separation,grad_inf_norm";

std::string sweep_result_to_json(const SweepResult& result);
SweepConfig sweep_config_from_json(const std::string& json_text);

}  // namespace riesz
