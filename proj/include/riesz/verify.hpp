#pragma once

#include <string>
#include <vector>

#include "riesz/spectral.hpp"

namespace riesz {

enum class VerifyLevel { fast, full };

struct CheckResult {
    std::string name;
    bool passed;
    double value;        // the measured quantity the threshold applies to
    std::string detail;  // threshold and context, human readable
};

/// Runs the named invariant suites of all modules. fast: ell <= 50, N <= 64;
/// full: ell <= 200, N <= 1024. Deterministic for any worker count.
std::vector<CheckResult> run_verify(VerifyLevel level, int workers = 0);

std::string verify_report_json(const std::vector<CheckResult>& checks);
bool verify_all_passed(const std::vector<CheckResult>& checks);

namespace verify_detail {
/// Compares a table's eigenvalues against the Funk-Hecke quadrature oracle;
/// separated out so sensitivity tests can feed a corrupted table.
CheckResult check_eigenvalue_table(const SpectralTable& table, int lmax, double rel_tol);
}  // namespace verify_detail

}  // namespace riesz
