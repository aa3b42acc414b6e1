#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace riesz {

inline constexpr double kPi = 3.14159265358979323846;

/// Surface area of the unit sphere S^d embedded in R^{d+1},
/// omega_d = 2 pi^{(d+1)/2} / Gamma((d+1)/2).
inline double sphere_area(int d) {
    if (d < 1) throw std::invalid_argument("sphere_area: d must be >= 1");
    return 2.0 * std::exp(0.5 * (d + 1) * std::log(kPi) - std::lgamma(0.5 * (d + 1)));
}

/// Volume of the unit ball in R^d, pi^{d/2} / Gamma(d/2 + 1).
inline double ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("ball_volume: d must be >= 1");
    return std::exp(0.5 * d * std::log(kPi) - std::lgamma(0.5 * d + 1.0));
}

/// Two coincident points were fed to a singular kernel; carries the offending pair.
class singularity_error : public std::runtime_error {
public:
    singularity_error(std::string msg, std::size_t i, std::size_t j)
        : std::runtime_error(std::move(msg)), pair_i(i), pair_j(j) {}
    std::size_t pair_i;
    std::size_t pair_j;
};

/// Point-set file could not be parsed; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, std::size_t line)
        : std::runtime_error(std::move(msg)), line_number(line) {}
    std::size_t line_number;
};

/// A truncated spectral sum failed to meet its tolerance; carries the partial value.
class convergence_error : public std::runtime_error {
public:
    convergence_error(std::string msg, double partial)
        : std::runtime_error(std::move(msg)), partial_value(partial) {}
    double partial_value;
};

}  // namespace riesz
