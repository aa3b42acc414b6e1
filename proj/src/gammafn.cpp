#include "riesz/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace riesz {

double digamma(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2n}/(2n x^{2n}), n = 1..6.
    double series = inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32760.0))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

}  // namespace riesz
