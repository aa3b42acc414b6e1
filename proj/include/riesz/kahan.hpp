#pragma once

namespace riesz {

/// Compensated accumulator. Summation order is part of every caller's
/// determinism contract, so callers must feed terms in a fixed order.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace riesz
