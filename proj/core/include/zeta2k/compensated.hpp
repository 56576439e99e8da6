#pragma once

namespace zeta2k {

// Kahan compensated accumulator: the running error term keeps long
// ascending sums accurate to a couple of ulps instead of sqrt(N) ulps.
class CompensatedSum {
public:
    void add(double x) noexcept {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace zeta2k
