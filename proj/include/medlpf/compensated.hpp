#pragma once

#include <cmath>

#ifdef __FAST_MATH__
#error "compensated summation is defeated by -ffast-math"
#endif

namespace medlpf {

// Neumaier-compensated accumulator. Long prime sums (10^6..10^7 terms)
// lose digits under naive accumulation; the carry keeps the result at
// the correctly-rounded level. Merging two accumulators is associative
// enough for segment-parallel reductions.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }

    void merge(const CompensatedSum& o) {
        add(o.sum_);
        carry_ += o.carry_;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace medlpf
