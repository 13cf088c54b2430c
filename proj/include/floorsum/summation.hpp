#pragma once

#include <cmath>

namespace floorsum {

// Neumaier's compensated summation. The running compensation also
// covers the case |term| > |sum|, which plain Kahan mishandles.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    // Merge a partial sum produced by another accumulator.
    // Combining fixed partials in a fixed order is deterministic.
    void merge(const KahanSum& other) {
        add(other.sum);
        comp += other.comp;
    }

    double value() const { return sum + comp; }
};

} // namespace floorsum
