#pragma once

#include <Eigen/Core>

#include <cmath>

namespace lfc {

// Neumaier-compensated accumulator. Used for every sum whose length can
// exceed a thousand terms; the compensation keeps million-term sums
// reproducible at the 1e-12 tolerances the checks are held to.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(const Eigen::ArrayXd& values) {
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < values.size(); ++i) acc.add(values[i]);
    return acc.value();
}

// Compensated dot product, left to right. Both factors must have equal size.
inline double compensated_dot(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

}  // namespace lfc
