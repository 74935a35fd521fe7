#pragma once

#include "lfc/alpha.hpp"
#include "lfc/grid_fn.hpp"

#include <Eigen/Core>

#include <functional>

namespace lfc {

// The finite-partition integral functional: sum_j values[j] * w_j with
// compensated summation. The weights already carry the 1/Gamma(1+alpha)
// normalizer, so this realizes the alpha-integral of |f| over [a, b] at
// the partition's resolution.
double lf_integral(const GridFn& f);

// One difference-quotient run of the derivative estimator.
struct DerivativeEstimate {
    double estimate;           // the last quotient
    Eigen::ArrayXd quotients;  // q_i for every step
    Eigen::ArrayXd steps;      // the h_i the quotients were taken at
};

// Computes q_i = Gamma(1+alpha) * (f(x0 + h_i) - f(x0)) / h_i^alpha for
// h_i = h0 * ratio^i, i = 0..steps-1. The estimate is the final quotient;
// the full sequence is returned so callers can judge convergence
// themselves (the limit need not exist for arbitrary f). One-sided: only
// points right of x0 are probed.
DerivativeEstimate lf_derivative_est(const std::function<double(double)>& f, double x0,
                                     const Alpha& alpha, double h0, double ratio,
                                     int steps);

}  // namespace lfc
