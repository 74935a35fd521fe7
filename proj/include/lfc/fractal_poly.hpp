#pragma once

#include "lfc/alpha.hpp"

#include <Eigen/Core>

namespace lfc {

// Highest admissible degree K: keeps 1 + (K+1)*alpha inside the gamma
// domain for every alpha in (0, 1].
inline constexpr int kMaxFractalDegree = 32;

// A combination sum_k c_k * x^(k*alpha) of the power basis attached to a
// fractal order. This class has closed-form integral and derivative rules
// and serves as the exact reference semantics for the estimators.
class FractalPoly {
public:
    // coeffs holds c_0..c_K in increasing order; K <= kMaxFractalDegree.
    FractalPoly(Alpha alpha, Eigen::ArrayXd coeffs);

    const Alpha& alpha() const { return alpha_; }
    const Eigen::ArrayXd& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

private:
    Alpha alpha_;
    Eigen::ArrayXd coeffs_;
};

// sum_k c_k * x^(k*alpha) for x >= 0.
double fp_eval(const FractalPoly& p, double x);

// Antiderivative: c_k shifts to degree k+1 with factor
// Gamma(1+k*alpha) / Gamma(1+(k+1)*alpha); the new constant term is 0.
// Raising the degree past kMaxFractalDegree is an error.
FractalPoly fp_integral(const FractalPoly& p);

// Derivative: c_k shifts to degree k-1 with factor
// Gamma(1+k*alpha) / Gamma(1+(k-1)*alpha); constants map to 0.
FractalPoly fp_derivative(const FractalPoly& p);

}  // namespace lfc
