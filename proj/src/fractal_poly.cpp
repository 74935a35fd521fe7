#include "lfc/fractal_poly.hpp"

#include "lfc/errors.hpp"
#include "lfc/gamma.hpp"

#include <cmath>
#include <string>

namespace lfc {

FractalPoly::FractalPoly(Alpha alpha, Eigen::ArrayXd coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw DomainError("fractal polynomial: empty coefficient list");
    if (coeffs_.size() > kMaxFractalDegree + 1) {
        throw DomainError("fractal polynomial: degree " +
                          std::to_string(coeffs_.size() - 1) + " exceeds the cap of " +
                          std::to_string(kMaxFractalDegree));
    }
    for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
        if (!std::isfinite(coeffs_[k])) {
            throw DomainError("fractal polynomial: non-finite coefficient at index " +
                              std::to_string(k));
        }
    }
}

double fp_eval(const FractalPoly& p, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("fractal polynomial: evaluation point must be finite and >= 0");
    }
    // Horner in t = x^alpha; t^k equals x^(k*alpha).
    const double t = std::pow(x, p.alpha().value());
    const Eigen::ArrayXd& c = p.coeffs();
    double acc = c[c.size() - 1];
    for (Eigen::Index k = c.size() - 2; k >= 0; --k) acc = acc * t + c[k];
    return acc;
}

FractalPoly fp_integral(const FractalPoly& p) {
    const Eigen::ArrayXd& c = p.coeffs();
    if (c.size() > kMaxFractalDegree) {
        throw DomainError("fractal polynomial: integration would exceed degree " +
                          std::to_string(kMaxFractalDegree));
    }
    const double a = p.alpha().value();
    Eigen::ArrayXd out(c.size() + 1);
    out[0] = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        const double kk = static_cast<double>(k);
        out[k + 1] = c[k] * (gamma(1.0 + kk * a) / gamma(1.0 + (kk + 1.0) * a));
    }
    return FractalPoly(p.alpha(), std::move(out));
}

FractalPoly fp_derivative(const FractalPoly& p) {
    const Eigen::ArrayXd& c = p.coeffs();
    if (c.size() == 1) {
        Eigen::ArrayXd zero(1);
        zero[0] = 0.0;
        return FractalPoly(p.alpha(), std::move(zero));
    }
    const double a = p.alpha().value();
    Eigen::ArrayXd out(c.size() - 1);
    for (Eigen::Index k = 1; k < c.size(); ++k) {
        const double kk = static_cast<double>(k);
        out[k - 1] = c[k] * (gamma(1.0 + kk * a) / gamma(1.0 + (kk - 1.0) * a));
    }
    return FractalPoly(p.alpha(), std::move(out));
}

}  // namespace lfc
