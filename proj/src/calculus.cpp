#include "lfc/calculus.hpp"

#include "lfc/errors.hpp"
#include "lfc/gamma.hpp"
#include "lfc/summation.hpp"

#include <cmath>
#include <string>

namespace lfc {

double lf_integral(const GridFn& f) {
    return compensated_dot(f.values(), f.partition().weights());
}

DerivativeEstimate lf_derivative_est(const std::function<double(double)>& f, double x0,
                                     const Alpha& alpha, double h0, double ratio,
                                     int steps) {
    if (!f) throw DomainError("derivative estimator: null function");
    if (!std::isfinite(x0)) throw DomainError("derivative estimator: non-finite x0");
    if (!(h0 > 0.0) || !std::isfinite(h0)) {
        throw DomainError("derivative estimator: h0 must be finite and > 0");
    }
    if (!(ratio > 0.0) || !(ratio < 1.0)) {
        throw DomainError("derivative estimator: ratio must lie in (0, 1)");
    }
    if (steps < 1) throw DomainError("derivative estimator: steps must be >= 1");

    const double f0 = f(x0);
    if (!std::isfinite(f0)) {
        throw EvalError("derivative estimator: non-finite value at x0 = " +
                            std::to_string(x0),
                        "f(" + std::to_string(x0) + ")");
    }

    const double scale = gamma(1.0 + alpha.value());
    Eigen::ArrayXd quotients(steps), hs(steps);
    double h = h0;
    for (int i = 0; i < steps; ++i) {
        const double fi = f(x0 + h);
        if (!std::isfinite(fi)) {
            throw EvalError("derivative estimator: non-finite value at h = " +
                                std::to_string(h),
                            "f(" + std::to_string(x0 + h) + ")");
        }
        hs[i] = h;
        quotients[i] = scale * (fi - f0) / std::pow(h, alpha.value());
        h *= ratio;
    }
    return DerivativeEstimate{quotients[steps - 1], std::move(quotients), std::move(hs)};
}

}  // namespace lfc
