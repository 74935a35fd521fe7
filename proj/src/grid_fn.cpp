#include "lfc/grid_fn.hpp"

#include "lfc/errors.hpp"

#include <cmath>
#include <string>

namespace lfc {

GridFn GridFn::sample(std::shared_ptr<const Partition> partition, const Sampler& f) {
    if (!partition) throw DomainError("grid function: null partition");
    if (!f) throw DomainError("grid function: null sampler");
    const Eigen::ArrayXd& points = partition->eval_points();
    Eigen::ArrayXd values(points.size());
    for (Eigen::Index j = 0; j < points.size(); ++j) {
        const double v = f(points[j]);
        if (!std::isfinite(v)) {
            throw EvalError("grid function: non-finite sample at x = " +
                                std::to_string(points[j]),
                            "f(" + std::to_string(points[j]) + ")");
        }
        values[j] = std::abs(v);
    }
    return GridFn(std::move(partition), std::move(values));
}

GridFn GridFn::from_values(std::shared_ptr<const Partition> partition,
                           Eigen::ArrayXd values) {
    if (!partition) throw DomainError("grid function: null partition");
    if (values.size() != partition->size()) {
        throw DomainError("grid function: " + std::to_string(values.size()) +
                          " values for " + std::to_string(partition->size()) +
                          " evaluation points");
    }
    for (Eigen::Index j = 0; j < values.size(); ++j) {
        if (!std::isfinite(values[j]) || values[j] < 0.0) {
            throw DomainError("grid function: value at index " + std::to_string(j) +
                              " is negative or non-finite");
        }
    }
    return GridFn(std::move(partition), std::move(values));
}

}  // namespace lfc
