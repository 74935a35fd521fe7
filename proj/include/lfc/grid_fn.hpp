#pragma once

#include "lfc/partition.hpp"

#include <Eigen/Core>

#include <functional>
#include <memory>

namespace lfc {

// A function sampled at a partition's evaluation points (left endpoints).
// Values are nonnegative and finite: sampling takes |f(t_j)|, so signed
// callables are admissible inputs to checks that are stated for |f|.
// Immutable after construction; two GridFns interoperate only when they
// hold the same Partition object (pointer identity, not value equality).
class GridFn {
public:
    using Sampler = std::function<double(double)>;

    // Evaluates `f` at every eval point and stores |f(t_j)|. A non-finite
    // sample raises EvalError naming the offending point.
    static GridFn sample(std::shared_ptr<const Partition> partition, const Sampler& f);

    // Adopts precomputed values. They must already be nonnegative and
    // finite and match the partition size; no absolute value is applied.
    static GridFn from_values(std::shared_ptr<const Partition> partition,
                              Eigen::ArrayXd values);

    const Partition& partition() const { return *partition_; }
    const std::shared_ptr<const Partition>& partition_ptr() const { return partition_; }
    const Eigen::ArrayXd& values() const { return values_; }
    Eigen::Index size() const { return values_.size(); }

    bool same_partition(const GridFn& other) const { return partition_ == other.partition_; }

private:
    GridFn(std::shared_ptr<const Partition> partition, Eigen::ArrayXd values)
        : partition_(std::move(partition)), values_(std::move(values)) {}

    std::shared_ptr<const Partition> partition_;
    Eigen::ArrayXd values_;
};

}  // namespace lfc
