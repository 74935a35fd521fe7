#pragma once

#include "lfc/alpha.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace lfc {

// A finite family of sub-intervals of [a, b] with the measure weights
//
//     w_j = (right_j - left_j)^alpha / Gamma(1 + alpha),
//
// evaluated at left endpoints. Uniform and random partitions tile [a, b]
// contiguously; Cantor partitions retain k^m disjoint blocks of a
// generalized middle-thirds construction, so adjacent intervals may be
// separated by gaps. Immutable after construction and safe to share
// across threads.
class Partition {
public:
    // N equal sub-intervals of [a, b].
    static Partition uniform(double a, double b, Eigen::Index n, const Alpha& alpha);

    // Level-m keep-k-of-n construction on [a, b]: split into `base` equal
    // pieces, retain the k evenly spread ones (child indices
    // floor(i*(base-1)/(keep-1)), which always keeps both end pieces),
    // recurse `level` times. The order is forced to ln(keep)/ln(base).
    static Partition cantor(int base, int keep, int level, double a, double b);

    // N sub-intervals with seeded random spacings; spacings are bounded
    // below by (b - a) * 1e-9 / N so every weight stays positive.
    static Partition random_spacing(double a, double b, Eigen::Index n,
                                    std::uint64_t seed, const Alpha& alpha);

    Eigen::Index size() const { return lefts_.size(); }  // number of intervals
    const Eigen::ArrayXd& lefts() const { return lefts_; }
    const Eigen::ArrayXd& rights() const { return rights_; }
    const Eigen::ArrayXd& eval_points() const { return lefts_; }
    const Eigen::ArrayXd& weights() const { return weights_; }
    double total_weight() const { return total_weight_; }

    const Alpha& alpha() const { return alpha_; }
    double lower() const { return a_; }
    double upper() const { return b_; }

    // Descriptor in the CLI mini-grammar, e.g. "cantor:3,2,8".
    const std::string& descriptor() const { return descriptor_; }
    // Descriptor plus interval, e.g. "cantor:3,2,8@0,1"; used in reports.
    std::string describe_with_interval() const;

private:
    Partition(Eigen::ArrayXd lefts, Eigen::ArrayXd rights, Alpha alpha,
              double a, double b, std::string descriptor);

    Eigen::ArrayXd lefts_;
    Eigen::ArrayXd rights_;
    Eigen::ArrayXd weights_;
    Alpha alpha_;
    double a_;
    double b_;
    double total_weight_;
    std::string descriptor_;
};

// Parsed form of the partition descriptor mini-grammar:
//   uniform:<N> | cantor:<n>,<k>,<m> | random:<N>,<seed>
// The random seed may be omitted in contexts (suite configs) that derive
// one per case.
struct PartitionSpec {
    enum class Kind { Uniform, Cantor, Random };

    Kind kind = Kind::Uniform;
    Eigen::Index n = 0;                 // uniform/random interval count
    int base = 0, keep = 0, level = 0;  // cantor parameters
    std::optional<std::uint64_t> seed;  // random seed, if given

    static PartitionSpec parse(std::string_view text);
    std::string to_string() const;

    // Builds the partition. `alpha` is required for uniform/random and
    // must agree with ln(keep)/ln(base) when the kind is cantor; a random
    // spec without a seed cannot be built directly.
    Partition build(double a, double b, const std::optional<Alpha>& alpha) const;
};

}  // namespace lfc
