#include "lfc/partition.hpp"

#include "lfc/errors.hpp"
#include "lfc/format.hpp"
#include "lfc/gamma.hpp"
#include "lfc/rng.hpp"
#include "lfc/summation.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace lfc {
namespace {

// Hard cap on interval count; cantor(2-of-n, level 26) already hits it.
constexpr Eigen::Index kMaxIntervals = Eigen::Index(1) << 26;

void check_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw DomainError("partition: invalid interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] (need finite a < b)");
    }
}

double weight_of(double length, const Alpha& alpha) {
    return std::pow(length, alpha.value()) / gamma(1.0 + alpha.value());
}

void emit_cantor(double lo, double hi, int base, int keep, int depth,
                 Eigen::ArrayXd& lefts, Eigen::ArrayXd& rights, Eigen::Index& out) {
    if (depth == 0) {
        lefts[out] = lo;
        rights[out] = hi;
        ++out;
        return;
    }
    const double len = (hi - lo) / base;
    for (int i = 0; i < keep; ++i) {
        // Evenly spread retained blocks; i = 0 keeps the first piece and
        // i = keep-1 the last, so (3,2) is the classic middle-thirds set.
        const int child = static_cast<int>((static_cast<long long>(i) * (base - 1)) / (keep - 1));
        emit_cantor(lo + child * len, lo + (child + 1) * len, base, keep, depth - 1,
                    lefts, rights, out);
    }
}

}  // namespace

Partition::Partition(Eigen::ArrayXd lefts, Eigen::ArrayXd rights, Alpha alpha,
                     double a, double b, std::string descriptor)
    : lefts_(std::move(lefts)),
      rights_(std::move(rights)),
      alpha_(alpha),
      a_(a),
      b_(b),
      descriptor_(std::move(descriptor)) {
    const Eigen::Index n = lefts_.size();
    weights_.resize(n);
    const double g = gamma(1.0 + alpha_.value());
    for (Eigen::Index j = 0; j < n; ++j) {
        const double len = rights_[j] - lefts_[j];
        if (!(len > 0.0)) {
            throw DomainError("partition: degenerate interval at index " + std::to_string(j));
        }
        if (j + 1 < n && !(rights_[j] <= lefts_[j + 1])) {
            throw DomainError("partition: intervals out of order at index " + std::to_string(j));
        }
        weights_[j] = std::pow(len, alpha_.value()) / g;
        if (!(weights_[j] > 0.0) || !std::isfinite(weights_[j])) {
            throw DomainError("partition: non-positive weight at index " + std::to_string(j));
        }
    }
    total_weight_ = compensated_sum(weights_);
}

Partition Partition::uniform(double a, double b, Eigen::Index n, const Alpha& alpha) {
    check_interval(a, b);
    if (n < 1) throw DomainError("partition: interval count must be >= 1");
    if (n > kMaxIntervals) throw DomainError("partition: interval count too large");
    const double h = (b - a) / static_cast<double>(n);
    Eigen::ArrayXd lefts(n), rights(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        lefts[j] = a + h * static_cast<double>(j);
        rights[j] = (j + 1 == n) ? b : a + h * static_cast<double>(j + 1);
    }
    Partition p(std::move(lefts), std::move(rights), alpha, a, b,
                "uniform:" + std::to_string(n));
    // Equal spacings give equal weights by definition of the construction;
    // pin them to one canonical value instead of per-interval rounding.
    const double w = weight_of(h, alpha);
    p.weights_.setConstant(w);
    p.total_weight_ = compensated_sum(p.weights_);
    return p;
}

Partition Partition::cantor(int base, int keep, int level, double a, double b) {
    check_interval(a, b);
    if (base < 3) throw DomainError("cantor: base must be >= 3");
    if (keep < 2 || keep >= base) throw DomainError("cantor: keep must be in [2, base-1]");
    if (level < 0) throw DomainError("cantor: level must be >= 0");

    long double count_ld = 1.0L;
    for (int i = 0; i < level; ++i) count_ld *= keep;
    if (count_ld > static_cast<long double>(kMaxIntervals)) {
        throw DomainError("cantor: keep^level exceeds the interval cap");
    }
    const auto count = static_cast<Eigen::Index>(count_ld);

    const double block_len = (b - a) * std::pow(static_cast<double>(base),
                                                -static_cast<double>(level));
    if (!(block_len > 0.0)) throw DomainError("cantor: blocks underflow to zero width");

    Eigen::ArrayXd lefts(count), rights(count);
    Eigen::Index out = 0;
    emit_cantor(a, b, base, keep, level, lefts, rights, out);

    Partition p(std::move(lefts), std::move(rights), Alpha::from_ifs(base, keep), a, b,
                "cantor:" + std::to_string(base) + "," + std::to_string(keep) + "," +
                    std::to_string(level));
    // All retained blocks have identical length (b-a)/base^level; use the
    // canonical value so the self-normalization k^m * w is exact.
    const double w = weight_of(block_len, p.alpha_);
    p.weights_.setConstant(w);
    p.total_weight_ = compensated_sum(p.weights_);
    return p;
}

Partition Partition::random_spacing(double a, double b, Eigen::Index n,
                                    std::uint64_t seed, const Alpha& alpha) {
    check_interval(a, b);
    if (n < 1) throw DomainError("partition: interval count must be >= 1");
    if (n > kMaxIntervals) throw DomainError("partition: interval count too large");

    Rng rng(seed);
    Eigen::ArrayXd raw(n);
    for (Eigen::Index j = 0; j < n; ++j) raw[j] = rng.unit();
    double raw_sum = raw.sum();
    if (!(raw_sum > 0.0)) {
        raw.setOnes();
        raw_sum = static_cast<double>(n);
    }

    const double span = b - a;
    const double floor_spacing = span * 1e-9 / static_cast<double>(n);
    const double free_span = span - static_cast<double>(n) * floor_spacing;

    Eigen::ArrayXd lefts(n), rights(n);
    double t = a;
    for (Eigen::Index j = 0; j < n; ++j) {
        lefts[j] = t;
        t += floor_spacing + free_span * (raw[j] / raw_sum);
        rights[j] = t;
    }
    rights[n - 1] = b;

    return Partition(std::move(lefts), std::move(rights), alpha, a, b,
                     "random:" + std::to_string(n) + "," + std::to_string(seed));
}

std::string Partition::describe_with_interval() const {
    return descriptor_ + "@" + format_double(a_) + "," + format_double(b_);
}

namespace {

template <typename T>
T parse_int_field(std::string_view text, std::size_t& pos, const char* what) {
    T value{};
    const auto* begin = text.data() + pos;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
        throw DomainError(std::string("partition descriptor: expected ") + what);
    }
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
        throw DomainError(std::string("partition descriptor: expected '") + c + "'");
    }
    ++pos;
}

}  // namespace

PartitionSpec PartitionSpec::parse(std::string_view text) {
    PartitionSpec spec;
    std::size_t pos = 0;
    auto starts_with = [&](std::string_view prefix) {
        if (text.substr(0, prefix.size()) == prefix) {
            pos = prefix.size();
            return true;
        }
        return false;
    };

    if (starts_with("uniform:")) {
        spec.kind = Kind::Uniform;
        spec.n = parse_int_field<Eigen::Index>(text, pos, "interval count");
    } else if (starts_with("cantor:")) {
        spec.kind = Kind::Cantor;
        spec.base = parse_int_field<int>(text, pos, "base");
        expect_char(text, pos, ',');
        spec.keep = parse_int_field<int>(text, pos, "keep count");
        expect_char(text, pos, ',');
        spec.level = parse_int_field<int>(text, pos, "level");
    } else if (starts_with("random:")) {
        spec.kind = Kind::Random;
        spec.n = parse_int_field<Eigen::Index>(text, pos, "interval count");
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            spec.seed = parse_int_field<std::uint64_t>(text, pos, "seed");
        }
    } else {
        throw DomainError("partition descriptor: expected uniform:, cantor: or random:");
    }
    if (pos != text.size()) {
        throw DomainError("partition descriptor: trailing characters after position " +
                          std::to_string(pos));
    }
    return spec;
}

std::string PartitionSpec::to_string() const {
    switch (kind) {
        case Kind::Uniform:
            return "uniform:" + std::to_string(n);
        case Kind::Cantor:
            return "cantor:" + std::to_string(base) + "," + std::to_string(keep) + "," +
                   std::to_string(level);
        case Kind::Random:
            return "random:" + std::to_string(n) +
                   (seed ? "," + std::to_string(*seed) : std::string());
    }
    return {};
}

Partition PartitionSpec::build(double a, double b, const std::optional<Alpha>& alpha) const {
    switch (kind) {
        case Kind::Uniform:
            if (!alpha) throw DomainError("uniform partition requires an alpha");
            return Partition::uniform(a, b, n, *alpha);
        case Kind::Cantor: {
            if (alpha) {
                const Alpha forced = Alpha::from_ifs(base, keep);
                if (!alpha->same_as(forced)) {
                    throw DomainError("cantor partition fixes alpha = ln(" +
                                      std::to_string(keep) + ")/ln(" + std::to_string(base) +
                                      ") = " + std::to_string(forced.value()) +
                                      ", which disagrees with the requested alpha");
                }
            }
            return Partition::cantor(base, keep, level, a, b);
        }
        case Kind::Random:
            if (!alpha) throw DomainError("random partition requires an alpha");
            if (!seed) throw DomainError("random partition requires a seed here");
            return Partition::random_spacing(a, b, n, *seed, *alpha);
    }
    throw DomainError("partition descriptor: unknown kind");
}

Alpha Alpha::parse(const std::string& text) {
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        int n = 0, k = 0;
        std::size_t pos = 0;
        n = parse_int_field<int>(text, pos, "ifs base");
        expect_char(text, pos, ',');
        k = parse_int_field<int>(text, pos, "ifs keep count");
        if (pos != text.size()) throw DomainError("alpha: trailing characters in ifs pair");
        return Alpha::from_ifs(n, k);
    }
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty()) {
        throw DomainError("alpha: cannot parse '" + text + "'");
    }
    return Alpha::from_value(v);
}

std::string Alpha::to_string() const {
    if (ifs_) return std::to_string(ifs_->first) + "," + std::to_string(ifs_->second);
    return format_double(value_);
}

}  // namespace lfc
