#pragma once

#include "lfc/errors.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace lfc {

// Fractal order in (0, 1]. Either given explicitly or derived from an
// iterated-function-system pair (n, k) as ln k / ln n, the similarity
// dimension of the keep-k-of-n interval construction. The origin is kept
// so a Cantor partition can insist on its own exact order.
class Alpha {
public:
    static Alpha from_value(double v) {
        if (!(v > 0.0) || !(v <= 1.0) || !std::isfinite(v)) {
            throw DomainError("alpha: value " + std::to_string(v) + " outside (0, 1]");
        }
        return Alpha(v, std::nullopt);
    }

    static Alpha from_ifs(int n, int k) {
        if (n < 2 || k < 1 || k >= n) {
            throw DomainError("alpha: ifs pair requires n >= 2 and 1 <= k < n");
        }
        const double v = std::log(static_cast<double>(k)) / std::log(static_cast<double>(n));
        if (!(v > 0.0)) {
            throw DomainError("alpha: ifs pair (" + std::to_string(n) + "," +
                              std::to_string(k) + ") gives order 0");
        }
        return Alpha(v, std::make_pair(n, k));
    }

    // Accepts either a real literal ("0.5") or an ifs pair ("3,2").
    static Alpha parse(const std::string& text);

    double value() const { return value_; }
    const std::optional<std::pair<int, int>>& ifs_origin() const { return ifs_; }

    std::string to_string() const;

    bool same_as(const Alpha& other, double tol = 1e-12) const {
        return std::abs(value_ - other.value_) <= tol;
    }

private:
    Alpha(double v, std::optional<std::pair<int, int>> ifs) : value_(v), ifs_(std::move(ifs)) {}

    double value_;
    std::optional<std::pair<int, int>> ifs_;
};

}  // namespace lfc
