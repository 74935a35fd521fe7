#pragma once

#include "lfc/alpha.hpp"
#include "lfc/grid_fn.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lfc {

// Verdict thresholds. The violation margin leaves ~10^3 headroom over
// worst-case rounding of compensated sums with up to 2^20 terms; the
// equality band is an order of magnitude tighter than the violation band
// so the two cannot overlap.
inline constexpr double kViolationTol = 1e-9;
inline constexpr double kEqualityTol = 1e-10;
// Floor for the rel_slack denominator, so all-zero sides give 0, not 0/0.
inline constexpr double kRelSlackEps = 1e-300;
// Samples raised to a negative exponent must be at least this large.
inline constexpr double kPositivityFloor = 1e-12;

// The certified inequality families. Pair families take (f, g); multi
// families take f_1..f_m.
enum class Family {
    Holder,              // integral of fg  <=  p-norm(f) * q-norm(g), p > 1
    ReverseHolder,       // same sides, >=, for 0 < p < 1 (q < 0)
    HolderMulti,         // m-factor product form, all p_j > 1
    ReverseHolderMulti,  // m-factor product form, 0 < p_1 < 1, p_j < 0
    Minkowski,           // p-norm(f+g) <= p-norm(f) + p-norm(g), p > 1
    ReverseMinkowski,    // >= for 0 < p < 1
    MinkowskiMulti,      // p-norm of a sum vs sum of p-norms, direction by p
    PowerSum,            // integral of (sum f_j)^p vs sum of integrals of f_j^p
    RadonRatio,          // (I[h^p]/I[h^r])^(1/(p-r)) subadditivity, h = f+g
    RadonRatioMulti,     // same with h = sum f_j
};

inline constexpr Family kAllFamilies[] = {
    Family::Holder,          Family::ReverseHolder,   Family::HolderMulti,
    Family::ReverseHolderMulti, Family::Minkowski,    Family::ReverseMinkowski,
    Family::MinkowskiMulti,  Family::PowerSum,        Family::RadonRatio,
    Family::RadonRatioMulti,
};

bool is_pair_family(Family f);
std::string_view family_name(Family f);  // kebab-case tag, e.g. "reverse-holder"
std::optional<Family> family_from_name(std::string_view name);

// Exponent regimes:
//   A: pair p > 1, q = p/(p-1) > 1        B: pair 0 < p < 1, q < 0
//   C: tuple, all p_j > 1, sum 1/p_j = 1  D: tuple, 0 < p_1 < 1, p_j < 0
//   R: ratio pair 0 < r < 1 < p
enum class Regime { A, B, C, D, R };
std::string_view regime_name(Regime r);

// A validated exponent set. Conjugacy constraints (1/p + 1/q = 1, or
// sum 1/p_j = 1) are checked to 1e-12 at construction; the regime tag is
// derived from the signs. Scalar exponents carry no regime.
class ExponentSpec {
public:
    enum class Kind { Pair, Tuple, Scalar, Ratio };

    static ExponentSpec conjugate_pair(double p);            // q = p/(p-1)
    static ExponentSpec conjugate_pair(double p, double q);  // both given, verified
    static ExponentSpec tuple(std::vector<double> ps);       // p_1..p_m, m >= 2
    static ExponentSpec scalar(double p);                    // p > 0
    static ExponentSpec ratio(double p, double r);           // 0 < r < 1 < p

    Kind kind() const { return kind_; }
    std::optional<Regime> regime() const { return regime_; }

    double p() const { return exps_[0]; }  // first exponent, any kind
    double q() const;                      // Pair only
    double r() const;                      // Ratio only

    // The exponents as a flat list: {p, q}, {p_1..p_m}, {p}, or {p, r}.
    const std::vector<double>& exponents() const { return exps_; }

private:
    ExponentSpec(Kind kind, std::vector<double> exps, std::optional<Regime> regime)
        : kind_(kind), exps_(std::move(exps)), regime_(regime) {}

    Kind kind_;
    std::vector<double> exps_;
    std::optional<Regime> regime_;
};

enum class Verdict { Holds, EqualityWithinTol, Violated };
std::string_view verdict_name(Verdict v);

// One evaluated inequality instance. slack is oriented so that a holding
// inequality has slack >= 0 regardless of the family's direction;
// rel_slack = slack / max(|lhs|, |rhs|, kRelSlackEps).
struct IneqReport {
    Family family;
    Alpha alpha;
    std::vector<double> exponents;
    std::string partition;  // descriptor with interval, e.g. "uniform:64@0,1"
    double lhs;
    double rhs;
    double slack;
    double rel_slack;
    Verdict verdict;
    std::uint64_t seed;  // replay seed when harness-generated, else 0
};

// Evaluates a two-function family on f and g (which must share one
// Partition object). Throws RegimeError when the exponents do not match
// the family, PositivityError when a sample under a negative exponent is
// below kPositivityFloor, and DomainError for degenerate ratio
// denominators or non-finite sides.
IneqReport check_pair(Family family, const GridFn& f, const GridFn& g,
                      const ExponentSpec& exps);

// Evaluates an m-function family on fs (m >= 2, shared Partition).
// Error behavior as check_pair.
IneqReport check_multi(Family family, const std::vector<GridFn>& fs,
                       const ExponentSpec& exps);

// Weighted least-squares fit lambda = sum(w f g) / sum(w g g), accepted
// when max_j |f_j - lambda g_j| <= tol * max_j |f_j|. Returns the fitted
// lambda on acceptance, nothing otherwise. g must not be identically
// zero; f and g must share one Partition object.
std::optional<double> proportionality_check(const GridFn& f, const GridFn& g, double tol);

}  // namespace lfc
