#pragma once

#include "lfc/inequality.hpp"
#include "lfc/partition.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lfc {

// Random-instance function classes. Classes other than exp-of-random may
// produce values arbitrarily close to (or exactly) zero and are therefore
// substituted in sampling slots that sit under a negative exponent.
enum class FnClass {
    Constant,          // one value in [0.1, 3] everywhere
    FractalPolyNonneg, // degree <= 8, coefficients in [0, 3]
    PiecewiseRandom,   // independent values in [0, 3] per point
    ExpOfRandom,       // exp(u), u in [-3, 3]; bounded away from zero
};

inline constexpr FnClass kAllFnClasses[] = {
    FnClass::Constant,
    FnClass::FractalPolyNonneg,
    FnClass::PiecewiseRandom,
    FnClass::ExpOfRandom,
};

std::string_view fn_class_name(FnClass c);
std::optional<FnClass> fn_class_from_name(std::string_view name);

// Deterministic per seed. The fractal-poly class needs eval points >= 0.
GridFn gen_gridfn(std::uint64_t seed, std::shared_ptr<const Partition> partition,
                  FnClass cls);

// Draws a valid exponent set for the regime; m is the tuple length and is
// only read for regimes C and D (2 <= m <= 40). Conjugacy holds to 1e-12
// by construction and is re-verified by the ExponentSpec factories.
ExponentSpec gen_exponents(std::uint64_t seed, Regime regime, int m = 2);

// Both sides recomputed at 50 significant digits with naive sums, through
// code that shares nothing with the engine's evaluation paths. Partition
// size is capped at 64.
struct OracleSides {
    double lhs;
    double rhs;
};
OracleSides oracle_check(Family family, const std::vector<GridFn>& fs,
                         const ExponentSpec& exps);

struct SuiteConfig {
    std::uint64_t seed = 1;
    std::int64_t cases = 1000;
    std::vector<Family> families;        // defaults to all ten
    std::vector<Alpha> alphas;           // used for non-cantor partitions
    std::vector<PartitionSpec> partitions;
    std::vector<FnClass> classes;
    int m_min = 2, m_max = 4;            // function count for multi families
    double a = 0.0, b = 1.0;

    // All families, alpha in {0.3, 0.5, ln2/ln3, 1}, partitions
    // {uniform:64, cantor:3,2,8, random:64}, all function classes, [0, 1].
    static SuiteConfig defaults();
};

struct VerdictCounts {
    std::int64_t holds = 0;
    std::int64_t equality = 0;
    std::int64_t violated = 0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<std::pair<Family, VerdictCounts>> per_family;  // config order
    VerdictCounts total;
    double min_rel_slack = 0.0;
    std::optional<IneqReport> worst_case;   // the case attaining min_rel_slack
    std::vector<IneqReport> violations;     // full contexts, by case index
    double elapsed_seconds = 0.0;  // measured; deliberately not serialized
};

// Runs cfg.cases independent random checks. Every case is reproducible
// from (cfg.seed, case index) alone; the merge is ordered by case index,
// so the report is identical no matter how many worker threads ran
// (LFC_THREADS caps the worker count). Throws DomainError on invalid
// configs.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace lfc
