#include "lfc/errors.hpp"
#include "lfc/harness.hpp"
#include "lfc/inequality.hpp"
#include "lfc/json_io.hpp"
#include "lfc/partition.hpp"
#include "lfc/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <memory>
#include <vector>

using lfc::Alpha;
using lfc::DomainError;
using lfc::ExponentSpec;
using lfc::Family;
using lfc::FnClass;
using lfc::GridFn;
using lfc::IneqReport;
using lfc::Partition;
using lfc::Regime;
using lfc::SuiteConfig;
using lfc::SuiteReport;
using lfc::Verdict;

namespace {

std::shared_ptr<const Partition> uniform01(Eigen::Index n, double alpha) {
    return std::make_shared<const Partition>(
        Partition::uniform(0.0, 1.0, n, Alpha::from_value(alpha)));
}

}  // namespace

TEST_CASE("class names round-trip") {
    for (FnClass c : lfc::kAllFnClasses) {
        const auto back = lfc::fn_class_from_name(lfc::fn_class_name(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK(!lfc::fn_class_from_name("sine").has_value());
}

TEST_CASE("function generation is deterministic per seed and respects class bounds") {
    const auto part = uniform01(64, 0.5);
    for (FnClass cls : lfc::kAllFnClasses) {
        const GridFn f1 = lfc::gen_gridfn(987, part, cls);
        const GridFn f2 = lfc::gen_gridfn(987, part, cls);
        const GridFn f3 = lfc::gen_gridfn(988, part, cls);
        REQUIRE(f1.size() == 64);
        bool identical = true;
        bool differs = false;
        for (Eigen::Index j = 0; j < 64; ++j) {
            identical = identical && f1.values()[j] == f2.values()[j];
            differs = differs || f1.values()[j] != f3.values()[j];
            CHECK(f1.values()[j] >= 0.0);
        }
        CHECK(identical);
        CHECK(differs);
    }

    const GridFn c = lfc::gen_gridfn(5, part, FnClass::Constant);
    for (Eigen::Index j = 1; j < c.size(); ++j) CHECK(c.values()[j] == c.values()[0]);
    CHECK(c.values()[0] >= 0.1);
    CHECK(c.values()[0] <= 3.0);

    const GridFn e = lfc::gen_gridfn(6, part, FnClass::ExpOfRandom);
    for (Eigen::Index j = 0; j < e.size(); ++j) {
        CHECK(e.values()[j] >= std::exp(-3.0));
        CHECK(e.values()[j] <= std::exp(3.0));
    }

    const GridFn p = lfc::gen_gridfn(7, part, FnClass::PiecewiseRandom);
    for (Eigen::Index j = 0; j < p.size(); ++j) CHECK(p.values()[j] <= 3.0);
}

TEST_CASE("exponent generation satisfies each regime's constraints") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const ExponentSpec a = lfc::gen_exponents(seed, Regime::A);
        CHECK(a.p() >= 1.05);
        CHECK(a.p() <= 8.0);
        CHECK(std::abs(1.0 / a.p() + 1.0 / a.q() - 1.0) <= 1e-12);

        const ExponentSpec b = lfc::gen_exponents(seed, Regime::B);
        CHECK(b.p() >= 0.05);
        CHECK(b.p() <= 0.95);
        CHECK(b.q() < 0.0);
        CHECK(std::abs(1.0 / b.p() + 1.0 / b.q() - 1.0) <= 1e-12);

        const ExponentSpec c = lfc::gen_exponents(seed, Regime::C, 4);
        REQUIRE(c.exponents().size() == 4);
        double inv = 0.0;
        for (double pj : c.exponents()) {
            CHECK(pj > 1.0);
            CHECK(pj <= 50.0);  // simplex floor 0.02
            inv += 1.0 / pj;
        }
        CHECK(std::abs(inv - 1.0) <= 1e-12);

        const ExponentSpec d = lfc::gen_exponents(seed, Regime::D, 3);
        REQUIRE(d.exponents().size() == 3);
        CHECK(d.exponents()[0] > 0.0);
        CHECK(d.exponents()[0] < 1.0);
        inv = 1.0 / d.exponents()[0];
        for (std::size_t j = 1; j < 3; ++j) {
            CHECK(d.exponents()[j] < 0.0);
            inv += 1.0 / d.exponents()[j];
        }
        CHECK(std::abs(inv - 1.0) <= 1e-12);

        const ExponentSpec r = lfc::gen_exponents(seed, Regime::R);
        CHECK(r.p() >= 1.1);
        CHECK(r.p() <= 6.0);
        CHECK(r.r() >= 0.1);
        CHECK(r.r() <= 0.9);
    }
    CHECK_THROWS_AS(lfc::gen_exponents(1, Regime::C, 1), DomainError);
    CHECK_THROWS_AS(lfc::gen_exponents(1, Regime::D, 41), DomainError);
}

namespace {

Regime regime_for(Family f) {
    switch (f) {
        case Family::Holder:
        case Family::Minkowski: return Regime::A;
        case Family::ReverseHolder:
        case Family::ReverseMinkowski: return Regime::B;
        case Family::HolderMulti: return Regime::C;
        case Family::ReverseHolderMulti: return Regime::D;
        case Family::RadonRatio:
        case Family::RadonRatioMulti: return Regime::R;
        default: break;
    }
    return Regime::A;  // scalar families draw their exponent directly
}

struct DrawnCase {
    Family family;
    std::vector<GridFn> fs;
    ExponentSpec exps;
    IneqReport engine;
};

// Mirrors the suite's construction on partitions small enough for the
// oracle: every slot under a negative exponent gets the bounded class.
DrawnCase draw_small_case(std::uint64_t seed) {
    lfc::Rng rng(seed);
    const Family fam = lfc::kAllFamilies[rng.index(10)];

    std::shared_ptr<const Partition> part;
    switch (rng.index(3)) {
        case 0:
            part = uniform01(6, rng.uniform(0.15, 1.0));
            break;
        case 1:
            part = std::make_shared<const Partition>(Partition::random_spacing(
                0.0, 1.0, 7, rng.bits(), Alpha::from_value(rng.uniform(0.15, 1.0))));
            break;
        default:
            part = std::make_shared<const Partition>(Partition::cantor(3, 2, 2, 0.0, 1.0));
            break;
    }

    const bool pair = lfc::is_pair_family(fam);
    const int m = pair ? 2 : 2 + static_cast<int>(rng.index(2));
    const auto exps = [&]() -> ExponentSpec {
        if (fam == Family::MinkowskiMulti || fam == Family::PowerSum) {
            return (rng.bits() & 1) ? ExponentSpec::scalar(rng.uniform(1.05, 8.0))
                                    : ExponentSpec::scalar(rng.uniform(0.05, 0.95));
        }
        return lfc::gen_exponents(rng.bits(), regime_for(fam), m);
    }();

    std::vector<GridFn> fs;
    for (int j = 0; j < m; ++j) {
        FnClass cls = lfc::kAllFnClasses[rng.index(4)];
        const bool negative_slot =
            (fam == Family::ReverseHolder && j == 1) ||
            (fam == Family::ReverseHolderMulti && j >= 1);
        if (negative_slot && cls != FnClass::Constant && cls != FnClass::ExpOfRandom) {
            cls = FnClass::ExpOfRandom;
        }
        fs.push_back(lfc::gen_gridfn(rng.bits(), part, cls));
    }

    IneqReport rep = pair ? lfc::check_pair(fam, fs[0], fs[1], exps)
                          : lfc::check_multi(fam, fs, exps);
    return DrawnCase{fam, std::move(fs), exps, std::move(rep)};
}

}  // namespace

TEST_CASE("oracle recomputes the trivial instance exactly") {
    const auto part = uniform01(8, 0.5);
    const GridFn one = GridFn::from_values(part, Eigen::ArrayXd::Ones(8));
    const auto sides =
        lfc::oracle_check(Family::Holder, {one, one}, ExponentSpec::conjugate_pair(2.0));
    CHECK(sides.lhs == doctest::Approx(part->total_weight()).epsilon(1e-15));
    CHECK(sides.rhs == doctest::Approx(part->total_weight()).epsilon(1e-15));
}

TEST_CASE("oracle rejects partitions above the size cap") {
    const auto part = uniform01(65, 0.5);
    const GridFn one = GridFn::from_values(part, Eigen::ArrayXd::Ones(65));
    CHECK_THROWS_AS(
        lfc::oracle_check(Family::Holder, {one, one}, ExponentSpec::conjugate_pair(2.0)),
        DomainError);
}

TEST_CASE("engine sides agree with the oracle across families") {
    int checked = 0;
    for (std::uint64_t i = 0; i < 120; ++i) {
        const DrawnCase c = draw_small_case(lfc::case_seed(404, i));
        const auto sides = lfc::oracle_check(c.family, c.fs, c.exps);
        const double ltol =
            1e-12 * std::max({std::abs(sides.lhs), std::abs(c.engine.lhs), 1e-300});
        const double rtol =
            1e-12 * std::max({std::abs(sides.rhs), std::abs(c.engine.rhs), 1e-300});
        CHECK(std::abs(c.engine.lhs - sides.lhs) <= ltol);
        CHECK(std::abs(c.engine.rhs - sides.rhs) <= rtol);

        // Extended precision must also confirm the direction itself.
        const bool ge = c.family == Family::ReverseHolder ||
                        c.family == Family::ReverseHolderMulti ||
                        c.family == Family::ReverseMinkowski ||
                        (c.family == Family::MinkowskiMulti && c.exps.p() < 1.0) ||
                        (c.family == Family::PowerSum && c.exps.p() > 1.0);
        const double slack = ge ? sides.lhs - sides.rhs : sides.rhs - sides.lhs;
        CHECK(slack >= -1e-25 * std::max(std::abs(sides.lhs), std::abs(sides.rhs)));
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("suite runs are deterministic and schedule-independent") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.seed = 2026;
    cfg.cases = 150;

    const SuiteReport r1 = lfc::run_suite(cfg);
    const SuiteReport r2 = lfc::run_suite(cfg);
    CHECK(lfc::dump_json(lfc::to_ordered_json(r1)) == lfc::dump_json(lfc::to_ordered_json(r2)));

    setenv("LFC_THREADS", "3", 1);
    const SuiteReport r3 = lfc::run_suite(cfg);
    unsetenv("LFC_THREADS");
    CHECK(lfc::dump_json(lfc::to_ordered_json(r1)) == lfc::dump_json(lfc::to_ordered_json(r3)));

    CHECK(r1.total.holds + r1.total.equality + r1.total.violated == 150);
    CHECK(r1.total.violated == 0);
    CHECK(r1.min_rel_slack >= -lfc::kViolationTol);
    REQUIRE(r1.worst_case.has_value());
    CHECK(r1.worst_case->rel_slack == r1.min_rel_slack);
    std::int64_t per_family_total = 0;
    for (const auto& [fam, counts] : r1.per_family) {
        per_family_total += counts.holds + counts.equality + counts.violated;
    }
    CHECK(per_family_total == 150);
    CHECK(r1.elapsed_seconds > 0.0);
}

TEST_CASE("every case replays from (suite seed, index) alone") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.seed = 31337;
    cfg.cases = 40;
    const SuiteReport rep = lfc::run_suite(cfg);
    REQUIRE(rep.worst_case.has_value());
    // The worst case's seed must be derivable from the suite seed and some
    // index below `cases`.
    bool found = false;
    for (std::int64_t i = 0; i < cfg.cases; ++i) {
        found = found || lfc::case_seed(cfg.seed, static_cast<std::uint64_t>(i)) ==
                             rep.worst_case->seed;
    }
    CHECK(found);
}

TEST_CASE("suite configs are validated before any work") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.cases = 0;
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    cfg = SuiteConfig::defaults();
    cfg.families.clear();
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    cfg = SuiteConfig::defaults();
    cfg.alphas.clear();
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    cfg = SuiteConfig::defaults();
    cfg.partitions.clear();
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    cfg = SuiteConfig::defaults();
    cfg.m_min = 5;
    cfg.m_max = 4;
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    cfg = SuiteConfig::defaults();
    cfg.a = 1.0;
    cfg.b = 0.0;
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);

    // The fractal-poly class needs nonnegative evaluation points.
    cfg = SuiteConfig::defaults();
    cfg.a = -1.0;
    cfg.b = 1.0;
    CHECK_THROWS_AS(lfc::run_suite(cfg), DomainError);
}

TEST_CASE("report serialization has the documented key order") {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.cases = 5;
    const SuiteReport rep = lfc::run_suite(cfg);
    const auto j = lfc::to_ordered_json(rep);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> expected = {"config",         "per_family", "total",
                                               "min_rel_slack",  "worst_case", "violations"};
    CHECK(keys == expected);

    REQUIRE(rep.worst_case.has_value());
    const auto wj = lfc::to_ordered_json(*rep.worst_case);
    keys.clear();
    for (auto it = wj.begin(); it != wj.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> report_keys = {"family", "alpha",     "exponents",
                                                  "partition", "lhs",    "rhs",
                                                  "slack",  "rel_slack", "verdict",
                                                  "seed"};
    CHECK(keys == report_keys);
}
