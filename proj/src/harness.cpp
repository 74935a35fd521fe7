#include "lfc/harness.hpp"

#include "lfc/errors.hpp"
#include "lfc/fractal_poly.hpp"
#include "lfc/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

namespace lfc {

std::string_view fn_class_name(FnClass c) {
    switch (c) {
        case FnClass::Constant: return "constant";
        case FnClass::FractalPolyNonneg: return "fractal-poly-nonneg";
        case FnClass::PiecewiseRandom: return "piecewise-random";
        case FnClass::ExpOfRandom: return "exp-of-random";
    }
    return "?";
}

std::optional<FnClass> fn_class_from_name(std::string_view name) {
    for (FnClass c : kAllFnClasses) {
        if (fn_class_name(c) == name) return c;
    }
    return std::nullopt;
}

GridFn gen_gridfn(std::uint64_t seed, std::shared_ptr<const Partition> partition,
                  FnClass cls) {
    if (!partition) throw DomainError("gen_gridfn: null partition");
    Rng rng(seed);
    const Eigen::Index n = partition->size();
    Eigen::ArrayXd values(n);
    switch (cls) {
        case FnClass::Constant: {
            values.setConstant(rng.uniform(0.1, 3.0));
            break;
        }
        case FnClass::FractalPolyNonneg: {
            const int degree = rng.uniform_int(0, 8);
            Eigen::ArrayXd coeffs(degree + 1);
            for (int k = 0; k <= degree; ++k) coeffs[k] = rng.uniform(0.0, 3.0);
            const FractalPoly poly(partition->alpha(), std::move(coeffs));
            const Eigen::ArrayXd& xs = partition->eval_points();
            for (Eigen::Index i = 0; i < n; ++i) values[i] = fp_eval(poly, xs[i]);
            break;
        }
        case FnClass::PiecewiseRandom: {
            for (Eigen::Index i = 0; i < n; ++i) values[i] = rng.uniform(0.0, 3.0);
            break;
        }
        case FnClass::ExpOfRandom: {
            for (Eigen::Index i = 0; i < n; ++i)
                values[i] = std::exp(rng.uniform(-3.0, 3.0));
            break;
        }
    }
    return GridFn::from_values(std::move(partition), std::move(values));
}

namespace {

// Simplex weights u_1..u_m with sum 1 and every entry >= floor.
std::vector<double> simplex_with_floor(Rng& rng, int m, double floor) {
    std::vector<double> raw(static_cast<std::size_t>(m));
    double total = 0.0;
    for (double& g : raw) {
        g = rng.uniform(1e-6, 1.0);
        total += g;
    }
    const double free_mass = 1.0 - floor * m;
    for (double& g : raw) g = floor + free_mass * (g / total);
    return raw;
}

}  // namespace

ExponentSpec gen_exponents(std::uint64_t seed, Regime regime, int m) {
    Rng rng(seed);
    switch (regime) {
        case Regime::A:
            return ExponentSpec::conjugate_pair(rng.uniform(1.05, 8.0));
        case Regime::B:
            return ExponentSpec::conjugate_pair(rng.uniform(0.05, 0.95));
        case Regime::C: {
            if (m < 2 || m > 40) throw DomainError("gen_exponents: m out of range");
            const std::vector<double> u = simplex_with_floor(rng, m, 0.02);
            std::vector<double> ps(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) ps[j] = 1.0 / u[j];
            return ExponentSpec::tuple(std::move(ps));
        }
        case Regime::D: {
            if (m < 2 || m > 40) throw DomainError("gen_exponents: m out of range");
            const double p1 = rng.uniform(0.1, 0.9);
            const double shared = 1.0 - 1.0 / p1;  // negative mass for j >= 2
            const std::vector<double> v = simplex_with_floor(rng, m - 1, 0.02);
            std::vector<double> ps(static_cast<std::size_t>(m));
            ps[0] = p1;
            for (int j = 1; j < m; ++j) ps[j] = 1.0 / (shared * v[j - 1]);
            return ExponentSpec::tuple(std::move(ps));
        }
        case Regime::R: {
            const double r = rng.uniform(0.1, 0.9);
            const double p = rng.uniform(1.1, 6.0);
            return ExponentSpec::ratio(p, r);
        }
    }
    throw DomainError("gen_exponents: unknown regime");
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig cfg;
    cfg.families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
    cfg.alphas = {Alpha::from_value(0.3), Alpha::from_value(0.5), Alpha::from_ifs(3, 2),
                  Alpha::from_value(1.0)};
    cfg.partitions = {PartitionSpec::parse("uniform:64"), PartitionSpec::parse("cantor:3,2,8"),
                      PartitionSpec::parse("random:64")};
    cfg.classes.assign(std::begin(kAllFnClasses), std::end(kAllFnClasses));
    return cfg;
}

namespace {

bool is_multi(Family f) { return !is_pair_family(f); }

// Slots whose samples sit under a negative exponent must stay clear of
// zero; classes that cannot guarantee that are swapped for exp-of-random
// (constants are already bounded below by 0.1).
FnClass floor_safe(FnClass cls) {
    if (cls == FnClass::Constant || cls == FnClass::ExpOfRandom) return cls;
    return FnClass::ExpOfRandom;
}

void validate(const SuiteConfig& cfg) {
    if (cfg.cases < 1) throw DomainError("suite config: cases must be >= 1");
    if (cfg.families.empty()) throw DomainError("suite config: no families");
    if (cfg.alphas.empty()) throw DomainError("suite config: no alpha values");
    if (cfg.partitions.empty()) throw DomainError("suite config: no partitions");
    if (cfg.classes.empty()) throw DomainError("suite config: no function classes");
    if (!(cfg.a < cfg.b)) throw DomainError("suite config: invalid interval");
    if (cfg.m_min < 2 || cfg.m_max < cfg.m_min || cfg.m_max > 40) {
        throw DomainError("suite config: m range must satisfy 2 <= m_min <= m_max <= 40");
    }
    if (cfg.a < 0.0) {
        for (FnClass c : cfg.classes) {
            if (c == FnClass::FractalPolyNonneg) {
                throw DomainError("suite config: fractal-poly class needs interval start "
                                  ">= 0");
            }
        }
    }
}

// One fully reproducible case. Every random draw comes from a single Rng
// seeded by case_seed(suite seed, index), in a fixed order; changing the
// order would silently re-key every suite, so treat it as frozen.
IneqReport run_case(const SuiteConfig& cfg, std::uint64_t index) {
    Rng rng(case_seed(cfg.seed, index));

    const Family family = cfg.families[rng.index(cfg.families.size())];
    PartitionSpec spec = cfg.partitions[rng.index(cfg.partitions.size())];

    std::optional<Alpha> alpha;
    if (spec.kind == PartitionSpec::Kind::Cantor) {
        alpha = Alpha::from_ifs(spec.base, spec.keep);  // cantor pins its own order
    } else {
        alpha = cfg.alphas[rng.index(cfg.alphas.size())];
    }
    if (spec.kind == PartitionSpec::Kind::Random && !spec.seed) spec.seed = rng.bits();

    auto part = std::make_shared<const Partition>(spec.build(cfg.a, cfg.b, alpha));

    int m = 2;
    if (is_multi(family)) m = rng.uniform_int(cfg.m_min, cfg.m_max);

    std::optional<ExponentSpec> exps;
    switch (family) {
        case Family::Holder:
        case Family::Minkowski:
            exps = gen_exponents(rng.bits(), Regime::A);
            break;
        case Family::ReverseHolder:
        case Family::ReverseMinkowski:
            exps = gen_exponents(rng.bits(), Regime::B);
            break;
        case Family::HolderMulti:
            exps = gen_exponents(rng.bits(), Regime::C, m);
            break;
        case Family::ReverseHolderMulti:
            exps = gen_exponents(rng.bits(), Regime::D, m);
            break;
        case Family::MinkowskiMulti:
        case Family::PowerSum: {
            // Scalar p, drawn from the regime-A band or the regime-B band
            // by a fair coin so both directions are exercised.
            const bool above_one = rng.bits() & 1u;
            exps = ExponentSpec::scalar(above_one ? rng.uniform(1.05, 8.0)
                                                  : rng.uniform(0.05, 0.95));
            break;
        }
        case Family::RadonRatio:
        case Family::RadonRatioMulti:
            exps = gen_exponents(rng.bits(), Regime::R);
            break;
    }

    auto draw_class = [&] { return cfg.classes[rng.index(cfg.classes.size())]; };

    IneqReport report = [&] {
        if (is_pair_family(family)) {
            FnClass cf = draw_class();
            FnClass cg = draw_class();
            if (family == Family::ReverseHolder) cg = floor_safe(cg);  // q < 0 on g
            const GridFn f = gen_gridfn(rng.bits(), part, cf);
            const GridFn g = gen_gridfn(rng.bits(), part, cg);
            return check_pair(family, f, g, *exps);
        }
        std::vector<GridFn> fs;
        fs.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            FnClass cj = draw_class();
            if (family == Family::ReverseHolderMulti && j >= 1) cj = floor_safe(cj);
            fs.push_back(gen_gridfn(rng.bits(), part, cj));
        }
        return check_multi(family, fs, *exps);
    }();
    report.seed = case_seed(cfg.seed, index);
    return report;
}

std::size_t worker_count(std::int64_t cases) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("LFC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = static_cast<std::size_t>(v);
    }
    n = std::min<std::size_t>(n, 64);
    n = std::min<std::size_t>(n, static_cast<std::size_t>(cases));
    return std::max<std::size_t>(n, 1);
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    const auto total_cases = static_cast<std::size_t>(cfg.cases);
    std::vector<std::optional<IneqReport>> results(total_cases);

    const std::size_t workers = worker_count(cfg.cases);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&](std::size_t first) {
        try {
            for (std::size_t i = first; i < total_cases; i += workers) {
                results[i] = run_case(cfg, i);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(body, t);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    SuiteReport rep;
    rep.config = cfg;
    for (Family f : cfg.families) rep.per_family.emplace_back(f, VerdictCounts{});
    rep.min_rel_slack = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < total_cases; ++i) {
        const IneqReport& r = *results[i];
        VerdictCounts* counts = nullptr;
        for (auto& [fam, c] : rep.per_family) {
            if (fam == r.family) counts = &c;
        }
        switch (r.verdict) {
            case Verdict::Holds:
                ++counts->holds;
                ++rep.total.holds;
                break;
            case Verdict::EqualityWithinTol:
                ++counts->equality;
                ++rep.total.equality;
                break;
            case Verdict::Violated:
                ++counts->violated;
                ++rep.total.violated;
                rep.violations.push_back(r);
                break;
        }
        if (r.rel_slack < rep.min_rel_slack) {
            rep.min_rel_slack = r.rel_slack;
            rep.worst_case = r;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace lfc
