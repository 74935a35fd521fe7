#include "cli.hpp"

#include "lfc/calculus.hpp"
#include "lfc/errors.hpp"
#include "lfc/expr.hpp"
#include "lfc/format.hpp"
#include "lfc/grid_fn.hpp"
#include "lfc/harness.hpp"
#include "lfc/inequality.hpp"
#include "lfc/json_io.hpp"
#include "lfc/partition.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lfc::cli {

namespace {

using nlohmann::ordered_json;

Family family_or_throw(const std::string& name) {
    const auto fam = family_from_name(name);
    if (!fam) throw DomainError("unknown family '" + name + "'");
    return *fam;
}

double parse_double_str(const std::string& s, const char* what) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end) {
        throw DomainError(std::string("invalid ") + what + ": '" + s + "'");
    }
    return v;
}

std::pair<double, double> parse_interval(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw DomainError("invalid interval '" + s + "', expected a,b");
    }
    const double a = parse_double_str(s.substr(0, comma), "interval endpoint");
    const double b = parse_double_str(s.substr(comma + 1), "interval endpoint");
    if (!(a < b)) throw DomainError("invalid interval '" + s + "': need a < b");
    return {a, b};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::shared_ptr<const Partition> build_partition(const PartitionSpec& spec, double a, double b,
                                                 const std::optional<Alpha>& alpha) {
    return std::make_shared<const Partition>(spec.build(a, b, alpha));
}

GridFn sample_expr(const std::string& text, const std::shared_ptr<const Partition>& part) {
    const Expr e = Expr::parse(text);
    const Alpha alpha = part->alpha();
    return GridFn::sample(part, [&e, &alpha](double x) { return e.eval(x, alpha); });
}

ordered_json json_array(const Eigen::ArrayXd& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

// ---------------------------------------------------------------- integrate

struct IntegrateFlags {
    std::string expr;
    std::string alpha;
    std::string partition;
    std::string interval = "0,1";
};

int do_integrate(const IntegrateFlags& fl, std::ostream& out) {
    const Alpha alpha = Alpha::parse(fl.alpha);
    const auto [a, b] = parse_interval(fl.interval);
    const auto part = build_partition(PartitionSpec::parse(fl.partition), a, b, alpha);
    const GridFn f = sample_expr(fl.expr, part);
    ordered_json j;
    j["value"] = lf_integral(f);
    j["alpha"] = part->alpha().value();
    j["total_weight"] = part->total_weight();
    j["N"] = static_cast<std::int64_t>(part->size());
    out << dump_json(j);
    return 0;
}

// --------------------------------------------------------------------- diff

struct DiffFlags {
    std::string expr;
    double at = 0.0;
    std::string alpha;
    double h0 = 1e-2;
    double ratio = 0.5;
    int steps = 20;
};

int do_diff(const DiffFlags& fl, std::ostream& out) {
    const Alpha alpha = Alpha::parse(fl.alpha);
    const Expr e = Expr::parse(fl.expr);
    const DerivativeEstimate est =
        lf_derivative_est([&e, &alpha](double x) { return e.eval(x, alpha); }, fl.at, alpha,
                          fl.h0, fl.ratio, fl.steps);
    ordered_json j;
    j["estimate"] = est.estimate;
    j["alpha"] = alpha.value();
    j["at"] = fl.at;
    j["h0"] = fl.h0;
    j["ratio"] = fl.ratio;
    j["quotients"] = json_array(est.quotients);
    j["step_sizes"] = json_array(est.steps);
    out << dump_json(j);
    return 0;
}

// -------------------------------------------------------------------- check

struct CheckFlags {
    std::string family;
    std::string f;
    std::string g;
    std::vector<std::string> fj;
    std::optional<double> p;
    std::optional<double> q;
    std::vector<double> pj;
    std::optional<double> r;
    std::string alpha;
    std::string partition;
    std::string interval = "0,1";
};

ExponentSpec exponents_for(Family fam, const CheckFlags& fl) {
    switch (fam) {
        case Family::Holder:
        case Family::ReverseHolder:
        case Family::Minkowski:
        case Family::ReverseMinkowski:
            if (!fl.p) throw DomainError("--p is required for " + std::string(family_name(fam)));
            return fl.q ? ExponentSpec::conjugate_pair(*fl.p, *fl.q)
                        : ExponentSpec::conjugate_pair(*fl.p);
        case Family::HolderMulti:
        case Family::ReverseHolderMulti:
            if (fl.pj.size() < 2) {
                throw DomainError("--pj is required at least twice for " +
                                  std::string(family_name(fam)));
            }
            return ExponentSpec::tuple(fl.pj);
        case Family::MinkowskiMulti:
        case Family::PowerSum:
            if (!fl.p) throw DomainError("--p is required for " + std::string(family_name(fam)));
            return ExponentSpec::scalar(*fl.p);
        case Family::RadonRatio:
        case Family::RadonRatioMulti:
            if (!fl.p || !fl.r) {
                throw DomainError("--p and --r are required for " +
                                  std::string(family_name(fam)));
            }
            return ExponentSpec::ratio(*fl.p, *fl.r);
    }
    throw DomainError("unknown family");
}

int do_check(const CheckFlags& fl, std::ostream& out) {
    const Family fam = family_or_throw(fl.family);
    const Alpha alpha = Alpha::parse(fl.alpha);
    const auto [a, b] = parse_interval(fl.interval);
    const auto part = build_partition(PartitionSpec::parse(fl.partition), a, b, alpha);
    const ExponentSpec exps = exponents_for(fam, fl);

    const IneqReport rep = [&] {
        if (is_pair_family(fam)) {
            if (fl.f.empty() || fl.g.empty()) {
                throw DomainError("--f and --g are required for " +
                                  std::string(family_name(fam)));
            }
            return check_pair(fam, sample_expr(fl.f, part), sample_expr(fl.g, part), exps);
        }
        if (fl.fj.size() < 2) {
            throw DomainError("--fj is required at least twice for " +
                              std::string(family_name(fam)));
        }
        std::vector<GridFn> fs;
        fs.reserve(fl.fj.size());
        for (const std::string& text : fl.fj) fs.push_back(sample_expr(text, part));
        return check_multi(fam, fs, exps);
    }();

    out << dump_json(to_ordered_json(rep));
    return rep.verdict == Verdict::Violated ? 1 : 0;
}

// -------------------------------------------------------------------- suite

struct SuiteFlags {
    std::uint64_t seed = 1;
    std::int64_t cases = 1000;
    std::string families;  // comma-separated names; empty = all
    std::string out_path;
};

int do_suite(const SuiteFlags& fl, std::ostream& err) {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.seed = fl.seed;
    cfg.cases = fl.cases;
    if (!fl.families.empty()) {
        cfg.families.clear();
        for (const std::string& name : split(fl.families, ',')) {
            cfg.families.push_back(family_or_throw(name));
        }
    }
    const SuiteReport rep = run_suite(cfg);

    std::ofstream ofs(fl.out_path, std::ios::binary);
    if (!ofs) throw DomainError("cannot open output file '" + fl.out_path + "'");
    ofs << dump_json(to_ordered_json(rep));
    if (!ofs.flush()) throw DomainError("failed writing '" + fl.out_path + "'");

    for (std::size_t k = 0; k < rep.violations.size(); ++k) {
        const std::string path = fl.out_path + ".violation-" + std::to_string(k) + ".json";
        std::ofstream vfs(path, std::ios::binary);
        if (!vfs) throw DomainError("cannot open output file '" + path + "'");
        vfs << dump_json(to_ordered_json(rep.violations[k]));
        if (!vfs.flush()) throw DomainError("failed writing '" + path + "'");
    }

    err << "suite: " << rep.config.cases << " cases, " << rep.total.violated << " violated, "
        << rep.total.equality << " within equality tolerance, min rel_slack "
        << format_double(rep.min_rel_slack) << ", " << format_double(rep.elapsed_seconds)
        << "s\n";
    return rep.total.violated > 0 ? 1 : 0;
}

// -------------------------------------------------------------------- sweep

struct SweepFlags {
    std::string family;
    std::string param;
    std::string range;   // lo:hi:steps
    std::string values;  // semicolon-separated
    std::string f;
    std::string g;
    std::vector<std::string> fj;
    std::optional<double> p;
    std::optional<double> q;
    std::vector<double> pj;
    std::optional<double> r;
    std::string alpha;
    std::string partition;
    std::string interval = "0,1";
    std::string out_path;  // empty = stdout
};

std::vector<double> range_values(const std::string& range) {
    const std::vector<std::string> parts = split(range, ':');
    if (parts.size() != 3) {
        throw DomainError("invalid range '" + range + "', expected lo:hi:steps");
    }
    const double lo = parse_double_str(parts[0], "range bound");
    const double hi = parse_double_str(parts[1], "range bound");
    long steps = 0;
    {
        const char* end = parts[2].data() + parts[2].size();
        auto [p, ec] = std::from_chars(parts[2].data(), end, steps);
        if (ec != std::errc{} || p != end || steps < 1) {
            throw DomainError("invalid range step count '" + parts[2] + "'");
        }
    }
    std::vector<double> vals(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i) {
        vals[static_cast<std::size_t>(i)] =
            steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return vals;
}

std::vector<std::string> value_items(const std::string& values) {
    std::vector<std::string> items = split(values, ';');
    for (const std::string& item : items) {
        if (item.empty()) throw DomainError("empty item in --values list");
    }
    return items;
}

// One evaluated sweep row; rows are sorted by the param column before output.
struct SweepRow {
    double param;
    IneqReport report;
};

ExponentSpec sweep_exponents(Family fam, const SweepFlags& fl, double pv) {
    switch (fam) {
        case Family::Holder:
        case Family::ReverseHolder:
        case Family::Minkowski:
        case Family::ReverseMinkowski:
            return ExponentSpec::conjugate_pair(pv);
        case Family::MinkowskiMulti:
        case Family::PowerSum:
            return ExponentSpec::scalar(pv);
        case Family::RadonRatio:
        case Family::RadonRatioMulti:
            if (!fl.r) throw DomainError("--r is required when sweeping p for " +
                                         std::string(family_name(fam)));
            return ExponentSpec::ratio(pv, *fl.r);
        case Family::HolderMulti:
        case Family::ReverseHolderMulti:
            break;
    }
    throw DomainError("parameter p does not apply to " + std::string(family_name(fam)) +
                      " (exponents form a tuple; sweep alpha or level instead)");
}

IneqReport sweep_case(Family fam, const SweepFlags& fl,
                      const std::shared_ptr<const Partition>& part, const ExponentSpec& exps) {
    if (is_pair_family(fam)) {
        if (fl.f.empty() || fl.g.empty()) {
            throw DomainError("--f and --g are required for " + std::string(family_name(fam)));
        }
        return check_pair(fam, sample_expr(fl.f, part), sample_expr(fl.g, part), exps);
    }
    if (fl.fj.size() < 2) {
        throw DomainError("--fj is required at least twice for " +
                          std::string(family_name(fam)));
    }
    std::vector<GridFn> fs;
    fs.reserve(fl.fj.size());
    for (const std::string& text : fl.fj) fs.push_back(sample_expr(text, part));
    return check_multi(fam, fs, exps);
}

int do_sweep(const SweepFlags& fl, std::ostream& out) {
    const Family fam = family_or_throw(fl.family);
    const auto [a, b] = parse_interval(fl.interval);
    const PartitionSpec base_spec = PartitionSpec::parse(fl.partition);
    if (fl.range.empty() == fl.values.empty()) {
        throw DomainError("exactly one of --range or --values is required");
    }

    std::vector<SweepRow> rows;
    if (fl.param == "p") {
        std::vector<double> pvals;
        if (!fl.range.empty()) {
            pvals = range_values(fl.range);
        } else {
            for (const std::string& item : value_items(fl.values)) {
                pvals.push_back(parse_double_str(item, "p value"));
            }
        }
        if (fl.alpha.empty()) throw DomainError("--alpha is required when sweeping p");
        const Alpha alpha = Alpha::parse(fl.alpha);
        const auto part = build_partition(base_spec, a, b, alpha);
        // Exponent specs for every row are constructed before any evaluation,
        // so an out-of-regime range fails the whole sweep instead of
        // emitting a partial table.
        std::vector<ExponentSpec> specs;
        specs.reserve(pvals.size());
        for (double pv : pvals) specs.push_back(sweep_exponents(fam, fl, pv));
        for (std::size_t i = 0; i < pvals.size(); ++i) {
            rows.push_back(SweepRow{pvals[i], sweep_case(fam, fl, part, specs[i])});
        }
    } else if (fl.param == "alpha") {
        std::vector<Alpha> alphas;
        if (!fl.range.empty()) {
            for (double v : range_values(fl.range)) alphas.push_back(Alpha::from_value(v));
        } else {
            for (const std::string& item : value_items(fl.values)) {
                alphas.push_back(Alpha::parse(item));
            }
        }
        const CheckFlags fixed{fl.family, fl.f, fl.g, fl.fj, fl.p,       fl.q,
                               fl.pj,     fl.r, "",   "",    fl.interval};
        const ExponentSpec exps = exponents_for(fam, fixed);
        for (const Alpha& alpha : alphas) {
            PartitionSpec spec = base_spec;
            if (spec.kind == PartitionSpec::Kind::Cantor) {
                const auto ifs = alpha.ifs_origin();
                if (!ifs) {
                    throw DomainError(
                        "alpha sweeps over cantor partitions need n,k values (e.g. 3,2), got " +
                        alpha.to_string());
                }
                spec.base = ifs->first;
                spec.keep = ifs->second;
            }
            const auto part = build_partition(spec, a, b, alpha);
            rows.push_back(SweepRow{alpha.value(), sweep_case(fam, fl, part, exps)});
        }
    } else if (fl.param == "level") {
        if (base_spec.kind != PartitionSpec::Kind::Cantor) {
            throw DomainError("level sweeps require a cantor partition descriptor");
        }
        std::vector<long> levels;
        if (!fl.range.empty()) {
            for (double v : range_values(fl.range)) levels.push_back(std::lround(v));
        } else {
            for (const std::string& item : value_items(fl.values)) {
                levels.push_back(std::lround(parse_double_str(item, "level value")));
            }
        }
        const std::optional<Alpha> alpha =
            fl.alpha.empty() ? std::nullopt : std::optional<Alpha>(Alpha::parse(fl.alpha));
        const CheckFlags fixed{fl.family, fl.f, fl.g, fl.fj, fl.p,       fl.q,
                               fl.pj,     fl.r, "",   "",    fl.interval};
        const ExponentSpec exps = exponents_for(fam, fixed);
        for (long level : levels) {
            if (level < 0) throw DomainError("level must be nonnegative");
            PartitionSpec spec = base_spec;
            spec.level = static_cast<int>(level);
            const auto part = build_partition(spec, a, b, alpha);
            rows.push_back(SweepRow{static_cast<double>(level), sweep_case(fam, fl, part, exps)});
        }
    } else {
        throw DomainError("unknown sweep parameter '" + fl.param + "', expected p, alpha or level");
    }

    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& x, const SweepRow& y) { return x.param < y.param; });

    std::string csv = "param,lhs,rhs,slack,rel_slack,verdict\n";
    bool violated = false;
    for (const SweepRow& row : rows) {
        const IneqReport& r = row.report;
        csv += format_double(row.param);
        csv += ',';
        csv += format_double(r.lhs);
        csv += ',';
        csv += format_double(r.rhs);
        csv += ',';
        csv += format_double(r.slack);
        csv += ',';
        csv += format_double(r.rel_slack);
        csv += ',';
        csv += verdict_name(r.verdict);
        csv += '\n';
        violated = violated || r.verdict == Verdict::Violated;
    }

    if (fl.out_path.empty()) {
        out << csv;
    } else {
        std::ofstream ofs(fl.out_path, std::ios::binary);
        if (!ofs) throw DomainError("cannot open output file '" + fl.out_path + "'");
        ofs << csv;
        if (!ofs.flush()) throw DomainError("failed writing '" + fl.out_path + "'");
    }
    return violated ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-resolution local fractional calculus toolkit"};
    app.name("lfc");
    app.require_subcommand(1);

    IntegrateFlags it;
    CLI::App* integrate = app.add_subcommand("integrate", "Integrate an expression");
    integrate->add_option("--expr", it.expr, "expression in x ('a' is the order alpha)")
        ->required();
    integrate->add_option("--alpha", it.alpha, "order in (0,1]: a real or an n,k pair")
        ->required();
    integrate
        ->add_option("--partition", it.partition,
                     "uniform:N | cantor:n,k,m | random:N,seed")
        ->required();
    integrate->add_option("--interval", it.interval, "endpoints a,b (default 0,1)");

    DiffFlags df;
    CLI::App* diff = app.add_subcommand("diff", "Estimate a local fractional derivative");
    diff->add_option("--expr", df.expr, "expression in x ('a' is the order alpha)")->required();
    diff->add_option("--at", df.at, "evaluation point x0")->required();
    diff->add_option("--alpha", df.alpha, "order in (0,1]: a real or an n,k pair")->required();
    diff->add_option("--h0", df.h0, "initial step (default 1e-2)");
    diff->add_option("--ratio", df.ratio, "step shrink ratio in (0,1) (default 0.5)");
    diff->add_option("--steps", df.steps, "number of difference quotients (default 20)");

    CheckFlags ck;
    CLI::App* check = app.add_subcommand("check", "Check one inequality instance");
    check->add_option("--family", ck.family, "inequality family name")->required();
    check->add_option("--f", ck.f, "first expression (pair families)");
    check->add_option("--g", ck.g, "second expression (pair families)");
    check->add_option("--fj", ck.fj, "expression list (multi families; repeat the flag)");
    check->add_option("--p", ck.p, "primary exponent");
    check->add_option("--q", ck.q, "conjugate exponent (optional, derived from p otherwise)");
    check->add_option("--pj", ck.pj, "exponent tuple (repeat the flag)");
    check->add_option("--r", ck.r, "denominator exponent for ratio families");
    check->add_option("--alpha", ck.alpha, "order in (0,1]: a real or an n,k pair")->required();
    check
        ->add_option("--partition", ck.partition,
                     "uniform:N | cantor:n,k,m | random:N,seed")
        ->required();
    check->add_option("--interval", ck.interval, "endpoints a,b (default 0,1)");

    SuiteFlags st;
    CLI::App* suite = app.add_subcommand("suite", "Run a randomized check suite");
    suite->add_option("--seed", st.seed, "suite seed (default 1)");
    suite->add_option("--cases", st.cases, "number of cases (default 1000)");
    suite->add_option("--families", st.families,
                      "comma-separated family names (default: all)");
    suite->add_option("--out", st.out_path, "report file path")->required();

    SweepFlags sw;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter, emit CSV");
    sweep->add_option("--family", sw.family, "inequality family name")->required();
    sweep->add_option("--param", sw.param, "p | alpha | level")->required();
    sweep->add_option("--range", sw.range, "lo:hi:steps, endpoints included");
    sweep->add_option("--values", sw.values,
                      "semicolon-separated values (alpha accepts n,k items)");
    sweep->add_option("--f", sw.f, "first expression (pair families)");
    sweep->add_option("--g", sw.g, "second expression (pair families)");
    sweep->add_option("--fj", sw.fj, "expression list (multi families; repeat the flag)");
    sweep->add_option("--p", sw.p, "fixed primary exponent (alpha/level sweeps)");
    sweep->add_option("--q", sw.q, "fixed conjugate exponent");
    sweep->add_option("--pj", sw.pj, "fixed exponent tuple (repeat the flag)");
    sweep->add_option("--r", sw.r, "fixed denominator exponent for ratio families");
    sweep->add_option("--alpha", sw.alpha, "fixed order (p/level sweeps)");
    sweep
        ->add_option("--partition", sw.partition,
                     "uniform:N | cantor:n,k,m | random:N,seed")
        ->required();
    sweep->add_option("--interval", sw.interval, "endpoints a,b (default 0,1)");
    sweep->add_option("--out", sw.out_path, "CSV file path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*integrate) return do_integrate(it, out);
        if (*diff) return do_diff(df, out);
        if (*check) return do_check(ck, out);
        if (*suite) return do_suite(st, err);
        if (*sweep) return do_sweep(sw, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace lfc::cli
