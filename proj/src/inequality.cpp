#include "lfc/inequality.hpp"

#include "lfc/errors.hpp"
#include "lfc/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lfc {

bool is_pair_family(Family f) {
    switch (f) {
        case Family::Holder:
        case Family::ReverseHolder:
        case Family::Minkowski:
        case Family::ReverseMinkowski:
        case Family::RadonRatio:
            return true;
        default:
            return false;
    }
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Holder: return "holder";
        case Family::ReverseHolder: return "reverse-holder";
        case Family::HolderMulti: return "holder-multi";
        case Family::ReverseHolderMulti: return "reverse-holder-multi";
        case Family::Minkowski: return "minkowski";
        case Family::ReverseMinkowski: return "reverse-minkowski";
        case Family::MinkowskiMulti: return "minkowski-multi";
        case Family::PowerSum: return "power-sum";
        case Family::RadonRatio: return "radon-ratio";
        case Family::RadonRatioMulti: return "radon-ratio-multi";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::B: return "B";
        case Regime::C: return "C";
        case Regime::D: return "D";
        case Regime::R: return "R";
    }
    return "?";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::EqualityWithinTol: return "EqualityWithinTol";
        case Verdict::Violated: return "Violated";
    }
    return "?";
}

namespace {

constexpr double kConjugacyTol = 1e-12;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string("exponents: non-finite ") + what);
}

}  // namespace

ExponentSpec ExponentSpec::conjugate_pair(double p) {
    require_finite(p, "p");
    if (p == 1.0) throw RegimeError("exponents: p = 1 has no finite conjugate");
    return conjugate_pair(p, p / (p - 1.0));
}

ExponentSpec ExponentSpec::conjugate_pair(double p, double q) {
    require_finite(p, "p");
    require_finite(q, "q");
    if (p == 0.0 || q == 0.0 || std::abs(1.0 / p + 1.0 / q - 1.0) > kConjugacyTol) {
        throw RegimeError("exponents: 1/p + 1/q = 1 fails beyond 1e-12");
    }
    std::optional<Regime> regime;
    if (p > 1.0 && q > 1.0) {
        regime = Regime::A;
    } else if (p > 0.0 && p < 1.0 && q < 0.0) {
        regime = Regime::B;
    } else {
        throw RegimeError("exponents: conjugate pair is neither regime A (p > 1) nor "
                          "regime B (0 < p < 1)");
    }
    return ExponentSpec(Kind::Pair, {p, q}, regime);
}

ExponentSpec ExponentSpec::tuple(std::vector<double> ps) {
    if (ps.size() < 2) throw RegimeError("exponents: tuple needs at least 2 entries");
    CompensatedSum inv;
    for (double p : ps) {
        require_finite(p, "tuple entry");
        if (p == 0.0) throw RegimeError("exponents: tuple entry is zero");
        inv.add(1.0 / p);
    }
    if (std::abs(inv.value() - 1.0) > kConjugacyTol) {
        throw RegimeError("exponents: sum of 1/p_j = 1 fails beyond 1e-12");
    }
    bool all_above_one = true;
    for (double p : ps) all_above_one = all_above_one && p > 1.0;
    bool reverse_shape = ps[0] > 0.0 && ps[0] < 1.0;
    for (std::size_t j = 1; j < ps.size(); ++j) reverse_shape = reverse_shape && ps[j] < 0.0;
    std::optional<Regime> regime;
    if (all_above_one) {
        regime = Regime::C;
    } else if (reverse_shape) {
        regime = Regime::D;
    } else {
        throw RegimeError("exponents: tuple is neither regime C (all p_j > 1) nor "
                          "regime D (0 < p_1 < 1, p_j < 0)");
    }
    return ExponentSpec(Kind::Tuple, std::move(ps), regime);
}

ExponentSpec ExponentSpec::scalar(double p) {
    require_finite(p, "p");
    if (!(p > 0.0)) throw RegimeError("exponents: scalar p must be > 0");
    return ExponentSpec(Kind::Scalar, {p}, std::nullopt);
}

ExponentSpec ExponentSpec::ratio(double p, double r) {
    require_finite(p, "p");
    require_finite(r, "r");
    if (!(r > 0.0 && r < 1.0 && p > 1.0)) {
        throw RegimeError("exponents: ratio regime needs 0 < r < 1 < p");
    }
    return ExponentSpec(Kind::Ratio, {p, r}, Regime::R);
}

double ExponentSpec::q() const {
    if (kind_ != Kind::Pair) throw RegimeError("exponents: q is only defined for pairs");
    return exps_[1];
}

double ExponentSpec::r() const {
    if (kind_ != Kind::Ratio) throw RegimeError("exponents: r is only defined for ratios");
    return exps_[1];
}

namespace {

// A powered integral sum_i w_i * v_i^e carried in both value and log form.
// The log form survives when the value overflows or underflows a double,
// which happens for the large negative exponents of regime D.
struct PoweredIntegral {
    double value;
    double log;
};

// Largest |e * ln(v_i)| for which v_i^e is accumulated directly; beyond
// it the sum is evaluated as a scaled log-sum-exp. 600 keeps every direct
// term finite with orders of magnitude to spare.
constexpr double kDirectPowLimit = 600.0;

PoweredIntegral powered_integral(const Eigen::ArrayXd& w, const Eigen::ArrayXd& v,
                                 double e) {
    const Eigen::Index n = v.size();
    double max_mag = 0.0;
    bool any_positive = false;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (v[i] == 0.0) {
            if (e < 0.0) {
                throw DomainError("powered integral: zero sample under a negative exponent");
            }
            continue;
        }
        any_positive = true;
        max_mag = std::max(max_mag, std::abs(e * std::log(v[i])));
    }
    if (!any_positive && e > 0.0) {
        return {0.0, -std::numeric_limits<double>::infinity()};
    }

    if (max_mag <= kDirectPowLimit) {
        CompensatedSum acc;
        for (Eigen::Index i = 0; i < n; ++i) acc.add(w[i] * std::pow(v[i], e));
        const double total = acc.value();
        return {total, std::log(total)};
    }

    // log-sum-exp: s_i = e*ln(v_i) + ln(w_i), scaled by the maximum.
    double m = -std::numeric_limits<double>::infinity();
    Eigen::ArrayXd s(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s[i] = v[i] == 0.0 ? -std::numeric_limits<double>::infinity()
                           : e * std::log(v[i]) + std::log(w[i]);
        m = std::max(m, s[i]);
    }
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < n; ++i) acc.add(std::exp(s[i] - m));
    const double lg = m + std::log(acc.value());
    return {std::exp(lg), lg};
}

// (I.value)^inv_e, falling back to the log form when the value form is
// not a usable positive finite number.
double powered_root(const PoweredIntegral& pi, double inv_e) {
    if (pi.value > 0.0 && std::isfinite(pi.value)) return std::pow(pi.value, inv_e);
    return std::exp(pi.log * inv_e);
}

// prod_j (I_j)^(1/p_j), in the value domain while it stays normal and in
// the log domain otherwise.
double product_of_norms(const std::vector<PoweredIntegral>& pis,
                        const std::vector<double>& ps) {
    double prod = 1.0;
    bool direct = true;
    CompensatedSum logsum;
    for (std::size_t j = 0; j < pis.size(); ++j) {
        const double inv = 1.0 / ps[j];
        logsum.add(pis[j].log * inv);
        if (direct && pis[j].value > 0.0 && std::isfinite(pis[j].value)) {
            prod *= std::pow(pis[j].value, inv);
            direct = std::isfinite(prod) && prod > 0.0;
        } else {
            direct = false;
        }
    }
    return direct ? prod : std::exp(logsum.value());
}

// (I[v^p] / I[v^r])^(1/(p-r)); the shared building block of the ratio
// families. Throws when the denominator integral vanishes.
double ratio_power(const Eigen::ArrayXd& w, const Eigen::ArrayXd& v, double p, double r,
                   const char* who) {
    const PoweredIntegral ip = powered_integral(w, v, p);
    const PoweredIntegral ir = powered_integral(w, v, r);
    if (!(ir.value > 0.0)) {
        throw DomainError(std::string(who) + ": degenerate denominator (the r-integral "
                                             "is zero; the function vanishes at every "
                                             "evaluation point)");
    }
    const double inv = 1.0 / (p - r);
    if (ip.value > 0.0 && std::isfinite(ip.value) && std::isfinite(ir.value)) {
        const double res = std::pow(ip.value / ir.value, inv);
        if (std::isfinite(res)) return res;
    }
    return std::exp((ip.log - ir.log) * inv);
}

void require_kind(const ExponentSpec& e, ExponentSpec::Kind kind, Family fam) {
    if (e.kind() != kind) {
        throw RegimeError(std::string(family_name(fam)) +
                          ": exponent spec has the wrong shape for this family");
    }
}

const char* regime_hint(Regime r) {
    switch (r) {
        case Regime::A: return "p > 1 with 1/p + 1/q = 1";
        case Regime::B: return "0 < p < 1 with 1/p + 1/q = 1";
        case Regime::C: return "all p_j > 1 with sum 1/p_j = 1";
        case Regime::D: return "0 < p_1 < 1, p_j < 0 for j >= 2, sum 1/p_j = 1";
        case Regime::R: return "0 < r < 1 < p";
    }
    return "";
}

void require_regime(const ExponentSpec& e, Regime want, Family fam) {
    if (!e.regime() || *e.regime() != want) {
        throw RegimeError(std::string(family_name(fam)) + ": regime mismatch, needs " +
                          std::string(regime_name(want)) + " (" + regime_hint(want) + ")");
    }
}

void require_floor(const Eigen::ArrayXd& v, const char* which, Family fam) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] < kPositivityFloor) {
            throw PositivityError(
                std::string(family_name(fam)) + ": " + which + " sample at index " +
                    std::to_string(i) +
                    " lies below the 1e-12 positivity floor required under a negative "
                    "exponent",
                static_cast<std::ptrdiff_t>(i));
        }
    }
}

IneqReport finish_report(Family fam, const Partition& part, const ExponentSpec& exps,
                         double lhs, double rhs, bool ge) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw DomainError(std::string(family_name(fam)) +
                          ": a side is non-finite; the inputs are outside the "
                          "representable range");
    }
    const double slack = ge ? lhs - rhs : rhs - lhs;
    const double rel =
        slack / std::max({std::abs(lhs), std::abs(rhs), kRelSlackEps});
    const Verdict verdict = rel < -kViolationTol      ? Verdict::Violated
                            : std::abs(rel) <= kEqualityTol ? Verdict::EqualityWithinTol
                                                            : Verdict::Holds;
    return IneqReport{fam,
                      part.alpha(),
                      exps.exponents(),
                      part.describe_with_interval(),
                      lhs,
                      rhs,
                      slack,
                      rel,
                      verdict,
                      0};
}

}  // namespace

IneqReport check_pair(Family family, const GridFn& f, const GridFn& g,
                      const ExponentSpec& exps) {
    if (!is_pair_family(family)) {
        throw DomainError(std::string(family_name(family)) +
                          ": takes m functions; use check_multi");
    }
    if (!f.same_partition(g)) {
        throw PartitionMismatchError("check_pair: f and g live on different partitions");
    }
    const Partition& part = f.partition();
    const Eigen::ArrayXd& w = part.weights();
    const Eigen::ArrayXd& fv = f.values();
    const Eigen::ArrayXd& gv = g.values();

    double lhs = 0.0, rhs = 0.0;
    bool ge = false;
    switch (family) {
        case Family::Holder:
        case Family::ReverseHolder: {
            require_kind(exps, ExponentSpec::Kind::Pair, family);
            if (family == Family::Holder) {
                require_regime(exps, Regime::A, family);
            } else {
                require_regime(exps, Regime::B, family);
                ge = true;
                require_floor(gv, "g", family);  // q < 0 lands on g
            }
            lhs = compensated_dot(w, (fv * gv).eval());
            const std::vector<PoweredIntegral> pis = {powered_integral(w, fv, exps.p()),
                                                      powered_integral(w, gv, exps.q())};
            rhs = product_of_norms(pis, {exps.p(), exps.q()});
            break;
        }
        case Family::Minkowski:
        case Family::ReverseMinkowski: {
            require_kind(exps, ExponentSpec::Kind::Pair, family);
            if (family == Family::Minkowski) {
                require_regime(exps, Regime::A, family);
            } else {
                require_regime(exps, Regime::B, family);
                ge = true;
            }
            const double p = exps.p();
            const double inv = 1.0 / p;
            lhs = powered_root(powered_integral(w, (fv + gv).eval(), p), inv);
            rhs = powered_root(powered_integral(w, fv, p), inv) +
                  powered_root(powered_integral(w, gv, p), inv);
            break;
        }
        case Family::RadonRatio: {
            require_kind(exps, ExponentSpec::Kind::Ratio, family);
            const double p = exps.p();
            const double r = exps.r();
            lhs = ratio_power(w, (fv + gv).eval(), p, r, family_name(family).data());
            rhs = ratio_power(w, fv, p, r, family_name(family).data()) +
                  ratio_power(w, gv, p, r, family_name(family).data());
            break;
        }
        default:
            break;
    }
    return finish_report(family, part, exps, lhs, rhs, ge);
}

IneqReport check_multi(Family family, const std::vector<GridFn>& fs,
                       const ExponentSpec& exps) {
    if (is_pair_family(family)) {
        throw DomainError(std::string(family_name(family)) +
                          ": takes (f, g); use check_pair");
    }
    if (fs.size() < 2) throw DomainError("check_multi: needs at least 2 functions");
    for (std::size_t j = 1; j < fs.size(); ++j) {
        if (!fs[j].same_partition(fs[0])) {
            throw PartitionMismatchError("check_multi: functions live on different "
                                         "partitions");
        }
    }
    const Partition& part = fs[0].partition();
    const Eigen::ArrayXd& w = part.weights();
    const Eigen::Index n = part.size();

    double lhs = 0.0, rhs = 0.0;
    bool ge = false;
    switch (family) {
        case Family::HolderMulti:
        case Family::ReverseHolderMulti: {
            require_kind(exps, ExponentSpec::Kind::Tuple, family);
            if (family == Family::HolderMulti) {
                require_regime(exps, Regime::C, family);
            } else {
                require_regime(exps, Regime::D, family);
                ge = true;
            }
            const std::vector<double>& ps = exps.exponents();
            if (ps.size() != fs.size()) {
                throw RegimeError(std::string(family_name(family)) + ": " +
                                  std::to_string(fs.size()) + " functions but " +
                                  std::to_string(ps.size()) + " exponents");
            }
            Eigen::ArrayXd prod = fs[0].values();
            for (std::size_t j = 1; j < fs.size(); ++j) prod *= fs[j].values();
            lhs = compensated_dot(w, prod);
            std::vector<PoweredIntegral> pis;
            pis.reserve(fs.size());
            for (std::size_t j = 0; j < fs.size(); ++j) {
                if (ps[j] < 0.0) {
                    require_floor(fs[j].values(), ("f_" + std::to_string(j + 1)).c_str(),
                                  family);
                }
                pis.push_back(powered_integral(w, fs[j].values(), ps[j]));
            }
            rhs = product_of_norms(pis, ps);
            break;
        }
        case Family::MinkowskiMulti: {
            require_kind(exps, ExponentSpec::Kind::Scalar, family);
            const double p = exps.p();
            const double inv = 1.0 / p;
            ge = p < 1.0;
            Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n);
            CompensatedSum norms;
            for (const GridFn& fj : fs) {
                sum += fj.values();
                norms.add(powered_root(powered_integral(w, fj.values(), p), inv));
            }
            lhs = powered_root(powered_integral(w, sum, p), inv);
            rhs = norms.value();
            break;
        }
        case Family::PowerSum: {
            require_kind(exps, ExponentSpec::Kind::Scalar, family);
            const double p = exps.p();
            ge = p > 1.0;
            Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n);
            CompensatedSum integrals;
            for (const GridFn& fj : fs) {
                sum += fj.values();
                integrals.add(powered_integral(w, fj.values(), p).value);
            }
            lhs = powered_integral(w, sum, p).value;
            rhs = integrals.value();
            break;
        }
        case Family::RadonRatioMulti: {
            require_kind(exps, ExponentSpec::Kind::Ratio, family);
            const double p = exps.p();
            const double r = exps.r();
            Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n);
            CompensatedSum ratios;
            for (const GridFn& fj : fs) {
                sum += fj.values();
                ratios.add(ratio_power(w, fj.values(), p, r, family_name(family).data()));
            }
            lhs = ratio_power(w, sum, p, r, family_name(family).data());
            rhs = ratios.value();
            break;
        }
        default:
            break;
    }
    return finish_report(family, part, exps, lhs, rhs, ge);
}

std::optional<double> proportionality_check(const GridFn& f, const GridFn& g, double tol) {
    if (!f.same_partition(g)) {
        throw PartitionMismatchError("proportionality check: f and g live on different "
                                     "partitions");
    }
    const Eigen::ArrayXd& w = f.partition().weights();
    const Eigen::ArrayXd& fv = f.values();
    const Eigen::ArrayXd& gv = g.values();
    CompensatedSum num, den;
    for (Eigen::Index i = 0; i < fv.size(); ++i) {
        num.add(w[i] * fv[i] * gv[i]);
        den.add(w[i] * gv[i] * gv[i]);
    }
    if (!(den.value() > 0.0)) {
        throw DomainError("proportionality check: g is identically zero");
    }
    const double lambda = num.value() / den.value();
    double max_dev = 0.0, max_f = 0.0;
    for (Eigen::Index i = 0; i < fv.size(); ++i) {
        max_dev = std::max(max_dev, std::abs(fv[i] - lambda * gv[i]));
        max_f = std::max(max_f, std::abs(fv[i]));
    }
    if (max_dev <= tol * max_f) return lambda;
    return std::nullopt;
}

}  // namespace lfc
