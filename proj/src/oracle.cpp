// High-precision cross-check of inequality sides.
//
// Everything here is deliberately naive: plain loops, plain pow, 50 decimal
// digits of working precision. It shares no summation or scaling machinery
// with the fast engine, so agreement between the two is meaningful evidence.
// Stored double weights and samples are taken as exact inputs.

#include "lfc/errors.hpp"
#include "lfc/harness.hpp"
#include "lfc/inequality.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace lfc {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

constexpr Eigen::Index kOracleMaxSamples = 64;

std::vector<Real> to_real(const Eigen::ArrayXd& v) {
    std::vector<Real> out(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = Real(v[i]);
    return out;
}

std::vector<Real> pointwise_sum(const std::vector<GridFn>& fs) {
    std::vector<Real> out = to_real(fs[0].values());
    for (std::size_t j = 1; j < fs.size(); ++j) {
        const Eigen::ArrayXd& v = fs[j].values();
        for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] += Real(v[i]);
    }
    return out;
}

std::vector<Real> pointwise_product(const std::vector<GridFn>& fs) {
    std::vector<Real> out = to_real(fs[0].values());
    for (std::size_t j = 1; j < fs.size(); ++j) {
        const Eigen::ArrayXd& v = fs[j].values();
        for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] *= Real(v[i]);
    }
    return out;
}

// Sum w_i * v_i^e. Zero samples follow the measure-theoretic conventions:
// 0^e = 0 for e > 0, 0^0 = 1, and a zero sample under e < 0 is a domain error.
Real integral_pow(const Eigen::ArrayXd& w, const std::vector<Real>& v, const Real& e) {
    Real acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Real& x = v[i];
        if (x == 0) {
            if (e < 0) throw DomainError("oracle: zero sample under negative exponent");
            if (e == 0) acc += Real(w[static_cast<Eigen::Index>(i)]);
            continue;
        }
        acc += Real(w[static_cast<Eigen::Index>(i)]) * pow(x, e);
    }
    return acc;
}

Real norm_p(const Eigen::ArrayXd& w, const std::vector<Real>& v, const Real& p) {
    return pow(integral_pow(w, v, p), 1 / p);
}

Real ratio_pr(const Eigen::ArrayXd& w, const std::vector<Real>& v, const Real& p, const Real& r) {
    const Real den = integral_pow(w, v, r);
    if (den == 0) throw DomainError("oracle: degenerate denominator in ratio");
    return pow(integral_pow(w, v, p) / den, 1 / (p - r));
}

}  // namespace

OracleSides oracle_check(Family family, const std::vector<GridFn>& fs, const ExponentSpec& exps) {
    if (fs.size() < 2) throw DomainError("oracle: at least two functions required");
    for (std::size_t j = 1; j < fs.size(); ++j) {
        if (!fs[j].same_partition(fs[0])) throw PartitionMismatchError("oracle: functions on different partitions");
    }
    const Partition& part = fs[0].partition();
    if (part.size() > kOracleMaxSamples) {
        throw DomainError("oracle: partition has " + std::to_string(part.size()) + " intervals, cap is " +
                          std::to_string(kOracleMaxSamples));
    }
    const Eigen::ArrayXd& w = part.weights();

    Real lhs = 0;
    Real rhs = 0;
    switch (family) {
        case Family::Holder:
        case Family::ReverseHolder: {
            if (fs.size() != 2) throw DomainError("oracle: pair family needs exactly two functions");
            const Real p = Real(exps.p());
            const Real q = Real(exps.q());
            lhs = integral_pow(w, pointwise_product(fs), Real(1));
            rhs = norm_p(w, to_real(fs[0].values()), p) * norm_p(w, to_real(fs[1].values()), q);
            break;
        }
        case Family::HolderMulti:
        case Family::ReverseHolderMulti: {
            const std::vector<double>& ps = exps.exponents();
            if (ps.size() != fs.size()) throw DomainError("oracle: exponent count mismatch");
            lhs = integral_pow(w, pointwise_product(fs), Real(1));
            rhs = 1;
            for (std::size_t j = 0; j < fs.size(); ++j) rhs *= norm_p(w, to_real(fs[j].values()), Real(ps[j]));
            break;
        }
        case Family::Minkowski:
        case Family::ReverseMinkowski: {
            if (fs.size() != 2) throw DomainError("oracle: pair family needs exactly two functions");
            const Real p = Real(exps.p());
            lhs = norm_p(w, pointwise_sum(fs), p);
            rhs = norm_p(w, to_real(fs[0].values()), p) + norm_p(w, to_real(fs[1].values()), p);
            break;
        }
        case Family::MinkowskiMulti: {
            const Real p = Real(exps.p());
            lhs = norm_p(w, pointwise_sum(fs), p);
            rhs = 0;
            for (const GridFn& f : fs) rhs += norm_p(w, to_real(f.values()), p);
            break;
        }
        case Family::PowerSum: {
            const Real p = Real(exps.p());
            lhs = integral_pow(w, pointwise_sum(fs), p);
            rhs = 0;
            for (const GridFn& f : fs) rhs += integral_pow(w, to_real(f.values()), p);
            break;
        }
        case Family::RadonRatio:
        case Family::RadonRatioMulti: {
            if (family == Family::RadonRatio && fs.size() != 2)
                throw DomainError("oracle: pair family needs exactly two functions");
            const Real p = Real(exps.p());
            const Real r = Real(exps.r());
            lhs = ratio_pr(w, pointwise_sum(fs), p, r);
            rhs = 0;
            for (const GridFn& f : fs) rhs += ratio_pr(w, to_real(f.values()), p, r);
            break;
        }
    }
    return OracleSides{lhs.convert_to<double>(), rhs.convert_to<double>()};
}

}  // namespace lfc
