#include "lfc/errors.hpp"
#include "lfc/gamma.hpp"
#include "lfc/partition.hpp"

#include <doctest.h>

#include <cmath>

using lfc::Alpha;
using lfc::DomainError;
using lfc::Partition;
using lfc::PartitionSpec;

namespace {

// ln2/ln3, 1/Gamma(1+ln2/ln3) and friends, tabulated at 60 digits.
const double kAlphaLn2Ln3 = 0.6309297535714574370995271;
const double kInvGamma1p = 1.114366372562056928443369;     // 1/Gamma(1+ln2/ln3)
const double kTwoPowAlphaOverGamma = 1.772624417828412642565968;  // alpha = ln3/ln5

}  // namespace

TEST_CASE("uniform partition tiles the interval with equal weights") {
    const Alpha alpha = Alpha::from_value(0.5);
    const Partition p = Partition::uniform(0.0, 1.0, 4, alpha);
    REQUIRE(p.size() == 4);
    CHECK(p.lefts()[0] == 0.0);
    CHECK(p.lefts()[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p.lefts()[3] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p.rights()[3] == 1.0);
    const double w = std::pow(0.25, 0.5) / lfc::gamma(1.5);
    for (int j = 0; j < 4; ++j) CHECK(p.weights()[j] == doctest::Approx(w).epsilon(1e-15));
    CHECK(p.eval_points()[2] == p.lefts()[2]);
    CHECK(p.descriptor() == "uniform:4");
    CHECK(p.describe_with_interval() == "uniform:4@0,1");
}

TEST_CASE("uniform total weight scales as N^(1-alpha)") {
    const Alpha alpha = Alpha::from_value(0.3);
    const Partition p1 = Partition::uniform(0.0, 1.0, 100, alpha);
    const Partition p2 = Partition::uniform(0.0, 1.0, 200, alpha);
    const double ratio = p2.total_weight() / p1.total_weight();
    CHECK(std::abs(ratio - std::pow(2.0, 1.0 - 0.3)) <= 1e-12);
}

TEST_CASE("level-2 keep-2-of-3 partition reproduces the classical construction") {
    const Partition p = Partition::cantor(3, 2, 2, 0.0, 1.0);
    REQUIRE(p.size() == 4);
    const double lefts[] = {0.0, 2.0 / 9.0, 2.0 / 3.0, 8.0 / 9.0};
    const double rights[] = {1.0 / 9.0, 1.0 / 3.0, 7.0 / 9.0, 1.0};
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(p.lefts()[j] - lefts[j]) <= 1e-15);
        CHECK(std::abs(p.rights()[j] - rights[j]) <= 1e-15);
    }
    CHECK(p.alpha().value() == doctest::Approx(kAlphaLn2Ln3).epsilon(1e-15));
    CHECK(p.alpha().ifs_origin().has_value());
}

TEST_CASE("cantor partitions self-normalize to (b-a)^alpha / Gamma(1+alpha)") {
    SUBCASE("keep-2-of-3 on the unit interval") {
        const Partition p = Partition::cantor(3, 2, 8, 0.0, 1.0);
        REQUIRE(p.size() == 256);
        CHECK(std::abs(p.total_weight() - kInvGamma1p) <= 1e-12 * kInvGamma1p);
    }
    SUBCASE("keep-3-of-5 on an interval of length 2") {
        const Partition p = Partition::cantor(5, 3, 3, 0.0, 2.0);
        REQUIRE(p.size() == 27);
        CHECK(std::abs(p.total_weight() - kTwoPowAlphaOverGamma) <=
              1e-12 * kTwoPowAlphaOverGamma);
    }
    SUBCASE("level zero is the whole interval") {
        const Partition p = Partition::cantor(3, 2, 0, 0.0, 1.0);
        REQUIRE(p.size() == 1);
        CHECK(p.lefts()[0] == 0.0);
        CHECK(p.rights()[0] == 1.0);
        CHECK(std::abs(p.total_weight() - kInvGamma1p) <= 1e-12 * kInvGamma1p);
    }
}

TEST_CASE("cantor keeps both end pieces and preserves disjointness") {
    const Partition p = Partition::cantor(5, 3, 4, 0.0, 1.0);
    REQUIRE(p.size() == 81);
    CHECK(p.lefts()[0] == 0.0);
    CHECK(p.rights()[80] == 1.0);
    for (Eigen::Index j = 1; j < p.size(); ++j) {
        CHECK(p.lefts()[j] >= p.rights()[j - 1]);  // gaps allowed, overlap not
        CHECK(p.rights()[j] > p.lefts()[j]);
    }
}

TEST_CASE("random partitions are deterministic per seed and cover the interval") {
    const Alpha alpha = Alpha::from_value(0.7);
    const Partition p1 = Partition::random_spacing(0.0, 1.0, 50, 42, alpha);
    const Partition p2 = Partition::random_spacing(0.0, 1.0, 50, 42, alpha);
    const Partition p3 = Partition::random_spacing(0.0, 1.0, 50, 43, alpha);
    REQUIRE(p1.size() == 50);
    bool identical = true;
    bool differs = false;
    for (Eigen::Index j = 0; j < 50; ++j) {
        identical = identical && p1.lefts()[j] == p2.lefts()[j] &&
                    p1.rights()[j] == p2.rights()[j] && p1.weights()[j] == p2.weights()[j];
        differs = differs || p1.rights()[j] != p3.rights()[j];
    }
    CHECK(identical);
    CHECK(differs);
    CHECK(p1.lefts()[0] == 0.0);
    CHECK(p1.rights()[49] == 1.0);
    for (Eigen::Index j = 1; j < 50; ++j) CHECK(p1.lefts()[j] == p1.rights()[j - 1]);
    CHECK(p1.descriptor() == "random:50,42");

    // t^alpha is concave, so equal spacings maximize the weight sum.
    const Partition u = Partition::uniform(0.0, 1.0, 50, alpha);
    CHECK(p1.total_weight() > 0.0);
    CHECK(p1.total_weight() <= u.total_weight() * (1.0 + 1e-12));
}

TEST_CASE("partition constructors reject degenerate shapes") {
    const Alpha alpha = Alpha::from_value(0.5);
    CHECK_THROWS_AS(Partition::uniform(0.0, 1.0, 0, alpha), DomainError);
    CHECK_THROWS_AS(Partition::uniform(1.0, 1.0, 4, alpha), DomainError);
    CHECK_THROWS_AS(Partition::uniform(2.0, 1.0, 4, alpha), DomainError);
    CHECK_THROWS_AS(Partition::cantor(1, 1, 3, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Partition::cantor(3, 1, 3, 0.0, 1.0), DomainError);  // order would be 0
    CHECK_THROWS_AS(Partition::cantor(3, 4, 3, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Partition::cantor(3, 2, -1, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Partition::cantor(2, 1, 3, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Partition::random_spacing(0.0, 1.0, 0, 1, alpha), DomainError);
}

TEST_CASE("interval-count cap rejects explosive cantor levels") {
    // 3^17 kept intervals exceed the 2^26 cap; 2^20 stays under it.
    CHECK_THROWS_AS(Partition::cantor(4, 3, 17, 0.0, 1.0), DomainError);
    const Partition ok = Partition::cantor(2 * 2, 2, 13, 0.0, 1.0);
    CHECK(ok.size() == 8192);
}

TEST_CASE("descriptor grammar round-trips") {
    const PartitionSpec u = PartitionSpec::parse("uniform:64");
    CHECK(u.kind == PartitionSpec::Kind::Uniform);
    CHECK(u.n == 64);
    CHECK(u.to_string() == "uniform:64");

    const PartitionSpec c = PartitionSpec::parse("cantor:3,2,8");
    CHECK(c.kind == PartitionSpec::Kind::Cantor);
    CHECK(c.base == 3);
    CHECK(c.keep == 2);
    CHECK(c.level == 8);
    CHECK(c.to_string() == "cantor:3,2,8");

    const PartitionSpec r = PartitionSpec::parse("random:64,12345");
    CHECK(r.kind == PartitionSpec::Kind::Random);
    CHECK(r.n == 64);
    REQUIRE(r.seed.has_value());
    CHECK(*r.seed == 12345);
    CHECK(r.to_string() == "random:64,12345");

    const PartitionSpec bare = PartitionSpec::parse("random:64");
    CHECK(!bare.seed.has_value());
    CHECK(bare.to_string() == "random:64");
}

TEST_CASE("descriptor grammar rejects malformed text") {
    CHECK_THROWS_AS(PartitionSpec::parse(""), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("grid:64"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("uniform:"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("uniform:64x"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("uniform:64,3"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("cantor:3,2"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("cantor:3;2;8"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("random:"), DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("random:64,"), DomainError);
}

TEST_CASE("spec build enforces alpha agreement and seed presence") {
    const Alpha half = Alpha::from_value(0.5);
    const Partition u = PartitionSpec::parse("uniform:16").build(0.0, 2.0, half);
    CHECK(u.size() == 16);
    CHECK(u.upper() == 2.0);

    // Cantor pins its own order: matching ifs alpha passes, others fail.
    const PartitionSpec c = PartitionSpec::parse("cantor:3,2,4");
    CHECK(c.build(0.0, 1.0, Alpha::from_ifs(3, 2)).size() == 16);
    CHECK(c.build(0.0, 1.0, std::nullopt).size() == 16);
    CHECK_THROWS_AS(c.build(0.0, 1.0, half), DomainError);

    CHECK_THROWS_AS(PartitionSpec::parse("uniform:16").build(0.0, 1.0, std::nullopt),
                    DomainError);
    CHECK_THROWS_AS(PartitionSpec::parse("random:16").build(0.0, 1.0, half), DomainError);
    CHECK(PartitionSpec::parse("random:16,9").build(0.0, 1.0, half).size() == 16);
}

TEST_CASE("alpha parses literals and ifs pairs") {
    const Alpha lit = Alpha::parse("0.5");
    CHECK(lit.value() == 0.5);
    CHECK(!lit.ifs_origin().has_value());
    CHECK(lit.to_string() == "0.5");

    const Alpha ifs = Alpha::parse("3,2");
    CHECK(ifs.value() == doctest::Approx(kAlphaLn2Ln3).epsilon(1e-15));
    REQUIRE(ifs.ifs_origin().has_value());
    CHECK(ifs.ifs_origin()->first == 3);
    CHECK(ifs.ifs_origin()->second == 2);
    CHECK(ifs.to_string() == "3,2");

    CHECK(Alpha::parse("1").value() == 1.0);
    CHECK_THROWS_AS(Alpha::parse("0"), DomainError);
    CHECK_THROWS_AS(Alpha::parse("1.5"), DomainError);
    CHECK_THROWS_AS(Alpha::parse("-0.5"), DomainError);
    CHECK_THROWS_AS(Alpha::parse("2,4"), DomainError);  // needs k < n
    CHECK_THROWS_AS(Alpha::parse("abc"), DomainError);
    CHECK_THROWS_AS(Alpha::parse("0.5x"), DomainError);
    CHECK_THROWS_AS(Alpha::parse(""), DomainError);
}
