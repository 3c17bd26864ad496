#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrr/limits.hpp"
#include "qrr/text.hpp"

using qrr::Family;
using qrr::QPoly;

namespace {

QPoly P(const char* text) { return qrr::parse_qpoly(text); }

bool rr_part(int side, long p) {
    const long r = p % 5;
    return side == 1 ? (r == 1 || r == 4) : (r == 2 || r == 3);
}

}  // namespace

TEST(RrProduct, Examples) {
    EXPECT_EQ(qrr::rr_product(1, 5).poly(), P("1 + q + q^2 + q^3 + 2*q^4"));
    EXPECT_EQ(qrr::rr_product(2, 5).poly(), P("1 + q^2 + q^3 + q^4"));
    EXPECT_EQ(qrr::rr_product(1, 1).poly(), QPoly::one());
    EXPECT_EQ(qrr::rr_product(1, 5).modulus(), 5);
    EXPECT_THROW(qrr::rr_product(3, 5), std::invalid_argument);
    EXPECT_THROW(qrr::rr_product(1, 0), std::invalid_argument);
}

TEST(RrProduct, MatchesPartitionCounts) {
    for (int side : {1, 2}) {
        const auto series = qrr::rr_product(side, 31);
        for (long m = 0; m < 31; ++m) {
            const long expected = oracle::count_partitions(m, m, [side](long p) { return rr_part(side, p); });
            ASSERT_EQ(series.poly().coeff(m), expected) << side << " " << m;
        }
    }
}

TEST(RrProduct, TruncationIsConsistent) {
    for (int side : {1, 2}) {
        const auto big = qrr::rr_product(side, 40);
        for (qrr::Exponent m = 1; m < 40; m += 7) {
            EXPECT_EQ(qrr::truncate(big.poly(), m), qrr::rr_product(side, m).poly());
        }
        for (const auto& t : big.poly().terms()) {
            EXPECT_GE(t.coeff, 0);
        }
    }
}

TEST(TruncatedSeries, ReducesOnConstruction) {
    const qrr::TruncatedSeries s(3, P("1 + q^2 + q^3 + 5*q^9"));
    EXPECT_EQ(s.poly(), P("1 + q^2"));
    EXPECT_THROW(qrr::TruncatedSeries(0, QPoly::one()), std::invalid_argument);
}

TEST(LimitCheck, Examples) {
    EXPECT_EQ(qrr::truncate(qrr::family_poly(Family::A, 4), 5), P("1 + q + q^2 + q^3 + 2*q^4"));
    EXPECT_TRUE(qrr::limit_check(Family::A, 4).passed());
    EXPECT_EQ(qrr::truncate(qrr::family_poly(Family::C, 3), 4), P("1 + q^2 + q^3"));
    EXPECT_TRUE(qrr::limit_check(Family::C, 3).passed());
    EXPECT_TRUE(qrr::limit_check(Family::A, 0).passed());
    EXPECT_THROW(qrr::limit_check(Family::S, 3), std::invalid_argument);
    EXPECT_EQ(qrr::rr_side(Family::B), 1);
    EXPECT_EQ(qrr::rr_side(Family::D), 2);
}

TEST(LimitProperties, StabilizationAndAllIds) {
    for (Family id : {Family::A, Family::C}) {
        for (long n = 0; n <= 30; ++n) {
            const auto m = static_cast<qrr::Exponent>(n + 1);
            ASSERT_EQ(qrr::truncate(qrr::family_poly(id, n), m), qrr::truncate(qrr::family_poly(id, n + 1), m));
        }
    }
    for (Family id : {Family::A, Family::B, Family::C, Family::D}) {
        for (long n = 0; n <= 30; ++n) {
            ASSERT_TRUE(qrr::limit_check(id, n).passed()) << qrr::to_string(id) << " " << n;
        }
    }
}

// The margin cannot be widened: the k = 1 summand q[5 1] already falls
// short of q/(1-q) at q^6.
TEST(LimitProperties, MarginIsTight) {
    const QPoly a = qrr::truncate(qrr::family_poly(Family::A, 5), 7);
    EXPECT_NE(a, qrr::rr_product(1, 7).poly());
}
