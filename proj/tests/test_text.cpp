#include <random>

#include <gtest/gtest.h>

#include "qrr/text.hpp"

using qrr::Integer;
using qrr::QPoly;

TEST(QPolyText, RendersGrammar) {
    EXPECT_EQ(qrr::to_string(QPoly{}), "0");
    EXPECT_EQ(qrr::to_string(QPoly::from_terms({{0, 1}, {1, 1}, {2, 1}, {4, 1}})), "1 + q + q^2 + q^4");
    EXPECT_EQ(qrr::to_string(QPoly::from_terms({{1, -1}, {3, 2}})), "-q + 2*q^3");
    EXPECT_EQ(qrr::to_string(QPoly::from_terms({{0, -7}, {2, -3}})), "-7 - 3*q^2");
    EXPECT_EQ(qrr::to_string(QPoly::from_terms({{1, 12}})), "12*q");
}

TEST(QPolyText, ParsesWithArbitraryWhitespace) {
    const QPoly expected = QPoly::from_terms({{0, 1}, {1, -2}, {5, 3}});
    EXPECT_EQ(qrr::parse_qpoly("1-2*q+3*q^5"), expected);
    EXPECT_EQ(qrr::parse_qpoly("  1 -  2 * q  +3*q ^ 5 "), expected);
    EXPECT_EQ(qrr::parse_qpoly("-1"), QPoly(Integer(-1)));
    EXPECT_EQ(qrr::parse_qpoly("0"), QPoly{});
    EXPECT_EQ(qrr::parse_qpoly("123456789012345678901234567890*q^2").coeff(2),
              Integer("123456789012345678901234567890"));
}

TEST(QPolyText, RejectsMalformedInput) {
    for (const char* bad : {"", "1 +", "q^", "x", "1 ** q", "2 q", "q^-1", "q*t"}) {
        EXPECT_THROW(qrr::parse_qpoly(bad), std::invalid_argument) << bad;
    }
}

TEST(QPolyJson, Schema) {
    const QPoly p = QPoly::from_terms({{0, 1}, {3, -2}});
    EXPECT_EQ(qrr::to_json(p).dump(), R"({"terms":[[0,"1"],[3,"-2"]]})");
    EXPECT_EQ(qrr::to_json(QPoly{}).dump(), R"({"terms":[]})");
    EXPECT_THROW(qrr::qpoly_from_json(qrr::Json::parse(R"({"terms":[[-1,"1"]]})")), std::invalid_argument);
    EXPECT_THROW(qrr::qpoly_from_json(qrr::Json::parse(R"({"terms":[[1,2]]})")), std::invalid_argument);
    EXPECT_THROW(qrr::qpoly_from_json(qrr::Json::parse(R"([1])")), std::invalid_argument);
}

TEST(BiPolyText, RendersAndParses) {
    const qrr::BiPoly c = qrr::parse_bipoly("-1 - q + q^2*t - q^3*t^2");
    EXPECT_EQ(qrr::to_string(c), "-1 - q + q^2*t - q^3*t^2");
    EXPECT_EQ(qrr::to_string(qrr::parse_bipoly("t*q^2 + t")), "t + q^2*t");
    EXPECT_EQ(qrr::to_json(c).dump(), R"({"terms":[[[0,0],"-1"],[[1,0],"-1"],[[2,1],"1"],[[3,2],"-1"]]})");
}

// Text and JSON encodings invert each other on random polynomials.
TEST(TextProperties, RoundTrips) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> count(0, 8);
    std::uniform_int_distribution<qrr::Exponent> exponent(0, 50);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::pair<qrr::BiExponent, Integer>> bterms;
        std::vector<std::pair<qrr::Exponent, Integer>> qterms;
        for (int k = count(rng); k > 0; --k) {
            Integer c = coeff(rng);
            c *= Integer("100000000000000000000");
            qterms.emplace_back(exponent(rng), c);
            bterms.push_back({{exponent(rng), exponent(rng) % 4}, coeff(rng)});
        }
        const QPoly p = QPoly::from_terms(qterms);
        const qrr::BiPoly b = qrr::BiPoly::from_terms(bterms);
        ASSERT_EQ(qrr::parse_qpoly(qrr::to_string(p)), p);
        ASSERT_EQ(qrr::qpoly_from_json(qrr::Json::parse(qrr::to_json(p).dump())), p);
        ASSERT_EQ(qrr::parse_bipoly(qrr::to_string(b)), b);
        ASSERT_EQ(qrr::bipoly_from_json(qrr::to_json(b)), b);
    }
}
