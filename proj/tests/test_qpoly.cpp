#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrr/bipoly.hpp"
#include "qrr/qpoly.hpp"
#include "qrr/text.hpp"

using qrr::BiPoly;
using qrr::Exponent;
using qrr::Integer;
using qrr::QPoly;

namespace {

QPoly P(const char* text) { return qrr::parse_qpoly(text); }

bool canonical(const QPoly& p) {
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (p.terms()[i].coeff == 0 || p.terms()[i].exponent < 0) {
            return false;
        }
        if (i > 0 && p.terms()[i - 1].exponent >= p.terms()[i].exponent) {
            return false;
        }
    }
    return true;
}

class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed) : rng_(seed) {}

    QPoly next() {
        std::uniform_int_distribution<int> count(0, 10);
        std::uniform_int_distribution<Exponent> exponent(0, 64);
        std::uniform_int_distribution<long> coeff(-1000000, 1000000);
        std::vector<std::pair<Exponent, Integer>> terms;
        for (int i = count(rng_); i > 0; --i) {
            terms.emplace_back(exponent(rng_), coeff(rng_));
        }
        return QPoly::from_terms(std::move(terms));
    }

    Exponent modulus() { return std::uniform_int_distribution<Exponent>(0, 140)(rng_); }

private:
    std::mt19937_64 rng_;
};

constexpr int kCases = 1000;

}  // namespace

TEST(QPolyAdd, Examples) {
    EXPECT_EQ(qrr::add(P("1 + q"), P("q + q^2")), P("1 + 2*q + q^2"));
    const QPoly p = P("3 - q^4 + 7*q^9");
    EXPECT_EQ(qrr::add(p, QPoly{}), p);
    EXPECT_TRUE(qrr::add(P("1 + q"), -P("1 + q")).is_zero());
}

TEST(QPolyMul, Examples) {
    EXPECT_EQ(qrr::mul(P("1 + q"), P("1 + q")), P("1 + 2*q + q^2"));
    const QPoly p = P("2 - 5*q^3 + q^11");
    EXPECT_EQ(qrr::mul(p, QPoly::one()), p);
    EXPECT_EQ(qrr::mul(P("1 - q"), P("1 + q + q^2")), P("1 - q^3"));
}

TEST(QPolyMul, AgreesWithDenseConvolution) {
    const oracle::Dense a{1, -1};
    const oracle::Dense b{1, 1, 1};
    EXPECT_EQ(oracle::to_qpoly(oracle::mul(a, b)), qrr::mul(oracle::to_qpoly(a), oracle::to_qpoly(b)));
}

TEST(QPolyMul, SparseFarApartExponents) {
    // Far-apart exponents take the sparse accumulation path.
    const QPoly a = QPoly::from_terms({{0, 1}, {1000000, 1}});
    const QPoly b = QPoly::from_terms({{0, 1}, {2000000, -1}});
    EXPECT_EQ(a * b, QPoly::from_terms({{0, 1}, {1000000, 1}, {2000000, -1}, {3000000, -1}}));
}

TEST(QPolyMonomialMul, Examples) {
    EXPECT_EQ(qrr::monomial_mul(P("1 + q"), 1, 2), P("q^2 + q^3"));
    EXPECT_TRUE(qrr::monomial_mul(P("1 + q"), 0, 5).is_zero());
    EXPECT_EQ(qrr::monomial_mul(P("1 + q"), -1, 0), P("-1 - q"));
    EXPECT_THROW(qrr::monomial_mul(P("1"), 1, -1), std::invalid_argument);
}

TEST(QPolyTruncate, Examples) {
    EXPECT_EQ(qrr::truncate(P("1 + q + q^5"), 3), P("1 + q"));
    EXPECT_TRUE(qrr::truncate(P("1 + q + q^5"), 0).is_zero());
    EXPECT_EQ(qrr::truncate(P("1 + q^2"), 10), P("1 + q^2"));
}

TEST(QPolyEvalOne, Examples) {
    // [4 2] at q = 1 is C(4, 2).
    EXPECT_EQ(qrr::eval_one(P("1 + q + 2*q^2 + q^3 + q^4")), oracle::binomial(4, 2));
    EXPECT_EQ(qrr::eval_one(QPoly{}), 0);
    EXPECT_EQ(qrr::eval_one(P("1 - q")), 0);
}

TEST(QPoly, ZeroHasNoDegree) {
    EXPECT_FALSE(QPoly{}.degree().has_value());
    EXPECT_FALSE(QPoly(Integer(0)).degree().has_value());
    EXPECT_EQ(P("q^3 + 1").degree(), 3);
    EXPECT_EQ(P("q^3 + q").low_degree(), 1);
}

TEST(QPoly, RejectsNegativeExponents) {
    EXPECT_THROW(QPoly::monomial(1, -2), std::invalid_argument);
    EXPECT_THROW(QPoly::from_terms({{0, 1}, {-1, 1}}), std::invalid_argument);
}

TEST(QPoly, FromTermsCombinesAndDropsZeros) {
    const QPoly p = QPoly::from_terms({{3, 2}, {1, 5}, {3, -2}, {0, 0}, {1, 1}});
    EXPECT_EQ(p, QPoly::monomial(6, 1));
    EXPECT_TRUE(canonical(p));
}

TEST(QPoly, CoefficientsDoNotOverflow) {
    // (1+q)^200 has a central coefficient far beyond 64 bits.
    QPoly p = QPoly::one();
    for (int i = 0; i < 200; ++i) {
        p *= P("1 + q");
    }
    EXPECT_EQ(p.coeff(100), oracle::binomial(200, 100));
}

TEST(QPolyProperties, RingAxioms) {
    RandomPolys gen(1);
    for (int i = 0; i < kCases; ++i) {
        const QPoly a = gen.next();
        const QPoly b = gen.next();
        const QPoly c = gen.next();
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(QPolyProperties, CanonicalAfterEveryOperation) {
    RandomPolys gen(2);
    for (int i = 0; i < kCases; ++i) {
        const QPoly a = gen.next();
        const QPoly b = gen.next();
        const Exponent m = gen.modulus();
        for (const QPoly& r : {a + b, a - b, a * b, -a, qrr::truncate(a, m), qrr::truncated_mul(a, b, m),
                               qrr::monomial_mul(a, -3, 7), qrr::substitute_power(a, 2)}) {
            ASSERT_TRUE(canonical(r)) << qrr::to_string(r);
        }
    }
}

TEST(QPolyProperties, TruncationCommutesWithProduct) {
    RandomPolys gen(3);
    for (int i = 0; i < kCases; ++i) {
        const QPoly a = gen.next();
        const QPoly b = gen.next();
        const Exponent m = gen.modulus();
        const QPoly full = qrr::truncate(a * b, m);
        ASSERT_EQ(full, qrr::truncate(qrr::truncate(a, m) * qrr::truncate(b, m), m));
        ASSERT_EQ(full, qrr::truncated_mul(a, b, m));
    }
}

TEST(QPolyProperties, EvalOneIsRingMorphism) {
    RandomPolys gen(4);
    for (int i = 0; i < kCases; ++i) {
        const QPoly a = gen.next();
        const QPoly b = gen.next();
        ASSERT_EQ(qrr::eval_one(a * b), qrr::eval_one(a) * qrr::eval_one(b));
        ASSERT_EQ(qrr::eval_one(a + b), qrr::eval_one(a) + qrr::eval_one(b));
    }
}

TEST(DenseAccumulator, SumsShiftedCopies) {
    qrr::DenseAccumulator acc;
    acc.add(P("1 + q"), 2, 3);
    acc.add(P("q^4"), -2, 0);
    acc.add_term(0, 5);
    EXPECT_EQ(acc.release(), P("5 + 2*q^3"));
}

TEST(BiPolyEval, Examples) {
    EXPECT_EQ(qrr::bipoly_eval(BiPoly::monomial(1, 0, 2), 3), P("q^6"));
    EXPECT_EQ(qrr::bipoly_eval(qrr::parse_bipoly("q - q^2*t"), 0), P("q - q^2"));
    // Middle coefficient of the first Bressoud recursion at lowest index 1.
    EXPECT_EQ(qrr::bipoly_eval(qrr::parse_bipoly("1 + q - q^2*t + q^3*t^2"), 1), P("1 + q - q^3 + q^5"));
}

TEST(BiPoly, ContentAndLeadingTerm) {
    const BiPoly c = qrr::parse_bipoly("6*q - 4*q^3*t + 10*t^2");
    EXPECT_EQ(qrr::content(c), 2);
    ASSERT_NE(c.leading_term(), nullptr);
    EXPECT_EQ(c.leading_term()->exponent, (qrr::BiExponent{0, 2}));
    EXPECT_EQ(c.q_degree(), 3);
    EXPECT_EQ(c.t_degree(), 2);
    EXPECT_EQ(c.divexact(2), qrr::parse_bipoly("3*q - 2*q^3*t + 5*t^2"));
    EXPECT_THROW(c.divexact(4), std::logic_error);
}
