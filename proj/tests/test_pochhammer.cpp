#include "oracle.hpp"

#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qsum;
using namespace qsum::core;
using exact::QPoly;
using exact::QRatFun;

namespace {

const Param q(MonoParam::q_power(1));
Param M(const char* s) { return Param(MonoParam::parse(s)); }
QRatFun value(const Prod& p) { return p.to_scalar().ratfun(); }
const mpq_class q0(3, 11);

Param random_mono(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> p(-10, 10), r(1, 10), e(-5, 5);
    while (true) {
        const long a = p(rng), b = r(rng);
        if (a == 0 || a == b) continue;
        return Param(MonoParam(BigRational(a, b), static_cast<int>(e(rng))));
    }
}

mpq_class at(const Scalar& s) { return oracle::at(s.ratfun(), q0); }
mpq_class at(const Param& p) { return oracle::at(p.mono(), q0); }
mpq_class P(const mpq_class& a, long n) { return *oracle::poch(a, q0, n); }

}  // namespace

TEST(Poch, Examples) {
    EXPECT_EQ(value(poch(M("5/3*q^2"), q, 0)), QRatFun(1));
    EXPECT_THROW(poch(q, q, -1), PoleError);
    EXPECT_EQ(value(poch(M("2*q"), q, 2)), QRatFun(QPoly({1, -2, -2, 4}, 0)));
}

TEST(Poch, NegativeIndexMatchesOracle) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Param a = random_mono(rng);
        const long n = std::uniform_int_distribution<long>(-6, 6)(rng);
        ASSERT_EQ(oracle::at(value(poch(a, q, n)), q0), P(at(a), n)) << a.to_string() << " " << n;
    }
}

TEST(Poch, PoleNamesParameterAndIndex) {
    try {
        poch(M("q^2"), q, -3, "b");
        FAIL() << "expected a pole";
    } catch (const PoleError& e) {
        EXPECT_EQ(e.parameter(), "b");
        EXPECT_EQ(e.index(), -3);
    }
}

TEST(Poch, ReciprocalOfNegativeIndexMayVanish) {
    // 1/(q;q)_{-1} = (1;q)_1 = 0
    EXPECT_TRUE(reciprocal_poch(q, q, -1).is_zero());
    EXPECT_THROW(reciprocal_poch(M("q^-1"), q, 2), PoleError);
}

TEST(Poch, ExactBaseMustBeQ) { EXPECT_THROW(poch(M("2"), M("q^2"), 2), DomainError); }

TEST(Poch, InfiniteProductMatchesPartialProducts) {
    const auto ctx = numeric::PrecisionContext::make(60);
    const HpComplex half(ctx, mpq_class(1, 2));
    HpComplex direct(ctx, 1), x = half;
    for (int k = 0; k < 250; ++k) {
        direct *= HpComplex(ctx, 1) - x;
        x *= half;
    }
    EXPECT_TRUE(numeric::hp_close(poch_infinite(half, half), direct, 1e-50));
    const Scalar via_scalar = poch(Scalar(half), Scalar(half), PochIndex::infinity());
    EXPECT_TRUE(numeric::hp_close(via_scalar.complex(), direct, 1e-50));
}

TEST(Poch, InfiniteIndexNeedsNumericBase) {
    EXPECT_THROW(poch(Scalar(QRatFun(2)), Scalar(QRatFun::q()), PochIndex::infinity()), DomainError);
    const auto ctx = numeric::PrecisionContext::make(30);
    EXPECT_THROW(poch_infinite(HpComplex(ctx, 2), HpComplex(ctx, 1)), DomainError);
    EXPECT_THROW(poch_infinite(HpComplex(ctx, 2), HpComplex(ctx, mpq_class(95, 100))), DomainError);
    EXPECT_FALSE(check_numeric_base(HpComplex(ctx, mpq_class(8, 10))).empty());
    EXPECT_TRUE(check_numeric_base(HpComplex(ctx, mpq_class(1, 2))).empty());
}

TEST(Poch, GeneralScalarEntry) {
    // Non-monomial exact a is expanded directly: (1+q;q)_2 = (-q)(1-q-q^2)
    const Scalar a(QRatFun(QPoly({1, 1}, 0)));
    const Scalar expected(QRatFun(QPoly({0, -1, 1, 1}, 0)));
    EXPECT_EQ(poch(a, Scalar(QRatFun::q()), 2), expected);
}

TEST(ShiftSplit, Examples) {
    auto [l0, r0] = shift_split(M("7/3*q"), q, 0, 0);
    EXPECT_EQ(l0, Scalar(QRatFun(1)));
    EXPECT_EQ(r0, Scalar(QRatFun(1)));
    const Scalar expected(QRatFun(QPoly({1, -2}, 0)) * QRatFun(QPoly({1, 0, -2}, 0)));
    auto [l1, r1] = shift_split(M("2*q"), q, 1, 1);
    EXPECT_EQ(l1, expected);
    EXPECT_EQ(r1, expected);
    auto [l2, r2] = shift_split(M("3*q^2"), q, 2, -1);
    EXPECT_EQ(l2, r2);
}

TEST(ShiftBase, Examples) {
    const Param a = M("-4/9*q^3");
    for (long k = -3; k <= 3; ++k) {
        auto [l, r] = shift_base(a, q, 0, k);
        EXPECT_EQ(l, r);
        EXPECT_EQ(l, poch(a, q, k).to_scalar());
    }
    auto [l1, r1] = shift_base(M("2*q"), q, 1, 2);
    EXPECT_EQ(l1, r1);
}

// a = q, n = k = 1: the factor (q/a)_n = (1;q)_1 vanishes in a numerator and
// (aq^-n)_k = (1;q)_1 vanishes on the left, so both sides are 0 rather than
// a pole; (q^(1-k)/a)_n = (q^-1;q)_1 is nonzero.
TEST(ShiftBase, DegenerateCaseIsZeroOnBothSides) {
    auto [l, r] = shift_base(q, q, 1, 1);
    EXPECT_TRUE(l.is_zero());
    EXPECT_TRUE(r.is_zero());
}

TEST(NegativeIndex, MatchesOracle) {
    for (long n = -6; n <= 6; ++n) {
        auto [l, r] = negative_index(M("5/2*q^-1"), q, n);
        EXPECT_EQ(l, r);
        EXPECT_EQ(at(l), P(mpq_class(5, 2) / q0, -n));
    }
}

TEST(RatioShift, Examples) {
    const Param a = M("2*q"), b = M("3*q");
    auto [l0, r0] = ratio_shift(a, b, q, 3, 0);
    EXPECT_EQ(l0, r0);
    EXPECT_EQ(l0, poch(a, q, 3).to_scalar() / poch(b, q, 3).to_scalar());
    auto [l1, r1] = ratio_shift(a, b, q, 3, 1);
    EXPECT_EQ(l1, r1);
    auto [l2, r2] = ratio_shift(a, b, q, 4, 4);
    EXPECT_EQ(l2, Scalar(QRatFun(1)));
    EXPECT_EQ(r2, Scalar(QRatFun(1)));
}

TEST(ShiftFormulas, RandomizedAgainstOracle) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> idx(-6, 6);
    for (int i = 0; i < 300; ++i) {
        const Param a = random_mono(rng), b = random_mono(rng);
        const long n = idx(rng), k = idx(rng);
        const mpq_class a0 = at(a), b0 = at(b);
        {
            auto [l, r] = shift_split(a, q, n, k);
            ASSERT_EQ(l, r);
            ASSERT_EQ(at(l), P(a0, n + k));
        }
        {
            auto [l, r] = shift_base(a, q, n, k);
            ASSERT_EQ(l, r);
            ASSERT_EQ(at(l), P(a0 * oracle::power(q0, -n), k));
        }
        {
            auto [l, r] = ratio_shift(a, b, q, n, k);
            ASSERT_EQ(l, r);
            ASSERT_EQ(at(l), P(a0, n - k) / P(b0, n - k));
        }
        {
            auto [l, r] = negative_index(a, q, n);
            ASSERT_EQ(l, r);
            ASSERT_EQ(at(l), P(a0, -n));
        }
    }
}
