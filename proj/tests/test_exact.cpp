#include "oracle.hpp"

#include "qsum/error.hpp"
#include "qsum/exact/factored.hpp"
#include "qsum/exact/qratfun.hpp"
#include "qsum/numeric/hp_complex.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qsum;
using namespace qsum::exact;

namespace {

QPoly P(std::vector<BigRational> c, int off = 0) { return QPoly(std::move(c), off); }
const QRatFun one_minus_q(P({1, -1}));

QRatFun random_ratfun(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 3), off(-2, 2);
    auto poly = [&] {
        std::vector<BigRational> c;
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), 1 + (coef(rng) + 5) % 3);
        return P(c, off(rng));
    };
    QPoly den = poly();
    while (den.is_zero()) den = poly();
    return QRatFun(poly(), den);
}

}  // namespace

TEST(QRatFun, AddExamples) {
    const QRatFun y(P({3, 1}), P({1, 2}));
    EXPECT_EQ(QRatFun() + y, y);
    const QRatFun inv = QRatFun(1) / one_minus_q;
    EXPECT_TRUE((inv + (-inv)).is_zero());
    const QRatFun one_plus_q(P({1, 1}));
    const QRatFun sum = QRatFun(1) / one_minus_q + QRatFun(1) / one_plus_q;
    EXPECT_EQ(sum, QRatFun(P({2}), P({1, 0, -1})));
    EXPECT_EQ(sum.den(), P({1, 0, -1}));
}

TEST(QRatFun, MulExamples) {
    const QRatFun y(P({3, 1}), P({1, 2}));
    EXPECT_EQ(QRatFun(1) * y, y);
    EXPECT_EQ(one_minus_q * (QRatFun(1) / one_minus_q), QRatFun(1));
    EXPECT_EQ(QRatFun(P({1, -2})) * QRatFun(P({1, 0, -2})), QRatFun(P({1, -2, -2, 4})));
}

TEST(QRatFun, DivExamples) {
    const QRatFun x(P({3, 1}), P({1, 2}));
    EXPECT_EQ(x / QRatFun(1), x);
    EXPECT_EQ(x / x, QRatFun(1));
    const QRatFun r = QRatFun(1) / one_minus_q;
    EXPECT_EQ(r.num(), P({1}));
    EXPECT_EQ(r.den(), P({1, -1}));
    EXPECT_THROW(x / QRatFun(), DivisionByZero);
}

TEST(QRatFun, CanonicalForm) {
    // q^2 (2 - 4q) / (6 q^5 - 12 q^6) = 1 / (3 q^3)
    const QRatFun x(P({2, -4}, 2), P({6, -12}, 5));
    EXPECT_EQ(x, QRatFun(QPoly::monomial(BigRational(1, 3), -3)));
    EXPECT_EQ(x.den().coeff(0), 1);
    EXPECT_EQ(QRatFun::parse(x.to_string()), x);
}

TEST(QRatFun, FieldAxiomsRandomized) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const QRatFun x = random_ratfun(rng), y = random_ratfun(rng), z = random_ratfun(rng);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + y, y + x);
        ASSERT_TRUE((x - x).is_zero());
        if (!x.is_zero()) ASSERT_EQ(x / x, QRatFun(1));
        // Normalization is idempotent.
        ASSERT_EQ(QRatFun(x.num(), x.den()), x);
    }
}

TEST(QRatFun, AgreesWithRationalPointOracle) {
    std::mt19937_64 rng(7);
    const mpq_class q0(2, 7);
    for (int i = 0; i < 200; ++i) {
        const QRatFun x = random_ratfun(rng), y = random_ratfun(rng);
        if (oracle::at(y.num(), q0) == 0 || oracle::at(x.den(), q0) == 0 || oracle::at(y.den(), q0) == 0) continue;
        ASSERT_EQ(oracle::at(x + y, q0), oracle::at(x, q0) + oracle::at(y, q0));
        ASSERT_EQ(oracle::at(x * y, q0), oracle::at(x, q0) * oracle::at(y, q0));
        ASSERT_EQ(oracle::at(x / y, q0), oracle::at(x, q0) / oracle::at(y, q0));
    }
}

TEST(QRatFun, LaurentShiftRoundTrip) {
    const QRatFun x(P({1, 5, -2}), P({1, 3}));
    for (int k = 0; k <= 50; ++k) {
        const QRatFun qk(QPoly::monomial(1, k));
        ASSERT_EQ(x * QRatFun(QPoly::monomial(1, -k)) * qk, x);
    }
}

TEST(QRatFun, NumericEvaluation) {
    const auto ctx = numeric::PrecisionContext::make(60);
    const numeric::HpComplex half(ctx, mpq_class(1, 2)), third(ctx, mpq_class(1, 3));
    EXPECT_TRUE(numeric::hp_close(rf_eval_numeric(QRatFun(1), third), numeric::HpComplex(ctx, 1), 1e-55));
    EXPECT_TRUE(numeric::hp_close(rf_eval_numeric(QRatFun(1) / one_minus_q, half), numeric::HpComplex(ctx, 2), 1e-55));
    const QRatFun prod(P({1, -2, -2, 4}));
    EXPECT_TRUE(numeric::hp_close(rf_eval_numeric(prod, third), numeric::HpComplex(ctx, mpq_class(7, 27)), 1e-55));
    EXPECT_THROW(rf_eval_numeric(QRatFun(1) / one_minus_q, numeric::HpComplex(ctx, 1)), PoleError);
}

TEST(QRatFun, NumericEvaluationCommutesWithArithmetic) {
    std::mt19937_64 rng(99);
    const auto ctx = numeric::PrecisionContext::make(60);
    const numeric::HpComplex q0 = numeric::HpComplex::parse(ctx, "0.37+0.21i");
    for (int i = 0; i < 100; ++i) {
        const QRatFun x = random_ratfun(rng), y = random_ratfun(rng);
        ASSERT_TRUE(
            numeric::hp_close(rf_eval_numeric(x * y, q0), rf_eval_numeric(x, q0) * rf_eval_numeric(y, q0), 1e-55));
    }
}

TEST(QPoly, GcdAndDivision) {
    // (1-q)(1+2q) and (1-q)(3-q)
    const QPoly a = P({1, -1}) * P({1, 2}), b = P({1, -1}) * P({3, -1});
    EXPECT_EQ(gcd(a, b), P({1, -1}));
    const auto d = divide(a, P({1, -1}));
    EXPECT_EQ(d.quotient, P({1, 2}));
    EXPECT_TRUE(d.remainder.is_zero());
    EXPECT_EQ(QPoly::parse(a.to_string()), a);
}

TEST(Factored, ExpandsProductsAndSums) {
    // (1-2q)(1-2q^2)
    Factored f = Factored::one_minus(2, 1) * Factored::one_minus(2, 2);
    EXPECT_EQ(f.to_qratfun(), QRatFun(P({1, -2, -2, 4})));
    const Factored g = Factored::monomial(3, 2) / Factored::one_minus(1, 1);
    const std::vector<Factored> terms{f, g, Factored::constant(-1)};
    const QRatFun expected = f.to_qratfun() + g.to_qratfun() - QRatFun(1);
    EXPECT_EQ(sum(terms), expected);
    EXPECT_EQ(sum(terms, true), expected);
    EXPECT_TRUE(Factored::one_minus(1, 0).is_zero());
    EXPECT_THROW(f / Factored::zero(), DivisionByZero);
}
