#include "qsum/catalog/chains.hpp"
#include "qsum/catalog/checks.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/error.hpp"

#include <gtest/gtest.h>

using namespace qsum;
using namespace qsum::catalog;

namespace {

ParamSet numeric_set(const numeric::PrecisionContext& ctx, mpq_class q0,
                     std::initializer_list<std::pair<char, mpq_class>> sym) {
    ParamSet p;
    p.q = Param(HpComplex(ctx, q0));
    for (const auto& [s, v] : sym) p.sym[s] = Param(HpComplex(ctx, v));
    return p;
}

const auto ctx60 = numeric::PrecisionContext::make(60);

}  // namespace

TEST(Limit, ConvergesAlongTheGrid) {
    for (LimitPair pair : {LimitPair::A, LimitPair::B}) {
        const auto r = limit_check(default_catalog(), pair, numeric_set(ctx60, mpq_class(1, 2), {{'b', 2}, {'c', 3}, {'d', 5}}),
                                   {5, 10, 20, 40});
        ASSERT_EQ(r.rows.size(), 4u);
        EXPECT_TRUE(r.asserted);
        EXPECT_TRUE(r.decreasing);
        EXPECT_TRUE(r.final_within);
        EXPECT_TRUE(r.passed);
        for (std::size_t i = 1; i < r.rows.size(); ++i) EXPECT_LT(*r.rows[i].diff, *r.rows[i - 1].diff);
        EXPECT_LT(r.rows.back().diff->to_double(), 1e-10);
    }
}

TEST(Limit, SinglePointGridIsNotAsserted) {
    const auto r = limit_check(default_catalog(), LimitPair::A,
                               numeric_set(ctx60, mpq_class(1, 2), {{'b', 2}, {'c', 3}, {'d', 5}}), {5});
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_FALSE(r.asserted);
    EXPECT_TRUE(r.passed);
}

TEST(Limit, PairBCarriesTheOneMinusQFactor) {
    const auto r = limit_check(default_catalog(), LimitPair::B,
                               numeric_set(ctx60, mpq_class(1, 2), {{'b', 2}, {'c', 3}, {'d', 5}}), {0});
    ASSERT_TRUE(r.rows[0].finite);
    EXPECT_TRUE(numeric::hp_close(*r.rows[0].finite, HpComplex(ctx60, mpq_class(1, 2)), 1e-55));
    const auto a = limit_check(default_catalog(), LimitPair::A,
                               numeric_set(ctx60, mpq_class(1, 2), {{'b', 2}, {'c', 3}, {'d', 5}}), {0});
    EXPECT_TRUE(numeric::hp_close(*a.rows[0].finite, HpComplex(ctx60, 1), 1e-55));
}

TEST(Limit, NeedsNumericMode) {
    ParamSet p;
    p.q = Param(core::MonoParam::q_power(1));
    EXPECT_THROW(limit_check(default_catalog(), LimitPair::A, p, {5}), DomainError);
}

TEST(Ismail, BothThreePsiThreeAgreeOnTheSequence) {
    for (IdentityId id : {IdentityId::Thm3Psi3_A, IdentityId::Thm3Psi3_B}) {
        const auto r = ismail_sequence_check(default_catalog(), id,
                                             numeric_set(ctx60, mpq_class(1, 3), {{'b', 2}, {'c', 3}}), 15);
        ASSERT_EQ(r.rows.size(), 15u);
        EXPECT_TRUE(r.passed) << cli_name(id);
        for (const auto& row : r.rows) {
            EXPECT_EQ(row.status, Status::WithinTolerance) << row.m << " " << row.detail;
            EXPECT_TRUE(row.radius_ok) << row.m;
            ASSERT_TRUE(row.diff);
            EXPECT_LT(row.diff->to_double(), 1e-40);
        }
    }
}

TEST(Ismail, SmallRadiusIsFlaggedButReported) {
    const auto r = ismail_sequence_check(default_catalog(), IdentityId::Thm3Psi3_A,
                                         numeric_set(ctx60, mpq_class(1, 3), {{'b', mpq_class(1, 10)}, {'c', mpq_class(1, 10)}}), 3);
    ASSERT_EQ(r.rows.size(), 3u);
    for (const auto& row : r.rows) EXPECT_FALSE(row.radius_ok) << row.m;
}

TEST(Chains, ReindexReplay) {
    SweepOptions opt;
    for (IdentityId id : {IdentityId::Thm5Psi5_A, IdentityId::Thm5Psi5_B}) {
        int done = 0;
        for (long i = 0; done < 10 && i < 50; ++i) {
            auto p = sample_params(default_catalog().get(id), 11, i, 0, opt);
            if (!p) continue;
            try {
                const auto c = replay_reindex(default_catalog(), id, *p);
                EXPECT_TRUE(c.equal) << c.detail;
                ++done;
            } catch (const PoleError&) {
            }
        }
        EXPECT_EQ(done, 10);
    }
}

TEST(Chains, ReversalReplay) {
    SweepOptions opt;
    for (IdentityId id : {IdentityId::Derived4_1, IdentityId::Derived4_4}) {
        for (long m = 0; m <= 6; ++m) {
            ParamSet p;
            p.q = Param(core::MonoParam::q_power(1));
            p.m = m;
            p.sym['b'] = Param(core::MonoParam::parse("2*q"));
            p.sym['c'] = Param(core::MonoParam::parse("-3/5*q^2"));
            const auto c = replay_reversal(default_catalog(), id, p);
            EXPECT_TRUE(c.equal) << cli_name(id) << " m=" << m << ": " << c.detail;
        }
    }
}
