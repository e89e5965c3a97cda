#include "qsum/cli/selftest.hpp"

#include "qsum/catalog/chains.hpp"
#include "qsum/catalog/checks.hpp"
#include "qsum/catalog/substitute.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace qsum::cli {

using namespace catalog;
using core::MonoParam;

std::string to_string(SuiteStatus s) {
    switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace {

constexpr long kShiftCases = 200;

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

long draw(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// c*q^e with c != 1, so no factor 1 - c*q^j can vanish.
Param random_mono(std::mt19937_64& rng) {
    while (true) {
        long p = 0;
        while (p == 0) p = draw(rng, -10, 10);
        const long r = draw(rng, 1, 10);
        if (p == r) continue;
        return Param(MonoParam(exact::BigRational(p, r), draw(rng, -3, 3)));
    }
}

void finish(SuiteResult& s) {
    if (s.status != SuiteStatus::Skipped) s.status = s.failures.empty() ? SuiteStatus::Pass : SuiteStatus::Fail;
}

SuiteResult skipped(const std::string& name, const std::string& why) {
    SuiteResult s;
    s.name = name;
    s.status = SuiteStatus::Skipped;
    s.note = why;
    return s;
}

using ShiftCase = std::function<std::pair<Scalar, Scalar>(std::mt19937_64&, std::string&)>;

SuiteResult shift_suite(const std::string& name, std::uint64_t seed, std::uint64_t stream, const ShiftCase& one) {
    SuiteResult s;
    s.name = name;
    for (long i = 0; i < kShiftCases; ++i) {
        auto rng = rng_for(seed, stream * 1000003 + static_cast<std::uint64_t>(i));
        std::string repro;
        ++s.cases;
        try {
            const auto [lhs, rhs] = one(rng, repro);
            if (!(lhs == rhs)) s.failures.push_back("seed " + std::to_string(seed) + " instance " + std::to_string(i) +
                                                    ": " + repro);
        } catch (const Error& e) {
            s.failures.push_back("seed " + std::to_string(seed) + " instance " + std::to_string(i) + ": " + repro +
                                 " raised " + e.what());
        }
    }
    finish(s);
    return s;
}

std::vector<SuiteResult> shift_suites(std::uint64_t seed) {
    const Param q(MonoParam::q_power(1));
    std::vector<SuiteResult> out;
    out.push_back(shift_suite("shift_split", seed, 1, [&](auto& rng, std::string& repro) {
        const Param a = random_mono(rng);
        const long n = draw(rng, -6, 6), k = draw(rng, -6, 6);
        repro = "a=" + a.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        return core::shift_split(a, q, n, k);
    }));
    out.push_back(shift_suite("negative_index", seed, 2, [&](auto& rng, std::string& repro) {
        const Param a = random_mono(rng);
        const long n = draw(rng, -6, 6);
        repro = "a=" + a.to_string() + " n=" + std::to_string(n);
        return core::negative_index(a, q, n);
    }));
    out.push_back(shift_suite("shift_base", seed, 3, [&](auto& rng, std::string& repro) {
        const Param a = random_mono(rng);
        const long n = draw(rng, -6, 6), k = draw(rng, -6, 6);
        repro = "a=" + a.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        return core::shift_base(a, q, n, k);
    }));
    out.push_back(shift_suite("ratio_shift", seed, 4, [&](auto& rng, std::string& repro) {
        const Param a = random_mono(rng), b = random_mono(rng);
        const long n = draw(rng, -6, 6), k = draw(rng, -6, 6);
        repro = "a=" + a.to_string() + " b=" + b.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        return core::ratio_shift(a, b, q, n, k);
    }));
    return out;
}

std::string repro_of(std::uint64_t seed, long instance, const VerificationReport& r) {
    std::string s = cli_name(r.id) + " seed " + std::to_string(seed) + " instance " + std::to_string(instance) + ":";
    for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
    s += " -> " + to_string(r.status);
    if (!r.detail.empty()) s += " (" + r.detail + ")";
    return s;
}

SuiteResult sweep_suite(const Catalog& catalog, const std::string& name, const std::vector<IdentityId>& ids,
                        long count, const SweepOptions& opt, std::uint64_t seed) {
    SuiteResult s;
    s.name = name;
    for (IdentityId id : ids) {
        const auto res = sweep_random(catalog, id, count, seed, opt);
        s.cases += count;
        for (long i : res.failures) s.failures.push_back(repro_of(seed, i, res.reports[static_cast<std::size_t>(i)]));
    }
    finish(s);
    return s;
}

std::vector<IdentityId> terminating(const Catalog& c) {
    std::vector<IdentityId> out;
    for (IdentityId id : all_identities())
        if (c.get(id).terminating) out.push_back(id);
    return out;
}

// Exact instances re-run in the numeric backend at q = 2/11. Sampled
// coefficients have no prime factor 11, so no factor 1 - c*q^j can vanish
// there unless it already vanishes identically.
SuiteResult backend_agreement(const Catalog& catalog, const SelftestConfig& cfg) {
    SuiteResult s;
    s.name = "backend_agreement";
    const auto ctx = numeric::PrecisionContext::make(cfg.digits);
    const core::HpComplex q0(ctx, mpq_class(2, 11));
    const SweepOptions exact_opt;
    for (IdentityId id : terminating(catalog)) {
        const IdentityDef& def = catalog.get(id);
        for (long i = 0; i < 3; ++i) {
            ++s.cases;
            std::string repro = cli_name(id) + " seed " + std::to_string(cfg.seed) + " instance " + std::to_string(i);
            try {
                std::optional<ParamSet> given;
                for (int attempt = 0; attempt < kMaxSampleAttempts && !given; ++attempt)
                    given = sample_params(def, cfg.seed, i, attempt, exact_opt);
                if (!given) throw DomainError("no admissible sample");
                const ParamSet p = resolve_with(def, *given);
                ParamSet np;
                np.q = Param(q0);
                np.n = p.n;
                np.m = p.m;
                for (const auto& [k, v] : p.sym) np.sym[k] = Param(core::evaluate_at(v.mono(), q0));
                const Scalar exact_rhs = def.rhs(p);
                const auto numeric_lhs = core::evaluate(instantiate(def.lhs, resolve_with(def, np))).value;
                const auto at_q0 = exact::rf_eval_numeric(exact_rhs.ratfun(), q0);
                if (!numeric::hp_close(numeric_lhs.complex(), at_q0, std::pow(10.0, -(cfg.digits - 10))))
                    s.failures.push_back(repro + ": numeric sum differs from the exact closed form at q=2/11");
            } catch (const Error& e) {
                s.failures.push_back(repro + ": " + e.what());
            }
        }
    }
    finish(s);
    return s;
}

SuiteResult substitution_suite(const Catalog& catalog, std::uint64_t seed) {
    SuiteResult s;
    s.name = "substitution";
    for (const auto& d : derivations()) {
        ++s.cases;
        const IdentityDef derived = substitute(catalog.get(d.source), d.rules, d.target);
        if (signature(derived) != signature(catalog.get(d.target))) {
            s.failures.push_back(cli_name(d.target) + ": substituted form differs from the catalog entry");
            continue;
        }
        const auto res = sweep_random_serial(catalog, d.target, 5, seed, SweepOptions{});
        for (std::size_t i = 0; i < res.reports.size(); ++i) {
            ++s.cases;
            ParamSet given;
            given.q = Param(MonoParam::q_power(1));
            for (const auto& [k, v] : res.reports[i].params) {
                if (k == "m") given.m = std::stol(v);
                else if (k != "q") given.sym[k[0]] = Param(MonoParam::parse(v));
            }
            const auto r = verify(derived, given);
            if (r.status != Status::Equal || r.rhs != res.reports[i].rhs)
                s.failures.push_back(repro_of(seed, static_cast<long>(i), r) + " (substituted form)");
        }
    }
    finish(s);
    return s;
}

SuiteResult reindex_suite(const Catalog& catalog, std::uint64_t seed) {
    SuiteResult s;
    s.name = "reindex_chain";
    for (IdentityId id : {IdentityId::Thm5Psi5_A, IdentityId::Thm5Psi5_B}) {
        for (long i = 0; i < 10; ++i) {
            std::optional<ParamSet> given;
            for (int attempt = 0; attempt < kMaxSampleAttempts && !given; ++attempt)
                given = sample_params(catalog.get(id), seed, i, attempt, SweepOptions{});
            ++s.cases;
            const std::string repro = cli_name(id) + " seed " + std::to_string(seed) + " instance " + std::to_string(i);
            try {
                const auto c = replay_reindex(catalog, id, *given);
                if (!c.equal) s.failures.push_back(repro + ": " + c.detail);
            } catch (const Error& e) {
                s.failures.push_back(repro + ": " + e.what());
            }
        }
    }
    finish(s);
    return s;
}

SuiteResult reversal_suite(const Catalog& catalog, std::uint64_t seed) {
    SuiteResult s;
    s.name = "reversal_chain";
    for (IdentityId id : {IdentityId::Derived4_1, IdentityId::Derived4_4}) {
        for (long m = 0; m <= 6; ++m) {
            std::optional<ParamSet> given;
            for (int attempt = 0; attempt < kMaxSampleAttempts && !given; ++attempt)
                given = sample_params(catalog.get(id), seed, m, attempt, SweepOptions{});
            given->m = m;
            ++s.cases;
            const std::string repro = cli_name(id) + " seed " + std::to_string(seed) + " m=" + std::to_string(m);
            try {
                const auto c = replay_reversal(catalog, id, *given);
                if (!c.equal) s.failures.push_back(repro + ": " + c.detail);
            } catch (const Error& e) {
                s.failures.push_back(repro + ": " + e.what());
            }
        }
    }
    finish(s);
    return s;
}

SuiteResult limit_suite(const Catalog& catalog, const SelftestConfig& cfg) {
    SuiteResult s;
    s.name = "limit";
    const auto ctx = numeric::PrecisionContext::make(cfg.digits);
    ParamSet p;
    p.q = Param(core::HpComplex(ctx, mpq_class(1, 2)));
    p.sym = {{'b', Param(core::HpComplex(ctx, 2))}, {'c', Param(core::HpComplex(ctx, 3))},
             {'d', Param(core::HpComplex(ctx, 5))}};
    for (LimitPair pair : {LimitPair::A, LimitPair::B}) {
        ++s.cases;
        try {
            if (!limit_check(catalog, pair, p, {5, 10, 20, 40}).passed)
                s.failures.push_back("pair " + to_string(pair) + " q=1/2 b=2 c=3 d=5: differences do not settle");
        } catch (const Error& e) {
            s.failures.push_back("pair " + to_string(pair) + ": " + e.what());
        }
    }
    finish(s);
    return s;
}

SuiteResult ismail_suite(const Catalog& catalog, const SelftestConfig& cfg) {
    SuiteResult s;
    s.name = "ismail_sequence";
    const auto ctx = numeric::PrecisionContext::make(cfg.digits);
    ParamSet p;
    p.q = Param(core::HpComplex(ctx, mpq_class(1, 3)));
    p.sym = {{'b', Param(core::HpComplex(ctx, 2))}, {'c', Param(core::HpComplex(ctx, 3))}};
    const double tol = std::pow(10.0, -(cfg.digits - 20));
    for (IdentityId id : {IdentityId::Thm3Psi3_A, IdentityId::Thm3Psi3_B}) {
        const auto r = ismail_sequence_check(catalog, id, p, 15, tol);
        for (const auto& row : r.rows) {
            ++s.cases;
            if (!passed(row.status) || !row.radius_ok)
                s.failures.push_back(cli_name(id) + " q=1/3 b=2 c=3 m=" + std::to_string(row.m) + ": " +
                                     to_string(row.status) + (row.radius_ok ? "" : " outside the disk"));
        }
    }
    finish(s);
    return s;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const Catalog& catalog, const SelftestConfig& cfg) {
    std::vector<SuiteResult> out = shift_suites(cfg.seed);

    SweepOptions exact;
    exact.threads = cfg.threads;
    out.push_back(backend_agreement(catalog, cfg));
    out.push_back(sweep_suite(catalog, "exact_identities", terminating(catalog), 10, exact, cfg.seed));
    out.push_back(substitution_suite(catalog, cfg.seed));
    out.push_back(reindex_suite(catalog, cfg.seed));
    out.push_back(reversal_suite(catalog, cfg.seed));

    const std::vector<std::string> infinite = {"infinite_products", "limit", "ismail_sequence"};
    if (cfg.digits < kMinDigitsForInfiniteSuites) {
        const std::string why = "needs at least " + std::to_string(kMinDigitsForInfiniteSuites) + " digits";
        for (const auto& name : infinite) out.push_back(skipped(name, why));
        return out;
    }
    SweepOptions numeric;
    numeric.mode = Backend::Numeric;
    numeric.precision = numeric::PrecisionContext::make(cfg.digits);
    numeric.tolerance = std::pow(10.0, -(cfg.digits - 20));
    numeric.threads = cfg.threads;
    out.push_back(sweep_suite(catalog, "infinite_products",
                              {IdentityId::Thm3Psi3_A, IdentityId::Thm3Psi3_B, IdentityId::Ramanujan1Psi1,
                               IdentityId::Bailey6Psi6},
                              5, numeric, cfg.seed));
    out.push_back(limit_suite(catalog, cfg));
    out.push_back(ismail_suite(catalog, cfg));
    return out;
}

}  // namespace qsum::cli
