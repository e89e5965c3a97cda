// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracle.hpp"

#include "qsum/catalog/chains.hpp"
#include "qsum/catalog/checks.hpp"
#include "qsum/catalog/substitute.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/catalog/verify.hpp"
#include "qsum/cli/app.hpp"
#include "qsum/core/pochhammer.hpp"
#include "qsum/core/series.hpp"
#include "qsum/error.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qsum;
using namespace qsum::catalog;
using core::MonoParam;
using exact::QRatFun;

namespace {

const Param kQ(MonoParam::q_power(1));
// Sampled coefficients have prime factors <= 7, so no factor 1 - c*q^j can
// vanish at these points unless it vanishes identically.
const mpq_class kPoints[] = {mpq_class(2, 11), mpq_class(-3, 13)};

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    Param mono(long emin = 0, long emax = 3) {
        long p = 0;
        while (p == 0) p = uniform(-10, 10);
        return Param(MonoParam(BigRational(p, uniform(1, 10)), static_cast<int>(uniform(emin, emax))));
    }

private:
    std::mt19937_64 g_;
};

std::vector<mpq_class> at(const std::vector<Param>& v, const mpq_class& q0) {
    std::vector<mpq_class> out;
    for (const auto& p : v) out.push_back(oracle::at(p.mono(), q0));
    return out;
}

mpq_class window(const core::SeriesSpec& s, const mpq_class& q0, long lo, long hi) {
    return oracle::window_sum(at(s.num, q0), at(s.den, q0), oracle::at(s.z.mono(), q0), q0,
                              s.kind == core::SeriesKind::Unilateral, lo, hi);
}

std::string describe(const VerificationReport& r) {
    std::string s = cli_name(r.id) + " " + to_string(r.status);
    for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
    return s;
}

// Verify one exact instance and confirm the closed form against the
// brute-force sum over k = lo..hi at two rational points. Returns false on a
// pole so the caller can draw again.
bool check_exact(IdentityId id, const ParamSet& given, long lo_off, long hi_off, Outcome& o) {
    const auto& cat = default_catalog();
    const auto r = verify(cat, id, given);
    if (r.status == Status::Pole) return false;
    if (r.status != Status::Equal) {
        o.fail(describe(r) + " " + r.detail);
        return true;
    }
    const ParamSet p = cat.resolve_params(id, given);
    const auto spec = cat.lhs_series(id, p);
    const long n = spec.termination.value_or(0);
    const QRatFun rhs = QRatFun::parse(*r.rhs);
    for (const auto& q0 : kPoints) {
        try {
            const long lo = spec.kind == core::SeriesKind::Unilateral ? 0 : -(n + lo_off);
            if (oracle::at(rhs, q0) != window(spec, q0, lo, n + hi_off))
                o.fail(describe(r) + ": window oracle disagrees");
        } catch (const std::exception& e) {
            o.fail(describe(r) + ": oracle " + e.what());
        }
    }
    return true;
}

template <class Draw>
void run_exact(IdentityId id, long per, Rng& rng, long lo_off, long hi_off, Outcome& o, long& done, Draw draw) {
    for (long i = 0; i < per; ++i) {
        bool evaluated = false;
        for (int attempt = 0; attempt < kMaxSampleAttempts && !evaluated; ++attempt)
            evaluated = check_exact(id, draw(rng), lo_off, hi_off, o);
        if (!evaluated) o.fail(cli_name(id) + ": no pole-free sample");
        ++done;
    }
}

ParamSet with_letters(Rng& rng, const std::vector<char>& letters, std::optional<long> n, std::optional<long> m) {
    ParamSet p;
    p.q = kQ;
    p.n = n;
    p.m = m;
    for (char c : letters) p.sym[c] = rng.mono();
    return p;
}

// ---------------------------------------------------------------- criteria

Outcome shift_suite() {
    Outcome o;
    Rng rng(101);
    const mpq_class q0(2, 11);
    auto val = [&](const core::Scalar& s) { return oracle::at(s.ratfun(), q0); };
    auto pt = [&](const Param& p) { return oracle::at(p.mono(), q0); };
    auto P = [&](const mpq_class& a, long n) { return *oracle::poch(a, q0, n); };
    auto draw = [&] {
        Param a = rng.mono(-5, 5);
        while (a.mono().coeff() == 1) a = rng.mono(-5, 5);
        return a;
    };
    long cases = 0;
    for (int i = 0; i < 1000; ++i) {
        const Param a = draw(), b = draw();
        const long n = rng.uniform(-6, 6), k = rng.uniform(-6, 6);
        try {
            auto [l1, r1] = core::shift_split(a, kQ, n, k);
            if (!(l1 == r1) || val(l1) != P(pt(a), n + k)) o.fail("shift_split a=" + a.to_string());
            auto [l2, r2] = core::negative_index(a, kQ, n);
            if (!(l2 == r2) || val(l2) != P(pt(a), -n)) o.fail("negative_index a=" + a.to_string());
            auto [l3, r3] = core::shift_base(a, kQ, n, k);
            if (!(l3 == r3) || val(l3) != P(pt(a) * oracle::power(q0, -n), k)) o.fail("shift_base a=" + a.to_string());
            auto [l4, r4] = core::ratio_shift(a, b, kQ, n, k);
            if (!(l4 == r4) || val(l4) != P(pt(a), n - k) / P(pt(b), n - k)) o.fail("ratio_shift a=" + a.to_string());
            cases += 4;
        } catch (const Error& e) {
            o.fail(std::string("shift formulas: ") + e.what());
        }
    }
    o.note = o.ok ? std::to_string(cases) + " instances exact, oracle-confirmed" : o.note;
    return o;
}

Outcome psi_sum(IdentityId id, long lo_off) {
    Outcome o;
    Rng rng(id == IdentityId::Thm5Psi5_A ? 202 : 303);
    long done = 0;
    for (long n = 0; n <= 8; ++n)
        run_exact(id, 50, rng, lo_off, 0, o, done,
                  [&](Rng& r) { return with_letters(r, {'b', 'c', 'd'}, n, std::nullopt); });
    if (o.ok) o.note = std::to_string(done) + " instances Equal, window oracle agrees";
    return o;
}

bool carlitz_constraint_confirmed(std::string& why) {
    const IdentityDef& d = default_catalog().get(IdentityId::Carlitz5Phi4);
    const mpq_class q0(2, 7);
    auto holds = [&](long (*exp)(long, long)) {
        for (long n = 0; n <= 6; ++n) {
            const long m = n / 2;
            ParamSet p;
            p.q = kQ;
            p.n = n;
            p.m = m;
            p.sym['b'] = Param(MonoParam::parse("2*q"));
            p.sym['c'] = Param(MonoParam::parse("-3"));
            p.sym['d'] = Param(MonoParam::parse("5/2*q^2"));
            p.sym['e'] = Param(MonoParam(BigRational(-1, 15), static_cast<int>(exp(n, m) - 3)));
            try {
                if (oracle::at(d.rhs(p).ratfun(), q0) != window(instantiate(d.lhs, p), q0, 0, n)) return false;
            } catch (const std::exception&) {
                return false;
            }
        }
        return true;
    };
    const bool stated = holds([](long n, long m) { return 1 + m - 2 * n; });
    const bool alt1 = holds([](long n, long m) { return 1 + m - n; });
    const bool alt2 = holds([](long, long m) { return 1 - m; });
    if (!stated || alt1 || alt2) why = "constraint bcde = q^(1+m-2n) not singled out by the finite sum";
    return stated && !alt1 && !alt2;
}

Outcome carlitz_five_phi_four() {
    Outcome o;
    std::string why;
    if (!carlitz_constraint_confirmed(why)) o.fail(why);
    Rng rng(404);
    long done = 0;
    for (long n = 0; n <= 9; ++n)
        run_exact(IdentityId::Carlitz5Phi4, 20, rng, 0, 0, o, done,
                  [&](Rng& r) { return with_letters(r, {'b', 'c', 'd'}, n, std::nullopt); });
    if (o.ok) o.note = "constraint confirmed for n<=6; " + std::to_string(done) + " instances Equal (n<=9)";
    return o;
}

Outcome jackson_and_carlitz() {
    Outcome o;
    Rng rng(505);
    long done = 0;
    for (long m = 0; m <= 8; ++m)
        run_exact(IdentityId::Jackson3Phi2, 10, rng, 0, 0, o, done,
                  [&](Rng& r) { return with_letters(r, {'a', 'b'}, std::nullopt, m); });
    for (long n = 0; n <= 8; ++n)
        run_exact(IdentityId::Carlitz3Phi2, 10, rng, 0, 0, o, done,
                  [&](Rng& r) { return with_letters(r, {'a', 'b', 'z'}, n, std::nullopt); });
    if (o.ok) o.note = std::to_string(done) + " instances Equal (m<=8, n<=8), finite-sum oracle agrees";
    return o;
}

Outcome proof_replay_reindex() {
    Outcome o;
    Rng rng(606);
    long done = 0;
    for (IdentityId id : {IdentityId::Thm5Psi5_A, IdentityId::Thm5Psi5_B}) {
        for (int i = 0; i < 20; ++i) {
            bool ran = false;
            for (int attempt = 0; attempt < kMaxSampleAttempts && !ran; ++attempt) {
                try {
                    const auto c =
                        replay_reindex(default_catalog(), id, with_letters(rng, {'b', 'c', 'd'}, rng.uniform(0, 8), std::nullopt));
                    if (!c.equal) o.fail(cli_name(id) + ": " + c.detail);
                    ran = true;
                    ++done;
                } catch (const PoleError&) {
                }
            }
            if (!ran) o.fail(cli_name(id) + ": no pole-free sample");
        }
    }
    for (const auto& d : derivations()) {
        const auto derived = substitute(default_catalog().get(d.source), d.rules, d.target);
        if (signature(derived) != signature(default_catalog().get(d.target)))
            o.fail(cli_name(d.target) + ": substituted form differs from the catalog entry");
    }
    if (o.ok) o.note = std::to_string(done) + " reindex replays exact; 4 substituted forms byte-identical";
    return o;
}

ParamSet numeric_bcd(const numeric::PrecisionContext& ctx, mpq_class q0, bool with_d) {
    ParamSet p;
    p.q = Param(core::HpComplex(ctx, q0));
    p.sym['b'] = Param(core::HpComplex(ctx, 2));
    p.sym['c'] = Param(core::HpComplex(ctx, 3));
    if (with_d) p.sym['d'] = Param(core::HpComplex(ctx, 5));
    return p;
}

Outcome limits() {
    Outcome o;
    const auto ctx = numeric::PrecisionContext::make(60);
    std::string diffs;
    for (LimitPair pair : {LimitPair::A, LimitPair::B}) {
        const auto r = limit_check(default_catalog(), pair, numeric_bcd(ctx, mpq_class(1, 2), true), {5, 10, 20, 40}, 1e-10);
        if (!(r.passed && r.decreasing && r.final_within)) o.fail("pair " + to_string(pair) + " did not converge");
        if (!r.rows.empty() && r.rows.back().diff) diffs += " " + to_string(pair) + ":" + r.rows.back().diff->to_string(3);
    }
    if (o.ok) o.note = "strictly decreasing; n=40 diffs" + diffs;
    return o;
}

Outcome ismail() {
    Outcome o;
    const auto ctx = numeric::PrecisionContext::make(60);
    for (IdentityId id : {IdentityId::Thm3Psi3_A, IdentityId::Thm3Psi3_B}) {
        const auto r = ismail_sequence_check(default_catalog(), id, numeric_bcd(ctx, mpq_class(1, 3), false), 15, 1e-40);
        if (r.rows.size() != 15) o.fail(cli_name(id) + ": wrong row count");
        for (const auto& row : r.rows) {
            if (row.status != Status::WithinTolerance || !row.radius_ok)
                o.fail(cli_name(id) + " m=" + std::to_string(row.m) + ": " + to_string(row.status) + " " + row.detail);
        }
    }
    Rng rng(808);
    long replays = 0;
    for (IdentityId id : {IdentityId::Derived4_1, IdentityId::Derived4_4}) {
        for (long m = 0; m <= 6; ++m) {
            bool ran = false;
            for (int attempt = 0; attempt < kMaxSampleAttempts && !ran; ++attempt) {
                try {
                    const auto c = replay_reversal(default_catalog(), id, with_letters(rng, {'b', 'c'}, std::nullopt, m));
                    if (!c.equal) o.fail(cli_name(id) + " m=" + std::to_string(m) + ": " + c.detail);
                    ran = true;
                    ++replays;
                } catch (const PoleError&) {
                }
            }
            if (!ran) o.fail(cli_name(id) + ": no pole-free sample");
        }
    }
    if (o.ok) o.note = "30 rows within 1e-40, all inside the disk; " + std::to_string(replays) + " reversal replays exact";
    return o;
}

Outcome non_terminating() {
    Outcome o;
    SweepOptions opt;
    opt.mode = Backend::Numeric;
    opt.precision = numeric::PrecisionContext::make(60);
    opt.tolerance = 1e-30;
    for (IdentityId id : {IdentityId::Ramanujan1Psi1, IdentityId::Bailey6Psi6}) {
        const auto r = sweep_random(default_catalog(), id, 10, 909, opt);
        if (r.reports.size() != 10 || !r.passed()) o.fail(cli_name(id) + ": " + std::to_string(r.failures.size()) + " failures");
        for (const auto& rep : r.reports)
            if (rep.status != Status::WithinTolerance) o.fail(describe(rep));
    }
    if (o.ok) o.note = "10 + 10 random instances within 1e-30";
    return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::vector<const char*> argv{"qsum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

Outcome cli_contract() {
    Outcome o;
    int code = 0;
    run_cli({"selftest"}, code);
    if (code != 0) o.fail("selftest exited " + std::to_string(code));
    const std::vector<std::pair<std::string, std::vector<std::string>>> golden = {
        {"verify_thm1.1.json", {"verify", "--id", "thm1.1", "--n", "2", "--b", "2*q", "--c", "3*q", "--d", "5*q"}},
        {"verify_thm1.3.json", {"verify", "--id", "thm1.3", "--b", "2", "--c", "3", "--d", "5", "--q", "0.25", "--digits", "60"}},
        {"sweep_thm1.5.json", {"sweep", "--id", "thm1.5", "--count", "4", "--seed", "7"}},
        {"limit_A.json", {"limit", "--pair", "A", "--q", "0.5", "--b", "2", "--c", "3", "--d", "5", "--grid", "5,10,20,40"}},
        {"ismail_thm1.4.json", {"ismail", "--id", "thm1.4", "--q", "1/3", "--b", "2", "--c", "3", "--m-max", "4"}},
        {"selftest.json", {"selftest", "--seed", "1"}},
    };
    for (const auto& [file, args] : golden) {
        int c1 = 0, c2 = 0;
        const std::string a = run_cli(args, c1), b = run_cli(args, c2);
        std::ifstream in(std::string(QSUM_GOLDEN_DIR) + "/" + file);
        std::stringstream ss;
        ss << in.rdbuf();
        if (a != b) o.fail(file + ": output differs between runs");
        if (a != ss.str()) o.fail(file + ": output differs from the golden file");
        if (c1 != 0) o.fail(file + ": exit " + std::to_string(c1));
    }
    if (o.ok) o.note = "selftest exit 0; 6 golden outputs byte-stable";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "shift formulas", 30, shift_suite},
        {2, "thm1.1 terminating 5psi5", 60, [] { return psi_sum(IdentityId::Thm5Psi5_A, 0); }},
        {3, "thm1.2 terminating 5psi5", 60, [] { return psi_sum(IdentityId::Thm5Psi5_B, 1); }},
        {4, "thm1.5 5phi4", 60, carlitz_five_phi_four},
        {5, "thm1.6 / thm1.7 3phi2", 60, jackson_and_carlitz},
        {6, "reindex replay and substitution", 1e9, proof_replay_reindex},
        {7, "limiting cases", 10, limits},
        {8, "Ismail sequence and reversal", 30, ismail},
        {9, "1psi1 and 6psi6", 60, non_terminating},
        {10, "CLI contract", 1e9, cli_contract},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("uncaught: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
        if (!o.ok) ++failed;
        std::printf("%s  %2d  %-34s %7.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs, o.note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
