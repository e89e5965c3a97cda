#include "qsum/catalog/sweep.hpp"

#include "qsum/error.hpp"

#include <omp.h>

#include <cmath>
#include <random>

namespace qsum::catalog {

void SweepResult::require_passed(std::uint64_t seed) const {
    if (passed()) return;
    std::string msg = std::to_string(failures.size()) + " of " + std::to_string(reports.size()) +
                      " instances failed (seed " + std::to_string(seed) + "):";
    for (long i : failures) {
        const auto& r = reports[static_cast<std::size_t>(i)];
        msg += "\n  instance " + std::to_string(i) + ": " + to_string(r.status);
        for (const auto& [k, v] : r.params) msg += " " + k + "=" + v;
        if (!r.detail.empty()) msg += " (" + r.detail + ")";
    }
    throw SweepFailure(msg);
}

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, long index, int attempt) {
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32),
                      static_cast<std::uint32_t>(attempt)};
    return Rng(seq);
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool is_free(const IdentityDef& def, char s) { return !def.constraint || def.constraint->solved != s; }

// A product of one to three of the letters with coefficient exactly 1 is a
// pure power of q, which is where the denominators of these identities
// vanish.
bool on_exact_pole_set(const ParamSet& p) {
    std::vector<const core::MonoParam*> v;
    for (const auto& [s, x] : p.sym) v.push_back(&x.mono());
    const std::size_t k = v.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        exact::BigRational c = 1;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) c *= v[i]->coeff();
        if (c == 1) return true;
    }
    return false;
}

// Any product of letters to powers in [-2, 2] within relative 1e-8 of a
// power of q.
bool near_numeric_pole_set(const ParamSet& p) {
    const double q = std::abs(p.q.complex().re().to_double());
    std::vector<double> v;
    for (const auto& [s, x] : p.sym) v.push_back(x.complex().re().to_double());
    const std::size_t k = v.size();
    std::vector<int> e(k, -2);
    while (true) {
        double prod = 1;
        bool trivial = true;
        for (std::size_t i = 0; i < k; ++i) {
            prod *= std::pow(v[i], e[i]);
            trivial = trivial && e[i] == 0;
        }
        if (!trivial && prod > 0) {
            const double j = std::round(std::log(prod) / std::log(q));
            if (std::abs(prod / std::pow(q, j) - 1) < 1e-8) return true;
        }
        std::size_t i = 0;
        while (i < k && e[i] == 2) e[i++] = -2;
        if (i == k) break;
        ++e[i];
    }
    return false;
}

// The bilateral series must converge with room to spare: |z| <= 0.9 and
// |prod den / prod num| <= 0.9 |z| unless a side is cut off.
bool inside_convergence_margin(const SeriesSpec& s) {
    if (s.termination && (s.kind == core::SeriesKind::Unilateral || s.lower_truncation)) return true;
    const double margin = 0.9;
    const double z = s.z.complex().abs().to_double();
    if (!s.termination && z > margin) return false;
    if (s.kind == core::SeriesKind::Bilateral && !s.lower_truncation) {
        double ratio = 1;
        for (const auto& b : s.den) ratio *= b.complex().abs().to_double();
        for (const auto& a : s.num) ratio /= a.complex().abs().to_double();
        if (ratio > margin * z) return false;
    }
    return true;
}

std::optional<ParamSet> sample_exact(const IdentityDef& def, Rng& rng) {
    ParamSet p;
    p.q = Param(core::MonoParam::q_power(1));
    for (char s : def.letters) {
        if (!is_free(def, s)) continue;
        long num = 0;
        while (num == 0) num = uniform(rng, -10, 10);
        const long den = uniform(rng, 1, 10);
        p.sym[s] = Param(core::MonoParam(exact::BigRational(num, den), uniform(rng, 0, 3)));
    }
    if (def.has_n) p.n = uniform(rng, 0, 8);
    if (def.has_m && !def.m_from_n) p.m = uniform(rng, 0, 4);
    return p;
}

std::optional<ParamSet> sample_numeric(const IdentityDef& def, Rng& rng, const SweepOptions& opt) {
    const auto& ctx = opt.precision;
    auto decimal = [&](long hundredths) { return Param(core::HpComplex(ctx, mpq_class(hundredths, 100))); };
    ParamSet p;
    p.q = opt.q ? *opt.q : decimal(uniform(rng, 10, 50));
    for (char s : def.letters) {
        if (!is_free(def, s)) continue;
        const long sign = uniform(rng, 0, 1) ? 1 : -1;
        p.sym[s] = decimal(sign * uniform(rng, 30, 300));
    }
    if (def.has_n) p.n = uniform(rng, 0, 8);
    if (def.has_m && !def.m_from_n) p.m = uniform(rng, 0, 4);
    return p;
}

struct Outcome {
    VerificationReport report;
    int attempts = 0;
};

Outcome run_instance(const IdentityDef& def, std::uint64_t seed, long index, const SweepOptions& opt) {
    Outcome out;
    out.report.id = def.id;
    out.report.mode = opt.mode;
    out.report.status = Status::Domain;
    out.report.detail = "no admissible sample in " + std::to_string(kMaxSampleAttempts) + " attempts";
    const VerifyOptions vopt{opt.tolerance, false};
    for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
        out.attempts = attempt + 1;
        const auto given = sample_params(def, seed, index, attempt, opt);
        if (!given) continue;
        VerificationReport r = verify(def, *given, vopt);
        const bool degenerate = r.status == Status::Pole || r.status == Status::Domain;
        out.report = std::move(r);
        if (!degenerate) break;
    }
    return out;
}

void check_request(const IdentityDef& def, long count, const SweepOptions& opt) {
    if (count < 1) throw DomainError("count must be at least 1");
    if (opt.mode == Backend::Exact && !def.terminating)
        throw DomainError(cli_name(def.id) + " does not terminate; sweep it in numeric mode");
    if (opt.q && opt.q->backend() != opt.mode) throw DomainError("the base does not match the sweep mode");
}

SweepResult collect(std::vector<Outcome>& outcomes) {
    SweepResult res;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!passed(outcomes[i].report.status)) res.failures.push_back(static_cast<long>(i));
        res.attempts.push_back(outcomes[i].attempts);
        res.reports.push_back(std::move(outcomes[i].report));
    }
    return res;
}

}  // namespace

std::optional<ParamSet> sample_params(const IdentityDef& def, std::uint64_t seed, long index, int attempt,
                                      const SweepOptions& opt) {
    Rng rng = make_rng(seed, index, attempt);
    if (opt.mode == Backend::Exact) {
        auto p = sample_exact(def, rng);
        try {
            if (on_exact_pole_set(resolve_with(def, *p))) return std::nullopt;
        } catch (const Error&) {
            return std::nullopt;
        }
        return p;
    }
    auto p = sample_numeric(def, rng, opt);
    try {
        const ParamSet r = resolve_with(def, *p);
        if (near_numeric_pole_set(r)) return std::nullopt;
        const SeriesSpec spec = def.lhs_custom ? def.lhs_custom(r) : instantiate(def.lhs, r);
        if (!inside_convergence_margin(spec)) return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return p;
}

SweepResult sweep_random_serial(const Catalog& catalog, IdentityId id, long count, std::uint64_t seed,
                                const SweepOptions& opt) {
    const IdentityDef& def = catalog.get(id);
    check_request(def, count, opt);
    std::vector<Outcome> outcomes;
    for (long i = 0; i < count; ++i) outcomes.push_back(run_instance(def, seed, i, opt));
    return collect(outcomes);
}

SweepResult sweep_random(const Catalog& catalog, IdentityId id, long count, std::uint64_t seed,
                         const SweepOptions& opt) {
    const IdentityDef& def = catalog.get(id);
    check_request(def, count, opt);
    std::vector<Outcome> outcomes(static_cast<std::size_t>(count));
    const int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads != 1)
    for (long i = 0; i < count; ++i) outcomes[static_cast<std::size_t>(i)] = run_instance(def, seed, i, opt);
    return collect(outcomes);
}

}  // namespace qsum::catalog
