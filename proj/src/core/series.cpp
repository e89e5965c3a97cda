#include "qsum/core/series.hpp"

#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

#include <omp.h>

namespace qsum::core {

std::string SeriesSpec::num_label(std::size_t i) const {
    return i < num_labels.size() ? num_labels[i] : "num[" + std::to_string(i) + "]";
}

std::string SeriesSpec::den_label(std::size_t i) const {
    return i < den_labels.size() ? den_labels[i] : "den[" + std::to_string(i) + "]";
}

namespace {

bool has_q_power(const std::vector<Param>& ps, const Param& target) {
    for (const auto& p : ps)
        if (p.matches(target)) return true;
    return false;
}

}  // namespace

void SeriesSpec::validate() const {
    const std::size_t want = kind == SeriesKind::Unilateral ? num.size() - 1 : num.size();
    if (num.empty() || den.size() != want)
        throw DomainError(kind == SeriesKind::Unilateral ? "unilateral series needs one fewer denominator than numerator"
                                                         : "bilateral series needs as many denominators as numerators");
    const Backend b = backend();
    auto same = [&](const Param& p) {
        if (p.backend() != b) throw DomainError("series parameters mix exact and numeric values");
    };
    for (const auto& p : num) same(p);
    for (const auto& p : den) same(p);
    same(z);
    if (b == Backend::Exact && !(q.mono() == MonoParam::q_power(1)))
        throw DomainError("exact series must use the base q itself");
    if (termination) {
        if (*termination < 0) throw DomainError("termination index must be non-negative");
        if (!has_q_power(num, q.pow(-*termination)))
            throw DomainError("declared termination n=" + std::to_string(*termination) +
                              " but no numerator parameter equals q^(-n)");
    }
    if (lower_truncation) {
        if (kind != SeriesKind::Bilateral) throw DomainError("lower truncation only applies to bilateral series");
        if (*lower_truncation < 0) throw DomainError("lower truncation index must be non-negative");
        if (!has_q_power(den, q.pow(*lower_truncation + 1)))
            throw DomainError("declared lower truncation N=" + std::to_string(*lower_truncation) +
                              " but no denominator parameter equals q^(N+1)");
    }
}

namespace {

bool factor_vanishes(const Prod& f) {
    if (f.backend() == Backend::Exact) return f.is_zero();
    const auto& c = f.complex();
    return c.below(c.context().digits + 10);
}

std::string pole_param(const std::string& label, const Param& value) {
    return label + " = " + value.to_string();
}

// Walks term ratios away from k = 0. Forward: t_{k+1}/t_k; backward:
// t_{k-1}/t_k. Holds a_i q^j and b_i q^j for the next step.
class TermWalker {
public:
    TermWalker(const SeriesSpec& s, bool forward) : s_(s), forward_(forward) {
        nums_ = s.num;
        dens_ = s.den;
        if (s.kind == SeriesKind::Unilateral) {
            dens_.insert(dens_.begin(), s.q);
            labels_.push_back("q");
        }
        for (std::size_t i = 0; i < s.den.size(); ++i) labels_.push_back(s.den_label(i));
        if (!forward_) {
            const Param qi = s.q.pow(-1);
            for (auto& p : nums_) p = p * qi;
            for (auto& p : dens_) p = p * qi;
            zinv_ = Prod::one(s.z) / Prod::of(s.z);
        } else {
            zf_ = Prod::of(s.z);
        }
    }

    /// Ratio that moves the current index one step; k is the index being
    /// left (forward) or the current index (backward).
    Prod step(long k) {
        Prod num = Prod::one(s_.q), den = Prod::one(s_.q);
        if (forward_) {
            for (const auto& a : nums_) num *= Prod::one_minus(a);
            for (std::size_t i = 0; i < dens_.size(); ++i) {
                Prod f = Prod::one_minus(dens_[i]);
                if (factor_vanishes(f))
                    throw PoleError(pole_param(denominator_label(i), original_den(i)), k + 1, "1 - (" + dens_[i].to_string() + ")");
                den *= f;
            }
            num *= zf_;
        } else {
            for (const auto& b : dens_) num *= Prod::one_minus(b);
            for (std::size_t i = 0; i < nums_.size(); ++i) {
                Prod f = Prod::one_minus(nums_[i]);
                if (factor_vanishes(f))
                    throw PoleError(pole_param(s_.num_label(i), s_.num[i]), k - 1, "1 - (" + nums_[i].to_string() + ")");
                den *= f;
            }
            num *= zinv_;
        }
        advance();
        return num / den;
    }

private:
    void advance() {
        const Param qs = forward_ ? s_.q : s_.q.pow(-1);
        for (auto& p : nums_) p = p * qs;
        for (auto& p : dens_) p = p * qs;
    }
    std::string denominator_label(std::size_t i) const { return labels_[i]; }
    Param original_den(std::size_t i) const {
        if (s_.kind == SeriesKind::Unilateral) return i == 0 ? s_.q : s_.den[i - 1];
        return s_.den[i];
    }

    const SeriesSpec& s_;
    bool forward_;
    std::vector<Param> nums_, dens_;
    std::vector<std::string> labels_;
    Prod zf_, zinv_;
};

// Terms t_1..t_last (forward) or t_{-1}..t_{-last} (backward), exact.
std::vector<Prod> finite_terms(const SeriesSpec& s, bool forward, long last) {
    std::vector<Prod> out;
    if (last <= 0) return out;
    out.reserve(static_cast<std::size_t>(last));
    TermWalker w(s, forward);
    Prod t = Prod::one(s.q);
    for (long j = 0; j < last; ++j) {
        t *= w.step(forward ? j : -j);
        out.push_back(t);
    }
    return out;
}

struct Half {
    HpComplex sum;
    long terms = 0;
};

// One numeric side: finite when `last` is set, else the stopping rule.
Half numeric_side(const SeriesSpec& s, bool forward, std::optional<long> last) {
    const auto& ctx = s.q.complex().context();
    Half h{HpComplex(ctx), 0};
    TermWalker w(s, forward);
    HpComplex t(ctx, 1L);
    if (last) {
        for (long j = 0; j < *last; ++j) {
            t *= w.step(forward ? j : -j).complex();
            h.sum += t;
            ++h.terms;
        }
        return h;
    }
    const numeric::HpReal thr = numeric::pow10_neg(ctx.bits(), ctx.digits + ctx.guard);
    const numeric::HpReal one(ctx.bits(), 1L);
    int small = 0;
    for (long j = 0; j < kMaxSeriesTerms; ++j) {
        t *= w.step(forward ? j : -j).complex();
        h.sum += t;
        ++h.terms;
        if (t.abs() < thr * numeric::max(one, h.sum.abs())) {
            if (++small == 3) return h;
        } else {
            small = 0;
        }
    }
    throw NonConvergence("series did not meet the stopping rule within 100000 terms");
}

HpComplex product_abs_ratio(const SeriesSpec& s) {
    const auto& ctx = s.q.complex().context();
    HpComplex r(ctx, 1L);
    for (const auto& b : s.den) r *= b.complex();
    for (const auto& a : s.num) {
        if (a.complex().is_zero()) throw DomainError("zero numerator parameter in a bilateral series");
        r /= a.complex();
    }
    return r;
}

}  // namespace

SeriesValue eval_unilateral(const SeriesSpec& spec, const EvalOptions& opt) {
    if (spec.kind != SeriesKind::Unilateral) throw DomainError("eval_unilateral needs a unilateral spec");
    spec.validate();
    if (spec.backend() == Backend::Exact) {
        if (!spec.termination) throw DomainError("exact evaluation needs a terminating series");
        std::vector<Prod> terms{Prod::one(spec.q)};
        auto rest = finite_terms(spec, true, *spec.termination);
        terms.insert(terms.end(), rest.begin(), rest.end());
        std::vector<exact::Factored> f;
        for (const auto& t : terms) f.push_back(t.factored());
        return {exact::sum(f, opt.parallel), static_cast<long>(terms.size())};
    }
    if (!spec.termination) {
        const double az = spec.z.complex().abs().to_double();
        if (az >= 1.0) throw DomainError("non-terminating series needs |z| < 1");
    }
    Half h = numeric_side(spec, true, spec.termination);
    return {HpComplex(spec.q.complex().context(), 1L) + h.sum, h.terms + 1};
}

SeriesValue eval_bilateral(const SeriesSpec& spec, const EvalOptions& opt) {
    if (spec.kind != SeriesKind::Bilateral) throw DomainError("eval_bilateral needs a bilateral spec");
    spec.validate();
    if (spec.z.backend() == Backend::Exact ? false : spec.z.complex().is_zero())
        throw DomainError("bilateral series needs z != 0");

    if (spec.backend() == Backend::Exact) {
        if (!spec.termination || !spec.lower_truncation)
            throw DomainError("exact bilateral evaluation needs truncation on both sides");
        std::vector<Prod> pos, neg;
        std::exception_ptr err_pos, err_neg;
#pragma omp parallel sections if (opt.parallel)
        {
#pragma omp section
            {
                try {
                    pos = finite_terms(spec, true, *spec.termination);
                } catch (...) {
                    err_pos = std::current_exception();
                }
            }
#pragma omp section
            {
                try {
                    neg = finite_terms(spec, false, *spec.lower_truncation);
                } catch (...) {
                    err_neg = std::current_exception();
                }
            }
        }
        if (err_pos) std::rethrow_exception(err_pos);
        if (err_neg) std::rethrow_exception(err_neg);
        std::vector<exact::Factored> f;
        f.reserve(pos.size() + neg.size() + 1);
        for (auto it = neg.rbegin(); it != neg.rend(); ++it) f.push_back(it->factored());
        f.push_back(exact::Factored{});
        for (const auto& t : pos) f.push_back(t.factored());
        return {exact::sum(f, opt.parallel), static_cast<long>(f.size())};
    }

    const auto& ctx = spec.q.complex().context();
    check_numeric_base(spec.q.complex());
    const numeric::HpReal az = spec.z.complex().abs();
    const numeric::HpReal shrink(ctx.bits(), std::string("0.99999"));
    if (!spec.termination && !(az < shrink))
        throw DomainError("bilateral series needs |z| < 1 (with margin 1e-5)");
    if (!spec.lower_truncation) {
        const numeric::HpReal r = product_abs_ratio(spec).abs();
        if (!(r < az * shrink))
            throw DomainError("bilateral series needs |b1...br/(a1...ar)| < |z| (with margin 1e-5)");
    }

    Half pos{HpComplex(ctx), 0}, neg{HpComplex(ctx), 0};
    std::exception_ptr err_pos, err_neg;
#pragma omp parallel sections if (opt.parallel)
    {
#pragma omp section
        {
            try {
                pos = numeric_side(spec, true, spec.termination);
            } catch (...) {
                err_pos = std::current_exception();
            }
        }
#pragma omp section
        {
            try {
                neg = numeric_side(spec, false, spec.lower_truncation);
            } catch (...) {
                err_neg = std::current_exception();
            }
        }
    }
    if (err_pos) std::rethrow_exception(err_pos);
    if (err_neg) std::rethrow_exception(err_neg);
    HpComplex total = HpComplex(ctx, 1L) + pos.sum;
    total += neg.sum;
    return {total, pos.terms + neg.terms + 1};
}

SeriesValue evaluate(const SeriesSpec& spec, const EvalOptions& opt) {
    return spec.kind == SeriesKind::Unilateral ? eval_unilateral(spec, opt) : eval_bilateral(spec, opt);
}

Scalar series_term(const SeriesSpec& spec, long k) {
    spec.validate();
    Prod t = Prod::of(spec.z.pow(k));
    for (std::size_t i = 0; i < spec.num.size(); ++i) t *= poch(spec.num[i], spec.q, k, spec.num_label(i));
    if (spec.kind == SeriesKind::Unilateral) t *= reciprocal_poch(spec.q, spec.q, k, "q");
    for (std::size_t i = 0; i < spec.den.size(); ++i) t *= reciprocal_poch(spec.den[i], spec.q, k, spec.den_label(i));
    return t.to_scalar();
}

}  // namespace qsum::core
