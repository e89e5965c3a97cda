#include "qsum/core/pochhammer.hpp"

#include "qsum/error.hpp"

#include <cstdio>

namespace qsum::core {

long PochIndex::finite() const {
    if (!n_) throw DomainError("infinite Pochhammer index used as finite");
    return *n_;
}

namespace {

void require_exact_base(const Param& q) {
    if (!(q.mono() == MonoParam::q_power(1)))
        throw DomainError("exact mode works in Q(q): the base must be q itself, got " + q.to_string());
}

bool numeric_zero(const HpComplex& x) {
    return x.below(x.context().digits + 10);
}

std::string factor_text(const Param& x) { return "1 - (" + x.to_string() + ")"; }

}  // namespace

std::string check_numeric_base(const HpComplex& q) {
    const double r = q.abs().to_double();
    if (r >= 1.0) throw DomainError("|q| must be below 1");
    if (r > kMaxNumericBase) throw DomainError("|q| above the supported bound 0.9");
    if (r <= kWarnNumericBase) return {};
    char buf[96];
    std::snprintf(buf, sizeof buf, "|q| = %.3f > 0.75; infinite products converge slowly", r);
    return buf;
}

Prod poch(const Param& a, const Param& q, long n, const std::string& label) {
    if (a.is_exact()) require_exact_base(q);
    Prod acc = Prod::one(a);
    if (n >= 0) {
        Param x = a;
        for (long k = 0; k < n; ++k) {
            acc *= Prod::one_minus(x);
            if (k + 1 < n) x = x * q;
        }
        return acc;
    }
    // (a)_{-m} = 1 / (a q^{-m})_m
    const long m = -n;
    Param x = a * q.pow(-m);
    for (long j = 0; j < m; ++j) {
        Prod f = Prod::one_minus(x);
        const bool zero = f.backend() == Backend::Exact ? f.is_zero() : numeric_zero(f.complex());
        if (zero) throw PoleError(label, n, factor_text(x));
        acc *= f;
        x = x * q;
    }
    return Prod::one(a) / acc;
}

Prod reciprocal_poch(const Param& a, const Param& q, long n, const std::string& label) {
    if (n < 0) return poch(a * q.pow(n), q, -n, label);
    if (a.is_exact()) require_exact_base(q);
    Prod acc = Prod::one(a);
    Param x = a;
    for (long k = 0; k < n; ++k) {
        Prod f = Prod::one_minus(x);
        const bool zero = f.backend() == Backend::Exact ? f.is_zero() : numeric_zero(f.complex());
        if (zero) throw PoleError(label, k, factor_text(x));
        acc *= f;
        x = x * q;
    }
    return Prod::one(a) / acc;
}

HpComplex poch_infinite(const HpComplex& a, const HpComplex& q) {
    check_numeric_base(q);
    const auto& ctx = a.context();
    const int stop = ctx.digits + ctx.guard;
    HpComplex acc(ctx, 1L);
    HpComplex one(ctx, 1L);
    HpComplex term = a;
    for (long k = 0; k < kMaxInfiniteFactors; ++k) {
        acc *= one - term;
        if (term.below(stop)) return acc;
        term *= q;
    }
    throw NonConvergence("infinite product did not converge within 100000 factors");
}

Scalar poch(const Scalar& a, const Scalar& q, PochIndex n) {
    if (!a.is_exact()) {
        if (q.is_exact()) throw DomainError("values from different backends cannot be combined");
        if (n.is_infinite()) return poch_infinite(a.complex(), q.complex());
        return poch(Param(a.complex()), Param(q.complex()), n.finite()).to_scalar();
    }
    if (!q.is_exact()) throw DomainError("values from different backends cannot be combined");
    if (n.is_infinite()) throw DomainError("(a;q)_inf is only available in numeric mode");
    if (!(q.ratfun() == exact::QRatFun::q()))
        throw DomainError("exact mode works in Q(q): the base must be q itself");
    if (auto mono = MonoParam::from_qratfun(a.ratfun())) return poch(Param(*mono), Param(MonoParam::q_power(1)), n.finite()).to_scalar();

    const long len = n.finite();
    const exact::QRatFun one(1);
    exact::QRatFun acc = one;
    if (len >= 0) {
        exact::QRatFun x = a.ratfun();
        for (long k = 0; k < len; ++k) {
            acc *= one - x;
            x *= exact::QRatFun::q();
        }
        return acc;
    }
    exact::QRatFun x = a.ratfun() * exact::QRatFun::q().pow(len);
    for (long j = 0; j < -len; ++j) {
        const exact::QRatFun f = one - x;
        if (f.is_zero()) throw PoleError("a", len, "1 - (" + x.to_string() + ")");
        acc *= f;
        x *= exact::QRatFun::q();
    }
    return one / acc;
}

std::pair<Scalar, Scalar> shift_split(const Param& a, const Param& q, long n, long k) {
    Scalar lhs = poch(a, q, n + k).to_scalar();
    Scalar rhs = (poch(a, q, n) * poch(a * q.pow(n), q, k, "aq^n")).to_scalar();
    return {lhs, rhs};
}

std::pair<Scalar, Scalar> negative_index(const Param& a, const Param& q, long n) {
    Scalar lhs = poch(a, q, -n).to_scalar();
    const Param qa = q / a;
    Prod r = Prod::of((-qa).pow(n)) * Prod::of(q.pow(n * (n - 1) / 2));
    r /= poch(qa, q, n, "q/a");
    return {lhs, r.to_scalar()};
}

std::pair<Scalar, Scalar> shift_base(const Param& a, const Param& q, long n, long k) {
    Scalar lhs = poch(a * q.pow(-n), q, k, "aq^-n").to_scalar();
    Prod r = poch(a, q, k) * poch(q / a, q, n, "q/a") * Prod::of(q.pow(-n * k));
    r /= poch(q.pow(1 - k) / a, q, n, "q^(1-k)/a");
    return {lhs, r.to_scalar()};
}

std::pair<Scalar, Scalar> ratio_shift(const Param& a, const Param& b, const Param& q, long n, long k) {
    Prod l = poch(a, q, n - k);
    l /= poch(b, q, n - k, "b");
    Prod r = poch(a, q, n) * poch(q.pow(1 - n) / b, q, k, "q^(1-n)/b") * Prod::of((b / a).pow(k));
    r /= poch(b, q, n, "b");
    r /= poch(q.pow(1 - n) / a, q, k, "q^(1-n)/a");
    return {l.to_scalar(), r.to_scalar()};
}

}  // namespace qsum::core
