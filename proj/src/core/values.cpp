#include "qsum/core/values.hpp"

#include "qsum/error.hpp"

#include <vector>

namespace qsum::core {

std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "numeric"; }

namespace {

[[noreturn]] void mismatch() { throw DomainError("values from different backends cannot be combined"); }

}  // namespace

// ---- Param ----------------------------------------------------------------

const MonoParam& Param::mono() const {
    if (!is_exact()) throw DomainError("expected an exact parameter");
    return std::get<MonoParam>(v_);
}

const HpComplex& Param::complex() const {
    if (is_exact()) throw DomainError("expected a numeric parameter");
    return std::get<HpComplex>(v_);
}

void Param::same_backend(const Param& o) const {
    if (v_.index() != o.v_.index()) mismatch();
}

Param Param::constant(long c) const {
    if (is_exact()) return MonoParam(BigRational(c), 0);
    return HpComplex(complex().context(), c);
}

Param Param::operator-() const {
    if (is_exact()) return -mono();
    return -complex();
}

Param operator*(const Param& a, const Param& b) {
    a.same_backend(b);
    if (a.is_exact()) return a.mono() * b.mono();
    return a.complex() * b.complex();
}

Param operator/(const Param& a, const Param& b) {
    a.same_backend(b);
    if (a.is_exact()) return a.mono() / b.mono();
    if (b.complex().is_zero()) throw DivisionByZero("division by a zero parameter");
    return a.complex() / b.complex();
}

Param Param::pow(long e) const {
    if (is_exact()) return mono().pow(e);
    return complex().pow(e);
}

Param Param::sqrt() const {
    if (!is_exact()) return complex().sqrt();
    const auto& m = mono();
    if (m.exp() % 2 != 0 || sgn(m.coeff()) < 0 || !mpz_perfect_square_p(m.coeff().get_num_mpz_t()) ||
        !mpz_perfect_square_p(m.coeff().get_den_mpz_t()))
        throw DomainError("square root of " + m.to_string() + " is not a rational monomial");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), m.coeff().get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), m.coeff().get_den_mpz_t());
    return MonoParam(BigRational(n, d), m.exp() / 2);
}

bool Param::matches(const Param& other) const {
    same_backend(other);
    if (is_exact()) return mono() == other.mono();
    const auto& ctx = complex().context();
    return numeric::hp_close(complex(), other.complex(), numeric::pow10_neg(ctx.bits(), ctx.digits - 5));
}

std::string Param::to_string() const {
    if (is_exact()) return mono().to_string();
    return complex().to_string();
}

// ---- Prod -----------------------------------------------------------------

Prod Prod::one(const Param& p) {
    if (p.is_exact()) return exact::Factored{};
    return HpComplex(p.complex().context(), 1L);
}

Prod Prod::of(const Param& p) {
    if (p.is_exact()) return exact::Factored::monomial(p.mono().coeff(), p.mono().exp());
    return p.complex();
}

Prod Prod::one_minus(const Param& p) {
    if (p.is_exact()) return exact::Factored::one_minus(p.mono().coeff(), p.mono().exp());
    return HpComplex(p.complex().context(), 1L) - p.complex();
}

bool Prod::is_zero() const {
    if (v_.index() == 0) return std::get<0>(v_).is_zero();
    return std::get<1>(v_).is_zero();
}

const exact::Factored& Prod::factored() const {
    if (v_.index() != 0) throw DomainError("expected an exact product");
    return std::get<0>(v_);
}

const HpComplex& Prod::complex() const {
    if (v_.index() != 1) throw DomainError("expected a numeric product");
    return std::get<1>(v_);
}

Prod& Prod::operator*=(const Prod& o) {
    if (v_.index() != o.v_.index()) mismatch();
    if (v_.index() == 0)
        std::get<0>(v_) *= std::get<0>(o.v_);
    else
        std::get<1>(v_) *= std::get<1>(o.v_);
    return *this;
}

Prod& Prod::operator/=(const Prod& o) {
    if (v_.index() != o.v_.index()) mismatch();
    try {
        if (v_.index() == 0)
            std::get<0>(v_) /= std::get<0>(o.v_);
        else
            std::get<1>(v_) /= std::get<1>(o.v_);
    } catch (const DivisionByZero&) {
        throw PoleError("divisor", 0, "vanishing product");
    }
    return *this;
}

Prod Prod::pow(long e) const {
    if (v_.index() == 0) return std::get<0>(v_).pow(e);
    return std::get<1>(v_).pow(e);
}

Scalar Prod::to_scalar() const {
    if (v_.index() == 0) return std::get<0>(v_).to_qratfun();
    return std::get<1>(v_);
}

// ---- Scalar ---------------------------------------------------------------

const exact::QRatFun& Scalar::ratfun() const {
    if (!is_exact()) throw DomainError("expected an exact value");
    return std::get<0>(v_);
}

const HpComplex& Scalar::complex() const {
    if (is_exact()) throw DomainError("expected a numeric value");
    return std::get<1>(v_);
}

bool Scalar::is_zero() const { return is_exact() ? ratfun().is_zero() : complex().is_zero(); }

Scalar Scalar::operator-() const {
    if (is_exact()) return -ratfun();
    return -complex();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch();
    if (a.is_exact()) return a.ratfun() + b.ratfun();
    return a.complex() + b.complex();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch();
    if (a.is_exact()) return a.ratfun() - b.ratfun();
    return a.complex() - b.complex();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch();
    if (a.is_exact()) return a.ratfun() * b.ratfun();
    return a.complex() * b.complex();
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) mismatch();
    if (a.is_exact()) return a.ratfun() / b.ratfun();
    return a.complex() / b.complex();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.is_exact() || !b.is_exact()) throw DomainError("exact equality needs exact values");
    return a.ratfun() == b.ratfun();
}

std::string Scalar::to_string() const {
    if (is_exact()) return ratfun().to_string();
    return complex().to_string();
}

Scalar sum(std::span<const Prod> terms) {
    if (terms.empty()) return exact::QRatFun();
    if (terms.front().backend() == Backend::Exact) {
        std::vector<exact::Factored> f;
        f.reserve(terms.size());
        for (const auto& t : terms) f.push_back(t.factored());
        return exact::sum(f);
    }
    HpComplex acc(terms.front().complex().context());
    for (const auto& t : terms) acc += t.complex();
    return acc;
}

HpComplex evaluate_at(const MonoParam& m, const HpComplex& q) {
    return HpComplex(q.context(), m.coeff()) * q.pow(m.exp());
}

}  // namespace qsum::core
