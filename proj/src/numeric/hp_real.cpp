#include "qsum/numeric/hp_real.hpp"

#include "qsum/error.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace qsum::numeric {

PrecisionContext PrecisionContext::make(int digits, int guard) {
    if (digits < 15) throw DomainError("precision must be at least 15 digits, got " + std::to_string(digits));
    if (guard < 5) throw DomainError("guard must be at least 5 digits, got " + std::to_string(guard));
    return PrecisionContext{digits, guard};
}

mpfr_prec_t PrecisionContext::bits() const noexcept {
    return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * 3.321928094887362)) + 4;
}

HpReal::HpReal(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HpReal::HpReal(mpfr_prec_t bits, long value) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

HpReal::HpReal(mpfr_prec_t bits, const mpq_class& value) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

HpReal::HpReal(mpfr_prec_t bits, const std::string& text) {
    mpfr_init2(v_, bits);
    if (text.empty() || mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0 || !is_finite()) {
        mpfr_clear(v_);
        throw ParseError("not a finite decimal number: '" + text + "'");
    }
}

HpReal::HpReal(const HpReal& other) {
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

HpReal::HpReal(HpReal&& other) noexcept {
    mpfr_init2(v_, other.bits());
    mpfr_swap(v_, other.v_);
}

HpReal& HpReal::operator=(const HpReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

HpReal& HpReal::operator=(HpReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

HpReal::~HpReal() { mpfr_clear(v_); }

long HpReal::exponent2() const noexcept {
    if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v_);
}

HpReal HpReal::operator-() const {
    HpReal r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal& HpReal::operator+=(const HpReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator-=(const HpReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator*=(const HpReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal& HpReal::operator/=(const HpReal& o) {
    if (o.is_zero()) throw DivisionByZero("real division by zero");
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HpReal HpReal::abs() const {
    HpReal r(bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

HpReal HpReal::sqrt() const {
    if (sign() < 0) throw DomainError("square root of a negative real");
    HpReal r(bits());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string HpReal::to_string(int digits) const {
    mpfr_exp_t exp = 0;
    std::unique_ptr<char, void (*)(char*)> raw(
        mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN), mpfr_free_str);
    std::string s(raw.get());
    std::string out;
    if (!s.empty() && s.front() == '-') {
        out += '-';
        s.erase(0, 1);
    }
    long e10 = is_zero() ? 0 : static_cast<long>(exp) - 1;
    out += s.substr(0, 1);
    out += '.';
    out += s.substr(1);
    out += 'e';
    out += e10 < 0 ? '-' : '+';
    out += std::to_string(e10 < 0 ? -e10 : e10);
    return out;
}

HpReal pow10_neg(mpfr_prec_t bits, int k) {
    HpReal r(bits, 10L);
    mpfr_pow_si(r.get(), r.get(), -k, MPFR_RNDN);
    return r;
}

HpReal hypot(const HpReal& a, const HpReal& b) {
    HpReal r(std::max(a.bits(), b.bits()));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

HpReal max(const HpReal& a, const HpReal& b) { return a < b ? b : a; }

}  // namespace qsum::numeric
