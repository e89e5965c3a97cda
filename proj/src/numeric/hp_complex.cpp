#include "qsum/numeric/hp_complex.hpp"

#include "qsum/error.hpp"

#include <cmath>

namespace qsum::numeric {

HpComplex::HpComplex(PrecisionContext ctx) : ctx_(ctx), re_(ctx.bits()), im_(ctx.bits()) {}

HpComplex::HpComplex(PrecisionContext ctx, long re, long im)
    : ctx_(ctx), re_(ctx.bits(), re), im_(ctx.bits(), im) {}

HpComplex::HpComplex(PrecisionContext ctx, const mpq_class& re, const mpq_class& im)
    : ctx_(ctx), re_(ctx.bits(), re), im_(ctx.bits(), im) {}

HpComplex::HpComplex(PrecisionContext ctx, HpReal re, HpReal im)
    : ctx_(ctx), re_(std::move(re)), im_(std::move(im)) {
    if (!re_.is_finite() || !im_.is_finite()) throw DomainError("non-finite complex component");
}

namespace {

HpReal parse_part(mpfr_prec_t bits, std::string text) {
    if (text.empty()) throw ParseError("empty numeric component");
    if (text.front() == '+') text.erase(0, 1);
    const auto slash = text.find('/');
    if (slash == std::string::npos) return HpReal(bits, text);
    mpq_class frac;
    if (frac.set_str(text, 10) != 0 || sgn(frac.get_den()) == 0)
        throw ParseError("not a fraction: '" + text + "'");
    frac.canonicalize();
    return HpReal(bits, frac);
}

}  // namespace

HpComplex HpComplex::parse(PrecisionContext ctx, const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (ch != ' ') text += ch;
    if (text.empty()) throw ParseError("empty numeric literal");
    const auto bits = ctx.bits();
    if (text.back() != 'i') return HpComplex(ctx, parse_part(bits, text), HpReal(bits));

    text.pop_back();
    if (!text.empty() && text.back() == '*') text.pop_back();
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](std::string s) {
        if (s.empty() || s == "+") return HpReal(bits, 1L);
        if (s == "-") return HpReal(bits, -1L);
        return parse_part(bits, s);
    };
    if (split == std::string::npos) return HpComplex(ctx, HpReal(bits), imag_of(text));
    return HpComplex(ctx, parse_part(bits, text.substr(0, split)), imag_of(text.substr(split)));
}

void HpComplex::check(const HpComplex& o) const {
    if (!(ctx_ == o.ctx_))
        throw PrecisionMismatch("precision contexts differ: " + std::to_string(ctx_.digits) + "+" +
                                std::to_string(ctx_.guard) + " vs " + std::to_string(o.ctx_.digits) + "+" +
                                std::to_string(o.ctx_.guard));
}

HpComplex HpComplex::operator-() const { return HpComplex(ctx_, -re_, -im_); }

HpComplex& HpComplex::operator+=(const HpComplex& o) {
    check(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

HpComplex& HpComplex::operator-=(const HpComplex& o) {
    check(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

HpComplex& HpComplex::operator*=(const HpComplex& o) {
    check(o);
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    HpReal r = re_ * o.re_ - im_ * o.im_;
    HpReal i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

HpComplex& HpComplex::operator/=(const HpComplex& o) {
    check(o);
    if (o.below(ctx_.digits + ctx_.guard)) throw DivisionByZero("complex division by (near) zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    HpReal den = o.re_ * o.re_ + o.im_ * o.im_;
    HpReal r = (re_ * o.re_ + im_ * o.im_) / den;
    HpReal i = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

HpReal HpComplex::abs() const {
    if (im_.is_zero()) return re_.abs();
    return hypot(re_, im_);
}

HpComplex HpComplex::pow(long e) const {
    HpComplex result(ctx_, 1L);
    HpComplex base = *this;
    if (e < 0) {
        base = HpComplex(ctx_, 1L) / base;
        e = -e;
    }
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

HpComplex HpComplex::sqrt() const {
    const auto bits = ctx_.bits();
    if (im_.is_zero()) {
        if (re_.sign() >= 0) return HpComplex(ctx_, re_.sqrt(), HpReal(bits));
        return HpComplex(ctx_, HpReal(bits), (-re_).sqrt());
    }
    HpReal two(bits, 2L);
    HpReal m = abs();
    HpReal r = ((m + re_) / two).sqrt();
    HpReal i = ((m - re_) / two).sqrt();
    if (im_.sign() < 0) i = -i;
    return HpComplex(ctx_, std::move(r), std::move(i));
}

bool HpComplex::below(int k) const {
    if (is_zero()) return true;
    // 10^-k ~ 2^-(k*log2(10)); exponent comparison is enough for a threshold.
    const long limit = -static_cast<long>(std::ceil(k * 3.321928094887362));
    const long e = std::max(re_.exponent2(), im_.exponent2());
    return e <= limit;
}

std::string HpComplex::to_string(int digits) const {
    std::string s = re_.to_string(digits);
    if (im_.is_zero()) return s;
    std::string i = im_.to_string(digits);
    if (i.front() == '-')
        s += i;
    else
        s += "+" + i;
    return s + "*i";
}

HpComplex hp_arith(ArithOp op, const HpComplex& x, const HpComplex& y) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Div: return x / y;
    }
    throw DomainError("unknown arithmetic op");
}

HpReal relative_difference(const HpComplex& x, const HpComplex& y) {
    const auto bits = x.context().bits();
    HpReal scale = max(HpReal(bits, 1L), max(x.abs(), y.abs()));
    return (x - y).abs() / scale;
}

bool hp_close(const HpComplex& x, const HpComplex& y, const HpReal& rel_tol) {
    if (rel_tol.sign() <= 0) throw DomainError("rel_tol must be positive");
    return relative_difference(x, y) <= rel_tol;
}

bool hp_close(const HpComplex& x, const HpComplex& y, double rel_tol) {
    HpReal tol(x.context().bits());
    mpfr_set_d(tol.get(), rel_tol, MPFR_RNDN);
    return hp_close(x, y, tol);
}

}  // namespace qsum::numeric
