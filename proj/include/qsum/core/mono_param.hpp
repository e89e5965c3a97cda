#pragma once

#include "qsum/exact/qpoly.hpp"
#include "qsum/exact/qratfun.hpp"

#include <string>

namespace qsum::core {

using exact::BigRational;

/// Exact parameter c*q^e with c a nonzero rational.
class MonoParam {
public:
    MonoParam() = default;
    /// Throws DomainError for c = 0.
    MonoParam(BigRational coeff, int exp);
    static MonoParam q_power(int e) { return MonoParam(1, e); }

    const BigRational& coeff() const noexcept { return coeff_; }
    int exp() const noexcept { return exp_; }
    bool is_q_power() const noexcept { return coeff_ == 1; }

    MonoParam operator-() const { return MonoParam(-coeff_, exp_); }
    MonoParam& operator*=(const MonoParam& o);
    MonoParam& operator/=(const MonoParam& o);
    friend MonoParam operator*(MonoParam a, const MonoParam& b) { return a *= b; }
    friend MonoParam operator/(MonoParam a, const MonoParam& b) { return a /= b; }
    MonoParam pow(long e) const;
    friend bool operator==(const MonoParam& a, const MonoParam& b) {
        return a.exp_ == b.exp_ && a.coeff_ == b.coeff_;
    }

    exact::QRatFun to_qratfun() const { return exact::QRatFun(exact::QPoly::monomial(coeff_, exp_)); }
    /// nullopt unless x is a monomial c*q^e.
    static std::optional<MonoParam> from_qratfun(const exact::QRatFun& x);

    /// Literal grammar `<p>[/<r>][*q^<e>]`, plus the shorthands `q`, `q^e`,
    /// `-q` and `<p>[/<r>]*q`. Throws ParseError.
    static MonoParam parse(const std::string& text);
    /// Canonical literal; parse(to_string()) round-trips exactly.
    std::string to_string() const;

private:
    BigRational coeff_ = 1;
    int exp_ = 0;
};

}  // namespace qsum::core
