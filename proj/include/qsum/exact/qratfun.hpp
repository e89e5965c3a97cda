#pragma once

#include "qsum/exact/qpoly.hpp"

#include <string>

namespace qsum::numeric {
class HpComplex;
}

namespace qsum::exact {

/// Element of Q(q) in canonical form.
///
/// The denominator is an ordinary polynomial with constant term 1 and is
/// coprime to the numerator; every q-power lives in the numerator's
/// offset. Two values are equal iff their representations are equal.
class QRatFun {
public:
    QRatFun() : den_(QPoly::constant(1)) {}
    QRatFun(const BigRational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}  // NOLINT
    QRatFun(const QPoly& p) : num_(p), den_(QPoly::constant(1)) {}                          // NOLINT
    /// Normalizes; throws DivisionByZero for a zero denominator.
    QRatFun(const QPoly& num, const QPoly& den);

    /// Trusts that num and den are coprime; only fixes units and q-powers.
    static QRatFun from_coprime(QPoly num, QPoly den);

    static QRatFun q() { return QRatFun(QPoly::q()); }

    const QPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// c*q^e with no denominator.
    bool is_monomial() const noexcept { return num_.is_monomial() && den_.is_constant(); }

    QRatFun operator-() const;
    friend QRatFun operator+(const QRatFun& x, const QRatFun& y);
    friend QRatFun operator-(const QRatFun& x, const QRatFun& y);
    friend QRatFun operator*(const QRatFun& x, const QRatFun& y);
    friend QRatFun operator/(const QRatFun& x, const QRatFun& y);
    QRatFun& operator+=(const QRatFun& y) { return *this = *this + y; }
    QRatFun& operator*=(const QRatFun& y) { return *this = *this * y; }
    friend bool operator==(const QRatFun& x, const QRatFun& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    QRatFun pow(long e) const;

    /// `{off:c0,...}/{0:1,...}`
    std::string to_string() const;
    static QRatFun parse(const std::string& text);

private:
    QPoly num_;
    QPoly den_;
};

QRatFun rf_add(const QRatFun& x, const QRatFun& y);
QRatFun rf_mul(const QRatFun& x, const QRatFun& y);
QRatFun rf_div(const QRatFun& x, const QRatFun& y);

/// Evaluate at a numeric point. Throws PoleError when the denominator is
/// below 10^-(digits+10) at q0.
numeric::HpComplex rf_eval_numeric(const QRatFun& x, const numeric::HpComplex& q0);

}  // namespace qsum::exact
