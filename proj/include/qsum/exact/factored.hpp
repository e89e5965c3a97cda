#pragma once

#include "qsum/exact/qratfun.hpp"
#include "qsum/exact/zpoly.hpp"

#include <map>
#include <span>

namespace qsum::exact {

/// A product c * q^k * prod f_i^(m_i) with f_i primitive integer
/// polynomials of positive degree and positive constant term, and m_i
/// nonzero (negative for denominator factors).
///
/// Pochhammer symbols of monomial parameters are exactly of this form, so
/// products and quotients of them never need a polynomial gcd until the
/// value is expanded into a QRatFun.
class Factored {
public:
    Factored() = default;
    static Factored zero();
    static Factored constant(const BigRational& c);
    static Factored monomial(const BigRational& c, int exponent);
    /// 1 - c*q^e
    static Factored one_minus(const BigRational& c, int exponent);

    bool is_zero() const noexcept { return zero_; }
    const BigRational& coeff() const noexcept { return coeff_; }
    int qpow() const noexcept { return qpow_; }
    const std::map<ZPoly, int>& factors() const noexcept { return factors_; }

    Factored& operator*=(const Factored& o);
    /// Throws DivisionByZero when o is zero.
    Factored& operator/=(const Factored& o);
    friend Factored operator*(Factored a, const Factored& b) { return a *= b; }
    friend Factored operator/(Factored a, const Factored& b) { return a /= b; }
    Factored pow(long e) const;

    /// Multiply by an arbitrary nonzero integer polynomial to the power mult.
    void mul_poly(const ZPoly& f, int mult);

    /// Expand into canonical form.
    QRatFun to_qratfun() const;

private:
    bool zero_ = false;
    BigRational coeff_ = 1;
    int qpow_ = 0;
    std::map<ZPoly, int> factors_;
};

/// Exact sum of factored terms, reduced against the common denominator
/// factor by factor. `parallel` expands the terms on OpenMP threads; the
/// result does not depend on it.
QRatFun sum(std::span<const Factored> terms, bool parallel = false);

}  // namespace qsum::exact
