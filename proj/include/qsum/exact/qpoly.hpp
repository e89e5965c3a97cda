#pragma once

#include "qsum/exact/zpoly.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qsum::exact {

using BigRational = mpq_class;

/// Laurent polynomial in q with rational coefficients.
///
/// coeffs()[i] is the coefficient of q^(offset()+i). Stored coefficients
/// are trimmed on both ends; the zero polynomial has no coefficients and
/// offset 0.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::vector<BigRational> coeffs, int offset);

    static QPoly constant(const BigRational& c);
    static QPoly monomial(const BigRational& c, int exponent);
    /// The indeterminate q.
    static QPoly q() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int offset() const noexcept { return offset_; }
    /// Highest exponent present; offset() for the zero polynomial.
    int top() const noexcept { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    BigRational coeff(int exponent) const;
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }
    bool is_constant() const noexcept { return is_zero() || (is_monomial() && offset_ == 0); }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const BigRational& s);
    QPoly& shift(int k);  ///< multiply by q^k

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigRational& s) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
    }

    /// Split as scale * q^offset() * primitive, with primitive in Z[q]
    /// having a nonzero constant term and positive leading coefficient.
    struct Integral {
        BigRational scale;
        ZPoly primitive;
    };
    Integral integral() const;
    static QPoly from_integral(const BigRational& scale, const ZPoly& p, int offset);

    /// `{offset:c0,c1,...}`
    std::string to_string() const;
    static QPoly parse(const std::string& text);

private:
    void trim();
    std::vector<BigRational> coeffs_;
    int offset_ = 0;
};

/// Exact quotient and remainder in Q[q] for ordinary polynomials (offset 0).
struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};
QPolyDivision divide(const QPoly& a, const QPoly& b);

/// gcd over Q of the polynomial parts (q-power parts dropped), normalized
/// to constant term 1. Returns the zero polynomial only for gcd(0, 0).
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace qsum::exact
