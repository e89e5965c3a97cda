#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace qsum::numeric {

/// Working precision. digits is what results are reported and compared
/// at; guard extra digits are carried internally.
struct PrecisionContext {
    int digits = 60;
    int guard = 10;

    /// Throws DomainError when digits < 15 or guard < 5.
    static PrecisionContext make(int digits, int guard = 10);

    mpfr_prec_t bits() const noexcept;
    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

/// Owning wrapper over mpfr_t. Precision is fixed at construction; there is
/// no ambient default.
class HpReal {
public:
    explicit HpReal(mpfr_prec_t bits);
    HpReal(mpfr_prec_t bits, long value);
    HpReal(mpfr_prec_t bits, const mpq_class& value);
    /// Decimal text, e.g. "-1.25e-3". Throws ParseError.
    HpReal(mpfr_prec_t bits, const std::string& text);

    HpReal(const HpReal& other);
    HpReal(HpReal&& other) noexcept;
    HpReal& operator=(const HpReal& other);
    HpReal& operator=(HpReal&& other) noexcept;
    ~HpReal();

    mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
    long exponent2() const noexcept;

    HpReal operator-() const;
    HpReal& operator+=(const HpReal& o);
    HpReal& operator-=(const HpReal& o);
    HpReal& operator*=(const HpReal& o);
    HpReal& operator/=(const HpReal& o);
    friend HpReal operator+(HpReal a, const HpReal& b) { return a += b; }
    friend HpReal operator-(HpReal a, const HpReal& b) { return a -= b; }
    friend HpReal operator*(HpReal a, const HpReal& b) { return a *= b; }
    friend HpReal operator/(HpReal a, const HpReal& b) { return a /= b; }
    friend int compare(const HpReal& a, const HpReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const HpReal& a, const HpReal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const HpReal& a, const HpReal& b) { return compare(a, b) <= 0; }
    friend bool operator>(const HpReal& a, const HpReal& b) { return compare(a, b) > 0; }

    HpReal abs() const;
    HpReal sqrt() const;

    /// ±d.ddd…e±k with `digits` significant digits.
    std::string to_string(int digits) const;

private:
    mpfr_t v_;
};

/// 10^(-k) at the given precision.
HpReal pow10_neg(mpfr_prec_t bits, int k);

HpReal hypot(const HpReal& a, const HpReal& b);
HpReal max(const HpReal& a, const HpReal& b);

}  // namespace qsum::numeric
