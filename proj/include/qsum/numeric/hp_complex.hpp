#pragma once

#include "qsum/numeric/hp_real.hpp"

#include <string>

namespace qsum::numeric {

/// Complex number at an explicit working precision.
///
/// Arithmetic between values built with different contexts throws
/// PrecisionMismatch. Components are always finite.
class HpComplex {
public:
    explicit HpComplex(PrecisionContext ctx);
    HpComplex(PrecisionContext ctx, long re, long im = 0);
    HpComplex(PrecisionContext ctx, const mpq_class& re, const mpq_class& im = 0);
    HpComplex(PrecisionContext ctx, HpReal re, HpReal im);

    /// Accepts `re`, `re+im*i`, `re-im*i`, `im*i`, where each part is a
    /// decimal or a fraction p/r (evaluated at full precision).
    static HpComplex parse(PrecisionContext ctx, const std::string& text);

    const PrecisionContext& context() const noexcept { return ctx_; }
    const HpReal& re() const noexcept { return re_; }
    const HpReal& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    HpComplex operator-() const;
    HpComplex& operator+=(const HpComplex& o);
    HpComplex& operator-=(const HpComplex& o);
    HpComplex& operator*=(const HpComplex& o);
    /// Throws DivisionByZero when |o| is below 10^-(digits+guard).
    HpComplex& operator/=(const HpComplex& o);
    friend HpComplex operator+(HpComplex a, const HpComplex& b) { return a += b; }
    friend HpComplex operator-(HpComplex a, const HpComplex& b) { return a -= b; }
    friend HpComplex operator*(HpComplex a, const HpComplex& b) { return a *= b; }
    friend HpComplex operator/(HpComplex a, const HpComplex& b) { return a /= b; }

    HpReal abs() const;
    HpComplex pow(long e) const;
    /// Principal branch.
    HpComplex sqrt() const;
    /// |x| below 10^-k.
    bool below(int k) const;

    /// `re` or `re±im*i`, each part in ±d.ddd…e±k form.
    std::string to_string(int digits) const;
    std::string to_string() const { return to_string(ctx_.digits); }

private:
    void check(const HpComplex& o) const;
    PrecisionContext ctx_;
    HpReal re_;
    HpReal im_;
};

enum class ArithOp { Add, Sub, Mul, Div };

HpComplex hp_arith(ArithOp op, const HpComplex& x, const HpComplex& y);

/// |x-y| <= rel_tol * max(1, |x|, |y|).
bool hp_close(const HpComplex& x, const HpComplex& y, const HpReal& rel_tol);
bool hp_close(const HpComplex& x, const HpComplex& y, double rel_tol);

/// |x-y| / max(1, |x|, |y|).
HpReal relative_difference(const HpComplex& x, const HpComplex& y);

}  // namespace qsum::numeric
