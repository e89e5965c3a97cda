#pragma once

// The three value types the evaluators traffic in, each a tagged choice
// between the exact and numeric backends:
//   Param  - a series/identity parameter (MonoParam or HpComplex)
//   Prod   - a product of Pochhammer factors (Factored or HpComplex)
//   Scalar - a general value (QRatFun or HpComplex)

#include "qsum/core/mono_param.hpp"
#include "qsum/exact/factored.hpp"
#include "qsum/exact/qratfun.hpp"
#include "qsum/numeric/hp_complex.hpp"

#include <span>
#include <string>
#include <variant>

namespace qsum::core {

using numeric::HpComplex;
using numeric::PrecisionContext;

enum class Backend { Exact, Numeric };

std::string to_string(Backend b);

class Param {
public:
    Param() : v_(MonoParam()) {}
    Param(MonoParam m) : v_(std::move(m)) {}  // NOLINT
    Param(HpComplex c) : v_(std::move(c)) {}  // NOLINT

    Backend backend() const noexcept { return v_.index() == 0 ? Backend::Exact : Backend::Numeric; }
    bool is_exact() const noexcept { return v_.index() == 0; }
    const MonoParam& mono() const;
    const HpComplex& complex() const;

    /// The constant c in the same backend (and precision) as this.
    Param constant(long c) const;
    /// This parameter, which must be the base q, raised to e.
    Param q_power(long e) const { return pow(e); }

    Param operator-() const;
    friend Param operator*(const Param& a, const Param& b);
    friend Param operator/(const Param& a, const Param& b);
    Param pow(long e) const;
    /// Numeric: the principal square root. Exact: only for c*q^(2k) with c a
    /// rational square.
    Param sqrt() const;

    /// Exact: structural equality. Numeric: relative 10^-(digits-5).
    bool matches(const Param& other) const;

    /// Exact literal or full-precision decimal.
    std::string to_string() const;

private:
    void same_backend(const Param& o) const;
    std::variant<MonoParam, HpComplex> v_;
};

class Scalar;

class Prod {
public:
    Prod() : v_(exact::Factored{}) {}
    Prod(exact::Factored f) : v_(std::move(f)) {}  // NOLINT
    Prod(HpComplex c) : v_(std::move(c)) {}        // NOLINT

    /// 1 in the backend of p.
    static Prod one(const Param& p);
    static Prod of(const Param& p);
    /// 1 - p
    static Prod one_minus(const Param& p);

    Backend backend() const noexcept { return v_.index() == 0 ? Backend::Exact : Backend::Numeric; }
    bool is_zero() const;
    const exact::Factored& factored() const;
    const HpComplex& complex() const;

    Prod& operator*=(const Prod& o);
    /// Throws PoleError when o vanishes.
    Prod& operator/=(const Prod& o);
    friend Prod operator*(Prod a, const Prod& b) { return a *= b; }
    friend Prod operator/(Prod a, const Prod& b) { return a /= b; }
    Prod pow(long e) const;

    Scalar to_scalar() const;

private:
    std::variant<exact::Factored, HpComplex> v_;
};

class Scalar {
public:
    Scalar() : v_(exact::QRatFun()) {}
    Scalar(exact::QRatFun r) : v_(std::move(r)) {}  // NOLINT
    Scalar(HpComplex c) : v_(std::move(c)) {}       // NOLINT

    Backend backend() const noexcept { return v_.index() == 0 ? Backend::Exact : Backend::Numeric; }
    bool is_exact() const noexcept { return v_.index() == 0; }
    const exact::QRatFun& ratfun() const;
    const HpComplex& complex() const;
    bool is_zero() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    /// Exact values only: representation equality.
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    std::variant<exact::QRatFun, HpComplex> v_;
};

/// c*q^e evaluated at a numeric base.
HpComplex evaluate_at(const MonoParam& m, const HpComplex& q);

/// Sum of products: exact sums share one reduction, numeric sums add.
Scalar sum(std::span<const Prod> terms);

}  // namespace qsum::core
