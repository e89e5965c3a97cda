#pragma once

#include "qsum/core/values.hpp"

#include <optional>
#include <string>
#include <utility>

namespace qsum::core {

/// Subscript of (a;q)_n: a finite integer of either sign, or infinity.
class PochIndex {
public:
    PochIndex(long n) : n_(n) {}  // NOLINT
    static PochIndex infinity() { return PochIndex(); }

    bool is_infinite() const noexcept { return !n_.has_value(); }
    long finite() const;

private:
    PochIndex() = default;
    std::optional<long> n_;
};

/// Numeric base policy: |q| above this is refused.
inline constexpr double kMaxNumericBase = 0.9;
/// |q| above this draws a warning.
inline constexpr double kWarnNumericBase = 0.75;
inline constexpr long kMaxInfiniteFactors = 100000;

/// DomainError for |q| >= 1 or |q| > 0.9. Returns a warning for
/// |q| above 0.75, empty otherwise; callers decide where it goes.
std::string check_numeric_base(const HpComplex& q);

/// (a;q)_n for a finite signed n, as a factored product.
///
/// In exact mode q must be the base q itself (1*q^1). Negative n uses
/// (a)_{-n} = 1/(aq^{-n})_n and raises PoleError naming `label` when a
/// factor of that product vanishes.
Prod poch(const Param& a, const Param& q, long n, const std::string& label = "a");

/// 1/(a;q)_n. For n < 0 this is the finite product (aq^n)_{-n}, which may
/// vanish; for n >= 0 a vanishing factor is a PoleError.
Prod reciprocal_poch(const Param& a, const Param& q, long n, const std::string& label = "a");

/// (a;q)_inf; numeric only.
HpComplex poch_infinite(const HpComplex& a, const HpComplex& q);

/// General entry point over Scalars. Exact a must be a monomial c*q^e
/// when n < 0 or when used with exact q; non-monomial exact a is expanded
/// directly (n >= 0 only).
Scalar poch(const Scalar& a, const Scalar& q, PochIndex n);

// The four shift formulas, each returned as (lhs, rhs). All components are
// built independently so the pair is a genuine check.

/// (a)_{n+k} vs (a)_n (aq^n)_k
std::pair<Scalar, Scalar> shift_split(const Param& a, const Param& q, long n, long k);
/// (a)_{-n} vs (-q/a)^n q^{n(n-1)/2} / (q/a)_n
std::pair<Scalar, Scalar> negative_index(const Param& a, const Param& q, long n);
/// (aq^{-n})_k vs (a)_k (q/a)_n / (q^{1-k}/a)_n q^{-nk}
std::pair<Scalar, Scalar> shift_base(const Param& a, const Param& q, long n, long k);
/// (a)_{n-k}/(b)_{n-k} vs (a)_n/(b)_n (q^{1-n}/b)_k/(q^{1-n}/a)_k (b/a)^k
std::pair<Scalar, Scalar> ratio_shift(const Param& a, const Param& b, const Param& q, long n, long k);

}  // namespace qsum::core
