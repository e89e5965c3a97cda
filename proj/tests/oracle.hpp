#pragma once

// Independent reference arithmetic for tests: everything is evaluated at a
// rational point q0 with plain GMP rationals, sharing no code with the
// polynomial and rational-function machinery under test.

#include "qsum/core/mono_param.hpp"
#include "qsum/exact/qratfun.hpp"

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline mpq_class power(const mpq_class& x, long e) {
    mpq_class r = 1, b = e >= 0 ? x : mpq_class(1) / x;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
}

inline mpq_class at(const qsum::exact::QPoly& p, const mpq_class& q0) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        s += p.coeffs()[i] * power(q0, p.offset() + static_cast<long>(i));
    return s;
}

inline mpq_class at(const qsum::exact::QRatFun& x, const mpq_class& q0) { return at(x.num(), q0) / at(x.den(), q0); }

inline mpq_class at(const qsum::core::MonoParam& m, const mpq_class& q0) { return m.coeff() * power(q0, m.exp()); }

/// (a;q)_n for any integer n; nullopt when the negative-index product vanishes.
inline std::optional<mpq_class> poch(const mpq_class& a, const mpq_class& q, long n) {
    mpq_class r = 1;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) r *= 1 - a * power(q, k);
        return r;
    }
    for (long k = 1; k <= -n; ++k) r *= 1 - a * power(q, -k);
    if (r == 0) return std::nullopt;
    return mpq_class(1) / r;
}

/// Sum of terms k = lo..hi of a basic hypergeometric series, each computed
/// from scratch. unilateral adds the (q;q)_k factor below.
inline mpq_class window_sum(const std::vector<mpq_class>& num, const std::vector<mpq_class>& den, const mpq_class& z,
                            const mpq_class& q, bool unilateral, long lo, long hi) {
    mpq_class s = 0;
    for (long k = lo; k <= hi; ++k) {
        mpq_class t = power(z, k);
        bool zero = false;
        for (const auto& a : num) {
            auto p = poch(a, q, k);
            if (!p) throw std::runtime_error("numerator pole in oracle");
            t *= *p;
        }
        std::vector<mpq_class> lower = den;
        if (unilateral) lower.push_back(q);
        for (const auto& b : lower) {
            auto p = poch(b, q, k);
            if (!p) {  // 1/(b)_k with (b)_k infinite: the term is zero
                zero = true;
                break;
            }
            if (*p == 0) throw std::runtime_error("denominator pole in oracle");
            t /= *p;
        }
        if (!zero) s += t;
    }
    return s;
}

}  // namespace oracle
