#include "qsum/exact/factored.hpp"

#include "qsum/error.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <vector>

namespace qsum::exact {

Factored Factored::zero() {
    Factored f;
    f.zero_ = true;
    f.coeff_ = 0;
    return f;
}

Factored Factored::constant(const BigRational& c) {
    if (sgn(c) == 0) return zero();
    Factored f;
    f.coeff_ = c;
    return f;
}

Factored Factored::monomial(const BigRational& c, int exponent) {
    Factored f = constant(c);
    if (!f.zero_) f.qpow_ = exponent;
    return f;
}

Factored Factored::one_minus(const BigRational& c, int exponent) {
    if (exponent == 0) return constant(1 - c);
    if (exponent < 0) {
        // 1 - c q^e = -c q^e (1 - q^(-e)/c)
        Factored f = one_minus(1 / c, -exponent);
        f.coeff_ *= -c;
        f.qpow_ += exponent;
        return f;
    }
    Factored f;
    f.coeff_ = BigRational(1) / BigRational(c.get_den());
    f.factors_.emplace(ZPoly::binomial(c.get_den(), c.get_num(), exponent), 1);
    return f;
}

Factored& Factored::operator*=(const Factored& o) {
    if (zero_) return *this;
    if (o.zero_) return *this = zero();
    coeff_ *= o.coeff_;
    qpow_ += o.qpow_;
    for (const auto& [f, m] : o.factors_) {
        auto [it, inserted] = factors_.emplace(f, m);
        if (!inserted && (it->second += m) == 0) factors_.erase(it);
    }
    return *this;
}

Factored& Factored::operator/=(const Factored& o) {
    if (o.zero_) throw DivisionByZero("division by a zero product");
    if (zero_) return *this;
    coeff_ /= o.coeff_;
    qpow_ -= o.qpow_;
    for (const auto& [f, m] : o.factors_) {
        auto [it, inserted] = factors_.emplace(f, -m);
        if (!inserted && (it->second -= m) == 0) factors_.erase(it);
    }
    return *this;
}

Factored Factored::pow(long e) const {
    if (zero_) {
        if (e < 0) throw DivisionByZero("zero to a negative power");
        return e == 0 ? Factored{} : zero();
    }
    Factored r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    r.coeff_ = e >= 0 ? BigRational(num, den) : BigRational(den, num);
    r.coeff_.canonicalize();
    r.qpow_ = qpow_ * static_cast<int>(e);
    if (e != 0)
        for (const auto& [f, m] : factors_) r.factors_.emplace(f, m * static_cast<int>(e));
    return r;
}

void Factored::mul_poly(const ZPoly& f, int mult) {
    if (f.is_zero()) {
        if (mult < 0) throw DivisionByZero("division by the zero polynomial");
        *this = zero();
        return;
    }
    if (zero_ || mult == 0) return;
    ZPoly g = f;
    const int v = g.valuation();
    g.drop_low(v);
    qpow_ += v * mult;
    ZPoly canon = g.canonical_factor();
    // g = k * canon with k an integer
    BigRational k(g[0], canon[0]);
    k.canonicalize();
    *this *= Factored::constant(k).pow(mult);
    if (canon.degree() >= 1) {
        auto [it, inserted] = factors_.emplace(std::move(canon), mult);
        if (!inserted && (it->second += mult) == 0) factors_.erase(it);
    }
}

namespace {

// log of the common root modulus of a binomial r - p q^j.
double binomial_root_log(const ZPoly& f) {
    long ea = 0, eb = 0;
    const double a = mpz_get_d_2exp(&ea, f[0].get_mpz_t());
    const double b = mpz_get_d_2exp(&eb, f.lead().get_mpz_t());
    const double lr = std::log(std::fabs(a)) + ea * std::log(2.0);
    const double lp = std::log(std::fabs(b)) + eb * std::log(2.0);
    return (lr - lp) / f.degree();
}

bool quick_coprime(const ZPoly& a, const ZPoly& b) {
    if (a.is_binomial() && b.is_binomial()) {
        const double d = binomial_root_log(a) - binomial_root_log(b);
        if (std::fabs(d) > 1e-9) return true;
    }
    return certainly_coprime(a, b);
}

ZPoly expand(const std::vector<std::pair<ZPoly, int>>& factors) {
    ZPoly acc = ZPoly::constant(1);
    for (const auto& [f, m] : factors) {
        for (int i = 0; i < m; ++i) {
            if (f.is_binomial())
                acc.mul_binomial(f[0], -f.lead(), f.degree());
            else
                acc = acc * f;
        }
    }
    return acc;
}

}  // namespace

QRatFun Factored::to_qratfun() const {
    if (zero_) return {};
    Factored work = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, ma] : work.factors_) {
            if (ma <= 0) continue;
            for (const auto& [b, mb] : work.factors_) {
                if (mb >= 0 || quick_coprime(a, b)) continue;
                ZPoly g = gcd(a, b);
                if (g.degree() < 1) continue;
                const ZPoly a0 = a, b0 = b;
                const int ma0 = ma, mb0 = mb;
                work.factors_.erase(a0);
                work.factors_.erase(b0);
                work.mul_poly(*exact_divide(a0, g), ma0);
                work.mul_poly(*exact_divide(b0, g), mb0);
                work.mul_poly(g, ma0 + mb0);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    std::vector<std::pair<ZPoly, int>> num, den;
    for (const auto& [f, m] : work.factors_) (m > 0 ? num : den).emplace_back(f, m > 0 ? m : -m);
    return QRatFun::from_coprime(QPoly::from_integral(work.coeff_, expand(num), work.qpow_),
                                 QPoly::from_integral(1, expand(den), 0));
}

namespace {

bool divisible_mod_p(const ZPoly& s, const ZPoly& k) {
    for (std::uint64_t p : modp::primes().first(4)) {
        if (mpz_fdiv_ui(k.lead().get_mpz_t(), p) == 0) continue;
        return modp::rem(modp::reduce(s, p), modp::reduce(k, p), p).empty();
    }
    return true;
}

bool coprime_mod_p(const ZPoly& s, const ZPoly& k) {
    for (std::uint64_t p : modp::primes().first(4)) {
        if (mpz_fdiv_ui(k.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(s.lead().get_mpz_t(), p) == 0) continue;
        auto kp = modp::reduce(k, p);
        auto r = modp::rem(modp::reduce(s, p), kp, p);
        return modp::gcd(kp, r, p).size() == 1;
    }
    return false;
}

}  // namespace

QRatFun sum(std::span<const Factored> terms, bool parallel) {
    std::vector<const Factored*> live;
    for (const auto& t : terms)
        if (!t.is_zero()) live.push_back(&t);
    if (live.empty()) return {};
    if (live.size() == 1) return live.front()->to_qratfun();

    std::map<ZPoly, int> common;
    int min_q = live.front()->qpow();
    mpz_class den_lcm = 1;
    for (const auto* t : live) {
        min_q = std::min(min_q, t->qpow());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t->coeff().get_den_mpz_t());
        for (const auto& [f, m] : t->factors())
            if (m < 0) {
                int& slot = common[f];
                slot = std::max(slot, -m);
            }
    }

    // Expansion is the costly part and is independent per term; the
    // additions afterwards run in index order.
    std::vector<ZPoly> expanded(live.size());
    const long count = static_cast<long>(live.size());
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
    for (long i = 0; i < count; ++i) {
        const Factored* t = live[static_cast<std::size_t>(i)];
        std::vector<std::pair<ZPoly, int>> parts;
        for (const auto& [f, m] : t->factors())
            if (m > 0) parts.emplace_back(f, m);
        for (const auto& [f, m] : common) {
            auto it = t->factors().find(f);
            const int have = (it != t->factors().end() && it->second < 0) ? -it->second : 0;
            if (m - have > 0) parts.emplace_back(f, m - have);
        }
        ZPoly term = expand(parts);
        mpz_class scale;
        mpz_divexact(scale.get_mpz_t(), den_lcm.get_mpz_t(), t->coeff().get_den_mpz_t());
        scale *= t->coeff().get_num();
        term *= scale;
        term.shift(t->qpow() - min_q);
        expanded[static_cast<std::size_t>(i)] = std::move(term);
    }
    ZPoly total;
    for (const auto& term : expanded) total += term;
    if (total.is_zero()) return {};

    // Cancel common denominator factors against the numerator.
    std::deque<std::pair<ZPoly, int>> pending(common.begin(), common.end());
    std::vector<std::pair<ZPoly, int>> remaining;
    while (!pending.empty()) {
        auto [k, mult] = pending.front();
        pending.pop_front();
        while (mult > 0) {
            if (divisible_mod_p(total, k)) {
                if (auto quot = exact_divide(total, k)) {
                    total = std::move(*quot);
                    --mult;
                    continue;
                }
            }
            if (coprime_mod_p(total, k)) break;
            ZPoly g = gcd(k, pseudo_remainder_primitive(total, k));
            if (g.degree() < 1) break;
            total = *exact_divide(total, g);
            if (mult - 1 > 0) pending.emplace_back(g, mult - 1);
            pending.emplace_back(*exact_divide(k, g), mult);
            mult = 0;
        }
        if (mult > 0) remaining.emplace_back(std::move(k), mult);
    }
    return QRatFun::from_coprime(QPoly::from_integral(1, total, min_q),
                                 QPoly::from_integral(BigRational(den_lcm), expand(remaining), 0));
}

}  // namespace qsum::exact
