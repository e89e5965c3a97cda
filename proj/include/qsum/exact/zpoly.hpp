#pragma once

// Dense polynomials over Z, lowest power first. These back QPoly's gcd and
// the factored products used by the exact evaluator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qsum::exact {

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);

    static ZPoly constant(const mpz_class& c);
    /// r - p*q^j, the integer form of a binomial factor (j >= 1).
    static ZPoly binomial(const mpz_class& r, const mpz_class& p, int j);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
    const mpz_class& lead() const { return coeffs_.back(); }
    /// Number of trailing zero coefficients (the power of q dividing this).
    int valuation() const;

    mpz_class content() const;
    ZPoly primitive_part() const;
    /// Primitive with positive constant term; requires a nonzero constant term.
    ZPoly canonical_factor() const;

    /// True when exactly two nonzero coefficients, at powers 0 and degree().
    bool is_binomial() const;

    ZPoly& operator+=(const ZPoly& other);
    ZPoly& operator-=(const ZPoly& other);
    ZPoly& operator*=(const mpz_class& s);
    ZPoly& shift(int k);  ///< multiply by q^k, k >= 0
    ZPoly& drop_low(int k);  ///< divide by q^k, requires valuation() >= k

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    /// Degree first, then coefficients from the lowest power.
    friend std::strong_ordering operator<=>(const ZPoly& a, const ZPoly& b);

    /// Multiply in place by r - p q^j.
    void mul_binomial(const mpz_class& r, const mpz_class& p, int j);

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Exact quotient a / b in Z[q] if b divides a there, nullopt otherwise.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Cheap sufficient test: true means the two are certainly coprime over Q.
bool certainly_coprime(const ZPoly& a, const ZPoly& b);

/// Remainder of a modulo b over Q, scaled to a primitive integer polynomial.
ZPoly pseudo_remainder_primitive(const ZPoly& a, const ZPoly& b);

namespace modp {

/// Word-size primes just above 2^61, generated once.
std::span<const std::uint64_t> primes();

using Poly = std::vector<std::uint64_t>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
Poly reduce(const ZPoly& a, std::uint64_t p);
/// Monic gcd mod p.
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// a mod b (b nonzero with invertible lead).
Poly rem(Poly a, const Poly& b, std::uint64_t p);

}  // namespace modp

}  // namespace qsum::exact
