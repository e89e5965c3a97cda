#pragma once

// Symbolic parameters for catalog entries: monomials c * q^(affine) * prod s^k
// over the parameter letters a..e, z, with affine exponents in the integer
// symbols n and m. Substitution rules act on these before any value exists.

#include "qsum/core/values.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsum::catalog {

using core::Param;
using exact::BigRational;

/// c0 + cn*n + cm*m
struct Affine {
    long c0 = 0;
    long cn = 0;
    long cm = 0;

    static Affine constant(long c) { return {c, 0, 0}; }
    static Affine n_sym() { return {0, 1, 0}; }
    static Affine m_sym() { return {0, 0, 1}; }

    bool is_constant() const noexcept { return cn == 0 && cm == 0; }
    long eval(long n, long m) const { return c0 + cn * n + cm * m; }
    /// Replace n and m by affine forms in the target symbols.
    Affine substitute(const Affine& n_to, const Affine& m_to) const;

    friend Affine operator+(const Affine& x, const Affine& y) { return {x.c0 + y.c0, x.cn + y.cn, x.cm + y.cm}; }
    friend Affine operator-(const Affine& x, const Affine& y) { return {x.c0 - y.c0, x.cn - y.cn, x.cm - y.cm}; }
    friend Affine operator*(long k, const Affine& x) { return {k * x.c0, k * x.cn, k * x.cm}; }
    friend bool operator==(const Affine&, const Affine&) = default;

    /// e.g. "2*m+1", "-n", "0"
    std::string to_string() const;
    /// Throws SubstitutionError.
    static Affine parse(const std::string& text);
};

/// Values bound to the symbols of an instance.
struct Bindings {
    Param q;
    std::map<char, Param> sym;
    long n = 0;
    long m = 0;
};

class SymMono {
public:
    SymMono() = default;
    SymMono(BigRational coeff, Affine qexp, std::map<char, int> pows = {});
    static SymMono symbol(char s) { return SymMono(1, {}, {{s, 1}}); }
    static SymMono q_pow(Affine e) { return SymMono(1, e); }

    const BigRational& coeff() const noexcept { return coeff_; }
    const Affine& qexp() const noexcept { return qexp_; }
    const std::map<char, int>& pows() const noexcept { return pows_; }

    friend SymMono operator*(const SymMono& x, const SymMono& y);
    friend SymMono operator/(const SymMono& x, const SymMono& y);
    SymMono pow(int k) const;
    friend bool operator==(const SymMono&, const SymMono&) = default;

    /// Apply n -> n_to, m -> m_to and letter -> monomial simultaneously.
    SymMono substitute(const Affine& n_to, const Affine& m_to, const std::map<char, SymMono>& letters) const;

    /// Throws MissingParam when a letter has no binding.
    Param instantiate(const Bindings& b) const;

    /// Display form such as "q/b", "b*q^(-m)", "q^(m+2)/(b*c)".
    std::string to_string() const;
    /// Parses products and quotients of integers, letters, q, powers and
    /// parenthesized groups. Throws SubstitutionError.
    static SymMono parse(const std::string& text);

private:
    BigRational coeff_ = 1;
    Affine qexp_;
    std::map<char, int> pows_;
};

}  // namespace qsum::catalog
