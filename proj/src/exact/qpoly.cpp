#include "qsum/exact/qpoly.hpp"

#include "qsum/error.hpp"

#include <sstream>
#include <utility>

namespace qsum::exact {

QPoly::QPoly(std::vector<BigRational> coeffs, int offset) : coeffs_(std::move(coeffs)), offset_(offset) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

QPoly QPoly::constant(const BigRational& c) { return QPoly({c}, 0); }

QPoly QPoly::monomial(const BigRational& c, int exponent) { return QPoly({c}, exponent); }

void QPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) offset_ = 0;
}

BigRational QPoly::coeff(int exponent) const {
    const int i = exponent - offset_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    const int lo = std::min(offset_, other.offset_);
    const int hi = std::max(top(), other.top());
    std::vector<BigRational> r(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + static_cast<std::size_t>(offset_ - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        r[i + static_cast<std::size_t>(other.offset_ - lo)] += other.coeffs_[i];
    coeffs_ = std::move(r);
    offset_ = lo;
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly& QPoly::operator*=(const BigRational& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        offset_ = 0;
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

QPoly& QPoly::shift(int k) {
    if (!is_zero()) offset_ += k;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Multiply the integral parts; mpz arithmetic is much cheaper than mpq.
    auto ia = a.integral();
    auto ib = b.integral();
    ZPoly prod = ia.primitive * ib.primitive;
    return QPoly::from_integral(ia.scale * ib.scale, prod, a.offset_ + b.offset_);
}

QPoly::Integral QPoly::integral() const {
    if (is_zero()) return {0, ZPoly{}};
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), den_lcm.get_mpz_t(), coeffs_[i].get_den_mpz_t());
        ints[i] = coeffs_[i].get_num() * t;
    }
    ZPoly z(std::move(ints));
    mpz_class cont = z.content();
    if (sgn(z.lead()) < 0) cont = -cont;
    ZPoly prim = z.primitive_part();
    if (sgn(prim.lead()) < 0) prim *= mpz_class(-1);
    BigRational scale(cont, den_lcm);
    scale.canonicalize();
    return {scale, prim};
}

QPoly QPoly::from_integral(const BigRational& scale, const ZPoly& p, int offset) {
    std::vector<BigRational> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = BigRational(p[i]) * scale;
    return QPoly(std::move(c), offset);
}

std::string QPoly::to_string() const {
    std::ostringstream os;
    os << '{' << offset_ << ':';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
    os << '}';
    return os.str();
}

QPoly QPoly::parse(const std::string& text) {
    if (text.size() < 3 || text.front() != '{' || text.back() != '}')
        throw ParseError("polynomial literal must look like {offset:c0,c1,...}: " + text);
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in polynomial literal: " + text);
    int offset = 0;
    try {
        offset = std::stoi(text.substr(1, colon - 1));
    } catch (const std::exception&) {
        throw ParseError("bad offset in polynomial literal: " + text);
    }
    std::vector<BigRational> coeffs;
    const std::string body = text.substr(colon + 1, text.size() - colon - 2);
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        BigRational c;
        if (item.empty() || c.set_str(item, 10) != 0) throw ParseError("bad coefficient '" + item + "'");
        if (sgn(c.get_den()) == 0) throw ParseError("zero denominator in coefficient '" + item + "'");
        coeffs.push_back(c);
    }
    return QPoly(std::move(coeffs), offset);
}

QPolyDivision divide(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.offset() < 0 || b.offset() < 0) throw DomainError("divide() expects ordinary polynomials");
    std::vector<BigRational> rem(static_cast<std::size_t>(a.is_zero() ? 0 : a.top() + 1));
    for (int e = a.offset(); e <= a.top() && !a.is_zero(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
    const int db = b.top();
    const BigRational lb = b.coeff(db);
    std::vector<BigRational> quot;
    if (static_cast<int>(rem.size()) - 1 >= db) quot.resize(rem.size() - static_cast<std::size_t>(db));
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        BigRational f = rem[static_cast<std::size_t>(i)] / lb;
        if (sgn(f) == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int e = b.offset(); e <= db; ++e) rem[static_cast<std::size_t>(i - db + e)] -= f * b.coeff(e);
    }
    return {QPoly(std::move(quot), 0), QPoly(std::move(rem), 0)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    const ZPoly g = gcd(a.integral().primitive, b.integral().primitive);
    // g has a nonzero constant term because both primitives do.
    return QPoly::from_integral(BigRational(1) / BigRational(g[0]), g, 0);
}

}  // namespace qsum::exact
