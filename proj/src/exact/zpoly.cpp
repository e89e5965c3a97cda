#include "qsum/exact/zpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

namespace qsum::exact {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) { return ZPoly(std::vector<mpz_class>{c}); }

ZPoly ZPoly::binomial(const mpz_class& r, const mpz_class& p, int j) {
    std::vector<mpz_class> c(static_cast<std::size_t>(j) + 1);
    c[0] = r;
    c[static_cast<std::size_t>(j)] = -p;
    return ZPoly(std::move(c));
}

void ZPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int ZPoly::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    return 0;
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (g == 1) return *this;
    ZPoly r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

ZPoly ZPoly::canonical_factor() const {
    ZPoly r = primitive_part();
    if (!r.is_zero() && sgn(r.coeffs_.front()) < 0)
        for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool ZPoly::is_binomial() const {
    if (coeffs_.size() < 2 || sgn(coeffs_.front()) == 0) return false;
    for (std::size_t i = 1; i + 1 < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const mpz_class& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

ZPoly& ZPoly::shift(int k) {
    if (k > 0 && !is_zero()) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(k), mpz_class(0));
    return *this;
}

ZPoly& ZPoly::drop_low(int k) {
    if (k > 0 && !is_zero()) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + k);
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
}

void ZPoly::mul_binomial(const mpz_class& r, const mpz_class& p, int j) {
    if (is_zero()) return;
    const std::size_t old = coeffs_.size();
    const std::size_t ju = static_cast<std::size_t>(j);
    coeffs_.resize(old + ju);
    for (std::size_t i = old + ju; i-- > 0;) {
        mpz_class& slot = coeffs_[i];
        if (i < old)
            slot *= r;
        else
            slot = 0;
        if (i >= ju) mpz_submul(slot.get_mpz_t(), p.get_mpz_t(), coeffs_[i - ju].get_mpz_t());
    }
    trim();
}

std::strong_ordering operator<=>(const ZPoly& a, const ZPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string ZPoly::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
    os << ']';
    return os.str();
}

std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return ZPoly{};
    const int da = a.degree();
    const int db = b.degree();
    if (da < db) return std::nullopt;
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quot(static_cast<std::size_t>(da - db + 1));
    const mpz_class& lb = b.lead();
    for (int i = da - db; i >= 0; --i) {
        mpz_class& top = rem[static_cast<std::size_t>(i + db)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), qc.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        quot[static_cast<std::size_t>(i)] = std::move(qc);
    }
    for (int j = 0; j < db; ++j)
        if (sgn(rem[static_cast<std::size_t>(j)]) != 0) return std::nullopt;
    return ZPoly(std::move(quot));
}

ZPoly pseudo_remainder_primitive(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    auto trim = [&] {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    };
    trim();
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        trim();
        ZPoly tmp(r);
        r = tmp.primitive_part().coeffs();
    }
    return ZPoly(std::move(r)).primitive_part();
}

namespace modp {

std::span<const std::uint64_t> primes() {
    static const std::vector<std::uint64_t> list = [] {
        std::vector<std::uint64_t> out;
        out.reserve(1024);
        mpz_class p = mpz_class(1) << 61;
        for (int i = 0; i < 1024; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            out.push_back(mpz_get_ui(p.get_mpz_t()));
        }
        return out;
    }();
    return list;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

static std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return result;
}

static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const ZPoly& a, std::uint64_t p) {
    Poly r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim(r);
    return r;
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = inverse(b.back(), p);
    while (a.size() > db && !a.empty()) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t f = mul(a.back(), inv, p);
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(f, b[j], p), p);
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = inverse(a.back(), p);
        for (auto& c : a) c = mul(c, inv, p);
    }
    return a;
}

}  // namespace modp

namespace {

// Primitive polynomial remainder sequence; slow but dependable.
ZPoly prs_gcd(ZPoly a, ZPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        ZPoly r = pseudo_remainder_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZPoly symmetric(const std::vector<mpz_class>& h, const mpz_class& modulus) {
    mpz_class half = modulus / 2;
    std::vector<mpz_class> out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = h[i] > half ? h[i] - modulus : h[i];
    return ZPoly(std::move(out));
}

ZPoly positive_lead(ZPoly g) {
    if (!g.is_zero() && sgn(g.lead()) < 0) g *= mpz_class(-1);
    return g;
}

}  // namespace

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
    if (a_in.is_zero()) return positive_lead(b_in.primitive_part());
    if (b_in.is_zero()) return positive_lead(a_in.primitive_part());
    const ZPoly a = a_in.primitive_part();
    const ZPoly b = b_in.primitive_part();
    if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(1);
    if (a == b) return positive_lead(a);

    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), a.lead().get_mpz_t(), b.lead().get_mpz_t());

    std::vector<mpz_class> h;
    mpz_class modulus = 0;
    int best = std::min(a.degree(), b.degree()) + 1;
    ZPoly last_candidate;

    for (std::uint64_t p : modp::primes()) {
        if (mpz_fdiv_ui(a.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lead().get_mpz_t(), p) == 0)
            continue;
        modp::Poly g = modp::gcd(modp::reduce(a, p), modp::reduce(b, p), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return ZPoly::constant(1);
        const std::uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : g) c = modp::mul(c, gm, p);

        if (dg > best) continue;
        if (dg < best) {
            best = dg;
            h.assign(g.size(), 0);
            for (std::size_t i = 0; i < g.size(); ++i) h[i] = static_cast<unsigned long>(g[i]);
            modulus = static_cast<unsigned long>(p);
            last_candidate = ZPoly{};
            continue;
        }
        // CRT: h <- h + modulus * ((g - h) * modulus^{-1} mod p)
        const std::uint64_t minv = modp::inverse(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::uint64_t hi = mpz_fdiv_ui(h[i].get_mpz_t(), p);
            std::uint64_t diff = g[i] >= hi ? g[i] - hi : g[i] + (p - hi);
            std::uint64_t t = modp::mul(diff, minv, p);
            mpz_class tz = static_cast<unsigned long>(t);
            mpz_addmul(h[i].get_mpz_t(), modulus.get_mpz_t(), tz.get_mpz_t());
        }
        modulus *= static_cast<unsigned long>(p);

        ZPoly candidate = symmetric(h, modulus).primitive_part();
        if (candidate == last_candidate) {
            if (exact_divide(a, candidate) && exact_divide(b, candidate)) return positive_lead(candidate);
        }
        last_candidate = std::move(candidate);
    }
    return positive_lead(prs_gcd(a, b));
}

bool certainly_coprime(const ZPoly& a, const ZPoly& b) {
    if (a.degree() <= 0 || b.degree() <= 0) return true;
    for (std::uint64_t p : modp::primes().first(4)) {
        if (mpz_fdiv_ui(a.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lead().get_mpz_t(), p) == 0)
            continue;
        return modp::gcd(modp::reduce(a, p), modp::reduce(b, p), p).size() == 1;
    }
    return false;
}

}  // namespace qsum::exact
