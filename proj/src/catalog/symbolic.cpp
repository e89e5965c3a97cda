#include "qsum/catalog/symbolic.hpp"

#include "qsum/error.hpp"

#include <cctype>
#include <cstdlib>

namespace qsum::catalog {

Affine Affine::substitute(const Affine& n_to, const Affine& m_to) const {
    return Affine::constant(c0) + cn * n_to + cm * m_to;
}

std::string Affine::to_string() const {
    std::string s;
    auto term = [&](long c, const char* sym) {
        if (c == 0) return;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        const long a = std::labs(c);
        if (a != 1) s += std::to_string(a) + "*";
        s += sym;
    };
    term(cn, "n");
    term(cm, "m");
    if (c0 != 0 || s.empty()) {
        if (c0 >= 0 && !s.empty()) s += "+";
        s += std::to_string(c0);
    }
    return s;
}

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw SubstitutionError("cannot parse '" + text + "': " + why);
}

std::string strip(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    return s;
}

long read_long(const std::string& s, std::size_t& i, const std::string& whole) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) bad(whole, "expected digits");
    try {
        return std::stol(s.substr(start, i - start));
    } catch (const std::exception&) {
        bad(whole, "integer out of range");
    }
}

}  // namespace

Affine Affine::parse(const std::string& raw) {
    const std::string s = strip(raw);
    if (s.empty()) bad(raw, "empty");
    Affine out;
    std::size_t i = 0;
    while (i < s.size()) {
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            bad(raw, "expected '+' or '-'");
        }
        long coef = 1;
        bool have_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_long(s, i, raw);
            have_num = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (i < s.size() && (s[i] == 'n' || s[i] == 'm')) {
            (s[i] == 'n' ? out.cn : out.cm) += sign * coef;
            ++i;
        } else if (have_num) {
            out.c0 += sign * coef;
        } else {
            bad(raw, "expected a number, n or m");
        }
    }
    return out;
}

SymMono::SymMono(BigRational coeff, Affine qexp, std::map<char, int> pows)
    : coeff_(std::move(coeff)), qexp_(qexp), pows_(std::move(pows)) {
    coeff_.canonicalize();
    if (sgn(coeff_) == 0) throw SubstitutionError("monomial with zero coefficient");
    for (auto it = pows_.begin(); it != pows_.end();) it = it->second == 0 ? pows_.erase(it) : std::next(it);
}

SymMono operator*(const SymMono& x, const SymMono& y) {
    std::map<char, int> p = x.pows_;
    for (const auto& [s, k] : y.pows_) p[s] += k;
    return SymMono(x.coeff_ * y.coeff_, x.qexp_ + y.qexp_, p);
}

SymMono operator/(const SymMono& x, const SymMono& y) { return x * y.pow(-1); }

SymMono SymMono::pow(int k) const {
    const unsigned long uk = static_cast<unsigned long>(std::abs(k));
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), uk);
    mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), uk);
    std::map<char, int> p;
    for (const auto& [s, e] : pows_) p[s] = e * k;
    return SymMono(k >= 0 ? BigRational(num, den) : BigRational(den, num), k * qexp_, p);
}

SymMono SymMono::substitute(const Affine& n_to, const Affine& m_to, const std::map<char, SymMono>& letters) const {
    SymMono out(coeff_, qexp_.substitute(n_to, m_to));
    for (const auto& [s, k] : pows_) {
        auto it = letters.find(s);
        out = out * (it == letters.end() ? SymMono::symbol(s) : it->second).pow(k);
    }
    return out;
}

Param SymMono::instantiate(const Bindings& b) const {
    Param out = b.q.pow(qexp_.eval(b.n, b.m));
    if (b.q.is_exact())
        out = out * Param(core::MonoParam(coeff_, 0));
    else
        out = out * Param(core::HpComplex(b.q.complex().context(), coeff_));
    for (const auto& [s, k] : pows_) {
        auto it = b.sym.find(s);
        if (it == b.sym.end()) throw MissingParam(std::string("parameter ") + s + " is required");
        out = out * it->second.pow(k);
    }
    return out;
}

std::string SymMono::to_string() const {
    std::vector<std::string> top, bottom;
    const mpz_class num = abs(coeff_.get_num());
    if (num != 1) top.push_back(num.get_str());
    if (coeff_.get_den() != 1) bottom.push_back(coeff_.get_den().get_str());
    if (!(qexp_ == Affine{})) {
        if (qexp_ == Affine::constant(1))
            top.push_back("q");
        else if (qexp_.is_constant() && qexp_.c0 > 0)
            top.push_back("q^" + std::to_string(qexp_.c0));
        else
            top.push_back("q^(" + qexp_.to_string() + ")");
    }
    for (const auto& [s, k] : pows_) {
        std::string t(1, s);
        if (std::abs(k) != 1) t += "^" + std::to_string(std::abs(k));
        (k > 0 ? top : bottom).push_back(t);
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& t : v) s += (s.empty() ? "" : "*") + t;
        return s;
    };
    std::string s = sgn(coeff_) < 0 ? "-" : "";
    s += top.empty() ? "1" : join(top);
    if (!bottom.empty()) s += "/" + (bottom.size() == 1 ? bottom[0] : "(" + join(bottom) + ")");
    return s;
}

namespace {

class MonoParser {
public:
    explicit MonoParser(std::string s, std::string whole) : s_(std::move(s)), whole_(std::move(whole)) {}

    SymMono product() {
        SymMono acc = factor();
        while (i_ < s_.size() && (s_[i_] == '*' || s_[i_] == '/')) {
            const char op = s_[i_++];
            SymMono f = factor();
            acc = op == '*' ? acc * f : acc / f;
        }
        return acc;
    }

    bool done() const { return i_ == s_.size(); }

private:
    SymMono factor() {
        if (i_ >= s_.size()) bad(whole_, "unexpected end");
        bool neg = false;
        if (s_[i_] == '-') {
            neg = true;
            ++i_;
        }
        SymMono base;
        const char ch = i_ < s_.size() ? s_[i_] : '\0';
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            base = SymMono(BigRational(mpz_class(s_.substr(start, i_ - start), 10)), {});
        } else if (ch == 'q') {
            ++i_;
            base = SymMono::q_pow(Affine::constant(1));
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                base = SymMono::q_pow(exponent());
            }
        } else if (ch == '(') {
            ++i_;
            base = product();
            if (i_ >= s_.size() || s_[i_] != ')') bad(whole_, "missing ')'");
            ++i_;
        } else if (std::string("abcdez").find(ch) != std::string::npos && ch != '\0') {
            ++i_;
            base = SymMono::symbol(ch);
        } else {
            bad(whole_, std::string("unexpected '") + ch + "'");
        }
        if (i_ < s_.size() && s_[i_] == '^' && !(base.qexp() == Affine::constant(1) && base.pows().empty())) {
            ++i_;
            const Affine e = exponent();
            if (!e.is_constant()) bad(whole_, "only q may carry a symbolic exponent");
            base = base.pow(static_cast<int>(e.c0));
        }
        return neg ? base * SymMono(-1, {}) : base;
    }

    Affine exponent() {
        if (i_ < s_.size() && s_[i_] == '(') {
            const std::size_t close = s_.find(')', i_);
            if (close == std::string::npos) bad(whole_, "missing ')'");
            Affine e = Affine::parse(s_.substr(i_ + 1, close - i_ - 1));
            i_ = close + 1;
            return e;
        }
        const std::size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])) && s_[i_] != 'q') ++i_;
        return Affine::parse(s_.substr(start, i_ - start));
    }

    std::string s_;
    std::string whole_;
    std::size_t i_ = 0;
};

}  // namespace

SymMono SymMono::parse(const std::string& raw) {
    const std::string s = strip(raw);
    if (s.empty()) bad(raw, "empty");
    MonoParser p(s, raw);
    SymMono out = p.product();
    if (!p.done()) bad(raw, "trailing characters");
    return out;
}

}  // namespace qsum::catalog
