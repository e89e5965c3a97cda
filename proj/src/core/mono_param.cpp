#include "qsum/core/mono_param.hpp"

#include "qsum/error.hpp"

#include <cctype>
#include <cstdlib>

namespace qsum::core {

MonoParam::MonoParam(BigRational coeff, int exp) : coeff_(std::move(coeff)), exp_(exp) {
    coeff_.canonicalize();
    if (sgn(coeff_) == 0) throw DomainError("monomial parameter with zero coefficient");
}

MonoParam& MonoParam::operator*=(const MonoParam& o) {
    coeff_ *= o.coeff_;
    exp_ += o.exp_;
    return *this;
}

MonoParam& MonoParam::operator/=(const MonoParam& o) {
    coeff_ /= o.coeff_;
    exp_ -= o.exp_;
    return *this;
}

MonoParam MonoParam::pow(long e) const {
    const unsigned long ue = static_cast<unsigned long>(std::labs(e));
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), ue);
    BigRational c = e >= 0 ? BigRational(num, den) : BigRational(den, num);
    return MonoParam(c, exp_ * static_cast<int>(e));
}

std::optional<MonoParam> MonoParam::from_qratfun(const exact::QRatFun& x) {
    if (!x.is_monomial()) return std::nullopt;
    return MonoParam(x.num().coeffs().front(), x.num().offset());
}

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
    throw ParseError("bad monomial literal '" + text + "': " + why);
}

void check_integer(const std::string& whole, const std::string& s) {
    if (s.empty()) bad(whole, "missing integer");
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') pos = 1;
    if (pos == s.size()) bad(whole, "missing digits");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad(whole, "unexpected '" + std::string(1, s[i]) + "'");
}

mpz_class parse_bigint(const std::string& whole, const std::string& s) {
    check_integer(whole, s);
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

long parse_int(const std::string& whole, const std::string& s) {
    check_integer(whole, s);
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        bad(whole, "integer out of range");
    }
}

}  // namespace

MonoParam MonoParam::parse(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty()) bad(raw, "empty");

    std::string coeff_part = text;
    int exp = 0;
    const auto qpos = text.find('q');
    if (qpos != std::string::npos) {
        coeff_part = text.substr(0, qpos);
        if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.pop_back();
        else if (!coeff_part.empty() && coeff_part != "-" && coeff_part != "+") bad(raw, "expected '*' before q");
        const std::string tail = text.substr(qpos + 1);
        if (tail.empty()) {
            exp = 1;
        } else {
            if (tail[0] != '^') bad(raw, "expected '^' after q");
            std::string e = tail.substr(1);
            if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
            exp = static_cast<int>(parse_int(raw, e));
        }
        if (coeff_part.empty() || coeff_part == "+") coeff_part = "1";
        if (coeff_part == "-") coeff_part = "-1";
    }

    BigRational c;
    const auto slash = coeff_part.find('/');
    if (slash == std::string::npos) {
        c = BigRational(parse_bigint(raw, coeff_part));
    } else {
        const std::string p = coeff_part.substr(0, slash);
        const std::string r = coeff_part.substr(slash + 1);
        const mpz_class pz = parse_bigint(raw, p);
        if (r.empty() || r[0] == '-' || r[0] == '+') bad(raw, "bad denominator");
        const mpz_class rz = parse_bigint(raw, r);
        if (sgn(rz) == 0) bad(raw, "zero denominator");
        c = BigRational(pz, rz);
        c.canonicalize();
    }
    if (sgn(c) == 0) bad(raw, "coefficient must be nonzero");
    return MonoParam(c, exp);
}

std::string MonoParam::to_string() const {
    std::string s = coeff_.get_str();
    if (exp_ == 0) return s;
    s += "*q";
    if (exp_ != 1) s += "^" + std::to_string(exp_);
    return s;
}

}  // namespace qsum::core
