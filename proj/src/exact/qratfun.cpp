#include "qsum/exact/qratfun.hpp"

#include "qsum/error.hpp"
#include "qsum/numeric/hp_complex.hpp"

namespace qsum::exact {

namespace {

// Divide the polynomial parts of a and b by their gcd.
void cancel(QPoly& a, QPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    auto ia = a.integral();
    auto ib = b.integral();
    if (ia.primitive.degree() == 0 || ib.primitive.degree() == 0) return;
    if (certainly_coprime(ia.primitive, ib.primitive)) return;
    ZPoly g = gcd(ia.primitive, ib.primitive);
    if (g.degree() == 0) return;
    a = QPoly::from_integral(ia.scale, *exact_divide(ia.primitive, g), a.offset());
    b = QPoly::from_integral(ib.scale, *exact_divide(ib.primitive, g), b.offset());
}

}  // namespace

QRatFun::QRatFun(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    QPoly n = num;
    QPoly d = den;
    cancel(n, d);
    *this = from_coprime(std::move(n), std::move(d));
}

QRatFun QRatFun::from_coprime(QPoly num, QPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    QRatFun r;
    if (num.is_zero()) return r;
    const int shift = -den.offset();
    den.shift(shift);
    num.shift(shift);
    BigRational c = den.coeffs().front();
    if (c != 1) {
        BigRational inv = 1 / c;
        den *= inv;
        num *= inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

QRatFun QRatFun::operator-() const {
    QRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

QRatFun operator+(const QRatFun& x, const QRatFun& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return QRatFun(x.num_ + y.num_, x.den_);
    return QRatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

QRatFun operator-(const QRatFun& x, const QRatFun& y) { return x + (-y); }

QRatFun operator*(const QRatFun& x, const QRatFun& y) {
    if (x.is_zero() || y.is_zero()) return {};
    QPoly xn = x.num_, yd = y.den_, yn = y.num_, xd = x.den_;
    cancel(xn, yd);
    cancel(yn, xd);
    return QRatFun::from_coprime(xn * yn, xd * yd);
}

QRatFun operator/(const QRatFun& x, const QRatFun& y) {
    if (y.is_zero()) throw DivisionByZero("division by the zero rational function");
    QRatFun inv = QRatFun::from_coprime(y.den_, y.num_);
    return x * inv;
}

QRatFun QRatFun::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("zero to a negative power");
        return from_coprime(den_, num_).pow(-e);
    }
    QRatFun result(BigRational(1));
    QRatFun base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string QRatFun::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

QRatFun QRatFun::parse(const std::string& text) {
    const auto split = text.find("}/{");
    if (split == std::string::npos) throw ParseError("rational function literal must be {..}/{..}: " + text);
    return QRatFun(QPoly::parse(text.substr(0, split + 1)), QPoly::parse(text.substr(split + 2)));
}

QRatFun rf_add(const QRatFun& x, const QRatFun& y) { return x + y; }
QRatFun rf_mul(const QRatFun& x, const QRatFun& y) { return x * y; }
QRatFun rf_div(const QRatFun& x, const QRatFun& y) { return x / y; }

namespace {

numeric::HpComplex horner(const QPoly& p, const numeric::HpComplex& q0) {
    const auto& ctx = q0.context();
    numeric::HpComplex acc(ctx);
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= q0;
        acc += numeric::HpComplex(ctx, c[i]);
    }
    return acc;
}

}  // namespace

numeric::HpComplex rf_eval_numeric(const QRatFun& x, const numeric::HpComplex& q0) {
    const auto& ctx = q0.context();
    if (x.is_zero()) return numeric::HpComplex(ctx);
    numeric::HpComplex d = horner(x.den(), q0);
    if (d.below(ctx.digits + 10)) throw PoleError("q", 0, "den(q) = " + x.den().to_string());
    numeric::HpComplex n = horner(x.num(), q0);
    if (x.num().offset() != 0) {
        if (q0.is_zero()) {
            if (x.num().offset() < 0) throw PoleError("q", x.num().offset(), "q^" + std::to_string(x.num().offset()));
            return numeric::HpComplex(ctx);
        }
        n *= q0.pow(x.num().offset());
    }
    return n / d;
}

}  // namespace qsum::exact
