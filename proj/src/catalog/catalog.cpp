#include "qsum/catalog/identity.hpp"

#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

#include <vector>

namespace qsum::catalog {

using core::Prod;

namespace {

SymMono S(const char* text) { return SymMono::parse(text); }
Affine A(const char* text) { return Affine::parse(text); }

std::vector<SymMono> list(std::initializer_list<const char*> items) {
    std::vector<SymMono> out;
    for (const char* t : items) out.push_back(S(t));
    return out;
}

bool vanishes(const Prod& p) {
    if (p.backend() == Backend::Exact) return p.is_zero();
    return p.complex().below(p.complex().context().digits + 10);
}

// Accumulates a closed form factor by factor, naming the factor that
// vanishes when a denominator hits a pole.
class Product {
public:
    explicit Product(const ParamSet& p) : p_(p), acc_(Prod::one(p.q)) {}

    Param q(long e) const { return p_.q.pow(e); }
    const Param& operator[](char s) const { return p_.at(s); }

    void mono(const Param& x) { acc_ *= Prod::of(x); }
    void one_minus(const Param& x) { acc_ *= Prod::one_minus(x); }
    void up(const Param& x, long n, const std::string& label) { acc_ *= core::poch(x, p_.q, n, label); }
    void down(const Param& x, long n, const std::string& label) {
        Prod d = core::poch(x, p_.q, n, label);
        if (vanishes(d))
            throw PoleError(label + " = " + x.to_string(), n, "(" + label + ";q)_" + std::to_string(n) + " = 0");
        acc_ /= d;
    }
    void up_inf(const Param& x) { acc_ *= infinite(x); }
    void down_inf(const Param& x, const std::string& label) {
        const auto v = infinite(x);
        if (v.below(v.context().digits + 10))
            throw PoleError(label + " = " + x.to_string(), 0, "(" + label + ";q)_inf = 0");
        acc_ /= Prod(v);
    }

    const Prod& value() const { return acc_; }
    Scalar scalar() const { return acc_.to_scalar(); }

private:
    core::HpComplex infinite(const Param& x) const {
        if (p_.q.is_exact()) throw DomainError("infinite products need numeric mode");
        return core::poch_infinite(x.complex(), p_.q.complex());
    }
    const ParamSet& p_;
    Prod acc_;
};

IdentityDef five_psi_five_a() {
    IdentityDef d;
    d.id = IdentityId::Thm5Psi5_A;
    d.letters = {'b', 'c', 'd', 'e'};
    d.has_n = true;
    d.constraint = Constraint{S("b*c*d*e"), S("q^(n+1)"), 'e'};
    d.lhs = {core::SeriesKind::Bilateral, list({"b", "c", "d", "e", "q^(-n)"}),
             list({"q/b", "q/c", "q/d", "q/e", "q^(n+1)"}), S("q"), A("n"), A("n")};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long n = p.need_n();
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], q = r.q(1);
        r.up(q, n, "q");
        r.up(q / (b * c), n, "q/(b*c)");
        r.up(q / (b * dd), n, "q/(b*d)");
        r.up(q / (c * dd), n, "q/(c*d)");
        r.down(q / b, n, "q/b");
        r.down(q / c, n, "q/c");
        r.down(q / dd, n, "q/d");
        r.down(q / (b * c * dd), n, "q/(b*c*d)");
        return r.scalar();
    };
    return d;
}

IdentityDef five_psi_five_b() {
    IdentityDef d;
    d.id = IdentityId::Thm5Psi5_B;
    d.letters = {'b', 'c', 'd', 'e'};
    d.has_n = true;
    d.constraint = Constraint{S("b*c*d*e"), S("q^(n+3)"), 'e'};
    d.lhs = {core::SeriesKind::Bilateral, list({"b", "c", "d", "e", "q^(-n)"}),
             list({"q^2/b", "q^2/c", "q^2/d", "q^2/e", "q^(n+2)"}), S("q"), A("n"), A("n+1")};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long n = p.need_n();
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], q = r.q(1), q2 = r.q(2);
        r.one_minus(q);
        r.up(q2, n, "q^2");
        r.up(q2 / (b * c), n, "q^2/(b*c)");
        r.up(q2 / (b * dd), n, "q^2/(b*d)");
        r.up(q2 / (c * dd), n, "q^2/(c*d)");
        r.down(q2 / b, n, "q^2/b");
        r.down(q2 / c, n, "q^2/c");
        r.down(q2 / dd, n, "q^2/d");
        r.down(q2 / (b * c * dd), n, "q^2/(b*c*d)");
        return r.scalar();
    };
    return d;
}

IdentityDef three_psi_three(bool second) {
    IdentityDef d;
    d.id = second ? IdentityId::Thm3Psi3_B : IdentityId::Thm3Psi3_A;
    d.letters = {'b', 'c', 'd'};
    if (second)
        d.lhs = {core::SeriesKind::Bilateral, list({"b", "c", "d"}), list({"q^2/b", "q^2/c", "q^2/d"}),
                 S("q^2/(b*c*d)"), std::nullopt, std::nullopt};
    else
        d.lhs = {core::SeriesKind::Bilateral, list({"b", "c", "d"}), list({"q/b", "q/c", "q/d"}), S("q/(b*c*d)"),
                 std::nullopt, std::nullopt};
    d.rhs = [second](const ParamSet& p) {
        Product r(p);
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], q = r.q(1);
        const Param t = second ? r.q(2) : q;
        const std::string tl = second ? "q^2" : "q";
        r.up_inf(q);
        r.up_inf(t / (b * c));
        r.up_inf(t / (b * dd));
        r.up_inf(t / (c * dd));
        r.down_inf(t / b, tl + "/b");
        r.down_inf(t / c, tl + "/c");
        r.down_inf(t / dd, tl + "/d");
        r.down_inf(t / (b * c * dd), tl + "/(b*c*d)");
        return r.scalar();
    };
    return d;
}

IdentityDef ramanujan() {
    IdentityDef d;
    d.id = IdentityId::Ramanujan1Psi1;
    d.letters = {'a', 'b', 'z'};
    d.lhs = {core::SeriesKind::Bilateral, list({"a"}), list({"b"}), S("z"), std::nullopt, std::nullopt};
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const Param &a = r['a'], &b = r['b'], &z = r['z'], q = r.q(1);
        r.up_inf(q);
        r.up_inf(b / a);
        r.up_inf(a * z);
        r.up_inf(q / (a * z));
        r.down_inf(b, "b");
        r.down_inf(q / a, "q/a");
        r.down_inf(z, "z");
        r.down_inf(b / (a * z), "b/(a*z)");
        return r.scalar();
    };
    return d;
}

IdentityDef bailey_six_psi_six() {
    IdentityDef d;
    d.id = IdentityId::Bailey6Psi6;
    d.letters = {'a', 'b', 'c', 'd', 'e'};
    d.lhs_text =
        "bilateral num: q*sqrt(a) -q*sqrt(a) b c d e den: sqrt(a) -sqrt(a) a*q/b a*q/c a*q/d a*q/e z: q*a^2/(b*c*d*e)";
    d.lhs_custom = [](const ParamSet& p) {
        const Param &a = p.at('a'), &b = p.at('b'), &c = p.at('c'), &dd = p.at('d'), &e = p.at('e');
        const Param q = p.q, ra = a.sqrt(), aq = a * q;
        SeriesSpec s;
        s.kind = core::SeriesKind::Bilateral;
        s.q = q;
        s.num = {q * ra, -(q * ra), b, c, dd, e};
        s.num_labels = {"q*sqrt(a)", "-q*sqrt(a)", "b", "c", "d", "e"};
        s.den = {ra, -ra, aq / b, aq / c, aq / dd, aq / e};
        s.den_labels = {"sqrt(a)", "-sqrt(a)", "a*q/b", "a*q/c", "a*q/d", "a*q/e"};
        s.z = q * a * a / (b * c * dd * e);
        return s;
    };
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const Param &a = r['a'], &b = r['b'], &c = r['c'], &dd = r['d'], &e = r['e'], q = r.q(1);
        const Param aq = a * q;
        r.up_inf(aq);
        r.up_inf(aq / (b * c));
        r.up_inf(aq / (b * dd));
        r.up_inf(aq / (b * e));
        r.up_inf(aq / (c * dd));
        r.up_inf(aq / (c * e));
        r.up_inf(aq / (dd * e));
        r.up_inf(q);
        r.up_inf(q / a);
        r.down_inf(aq / b, "a*q/b");
        r.down_inf(aq / c, "a*q/c");
        r.down_inf(aq / dd, "a*q/d");
        r.down_inf(aq / e, "a*q/e");
        r.down_inf(q / b, "q/b");
        r.down_inf(q / c, "q/c");
        r.down_inf(q / dd, "q/d");
        r.down_inf(q / e, "q/e");
        r.down_inf(q * a * a / (b * c * dd * e), "q*a^2/(b*c*d*e)");
        return r.scalar();
    };
    return d;
}

IdentityDef carlitz_five_phi_four() {
    IdentityDef d;
    d.id = IdentityId::Carlitz5Phi4;
    d.letters = {'b', 'c', 'd', 'e'};
    d.has_n = d.has_m = d.m_from_n = true;
    d.constraint = Constraint{S("b*c*d*e"), S("q^(1+m-2*n)"), 'e'};
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-n)", "b", "c", "d", "e"}),
             list({"q^(1-n)/b", "q^(1-n)/c", "q^(1-n)/d", "q^(1-n)/e"}), S("q"), A("n"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long n = p.need_n(), m = p.need_m();
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], &e = r['e'];
        const Param t = r.q(1 - n);
        r.mono(r.q(m * (1 + m - n)));
        r.mono((dd * e).pow(-m));
        r.up(r.q(-n), 2 * m, "q^(-n)");
        r.up(t / (b * c), m, "q^(1-n)/(b*c)");
        r.up(t / (b * dd), m, "q^(1-n)/(b*d)");
        r.up(t / (b * e), m, "q^(1-n)/(b*e)");
        r.down(r.q(1), m, "q");
        r.down(t / b, m, "q^(1-n)/b");
        r.down(t / dd, m, "q^(1-n)/d");
        r.down(t / e, m, "q^(1-n)/e");
        r.down(r.q(n - m) * c, m, "q^(n-m)*c");
        r.up(r.q(2 * m - n), n - 2 * m, "q^(2m-n)");
        return r.scalar();
    };
    return d;
}

IdentityDef jackson_three_phi_two() {
    IdentityDef d;
    d.id = IdentityId::Jackson3Phi2;
    d.letters = {'a', 'b'};
    d.has_m = true;
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-2*m)", "a", "b"}), list({"q^(1-2*m)/a", "q^(1-2*m)/b"}),
             S("q^(2-m)/(a*b)"), A("2*m"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long m = p.need_m();
        const Param &a = r['a'], &b = r['b'], q = r.q(1);
        r.up(a, m, "a");
        r.up(b, m, "b");
        r.up(q, 2 * m, "q");
        r.up(a * b, 2 * m, "a*b");
        r.down(q, m, "q");
        r.down(a * b, m, "a*b");
        r.down(a, 2 * m, "a");
        r.down(b, 2 * m, "b");
        return r.scalar();
    };
    return d;
}

IdentityDef carlitz_three_phi_two() {
    IdentityDef d;
    d.id = IdentityId::Carlitz3Phi2;
    d.letters = {'a', 'b', 'z'};
    d.has_n = d.has_m = d.m_from_n = true;
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-n)", "a", "b"}), list({"q^(1-n)/a", "q^(1-n)/b"}),
             S("q^(1+m-n)*z/(a*b)"), A("n"), std::nullopt};
    d.terminating = true;
    // The right side is itself a finite sum over j <= n/2.
    d.rhs = [](const ParamSet& p) {
        const long n = p.need_n(), m = p.need_m();
        const Param &a = p.at('a'), &b = p.at('b'), &z = p.at('z');
        const Param t = p.q.pow(1 - n);
        std::vector<Prod> terms;
        for (long j = 0; 2 * j <= n; ++j) {
            Product r(p);
            if (j % 2 == 1) r.mono(p.q.constant(-1));
            r.up(p.q.pow(-n), 2 * j, "q^(-n)");
            r.up(t / (a * b), j, "q^(1-n)/(a*b)");
            r.down(p.q, j, "q");
            r.down(t / a, j, "q^(1-n)/a");
            r.down(t / b, j, "q^(1-n)/b");
            r.mono(p.q.pow(-j * (j - 1) / 2 + m * j));
            r.mono(z.pow(j));
            r.up(z, m - j, "z");
            r.up(p.q.pow(j + m - n) * z, n - m - j, "q^(j+m-n)*z");
            terms.push_back(r.value());
        }
        return core::sum(terms);
    };
    return d;
}

IdentityDef derived_2_1() {
    IdentityDef d;
    d.id = IdentityId::Derived2_1;
    d.letters = {'b', 'c', 'd', 'e'};
    d.has_m = true;
    d.constraint = Constraint{S("b*c*d*e"), S("q^(m+1)"), 'e'};
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-2*m)", "b*q^(-m)", "c*q^(-m)", "d*q^(-m)", "e*q^(-m)"}),
             list({"q^(1-m)/b", "q^(1-m)/c", "q^(1-m)/d", "q^(1-m)/e"}), S("q"), A("2*m"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long m = p.need_m();
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], &e = r['e'], q = r.q(1);
        const Param t = r.q(1 - m);
        r.mono(r.q(m * m + m));
        r.mono((dd * e).pow(-m));
        r.up(r.q(-2 * m), 2 * m, "q^(-2m)");
        r.up(q / (b * c), m, "q/(b*c)");
        r.up(q / (b * dd), m, "q/(b*d)");
        r.up(q / (b * e), m, "q/(b*e)");
        r.down(q, m, "q");
        r.down(t / b, m, "q^(1-m)/b");
        r.down(t / dd, m, "q^(1-m)/d");
        r.down(t / e, m, "q^(1-m)/e");
        r.down(c, m, "c");
        return r.scalar();
    };
    return d;
}

IdentityDef derived_2_2() {
    IdentityDef d;
    d.id = IdentityId::Derived2_2;
    d.letters = {'b', 'c', 'd', 'e'};
    d.has_m = true;
    d.constraint = Constraint{S("b*c*d*e"), S("q^(m+3)"), 'e'};
    d.lhs = {core::SeriesKind::Unilateral,
             list({"q^(-2*m-1)", "b*q^(-m-1)", "c*q^(-m-1)", "d*q^(-m-1)", "e*q^(-m-1)"}),
             list({"q^(1-m)/b", "q^(1-m)/c", "q^(1-m)/d", "q^(1-m)/e"}), S("q"), A("2*m+1"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long m = p.need_m();
        const Param &b = r['b'], &c = r['c'], &dd = r['d'], &e = r['e'], q2 = r.q(2);
        const Param t = r.q(1 - m);
        r.mono(p.q.constant(-1));  // q - 1 = -(1 - q)
        r.one_minus(r.q(1));
        r.mono(r.q(m * m + 2 * m - 1));
        r.mono((dd * e).pow(-m));
        r.up(r.q(-2 * m - 1), 2 * m, "q^(-2m-1)");
        r.up(q2 / (b * c), m, "q^2/(b*c)");
        r.up(q2 / (b * dd), m, "q^2/(b*d)");
        r.up(q2 / (b * e), m, "q^2/(b*e)");
        r.down(r.q(1), m, "q");
        r.down(t / b, m, "q^(1-m)/b");
        r.down(t / dd, m, "q^(1-m)/d");
        r.down(t / e, m, "q^(1-m)/e");
        r.down(c, m, "c");
        return r.scalar();
    };
    return d;
}

IdentityDef derived_4_1() {
    IdentityDef d;
    d.id = IdentityId::Derived4_1;
    d.letters = {'b', 'c'};
    d.has_m = true;
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-2*m)", "b*q^(-m)", "c*q^(-m)"}),
             list({"q^(1-m)/b", "q^(1-m)/c"}), S("q^(m+2)/(b*c)"), A("2*m"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long m = p.need_m();
        const Param &b = r['b'], &c = r['c'], q = r.q(1);
        const Param bm = b * r.q(-m), cm = c * r.q(-m), bc = b * c * r.q(-2 * m);
        r.up(bm, m, "b*q^(-m)");
        r.up(cm, m, "c*q^(-m)");
        r.up(q, 2 * m, "q");
        r.up(bc, 2 * m, "b*c*q^(-2m)");
        r.down(q, m, "q");
        r.down(bc, m, "b*c*q^(-2m)");
        r.down(bm, 2 * m, "b*q^(-m)");
        r.down(cm, 2 * m, "c*q^(-m)");
        return r.scalar();
    };
    return d;
}

IdentityDef derived_4_4() {
    IdentityDef d;
    d.id = IdentityId::Derived4_4;
    d.letters = {'b', 'c'};
    d.has_m = true;
    d.lhs = {core::SeriesKind::Unilateral, list({"q^(-2*m-1)", "b*q^(-m-1)", "c*q^(-m-1)"}),
             list({"q^(1-m)/b", "q^(1-m)/c"}), S("q^(m+4)/(b*c)"), A("2*m+1"), std::nullopt};
    d.terminating = true;
    d.rhs = [](const ParamSet& p) {
        Product r(p);
        const long m = p.need_m();
        const Param &b = r['b'], &c = r['c'];
        const Param t = r.q(1 - m);
        if (m % 2 == 1) r.mono(p.q.constant(-1));
        r.up(r.q(-2 * m - 1), 2 * m, "q^(-2m-1)");
        r.up(r.q(2) / (b * c), m, "q^2/(b*c)");
        r.mono(r.q(m * (m + 5) / 2));
        r.down(r.q(2), m - 1, "q^2");
        r.down(t / b, m, "q^(1-m)/b");
        r.down(t / c, m, "q^(1-m)/c");
        return r.scalar();
    };
    return d;
}

}  // namespace

Catalog::Catalog(std::optional<IdentityId> corrupt) : corrupt_(corrupt) {
    for (IdentityDef d : {five_psi_five_a(), five_psi_five_b(), three_psi_three(false), three_psi_three(true),
                          ramanujan(), bailey_six_psi_six(), carlitz_five_phi_four(), jackson_three_phi_two(),
                          carlitz_three_phi_two(), derived_2_1(), derived_2_2(), derived_4_1(), derived_4_4()}) {
        if (corrupt_ && d.id == *corrupt_) {
            RhsFn good = d.rhs;
            d.rhs = [good](const ParamSet& p) { return good(p) + Prod::one(p.q).to_scalar(); };
        }
        defs_.emplace(d.id, std::move(d));
    }
}

const IdentityDef& Catalog::get(IdentityId id) const { return defs_.at(id); }

ParamSet Catalog::resolve_params(IdentityId id, const ParamSet& given) const { return resolve_with(get(id), given); }

SeriesSpec Catalog::lhs_series(IdentityId id, const ParamSet& params) const {
    const auto& d = get(id);
    return d.lhs_custom ? d.lhs_custom(params) : instantiate(d.lhs, params);
}

Scalar Catalog::rhs_closed_form(IdentityId id, const ParamSet& params) const { return get(id).rhs(params); }

const Catalog& default_catalog() {
    static const Catalog c;
    return c;
}

}  // namespace qsum::catalog
