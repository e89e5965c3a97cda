#include "qsum/catalog/substitute.hpp"

#include "qsum/error.hpp"

#include <algorithm>

namespace qsum::catalog {

SubstitutionRules SubstitutionRules::parse(const std::vector<std::pair<std::string, std::string>>& text) {
    SubstitutionRules r;
    for (const auto& [from, to] : text) {
        if (from == "n") {
            r.n = Affine::parse(to);
        } else if (from.size() == 1 && std::string("abcdez").find(from[0]) != std::string::npos) {
            r.letters[from[0]] = SymMono::parse(to);
        } else {
            throw SubstitutionError("no substitutable symbol '" + from + "'");
        }
    }
    return r;
}

namespace {

void collect(const SymMono& s, std::vector<char>& out) {
    for (const auto& [c, k] : s.pows())
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
}

}  // namespace

IdentityDef substitute(const IdentityDef& source, const SubstitutionRules& rules, IdentityId result_id) {
    if (source.lhs_custom) throw SubstitutionError(cli_name(source.id) + " has no monomial form to substitute into");
    for (const auto& [c, img] : rules.letters)
        if (std::find(source.letters.begin(), source.letters.end(), c) == source.letters.end())
            throw SubstitutionError(std::string("parameter ") + c + " does not occur in " + cli_name(source.id));
    if (rules.n && !source.has_n) throw SubstitutionError(cli_name(source.id) + " has no integer n");

    IdentityDef out;
    out.id = result_id;
    out.terminating = source.terminating;

    Affine n_to = Affine::n_sym();
    Affine m_to = Affine::m_sym();
    out.has_n = source.has_n;
    out.has_m = source.has_m;
    out.m_from_n = source.m_from_n;
    if (rules.n) {
        n_to = *rules.n;
        if (n_to.cn != 0 && (n_to.cm != 0 || n_to.cn != 1 || n_to.c0 != 0))
            throw SubstitutionError("n may only map to n itself or to a form in m");
        if (n_to.cn == 0) {
            out.has_n = false;
            out.has_m = n_to.cm != 0;
            out.m_from_n = false;
            if (source.m_from_n) {
                // floor(n/2) stays affine only for n = 2m and n = 2m+1.
                if (n_to.cm != 2 || (n_to.c0 != 0 && n_to.c0 != 1))
                    throw SubstitutionError("floor(n/2) is not affine under n -> " + n_to.to_string());
                m_to = Affine::m_sym();
            } else if (source.has_m) {
                throw SubstitutionError("n and m would share the symbol m");
            }
        }
    }

    auto map = [&](const SymMono& s) { return s.substitute(n_to, m_to, rules.letters); };
    auto map_affine = [&](const std::optional<Affine>& a) -> std::optional<Affine> {
        if (!a) return std::nullopt;
        return a->substitute(n_to, m_to);
    };

    out.lhs.kind = source.lhs.kind;
    for (const auto& p : source.lhs.num) out.lhs.num.push_back(map(p));
    for (const auto& p : source.lhs.den) out.lhs.den.push_back(map(p));
    out.lhs.z = map(source.lhs.z);
    out.lhs.termination = map_affine(source.lhs.termination);
    out.lhs.lower_truncation = map_affine(source.lhs.lower_truncation);

    std::vector<char> used;
    for (const auto& p : out.lhs.num) collect(p, used);
    for (const auto& p : out.lhs.den) collect(p, used);
    collect(out.lhs.z, used);

    if (source.constraint) {
        const SymMono prod = map(source.constraint->product);
        SymMono value = map(source.constraint->value);
        // Move the coefficient and q-power of the product to the right.
        const SymMono scale(prod.coeff(), prod.qexp());
        value = value / scale;
        const SymMono letters_only = prod / scale;
        if (letters_only.pows().empty()) {
            if (!(value == SymMono(1, {})))
                throw SubstitutionError("the constraint becomes 1 = " + value.to_string());
        } else {
            char solved = source.constraint->solved;
            auto it = letters_only.pows().find(solved);
            if (it == letters_only.pows().end() || it->second != 1) {
                solved = 0;
                for (const auto& [c, k] : letters_only.pows())
                    if (k == 1) solved = c;
                if (!solved) throw SubstitutionError("the constraint cannot be solved for a single letter");
            }
            if (!value.pows().empty())
                throw SubstitutionError("the constraint value " + value.to_string() + " involves letters");
            out.constraint = Constraint{letters_only, value, solved};
            collect(letters_only, used);
        }
    }
    std::sort(used.begin(), used.end());
    out.letters = used;

    const IdentityDef src = source;
    out.rhs = [src, rules, n_to, m_to](const ParamSet& p) {
        Bindings b;
        b.q = p.q;
        b.sym = p.sym;
        b.n = p.n.value_or(0);
        b.m = p.m.value_or(0);
        ParamSet sp;
        sp.q = p.q;
        for (char c : src.letters) {
            auto it = rules.letters.find(c);
            sp.sym[c] = it == rules.letters.end() ? p.at(c) : it->second.instantiate(b);
        }
        if (src.has_n) sp.n = n_to.eval(b.n, b.m);
        if (src.has_m && !src.m_from_n) sp.m = m_to.eval(b.n, b.m);
        return src.rhs(resolve_with(src, sp));
    };
    return out;
}

const std::vector<Derivation>& derivations() {
    static const std::vector<Derivation> all = {
        {IdentityId::Carlitz5Phi4, IdentityId::Derived2_1,
         SubstitutionRules::parse(
             {{"n", "2*m"}, {"b", "b*q^(-m)"}, {"c", "c*q^(-m)"}, {"d", "d*q^(-m)"}, {"e", "e*q^(-m)"}})},
        {IdentityId::Carlitz5Phi4, IdentityId::Derived2_2,
         SubstitutionRules::parse({{"n", "2*m+1"},
                                   {"b", "b*q^(-m-1)"},
                                   {"c", "c*q^(-m-1)"},
                                   {"d", "d*q^(-m-1)"},
                                   {"e", "e*q^(-m-1)"}})},
        {IdentityId::Jackson3Phi2, IdentityId::Derived4_1,
         SubstitutionRules::parse({{"a", "b*q^(-m)"}, {"b", "c*q^(-m)"}})},
        {IdentityId::Carlitz3Phi2, IdentityId::Derived4_4,
         SubstitutionRules::parse({{"n", "2*m+1"}, {"z", "q^2"}, {"a", "b*q^(-m-1)"}, {"b", "c*q^(-m-1)"}})},
    };
    return all;
}

}  // namespace qsum::catalog
