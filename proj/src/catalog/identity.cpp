#include "qsum/catalog/identity.hpp"

#include "qsum/error.hpp"

#include <algorithm>

namespace qsum::catalog {

namespace {

struct Names {
    IdentityId id;
    const char* cli;
    const char* enum_name;
};

constexpr Names kNames[] = {
    {IdentityId::Thm5Psi5_A, "thm1.1", "Thm5Psi5_A"},     {IdentityId::Thm5Psi5_B, "thm1.2", "Thm5Psi5_B"},
    {IdentityId::Thm3Psi3_A, "thm1.3", "Thm3Psi3_A"},     {IdentityId::Thm3Psi3_B, "thm1.4", "Thm3Psi3_B"},
    {IdentityId::Ramanujan1Psi1, "eq1.9", "Ramanujan1Psi1"}, {IdentityId::Bailey6Psi6, "eq1.10", "Bailey6Psi6"},
    {IdentityId::Carlitz5Phi4, "thm1.5", "Carlitz5Phi4"}, {IdentityId::Jackson3Phi2, "thm1.6", "Jackson3Phi2"},
    {IdentityId::Carlitz3Phi2, "thm1.7", "Carlitz3Phi2"}, {IdentityId::Derived2_1, "eq2.1", "Derived2_1"},
    {IdentityId::Derived2_2, "eq2.2", "Derived2_2"},     {IdentityId::Derived4_1, "eq4.1", "Derived4_1"},
    {IdentityId::Derived4_4, "eq4.4", "Derived4_4"},
};

}  // namespace

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& n : kNames) v.push_back(n.id);
        return v;
    }();
    return ids;
}

std::string cli_name(IdentityId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.cli;
    return "?";
}

std::string enum_name(IdentityId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.enum_name;
    return "?";
}

std::optional<IdentityId> from_cli_name(const std::string& name) {
    for (const auto& n : kNames)
        if (name == n.cli || name == n.enum_name) return n.id;
    return std::nullopt;
}

const Param& ParamSet::at(char s) const {
    auto it = sym.find(s);
    if (it == sym.end()) throw MissingParam(std::string("parameter ") + s + " is required");
    return it->second;
}

long ParamSet::need_n() const {
    if (!n) throw MissingParam("integer n is required");
    return *n;
}

long ParamSet::need_m() const {
    if (!m) throw MissingParam("integer m is required");
    return *m;
}

std::vector<std::pair<std::string, std::string>> ParamSet::serialize() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [s, v] : sym) out.emplace_back(std::string(1, s), v.to_string());
    if (n) out.emplace_back("n", std::to_string(*n));
    if (m) out.emplace_back("m", std::to_string(*m));
    out.emplace_back("q", q.to_string());
    return out;
}

std::string signature(const IdentityDef& def) {
    std::string s = "letters:";
    std::vector<char> letters = def.letters;
    std::sort(letters.begin(), letters.end());
    for (char c : letters) s += std::string(" ") + c;
    s += "\nintegers:";
    if (def.has_n) s += " n";
    if (def.has_m) s += def.m_from_n ? " m=floor(n/2)" : " m";
    if (def.constraint)
        s += "\nconstraint: " + def.constraint->product.to_string() + " = " + def.constraint->value.to_string() +
             " (solve " + def.constraint->solved + ")";
    if (def.lhs_custom) return s + "\nseries: " + def.lhs_text + "\n";
    s += std::string("\nkind: ") + (def.lhs.kind == core::SeriesKind::Unilateral ? "unilateral" : "bilateral");
    s += "\nnum:";
    for (const auto& p : def.lhs.num) s += " " + p.to_string();
    s += "\nden:";
    for (const auto& p : def.lhs.den) s += " " + p.to_string();
    s += "\nz: " + def.lhs.z.to_string();
    if (def.lhs.termination) s += "\nterminates: " + def.lhs.termination->to_string();
    if (def.lhs.lower_truncation) s += "\ntruncated below: " + def.lhs.lower_truncation->to_string();
    s += "\n";
    return s;
}

namespace {

Bindings bind(const ParamSet& p) {
    Bindings b;
    b.q = p.q;
    b.sym = p.sym;
    b.n = p.n.value_or(0);
    b.m = p.m.value_or(0);
    return b;
}

}  // namespace

ParamSet resolve_with(const IdentityDef& def, const ParamSet& given) {
    ParamSet out = given;
    const Backend backend = given.backend();
    if (backend == Backend::Exact && !(given.q.mono() == core::MonoParam::q_power(1)))
        throw DomainError("exact mode requires the base to be q itself");
    for (const auto& [s, v] : given.sym) {
        if (std::find(def.letters.begin(), def.letters.end(), s) == def.letters.end())
            throw DomainError(std::string("parameter ") + s + " is not used by " + cli_name(def.id));
        if (v.backend() != backend) throw DomainError(std::string("parameter ") + s + " does not match the mode");
    }

    if (def.has_n) {
        if (given.need_n() < 0) throw DomainError("n must be non-negative");
    } else if (given.n) {
        throw DomainError("integer n is not used by " + cli_name(def.id));
    }
    if (def.has_m) {
        if (def.m_from_n) {
            const long m = *out.n / 2;
            if (given.m && *given.m != m)
                throw ConstraintUnsatisfiable("m must equal floor(n/2) = " + std::to_string(m));
            out.m = m;
        } else if (given.need_m() < 0) {
            throw DomainError("m must be non-negative");
        }
    } else if (given.m) {
        throw DomainError("integer m is not used by " + cli_name(def.id));
    }

    for (char s : def.letters) {
        if (def.constraint && def.constraint->solved == s) continue;
        given.at(s);
    }
    if (def.constraint) {
        const auto& c = def.constraint.value();
        const Bindings b = bind(out);
        Param solved;
        try {
            solved = c.value.instantiate(b) / (c.product / SymMono::symbol(c.solved)).instantiate(b);
        } catch (const DivisionByZero&) {
            throw ConstraintUnsatisfiable("constraint " + c.product.to_string() + " = " + c.value.to_string() +
                                          " cannot be solved for " + c.solved);
        }
        auto it = given.sym.find(c.solved);
        if (it != given.sym.end()) {
            if (!it->second.matches(solved))
                throw ConstraintUnsatisfiable("given " + std::string(1, c.solved) + " = " + it->second.to_string() +
                                              " violates " + c.product.to_string() + " = " + c.value.to_string() +
                                              " (needs " + solved.to_string() + ")");
        } else {
            out.sym[c.solved] = solved;
        }
    }
    return out;
}

SeriesSpec instantiate(const SymSeries& s, const ParamSet& params) {
    const Bindings b = bind(params);
    SeriesSpec out;
    out.kind = s.kind;
    out.q = params.q;
    for (const auto& p : s.num) {
        out.num.push_back(p.instantiate(b));
        out.num_labels.push_back(p.to_string());
    }
    for (const auto& p : s.den) {
        out.den.push_back(p.instantiate(b));
        out.den_labels.push_back(p.to_string());
    }
    out.z = s.z.instantiate(b);
    if (s.termination) out.termination = s.termination->eval(b.n, b.m);
    if (s.lower_truncation) out.lower_truncation = s.lower_truncation->eval(b.n, b.m);
    return out;
}

}  // namespace qsum::catalog
