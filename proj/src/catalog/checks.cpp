#include "qsum/catalog/checks.hpp"

#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

namespace qsum::catalog {

std::string to_string(LimitPair p) { return p == LimitPair::A ? "A" : "B"; }
IdentityId finite_side(LimitPair p) { return p == LimitPair::A ? IdentityId::Thm5Psi5_A : IdentityId::Thm5Psi5_B; }
IdentityId limit_side(LimitPair p) { return p == LimitPair::A ? IdentityId::Thm3Psi3_A : IdentityId::Thm3Psi3_B; }

namespace {

void require_numeric(const ParamSet& p) {
    if (p.backend() != Backend::Numeric) throw DomainError("this check runs in numeric mode only");
    core::check_numeric_base(p.q.complex());
}

ParamSet only_bcd(const ParamSet& params) {
    ParamSet p;
    p.q = params.q;
    for (char s : {'b', 'c', 'd'}) p.sym[s] = params.at(s);
    return p;
}

}  // namespace

LimitResult limit_check(const Catalog& catalog, LimitPair pair, const ParamSet& params, const std::vector<long>& grid,
                        double tol) {
    require_numeric(params);
    if (grid.empty()) throw DomainError("empty n grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw DomainError("the n grid must be strictly ascending");

    const ParamSet base = only_bcd(params);
    LimitResult out;
    std::optional<HpComplex> limit;
    std::string limit_error;
    try {
        const IdentityId id = limit_side(pair);
        limit = catalog.rhs_closed_form(id, catalog.resolve_params(id, base)).complex();
    } catch (const Error& e) {
        limit_error = e.what();
    }

    bool ok = limit.has_value();
    for (long n : grid) {
        LimitRow row;
        row.n = n;
        row.limit = limit;
        row.error = limit_error;
        try {
            ParamSet given = base;
            given.n = n;
            const IdentityId id = finite_side(pair);
            row.finite = catalog.rhs_closed_form(id, catalog.resolve_params(id, given)).complex();
            if (limit) row.diff = numeric::relative_difference(*row.finite, *limit);
        } catch (const Error& e) {
            row.error = e.what();
            ok = false;
        }
        out.rows.push_back(std::move(row));
    }

    out.asserted = grid.size() >= 2;
    if (ok) {
        out.decreasing = true;
        for (std::size_t i = 1; i < out.rows.size(); ++i)
            if (!(*out.rows[i].diff < *out.rows[i - 1].diff)) out.decreasing = false;
        out.final_within = out.rows.back().diff->to_double() < tol;
    }
    out.passed = ok && (!out.asserted || (out.decreasing && out.final_within));
    return out;
}

IsmailResult ismail_sequence_check(const Catalog& catalog, IdentityId id, const ParamSet& params, long m_max,
                                   double tol) {
    if (id != IdentityId::Thm3Psi3_A && id != IdentityId::Thm3Psi3_B)
        throw DomainError("the sequence check applies to " + cli_name(IdentityId::Thm3Psi3_A) + " and " +
                          cli_name(IdentityId::Thm3Psi3_B) + " only");
    require_numeric(params);
    if (m_max < 1) throw DomainError("m_max must be at least 1");

    const bool second = id == IdentityId::Thm3Psi3_B;
    const HpComplex& q = params.q.complex();
    const HpComplex bc = params.at('b').complex() * params.at('c').complex();
    const numeric::HpReal radius = (bc / q.pow(second ? 2 : 1)).abs();

    IsmailResult out;
    out.passed = true;
    for (long m = 1; m <= m_max; ++m) {
        IsmailRow row;
        row.m = m;
        row.radius_ok = q.pow(m).abs() < radius;
        try {
            ParamSet given;
            given.q = params.q;
            given.sym = {{'b', params.at('b')}, {'c', params.at('c')}, {'d', params.q.pow(-m)}};
            const ParamSet p = catalog.resolve_params(id, given);
            SeriesSpec spec = catalog.lhs_series(id, p);
            // d = q^-m terminates the sum above; q/d (or q^2/d) truncates it below.
            spec.termination = m;
            spec.lower_truncation = second ? m + 1 : m;
            row.lhs = core::evaluate(spec).value.complex();
            row.rhs = catalog.rhs_closed_form(id, p).complex();
            row.diff = numeric::relative_difference(*row.lhs, *row.rhs);
            row.status = row.diff->to_double() <= tol ? Status::WithinTolerance : Status::Mismatch;
        } catch (const PoleError& e) {
            row.status = Status::Pole;
            row.detail = e.what();
        } catch (const Error& e) {
            row.status = Status::Domain;
            row.detail = e.what();
        }
        out.passed = out.passed && passed(row.status);
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace qsum::catalog
