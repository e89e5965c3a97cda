#include "qsum/catalog/chains.hpp"

#include "qsum/core/transforms.hpp"
#include "qsum/error.hpp"

namespace qsum::catalog {

namespace {

bool same_params(const std::vector<Param>& x, const std::vector<Param>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].matches(y[i])) return false;
    return true;
}

void require_exact(const ParamSet& p) {
    if (p.backend() != Backend::Exact) throw DomainError("proof replays run in exact mode");
}

}  // namespace

ChainCheck replay_reindex(const Catalog& catalog, IdentityId id, const ParamSet& given) {
    if (id != IdentityId::Thm5Psi5_A && id != IdentityId::Thm5Psi5_B)
        throw DomainError("reindexing replays apply to the terminating 5psi5 sums");
    require_exact(given);
    const ParamSet p = catalog.resolve_params(id, given);
    const SeriesSpec spec = catalog.lhs_series(id, p);
    const auto rw = core::reindex_bilateral(spec, *spec.lower_truncation);
    const Scalar via_shift = rw.prefactor * core::eval_unilateral(rw.series).value;
    const Scalar direct = core::eval_bilateral(spec).value;
    const Scalar closed = catalog.rhs_closed_form(id, p);
    if (!(via_shift == direct)) return {false, "shifted sum differs from the bilateral sum"};
    if (!(via_shift == closed)) return {false, "shifted sum differs from the closed form"};
    return {true, {}};
}

ChainCheck replay_reversal(const Catalog& catalog, IdentityId id, const ParamSet& given) {
    if (id != IdentityId::Derived4_1 && id != IdentityId::Derived4_4)
        throw DomainError("reversal replays apply to the two derived 3phi2 sums");
    require_exact(given);
    const ParamSet p = catalog.resolve_params(id, given);
    const SeriesSpec target = catalog.lhs_series(id, p);
    SeriesSpec source = target;
    source.z = target.z / p.q.pow(id == IdentityId::Derived4_1 ? 1 : 2);

    const auto rw = core::reverse_finite_sum(source);
    if (!rw.series.z.matches(target.z)) return {false, "reversed argument is " + rw.series.z.to_string()};
    if (!same_params(rw.series.num, target.num) || !same_params(rw.series.den, target.den))
        return {false, "reversed parameters differ from the catalog series"};

    const Scalar original = core::eval_unilateral(source).value;
    if (!(original == rw.prefactor * core::eval_unilateral(rw.series).value))
        return {false, "reversal changed the value"};
    if (!(original == rw.prefactor * catalog.rhs_closed_form(id, p)))
        return {false, "prefactor times closed form differs"};
    return {true, {}};
}

}  // namespace qsum::catalog
