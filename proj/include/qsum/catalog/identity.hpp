#pragma once

#include "qsum/catalog/symbolic.hpp"
#include "qsum/core/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsum::catalog {

using core::Backend;
using core::Scalar;
using core::SeriesSpec;

enum class IdentityId {
    Thm5Psi5_A,
    Thm5Psi5_B,
    Thm3Psi3_A,
    Thm3Psi3_B,
    Ramanujan1Psi1,
    Bailey6Psi6,
    Carlitz5Phi4,
    Jackson3Phi2,
    Carlitz3Phi2,
    Derived2_1,
    Derived2_2,
    Derived4_1,
    Derived4_4,
};

const std::vector<IdentityId>& all_identities();
/// CLI spelling: thm1.1 ... thm1.7, eq1.9, eq1.10, eq2.1, eq2.2, eq4.1, eq4.4.
std::string cli_name(IdentityId id);
std::optional<IdentityId> from_cli_name(const std::string& name);
/// Enum spelling, e.g. "Thm5Psi5_A".
std::string enum_name(IdentityId id);

/// Named values of one instance. Letters a..e and z, integers n and m,
/// and the base q (exact q itself, or a numeric value).
struct ParamSet {
    Param q;
    std::map<char, Param> sym;
    std::optional<long> n;
    std::optional<long> m;

    Backend backend() const { return q.backend(); }
    /// Throws MissingParam.
    const Param& at(char s) const;
    long need_n() const;
    long need_m() const;
    /// Stable "name=value" listing, q last.
    std::vector<std::pair<std::string, std::string>> serialize() const;
};

/// prod(letters) = value, solved for one letter.
struct Constraint {
    SymMono product;  // letters only, coefficient 1
    SymMono value;    // no letters
    char solved = 'e';
};

struct SymSeries {
    core::SeriesKind kind = core::SeriesKind::Unilateral;
    std::vector<SymMono> num;
    std::vector<SymMono> den;
    SymMono z;
    std::optional<Affine> termination;
    std::optional<Affine> lower_truncation;
};

using RhsFn = std::function<Scalar(const ParamSet&)>;

struct IdentityDef {
    IdentityId id;
    std::vector<char> letters;
    bool has_n = false;
    bool has_m = false;
    /// m is floor(n/2) rather than free.
    bool m_from_n = false;
    std::optional<Constraint> constraint;
    SymSeries lhs;
    /// Replaces `lhs` when the series needs more than monomials (the
    /// square roots of the 6psi6); `lhs_text` then describes it.
    std::function<SeriesSpec(const ParamSet&)> lhs_custom;
    std::string lhs_text;
    /// Exact verification is possible (the LHS terminates).
    bool terminating = false;
    RhsFn rhs;
};

/// Everything about one identity needed to compare a derived form with a
/// catalog entry symbol for symbol.
std::string signature(const IdentityDef& def);

/// Immutable registry of identities. A fault can be injected into one
/// entry's right-hand side to exercise failure reporting.
class Catalog {
public:
    explicit Catalog(std::optional<IdentityId> corrupt = std::nullopt);

    const IdentityDef& get(IdentityId id) const;
    std::optional<IdentityId> corrupted() const noexcept { return corrupt_; }

    /// Fill in m and the constrained letter; check what was given.
    /// Throws MissingParam, ConstraintUnsatisfiable, DomainError.
    ParamSet resolve_params(IdentityId id, const ParamSet& given) const;
    SeriesSpec lhs_series(IdentityId id, const ParamSet& params) const;
    Scalar rhs_closed_form(IdentityId id, const ParamSet& params) const;

private:
    std::map<IdentityId, IdentityDef> defs_;
    std::optional<IdentityId> corrupt_;
};

/// Shared default instance without faults.
const Catalog& default_catalog();

/// Resolve against a definition directly (also used for derived forms).
ParamSet resolve_with(const IdentityDef& def, const ParamSet& given);
SeriesSpec instantiate(const SymSeries& s, const ParamSet& params);

}  // namespace qsum::catalog
