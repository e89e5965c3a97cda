#pragma once

#include "qsum/catalog/verify.hpp"
#include "qsum/numeric/hp_real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsum::catalog {

using numeric::HpComplex;

/// A terminating bilateral identity and the non-terminating one it
/// becomes as n grows.
enum class LimitPair { A, B };

std::string to_string(LimitPair p);
IdentityId finite_side(LimitPair p);
IdentityId limit_side(LimitPair p);

struct LimitRow {
    long n = 0;
    std::optional<HpComplex> finite;
    std::optional<HpComplex> limit;
    std::optional<numeric::HpReal> diff;
    std::string error;
};

struct LimitResult {
    std::vector<LimitRow> rows;
    /// Convergence is only asserted for grids with two or more points.
    bool asserted = false;
    bool decreasing = false;
    bool final_within = false;
    bool passed = false;
};

inline constexpr double kDefaultLimitTolerance = 1e-10;

/// For each n on the grid, resolves e from the finite identity's
/// constraint, evaluates its product side and compares it with the
/// infinite product at the same b, c, d. Numeric mode only.
LimitResult limit_check(const Catalog& catalog, LimitPair pair, const ParamSet& params, const std::vector<long>& grid,
                        double tol = kDefaultLimitTolerance);

struct IsmailRow {
    long m = 0;
    std::optional<HpComplex> lhs;
    std::optional<HpComplex> rhs;
    std::optional<numeric::HpReal> diff;
    bool radius_ok = false;
    Status status = Status::Domain;
    std::string detail;
};

struct IsmailResult {
    std::vector<IsmailRow> rows;
    bool passed = false;
};

/// Evaluates both sides of a 3psi3 identity at 1/d = q^m for m = 1..m_max.
/// The sum then has finitely many terms. radius_ok records whether q^m lies
/// inside the disk where both sides are analytic in 1/d.
IsmailResult ismail_sequence_check(const Catalog& catalog, IdentityId id, const ParamSet& params, long m_max,
                                   double tol = kDefaultTolerance);

}  // namespace qsum::catalog
