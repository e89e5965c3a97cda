#pragma once

#include "qsum/catalog/identity.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsum::catalog {

enum class Status { Equal, WithinTolerance, Mismatch, Pole, Domain };

std::string to_string(Status s);
/// Equal or WithinTolerance.
bool passed(Status s);

inline constexpr double kDefaultTolerance = 1e-40;

struct VerificationReport {
    IdentityId id = IdentityId::Thm5Psi5_A;
    Backend mode = Backend::Exact;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    Status status = Status::Domain;
    /// Exact: lhs - rhs on a mismatch. Numeric: the relative difference.
    std::optional<std::string> diff;
    std::string detail;
    long terms = 0;
    double elapsed = 0;
};

struct VerifyOptions {
    double tolerance = kDefaultTolerance;
    bool parallel = true;
};

/// Resolves `given` against the definition, evaluates both sides and
/// compares them. Library errors end up in the status, never thrown.
VerificationReport verify(const IdentityDef& def, const ParamSet& given, const VerifyOptions& opt = {});
VerificationReport verify(const Catalog& catalog, IdentityId id, const ParamSet& given,
                          const VerifyOptions& opt = {});

}  // namespace qsum::catalog
