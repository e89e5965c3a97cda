#pragma once

#include "qsum/catalog/identity.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsum::catalog {

/// Symbol map applied to a catalog entry. Unmapped symbols stay as they are.
struct SubstitutionRules {
    std::optional<Affine> n;
    std::map<char, SymMono> letters;

    /// Rules from text such as {"n", "2*m+1"}, {"b", "c*q^(-m-1)"}.
    /// Throws SubstitutionError.
    static SubstitutionRules parse(const std::vector<std::pair<std::string, std::string>>& text);
};

/// The source identity with the rules applied: LHS parameters, argument,
/// truncations and constraint are rewritten symbolically, and the RHS of
/// the result is the source RHS evaluated at the mapped parameters.
///
/// When the source has m = floor(n/2), the rule for n must be n, 2m or
/// 2m+1, which fixes m. Throws SubstitutionError.
IdentityDef substitute(const IdentityDef& source, const SubstitutionRules& rules, IdentityId result_id);

struct Derivation {
    IdentityId source;
    IdentityId target;
    SubstitutionRules rules;
};

/// How each derived catalog entry arises from its source.
const std::vector<Derivation>& derivations();

}  // namespace qsum::catalog
