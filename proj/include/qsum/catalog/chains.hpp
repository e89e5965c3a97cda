#pragma once

// Replays of the proofs as computations on exact instances.

#include "qsum/catalog/identity.hpp"

#include <string>

namespace qsum::catalog {

struct ChainCheck {
    bool equal = false;
    std::string detail;
};

/// For a terminating 5psi5 (Thm5Psi5_A or _B): shift the bilateral sum to
/// start at k = 0, sum the resulting 4phi3 and compare prefactor * sum with
/// both the direct bilateral sum and the closed form.
ChainCheck replay_reindex(const Catalog& catalog, IdentityId id, const ParamSet& given);

/// For Derived4_1 / Derived4_4: take the same 3phi2 with argument q^(m+1)/bc
/// (resp. q^(m+2)/bc), reverse it, and check that the reversed series is the
/// catalog entry's series and that values agree through the prefactor.
ChainCheck replay_reversal(const Catalog& catalog, IdentityId id, const ParamSet& given);

}  // namespace qsum::catalog
