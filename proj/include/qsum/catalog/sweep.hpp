#pragma once

#include "qsum/catalog/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsum::catalog {

inline constexpr int kMaxSampleAttempts = 100;

struct SweepOptions {
    Backend mode = Backend::Exact;
    /// Numeric mode only.
    numeric::PrecisionContext precision;
    /// Numeric base; drawn from [0.1, 0.5] per instance when absent.
    std::optional<Param> q;
    double tolerance = kDefaultTolerance;
    /// Worker threads for the OpenMP sweep; 0 leaves the runtime default.
    int threads = 0;
};

struct SweepResult {
    /// One report per instance, in instance order.
    std::vector<VerificationReport> reports;
    /// Samples drawn for each instance, rejected ones included.
    std::vector<int> attempts;
    std::vector<long> failures;

    bool passed() const { return failures.empty(); }
    /// Throws SweepFailure naming each failing instance.
    void require_passed(std::uint64_t seed) const;
};

/// Random instances of one identity, deterministic in (seed, index).
/// Exact mode draws c*q^e with c = p/r, |p|, r <= 10, e in [0, 3], and
/// n in [0, 8] (m in [0, 4] where m is free). Parameter sets on a pole set
/// are skipped; so are Pole and Domain outcomes, up to kMaxSampleAttempts.
SweepResult sweep_random(const Catalog& catalog, IdentityId id, long count, std::uint64_t seed,
                         const SweepOptions& opt);
/// Same instances evaluated one after another on the calling thread.
SweepResult sweep_random_serial(const Catalog& catalog, IdentityId id, long count, std::uint64_t seed,
                                const SweepOptions& opt);

/// The parameters instance `index` of a sweep would try on a given attempt,
/// or nothing when that draw is rejected before evaluation.
std::optional<ParamSet> sample_params(const IdentityDef& def, std::uint64_t seed, long index, int attempt,
                                      const SweepOptions& opt);

}  // namespace qsum::catalog
