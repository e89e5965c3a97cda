#pragma once

#include "qsum/catalog/identity.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsum::cli {

struct SelftestConfig {
    int digits = 60;
    std::uint64_t seed = 1;
    int threads = 0;
};

enum class SuiteStatus { Pass, Fail, Skipped };

std::string to_string(SuiteStatus s);

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::Pass;
    long cases = 0;
    /// Each entry is enough to rerun the case: seed, instance, parameters.
    std::vector<std::string> failures;
    std::string note;
};

/// Below this precision the suites built on infinite products are skipped.
inline constexpr int kMinDigitsForInfiniteSuites = 50;

/// The shift formulas, backend agreement, every catalog identity, the
/// substitution derivations, the proof replays and the numeric checks.
std::vector<SuiteResult> run_selftest(const catalog::Catalog& catalog, const SelftestConfig& cfg);

}  // namespace qsum::cli
