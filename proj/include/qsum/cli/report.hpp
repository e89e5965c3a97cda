#pragma once

// Machine-readable (JSON, CSV) and plain text renderings of results. Field
// names are part of the external interface; see the JSON section of README.md.

#include "qsum/catalog/checks.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/catalog/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace qsum::cli {

using Json = nlohmann::ordered_json;
using core::Backend;

/// "%.6e"
std::string short_real(double x);

Json to_json(const catalog::VerificationReport& r, bool timing);
std::string to_text(const catalog::VerificationReport& r, bool timing);

struct SweepSummary {
    long passed = 0;
    long failed = 0;
    /// Counts by parity of n, for identities that take n.
    bool has_parity = false;
    long even = 0;
    long odd = 0;
};

SweepSummary summarize(const catalog::SweepResult& s);
Json to_json(catalog::IdentityId id, Backend mode, std::uint64_t seed, const catalog::SweepResult& s, bool timing);
std::string to_text(const catalog::SweepResult& s, bool timing);
std::string summary_line(const SweepSummary& s);

Json to_json(catalog::LimitPair pair, const catalog::ParamSet& params, double tol, const catalog::LimitResult& r);
std::string to_csv(const catalog::LimitResult& r);
std::string to_text(const catalog::LimitResult& r);

Json to_json(catalog::IdentityId id, const catalog::ParamSet& params, double tol, const catalog::IsmailResult& r);
std::string to_csv(const catalog::IsmailResult& r);
std::string to_text(const catalog::IsmailResult& r);

}  // namespace qsum::cli
