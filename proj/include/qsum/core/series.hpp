#pragma once

#include "qsum/core/values.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsum::core {

enum class SeriesKind { Unilateral, Bilateral };

/// r phi r-1 (unilateral; the (q;q)_k factor is implicit) or r psi r.
struct SeriesSpec {
    SeriesKind kind = SeriesKind::Unilateral;
    Param q;
    std::vector<Param> num;
    std::vector<Param> den;
    Param z;
    /// Declared n when a numerator parameter is q^(-n); terms k > n vanish.
    std::optional<long> termination;
    /// Declared N when a denominator parameter is q^(N+1); bilateral terms
    /// k < -N vanish.
    std::optional<long> lower_truncation;
    /// Display names for parameters, used in pole reports. Optional.
    std::vector<std::string> num_labels;
    std::vector<std::string> den_labels;

    Backend backend() const { return q.backend(); }
    /// Checks arities, backends and the declared truncations. Throws
    /// DomainError.
    void validate() const;

    std::string num_label(std::size_t i) const;
    std::string den_label(std::size_t i) const;
};

struct EvalOptions {
    /// Run the two halves of a bilateral sum (and the exact term expansion)
    /// on OpenMP threads. Results are identical either way.
    bool parallel = true;
};

struct SeriesValue {
    Scalar value;
    long terms = 0;
};

inline constexpr long kMaxSeriesTerms = 100000;
/// Relative margin demanded inside a bilateral convergence annulus.
inline constexpr double kConvergenceMargin = 1e-5;

SeriesValue eval_unilateral(const SeriesSpec& spec, const EvalOptions& opt = {});
SeriesValue eval_bilateral(const SeriesSpec& spec, const EvalOptions& opt = {});
/// Dispatches on spec.kind.
SeriesValue evaluate(const SeriesSpec& spec, const EvalOptions& opt = {});

/// The k-th term computed directly from Pochhammer symbols, for any signed
/// k. Terms beyond a truncation come out as exact zeros.
Scalar series_term(const SeriesSpec& spec, long k);

}  // namespace qsum::core
