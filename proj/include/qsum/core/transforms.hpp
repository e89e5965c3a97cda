#pragma once

#include "qsum/core/series.hpp"

namespace qsum::core {

struct Rewritten {
    Scalar prefactor;
    SeriesSpec series;
};

/// Moves a bilateral series truncated below at k = -shift onto k >= 0:
/// value(spec) = prefactor * value(unilateral). Parameters become a*q^-shift
/// and the denominator that lands on q turns into the implicit (q;q)_k.
Rewritten reindex_bilateral(const SeriesSpec& spec, long shift);

/// Reverses a terminating unilateral sum, k -> n - k. The prefactor is the
/// last term t_n; parameters map to q^(1-n)/b and q^(1-n)/a and the
/// argument to (prod b)/(prod a * z), with q counted among the b.
Rewritten reverse_finite_sum(const SeriesSpec& spec);

}  // namespace qsum::core
