#include "qsum/core/transforms.hpp"

#include "qsum/error.hpp"

namespace qsum::core {

namespace {

// Index of the first parameter equal to target, or throws.
std::size_t find_param(const std::vector<Param>& ps, const Param& target, const char* what) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].matches(target)) return i;
    throw DomainError(std::string("no ") + what + " parameter equals " + target.to_string());
}

std::string label_or(const std::vector<std::string>& labels, std::size_t i, const std::string& fallback) {
    return i < labels.size() ? labels[i] : fallback;
}

}  // namespace

Rewritten reindex_bilateral(const SeriesSpec& spec, long shift) {
    if (spec.kind != SeriesKind::Bilateral) throw DomainError("reindex_bilateral needs a bilateral spec");
    spec.validate();
    if (shift < 0) throw DomainError("shift must be non-negative");
    if (spec.lower_truncation != shift)
        throw DomainError("series is not declared truncated below at k = -" + std::to_string(shift));

    Scalar prefactor = series_term(spec, -shift);

    const Param down = spec.q.pow(-shift);
    const std::size_t drop = find_param(spec.den, spec.q.pow(shift + 1), "denominator");
    SeriesSpec out;
    out.kind = SeriesKind::Unilateral;
    out.q = spec.q;
    out.z = spec.z;
    for (std::size_t i = 0; i < spec.num.size(); ++i) {
        out.num.push_back(spec.num[i] * down);
        out.num_labels.push_back(label_or(spec.num_labels, i, "num[" + std::to_string(i) + "]") + "*q^-" +
                                 std::to_string(shift));
    }
    for (std::size_t i = 0; i < spec.den.size(); ++i) {
        if (i == drop) continue;
        out.den.push_back(spec.den[i] * down);
        out.den_labels.push_back(label_or(spec.den_labels, i, "den[" + std::to_string(i) + "]") + "*q^-" +
                                 std::to_string(shift));
    }
    if (spec.termination) out.termination = *spec.termination + shift;
    out.validate();
    return {prefactor, out};
}

Rewritten reverse_finite_sum(const SeriesSpec& spec) {
    if (spec.kind != SeriesKind::Unilateral) throw DomainError("reverse_finite_sum needs a unilateral spec");
    spec.validate();
    if (!spec.termination) throw DomainError("reverse_finite_sum needs a terminating series");
    const long n = *spec.termination;

    Scalar prefactor = series_term(spec, n);

    std::vector<Param> lower{spec.q};
    lower.insert(lower.end(), spec.den.begin(), spec.den.end());
    const Param top = spec.q.pow(1 - n);
    const std::size_t drop = find_param(spec.num, spec.q.pow(-n), "numerator");

    SeriesSpec out;
    out.kind = SeriesKind::Unilateral;
    out.q = spec.q;
    Param pb = spec.q.constant(1), pa = spec.q.constant(1);
    for (const auto& b : lower) {
        out.num.push_back(top / b);
        pb = pb * b;
    }
    for (std::size_t i = 0; i < spec.num.size(); ++i) {
        pa = pa * spec.num[i];
        if (i != drop) out.den.push_back(top / spec.num[i]);
    }
    out.z = pb / (pa * spec.z);
    out.termination = n;
    out.validate();
    return {prefactor, out};
}

}  // namespace qsum::core
