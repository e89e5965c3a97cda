#include "qsum/catalog/verify.hpp"

#include "qsum/error.hpp"

#include <chrono>
#include <cstdio>

namespace qsum::catalog {

std::string to_string(Status s) {
    switch (s) {
    case Status::Equal: return "Equal";
    case Status::WithinTolerance: return "WithinTolerance";
    case Status::Mismatch: return "Mismatch";
    case Status::Pole: return "Pole";
    case Status::Domain: return "Domain";
    }
    return "?";
}

bool passed(Status s) { return s == Status::Equal || s == Status::WithinTolerance; }

namespace {

std::string short_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

void compare(VerificationReport& r, const Scalar& lhs, const Scalar& rhs, double tol) {
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    if (lhs.is_exact()) {
        if (lhs == rhs) {
            r.status = Status::Equal;
        } else {
            r.status = Status::Mismatch;
            r.diff = (lhs - rhs).to_string();
        }
        return;
    }
    const double d = numeric::relative_difference(lhs.complex(), rhs.complex()).to_double();
    r.diff = short_real(d);
    r.status = d <= tol ? Status::WithinTolerance : Status::Mismatch;
}

}  // namespace

VerificationReport verify(const IdentityDef& def, const ParamSet& given, const VerifyOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.id = def.id;
    r.mode = given.backend();
    r.params = given.serialize();
    try {
        const ParamSet p = resolve_with(def, given);
        r.params = p.serialize();
        if (r.mode == Backend::Exact && !def.terminating)
            throw DomainError(cli_name(def.id) + " does not terminate; use numeric mode");
        const SeriesSpec spec = def.lhs_custom ? def.lhs_custom(p) : instantiate(def.lhs, p);
        const auto lhs = core::evaluate(spec, core::EvalOptions{opt.parallel});
        r.terms = lhs.terms;
        compare(r, lhs.value, def.rhs(p), opt.tolerance);
    } catch (const PoleError& e) {
        r.status = Status::Pole;
        r.detail = e.what();
    } catch (const Error& e) {
        r.status = Status::Domain;
        r.detail = e.what();
    }
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerificationReport verify(const Catalog& catalog, IdentityId id, const ParamSet& given, const VerifyOptions& opt) {
    return verify(catalog.get(id), given, opt);
}

}  // namespace qsum::catalog
