#include "qsum/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace qsum::cli {

using namespace catalog;

std::string short_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

namespace {

Json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

Json opt(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::string params_text(const std::vector<std::pair<std::string, std::string>>& params) {
    std::string s;
    for (const auto& [k, v] : params) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

std::optional<long> n_of(const VerificationReport& r) {
    for (const auto& [k, v] : r.params)
        if (k == "n") return std::stol(v);
    return std::nullopt;
}

std::string value_or_dash(const std::optional<HpComplex>& v) { return v ? v->to_string() : "-"; }
std::string diff_or_dash(const std::optional<numeric::HpReal>& d) { return d ? short_real(d->to_double()) : "-"; }

// Quote a CSV cell when it holds a comma or a quote.
std::string cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

Json to_json(const VerificationReport& r, bool timing) {
    Json j;
    j["id"] = cli_name(r.id);
    j["identity"] = enum_name(r.id);
    j["mode"] = core::to_string(r.mode);
    j["params"] = params_json(r.params);
    j["lhs_value"] = opt(r.lhs);
    j["rhs_value"] = opt(r.rhs);
    j["status"] = to_string(r.status);
    j["diff"] = opt(r.diff);
    j["detail"] = r.detail.empty() ? Json(nullptr) : Json(r.detail);
    j["terms_evaluated"] = r.terms;
    if (timing) j["elapsed"] = r.elapsed;
    return j;
}

std::string to_text(const VerificationReport& r, bool timing) {
    std::ostringstream os;
    os << cli_name(r.id) << " [" << core::to_string(r.mode) << "] " << to_string(r.status);
    if (r.diff) os << " diff=" << *r.diff;
    os << "\n  params: " << params_text(r.params) << "\n";
    if (r.lhs) os << "  lhs: " << *r.lhs << "\n";
    if (r.rhs) os << "  rhs: " << *r.rhs << "\n";
    if (!r.detail.empty()) os << "  detail: " << r.detail << "\n";
    os << "  terms: " << r.terms << "\n";
    if (timing) os << "  elapsed: " << r.elapsed << " s\n";
    return os.str();
}

SweepSummary summarize(const SweepResult& s) {
    SweepSummary out;
    for (const auto& r : s.reports) {
        (passed(r.status) ? out.passed : out.failed) += 1;
        if (const auto n = n_of(r)) {
            out.has_parity = true;
            (*n % 2 == 0 ? out.even : out.odd) += 1;
        }
    }
    return out;
}

std::string summary_line(const SweepSummary& s) {
    std::string line = "summary: " + std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed";
    if (s.has_parity) line += " (n even: " + std::to_string(s.even) + ", n odd: " + std::to_string(s.odd) + ")";
    return line;
}

Json to_json(IdentityId id, Backend mode, std::uint64_t seed, const SweepResult& s, bool timing) {
    Json j;
    j["command"] = "sweep";
    j["id"] = cli_name(id);
    j["identity"] = enum_name(id);
    j["mode"] = core::to_string(mode);
    j["seed"] = seed;
    j["count"] = s.reports.size();
    Json reports = Json::array();
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
        Json r;
        r["instance"] = i;
        r["attempts"] = s.attempts[i];
        const Json fields = to_json(s.reports[i], timing);
        for (auto it = fields.begin(); it != fields.end(); ++it) r[it.key()] = *it;
        reports.push_back(std::move(r));
    }
    j["reports"] = std::move(reports);
    const auto sum = summarize(s);
    Json js;
    js["passed"] = sum.passed;
    js["failed"] = sum.failed;
    if (sum.has_parity) js["n_parity"] = Json{{"even", sum.even}, {"odd", sum.odd}};
    j["summary"] = std::move(js);
    return j;
}

std::string to_text(const SweepResult& s, bool timing) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
        const auto& r = s.reports[i];
        os << "instance " << i << ": " << to_string(r.status);
        if (r.diff) os << " diff=" << *r.diff;
        os << " " << params_text(r.params);
        if (!r.detail.empty()) os << " (" << r.detail << ")";
        if (timing) os << " " << r.elapsed << " s";
        os << "\n";
    }
    os << summary_line(summarize(s)) << "\n";
    return os.str();
}

Json to_json(LimitPair pair, const ParamSet& params, double tol, const LimitResult& r) {
    Json j;
    j["command"] = "limit";
    j["pair"] = to_string(pair);
    j["finite_id"] = cli_name(finite_side(pair));
    j["limit_id"] = cli_name(limit_side(pair));
    j["params"] = params_json(params.serialize());
    j["tolerance"] = short_real(tol);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["n"] = row.n;
        x["finite_rhs"] = row.finite ? Json(row.finite->to_string()) : Json(nullptr);
        x["limit_rhs"] = row.limit ? Json(row.limit->to_string()) : Json(nullptr);
        x["diff"] = row.diff ? Json(short_real(row.diff->to_double())) : Json(nullptr);
        x["error"] = row.error.empty() ? Json(nullptr) : Json(row.error);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["convergence_asserted"] = r.asserted;
    j["decreasing"] = r.decreasing;
    j["final_within_tolerance"] = r.final_within;
    j["passed"] = r.passed;
    return j;
}

std::string to_csv(const LimitResult& r) {
    std::string s = "n,finite_rhs,limit_rhs,diff\n";
    for (const auto& row : r.rows)
        s += std::to_string(row.n) + "," + cell(value_or_dash(row.finite)) + "," + cell(value_or_dash(row.limit)) +
             "," + diff_or_dash(row.diff) + "\n";
    return s;
}

std::string to_text(const LimitResult& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        os << "n=" << row.n << " diff=" << diff_or_dash(row.diff);
        if (!row.error.empty()) os << " (" << row.error << ")";
        os << "\n";
    }
    if (r.asserted)
        os << "decreasing: " << (r.decreasing ? "yes" : "no") << ", final within tolerance: "
           << (r.final_within ? "yes" : "no") << "\n";
    else
        os << "single grid point: convergence not asserted\n";
    os << (r.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

Json to_json(IdentityId id, const ParamSet& params, double tol, const IsmailResult& r) {
    Json j;
    j["command"] = "ismail";
    j["id"] = cli_name(id);
    j["identity"] = enum_name(id);
    j["params"] = params_json(params.serialize());
    j["tolerance"] = short_real(tol);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["m"] = row.m;
        x["lhs"] = row.lhs ? Json(row.lhs->to_string()) : Json(nullptr);
        x["rhs"] = row.rhs ? Json(row.rhs->to_string()) : Json(nullptr);
        x["diff"] = row.diff ? Json(short_real(row.diff->to_double())) : Json(nullptr);
        x["radius_ok"] = row.radius_ok;
        x["status"] = to_string(row.status);
        x["detail"] = row.detail.empty() ? Json(nullptr) : Json(row.detail);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["passed"] = r.passed;
    return j;
}

std::string to_csv(const IsmailResult& r) {
    std::string s = "m,lhs,rhs,diff,radius_ok,status\n";
    for (const auto& row : r.rows)
        s += std::to_string(row.m) + "," + cell(value_or_dash(row.lhs)) + "," + cell(value_or_dash(row.rhs)) + "," +
             diff_or_dash(row.diff) + "," + (row.radius_ok ? "true" : "false") + "," + to_string(row.status) + "\n";
    return s;
}

std::string to_text(const IsmailResult& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        os << "m=" << row.m << " " << to_string(row.status) << " diff=" << diff_or_dash(row.diff)
           << " radius_ok=" << (row.radius_ok ? "true" : "false");
        if (!row.detail.empty()) os << " (" << row.detail << ")";
        os << "\n";
    }
    os << (r.passed ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace qsum::cli
