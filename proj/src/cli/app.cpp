#include "qsum/cli/app.hpp"

#include "qsum/catalog/checks.hpp"
#include "qsum/catalog/sweep.hpp"
#include "qsum/catalog/verify.hpp"
#include "qsum/cli/report.hpp"
#include "qsum/cli/selftest.hpp"
#include "qsum/core/pochhammer.hpp"
#include "qsum/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace qsum::cli {

using namespace catalog;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultDigits = 60;

struct Flags {
    std::string id;
    std::string mode = "auto";
    std::string q;
    std::string output = "json";
    std::string pair = "A";
    std::string grid = "5,10,20,40";
    std::map<char, std::string> letters;
    std::optional<long> n;
    std::optional<long> m;
    std::optional<int> digits;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    long count = 1;
    long m_max = 15;
    int parallelism = 0;
    bool timing = false;
    std::string fault;
};

void add_letters(CLI::App* sub, Flags& f, const std::string& which) {
    for (char c : which) {
        const std::string name = std::string("--") + c;
        sub->add_option_function<std::string>(
            name, [&f, c](const std::string& v) { f.letters[c] = v; }, std::string("parameter ") + c);
    }
}

void add_numeric(CLI::App* sub, Flags& f) {
    sub->add_option("--q", f.q, "numeric base (selects numeric mode)");
    sub->add_option("--digits", f.digits, "working precision in decimal digits (default 60, or QSUM_DIGITS)");
    sub->add_option("--tol", f.tol, "relative tolerance");
    sub->add_option("--output", f.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_fault(CLI::App* sub, Flags& f) {
    sub->add_option("--inject-fault", f.fault, "corrupt one identity's right-hand side")->group("");
}

int resolve_digits(const Flags& f) {
    if (f.digits) return *f.digits;
    if (const char* env = std::getenv("QSUM_DIGITS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("QSUM_DIGITS is not an integer: ") + env);
        }
    }
    return kDefaultDigits;
}

numeric::PrecisionContext precision(const Flags& f) {
    const int digits = resolve_digits(f);
    if (digits < 15) throw UsageError("digits must be at least 15");
    return numeric::PrecisionContext::make(digits);
}

Backend resolve_mode(const Flags& f) {
    if (f.mode == "exact") {
        if (!f.q.empty() && f.q != "q") throw UsageError("exact mode works over Q(q); drop --q");
        return Backend::Exact;
    }
    if (f.mode == "numeric") return Backend::Numeric;
    return f.q.empty() || f.q == "q" ? Backend::Exact : Backend::Numeric;
}

// The floor on tolerances the working precision can support.
double tolerance(const Flags& f, const numeric::PrecisionContext& ctx, double preferred) {
    const double floor = std::pow(10.0, -(ctx.digits - 10));
    if (f.tol) {
        if (!(*f.tol > 0)) throw UsageError("tolerance must be positive");
        if (*f.tol < floor * (1 - 1e-9))
            throw UsageError("tolerance " + short_real(*f.tol) + " is below 10^-(digits-10) = " + short_real(floor));
        return *f.tol;
    }
    return std::max(preferred, floor);
}

core::HpComplex parse_base(const std::string& text, const numeric::PrecisionContext& ctx) {
    try {
        const auto m = core::MonoParam::parse(text);
        if (m.exp() == 0) return core::HpComplex(ctx, m.coeff());
    } catch (const Error&) {
    }
    try {
        return core::HpComplex::parse(ctx, text);
    } catch (const Error& e) {
        throw UsageError("cannot read --q " + text + ": " + e.what());
    }
}

Param parse_param(char name, const std::string& text, const Param& q) {
    try {
        const auto m = core::MonoParam::parse(text);
        if (q.is_exact()) return Param(m);
        return Param(core::evaluate_at(m, q.complex()));
    } catch (const Error& e) {
        if (q.is_exact())
            throw UsageError(std::string("cannot read --") + name + " " + text + " as c*q^e: " + e.what());
    }
    try {
        return Param(core::HpComplex::parse(q.complex().context(), text));
    } catch (const Error& e) {
        throw UsageError(std::string("cannot read --") + name + " " + text + ": " + e.what());
    }
}

IdentityId parse_id(const std::string& text) {
    if (text.empty()) throw UsageError("--id is required");
    const auto id = from_cli_name(text);
    if (!id) throw UsageError("unknown identity '" + text + "'");
    return *id;
}

Catalog make_catalog(const Flags& f) {
    if (f.fault.empty()) return Catalog();
    return Catalog(parse_id(f.fault));
}

Param base_param(const Flags& f, Backend mode, bool required, std::ostream& err) {
    if (mode == Backend::Exact) return Param(core::MonoParam::q_power(1));
    if (f.q.empty() || f.q == "q") {
        if (required) throw UsageError("numeric mode needs --q");
        return Param();
    }
    const auto q = parse_base(f.q, precision(f));
    if (const auto warning = core::check_numeric_base(q); !warning.empty()) err << "warning: " << warning << "\n";
    return Param(q);
}

ParamSet build_params(const Flags& f, const IdentityDef& def, const Param& q) {
    ParamSet p;
    p.q = q;
    for (const auto& [c, text] : f.letters) {
        if (std::find(def.letters.begin(), def.letters.end(), c) == def.letters.end())
            throw UsageError(std::string("--") + c + " is not a parameter of " + cli_name(def.id));
        p.sym[c] = parse_param(c, text, q);
    }
    if (f.n && !def.has_n) throw UsageError("--n is not used by " + cli_name(def.id));
    if (f.m && !def.has_m) throw UsageError("--m is not used by " + cli_name(def.id));
    p.n = f.n;
    p.m = f.m;
    return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void require_not_csv(const Flags& f) {
    if (f.output == "csv") throw UsageError("csv output is only available for limit and ismail tables");
}

int exit_for(Status s) {
    switch (s) {
    case Status::Equal:
    case Status::WithinTolerance: return kPass;
    case Status::Mismatch: return kMismatch;
    default: return kPoleOrDomain;
    }
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
    require_not_csv(f);
    const Catalog catalog = make_catalog(f);
    const IdentityId id = parse_id(f.id);
    const Backend mode = resolve_mode(f);
    const Param q = base_param(f, mode, true, err);
    const ParamSet given = build_params(f, catalog.get(id), q);
    try {
        resolve_with(catalog.get(id), given);
    } catch (const MissingParam& e) {
        throw UsageError(e.what());
    } catch (const Error&) {
        // reported below
    }
    VerifyOptions opt;
    if (mode == Backend::Numeric) opt.tolerance = tolerance(f, q.complex().context(), kDefaultTolerance);
    const auto report = verify(catalog, id, given, opt);
    if (f.output == "json")
        emit(out, to_json(report, f.timing));
    else
        out << to_text(report, f.timing);
    return exit_for(report.status);
}

int cmd_sweep(const Flags& f, std::ostream& out, std::ostream& err) {
    require_not_csv(f);
    if (f.count < 1) throw UsageError("--count must be at least 1");
    if (!f.letters.empty() || f.n || f.m) throw UsageError("sweep draws its own parameters");
    const Catalog catalog = make_catalog(f);
    const IdentityId id = parse_id(f.id);
    SweepOptions opt;
    opt.mode = f.mode == "auto" && f.q.empty() && !catalog.get(id).terminating ? Backend::Numeric : resolve_mode(f);
    opt.threads = f.parallelism;
    if (opt.mode == Backend::Numeric) {
        opt.precision = precision(f);
        const Param q = base_param(f, opt.mode, false, err);
        if (!f.q.empty()) opt.q = q;
        opt.tolerance = tolerance(f, opt.precision, kDefaultTolerance);
    }
    const auto res = sweep_random(catalog, id, f.count, f.seed, opt);
    if (f.output == "json")
        emit(out, to_json(id, opt.mode, f.seed, res, f.timing));
    else
        out << to_text(res, f.timing);
    if (res.passed()) return kPass;
    err << summary_line(summarize(res)) << "\n";
    for (long i : res.failures)
        if (res.reports[static_cast<std::size_t>(i)].status == Status::Mismatch) return kMismatch;
    return kPoleOrDomain;
}

std::vector<long> parse_grid(const std::string& text) {
    std::vector<long> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            grid.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad --grid entry '" + item + "'");
        }
        if (grid.back() < 0) throw UsageError("grid entries must be non-negative");
    }
    if (grid.empty()) throw UsageError("--grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw UsageError("--grid must be strictly ascending");
    return grid;
}

LimitPair parse_pair(const std::string& text) {
    if (text == "A" || text == "a" || text == cli_name(IdentityId::Thm5Psi5_A)) return LimitPair::A;
    if (text == "B" || text == "b" || text == cli_name(IdentityId::Thm5Psi5_B)) return LimitPair::B;
    throw UsageError("--pair is A or B");
}

int cmd_limit(const Flags& f, std::ostream& out, std::ostream& err) {
    const Catalog catalog = make_catalog(f);
    const LimitPair pair = parse_pair(f.pair);
    const Param q = base_param(f, Backend::Numeric, true, err);
    const ParamSet params = build_params(f, catalog.get(limit_side(pair)), q);
    for (char c : {'b', 'c', 'd'})
        if (!params.sym.count(c)) throw UsageError(std::string("--") + c + " is required");
    const auto grid = parse_grid(f.grid);
    const double tol = tolerance(f, q.complex().context(), kDefaultLimitTolerance);
    const auto r = limit_check(catalog, pair, params, grid, tol);
    if (f.output == "json")
        emit(out, to_json(pair, params, tol, r));
    else if (f.output == "csv")
        out << to_csv(r);
    else
        out << to_text(r);
    if (r.passed) return kPass;
    for (const auto& row : r.rows)
        if (!row.error.empty()) return kPoleOrDomain;
    return kMismatch;
}

int cmd_ismail(const Flags& f, std::ostream& out, std::ostream& err) {
    const Catalog catalog = make_catalog(f);
    const IdentityId id = parse_id(f.id);
    if (id != IdentityId::Thm3Psi3_A && id != IdentityId::Thm3Psi3_B)
        throw UsageError("ismail applies to " + cli_name(IdentityId::Thm3Psi3_A) + " and " +
                         cli_name(IdentityId::Thm3Psi3_B));
    if (f.m_max < 1) throw UsageError("--m-max must be at least 1");
    const Param q = base_param(f, Backend::Numeric, true, err);
    const ParamSet params = build_params(f, catalog.get(id), q);
    for (char c : {'b', 'c'})
        if (!params.sym.count(c)) throw UsageError(std::string("--") + c + " is required");
    const double tol = tolerance(f, q.complex().context(), kDefaultTolerance);
    const auto r = ismail_sequence_check(catalog, id, params, f.m_max, tol);
    if (f.output == "json")
        emit(out, to_json(id, params, tol, r));
    else if (f.output == "csv")
        out << to_csv(r);
    else
        out << to_text(r);
    if (r.passed) return kPass;
    for (const auto& row : r.rows)
        if (row.status == Status::Mismatch) return kMismatch;
    return kPoleOrDomain;
}

int cmd_selftest(const Flags& f, std::ostream& out) {
    require_not_csv(f);
    const Catalog catalog = make_catalog(f);
    SelftestConfig cfg;
    cfg.digits = precision(f).digits;
    cfg.seed = f.seed;
    cfg.threads = f.parallelism;
    const auto suites = run_selftest(catalog, cfg);
    bool ok = true;
    for (const auto& s : suites) ok = ok && s.status != SuiteStatus::Fail;
    if (f.output == "json") {
        Json j;
        j["command"] = "selftest";
        j["digits"] = cfg.digits;
        j["seed"] = cfg.seed;
        if (catalog.corrupted()) j["injected_fault"] = cli_name(*catalog.corrupted());
        Json arr = Json::array();
        for (const auto& s : suites) {
            Json x;
            x["name"] = s.name;
            x["status"] = to_string(s.status);
            x["cases"] = s.cases;
            x["failures"] = s.failures;
            if (!s.note.empty()) x["note"] = s.note;
            arr.push_back(std::move(x));
        }
        j["suites"] = std::move(arr);
        j["passed"] = ok;
        emit(out, j);
    } else {
        for (const auto& s : suites) {
            out << s.name << ": " << to_string(s.status) << " (" << s.cases << " cases)";
            if (!s.note.empty()) out << " " << s.note;
            out << "\n";
            for (const auto& fail : s.failures) out << "  " << fail << "\n";
        }
        out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    }
    return ok ? kPass : kMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app("Basic hypergeometric summation identities: exact and high-precision verification", "qsum");
    app.require_subcommand(1);
    Flags f;

    auto* verify = app.add_subcommand("verify", "check one instance of an identity");
    verify->add_option("--id", f.id, "identity, e.g. thm1.1 or eq2.1")->required();
    verify->add_option("--n", f.n, "integer n");
    verify->add_option("--m", f.m, "integer m");
    add_letters(verify, f, "abcdez");
    verify->add_option("--mode", f.mode, "exact, numeric or auto")->check(CLI::IsMember({"exact", "numeric", "auto"}));
    add_numeric(verify, f);
    verify->add_flag("--timing", f.timing, "include elapsed time");
    add_fault(verify, f);

    auto* sweep = app.add_subcommand("sweep", "check random instances of an identity");
    sweep->add_option("--id", f.id, "identity")->required();
    sweep->add_option("--count", f.count, "number of instances");
    sweep->add_option("--seed", f.seed, "random seed");
    sweep->add_option("--mode", f.mode, "exact, numeric or auto")->check(CLI::IsMember({"exact", "numeric", "auto"}));
    add_numeric(sweep, f);
    sweep->add_option("--parallelism", f.parallelism, "worker threads (0: runtime default)");
    sweep->add_flag("--timing", f.timing, "include elapsed times");
    add_fault(sweep, f);

    auto* limit = app.add_subcommand("limit", "compare finite and infinite product sides as n grows");
    limit->add_option("--pair", f.pair, "A (thm1.1 -> thm1.3) or B (thm1.2 -> thm1.4)");
    add_letters(limit, f, "bcd");
    limit->add_option("--grid", f.grid, "ascending n values, comma separated");
    add_numeric(limit, f);
    add_fault(limit, f);

    auto* ismail = app.add_subcommand("ismail", "evaluate a 3psi3 identity at 1/d = q^m");
    ismail->add_option("--id", f.id, "thm1.3 or thm1.4")->required();
    add_letters(ismail, f, "bc");
    ismail->add_option("--m-max", f.m_max, "largest m");
    add_numeric(ismail, f);
    add_fault(ismail, f);

    auto* selftest = app.add_subcommand("selftest", "run the built-in property suites");
    selftest->add_option("--digits", f.digits, "working precision in decimal digits");
    selftest->add_option("--seed", f.seed, "random seed");
    selftest->add_option("--output", f.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    selftest->add_option("--parallelism", f.parallelism, "worker threads (0: runtime default)");
    add_fault(selftest, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (resolve_digits(f) < 15) throw UsageError("digits must be at least 15");
        if (*verify) return cmd_verify(f, out, err);
        if (*sweep) return cmd_sweep(f, out, err);
        if (*limit) return cmd_limit(f, out, err);
        if (*ismail) return cmd_ismail(f, out, err);
        return cmd_selftest(f, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const MissingParam& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const qsum::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kPoleOrDomain;
    }
}

}  // namespace qsum::cli
