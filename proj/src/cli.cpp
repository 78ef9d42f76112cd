#include "shiftfam/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "shiftfam/envelope.hpp"

namespace shiftfam {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
T parse_number(std::string_view token, std::string_view flag) {
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
        throw UsageError(std::string(flag) + ": cannot parse '" + std::string(token) + "' as an integer");
    return value;
}

std::vector<Int> parse_list(std::string_view text, std::string_view flag) {
    std::vector<Int> out;
    if (text.empty()) throw UsageError(std::string(flag) + ": empty list");
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_number<Int>(text.substr(start, comma - start), flag));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// "A..B", or a single "L" meaning 0..L.
std::pair<Int, Int> parse_lambda(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) return {0, parse_number<Int>(text, "--lambda")};
    const Int lo = parse_number<Int>(text.substr(0, dots), "--lambda");
    const Int hi = parse_number<Int>(text.substr(dots + 2), "--lambda");
    if (lo < 0 || hi < lo) throw UsageError("--lambda: expected 0 <= A <= B");
    return {lo, hi};
}

void add_warnings(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& w : from)
        if (std::find(into.begin(), into.end(), w) == into.end()) into.push_back(w);
}

std::string mode_name(Mode mode) { return mode == Mode::Strict ? "strict" : "observed"; }

// Threshold errors become warnings in observed mode; the section is skipped.
template <class F>
bool guarded(Mode mode, std::vector<std::string>& warnings, F&& body) {
    try {
        body();
        return true;
    } catch (const Error& e) {
        if (mode == Mode::Strict || e.kind() != ErrorKind::BelowThreshold) throw;
        add_warnings(warnings, {e.what()});
        return false;
    }
}

struct Output {
    OutputEnvelope env;
    std::optional<std::string> csv;
    int code = kExitOk;
};

// --- analyze ---------------------------------------------------------------

Output cmd_analyze(const std::string& gens_text) {
    const auto gens = parse_list(gens_text, "--gens");
    Output o;
    o.env.command = "analyze";
    o.env.inputs = {{"gens", gens}};
    o.env.results = analyze_json(build_semigroup(gens));
    return o;
}

// --- family ----------------------------------------------------------------

struct FamilyArgs {
    std::string shifts;
    Int n = 0;
    std::string lambda = "0..0";
    std::string report = "pf";
    bool observed = false;
    bool csv = false;
};

const std::vector<std::string> kSelectors{"bounds", "frobenius", "ng", "pf", "residue", "rtype"};

json pf_section(const FamilyReport& rep, Int lo) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        if (r.lambda < lo) continue;
        json row{{"lambda", r.lambda}, {"n", r.n}, {"pf_direct", r.pf_direct}, {"frobenius", r.frobenius}};
        if (rep.profile) {
            row["pf_closed_form"] = r.pf_closed_form;
            row["match"] = r.match;
        }
        rows.push_back(row);
    }
    json forms = json::array();
    for (const auto& cf : rep.closed_forms) forms.push_back(to_json(cf));
    return json{{"rows", rows},
                {"profile", rep.profile ? to_json(*rep.profile) : json(nullptr)},
                {"closed_forms", forms}};
}

Output cmd_family(const FamilyArgs& a) {
    const ShiftSpec spec = make_spec(parse_list(a.shifts, "--shifts"));
    const auto [lo, hi] = parse_lambda(a.lambda);
    auto selectors = [&] {
        std::vector<std::string> out;
        std::string_view text = a.report;
        while (!text.empty()) {
            const std::size_t comma = text.find(',');
            const std::string sel(text.substr(0, comma));
            if (std::find(kSelectors.begin(), kSelectors.end(), sel) == kSelectors.end())
                throw UsageError("--report: unknown selector '" + sel + "'");
            if (std::find(out.begin(), out.end(), sel) == out.end()) out.push_back(sel);
            text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        }
        if (out.empty()) throw UsageError("--report: empty selector list");
        std::sort(out.begin(), out.end());
        return out;
    }();
    auto selected = [&](std::string_view s) { return std::find(selectors.begin(), selectors.end(), s) != selectors.end(); };
    if (a.csv && selectors != std::vector<std::string>{"residue"})
        throw UsageError("--csv is only available for --report residue");

    const Mode mode = a.observed ? Mode::Observed : Mode::Strict;
    Output o;
    auto& env = o.env;
    env.command = "family";
    env.inputs = {{"shifts", spec.r.values()}, {"n", a.n},           {"lambda", {{"lo", lo}, {"hi", hi}}},
                  {"report", selectors},       {"mode", mode_name(mode)}};
    member_semigroup(spec, a.n);  // NotCoprime before anything else
    env.results["spec"] = to_json(spec);

    if (selected("pf") || selected("bounds")) {
        const FamilyReport rep = family_report(spec, a.n, hi, mode);
        add_warnings(env.warnings, rep.warnings);
        env.results["flags"] = to_json(rep.flags);
        if (selected("pf")) env.results["pf"] = pf_section(rep, lo);
        if (selected("bounds")) {
            env.results["bounds"] = {{"N0", spec.n0},
                                     {"r_k4", spec.rk4()},
                                     {"bound", to_json(*rep.bound)},
                                     {"bootstrap_bound", to_json(bound_n(spec))},
                                     {"n_exceeds_N", a.n > rep.bound->n}};
        }
    }

    if (selected("frobenius")) {
        json rows = json::array();
        for (Int lambda = lo; lambda <= hi; ++lambda) {
            const Int member = checked_add(a.n, checked_mul(lambda, spec.rk()));
            const Int direct = member_semigroup(spec, member).frobenius();
            json row{{"lambda", lambda}, {"n", member}, {"direct", direct}, {"closed_form", nullptr}};
            guarded(mode, env.warnings, [&] {
                const auto cf = frobenius_closed_form(spec, a.n, lambda, mode);
                add_warnings(env.warnings, cf.warnings);
                row["closed_form"] = cf.value;
                row["match"] = cf.value == direct;
            });
            rows.push_back(row);
        }
        env.results["frobenius"] = rows;
    }

    if (selected("ng")) {
        const NGCertificate cert = ng_certificate(member_semigroup(spec, a.n));
        json rows = json::array();
        if (!cert.vector) {
            add_warnings(env.warnings, {"M_" + std::to_string(a.n) + " is not nearly Gorenstein; nothing to transport"});
        } else {
            for (Int lambda = lo; lambda <= hi; ++lambda) {
                guarded(mode, env.warnings, [&] {
                    const NGTransport t = ng_transport(spec, a.n, lambda, mode);
                    add_warnings(env.warnings, t.warnings);
                    rows.push_back({{"lambda", lambda},
                                    {"n", a.n + lambda * spec.rk()},
                                    {"vector", t.vector},
                                    {"verified", t.verified},
                                    {"status", t.theorem_backed ? "theorem" : "observed"}});
                });
            }
        }
        env.results["ng"] = {{"base", to_json(cert)}, {"transport", rows}};
    }

    if (selected("residue")) {
        const ResidueScan scan = residue_scan(spec, a.n, lo, hi);
        env.results["residue"] = to_json(scan);
        if (a.csv) o.csv = residue_csv(scan);
    }

    if (selected("rtype")) {
        json rows = json::array();
        for (Int lambda = lo; lambda <= hi; ++lambda) {
            const Int member = checked_add(a.n, checked_mul(lambda, spec.rk()));
            const std::size_t direct = reduced_type(member_semigroup(spec, member));
            json row{{"lambda", lambda}, {"n", member}, {"direct", direct}, {"formula", nullptr}};
            guarded(mode, env.warnings, [&] {
                const auto rt = reduced_type_formula(spec, member, mode);
                add_warnings(env.warnings, rt.warnings);
                row["formula"] = rt.value;
                row["reduced_base"] = rt.reduced_base;
                row["match"] = rt.value == direct;
            });
            rows.push_back(row);
        }
        env.results["rtype"] = rows;
    }
    return o;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string shifts;
    std::optional<Int> n;
    std::string lambda = "1";
    std::vector<std::string> random;
    std::optional<std::uint64_t> seed;
    std::optional<Int> count;
    Int rk_max = 10;
    Int cap = oracle::kDefaultCap;
    bool wrong_bijection = false;
};

struct VerifyCase {
    ShiftSpec spec;
    Int n;
};

// Cases run on a small worker pool; results stay in case order.
std::vector<std::vector<oracle::DiffReport>> run_cases(const std::vector<VerifyCase>& cases, Int lambda_max,
                                                       const oracle::ShiftCheckOptions& options) {
    std::vector<std::vector<oracle::DiffReport>> results(cases.size());
    std::vector<std::exception_ptr> failures(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cases.size(); c = next++) {
            try {
                results[c] = oracle::brute_shift_check(cases[c].spec, cases[c].n, lambda_max, options);
            } catch (...) {
                failures[c] = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(cases.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return results;
}

json wrong_bijection_table(const ShiftSpec& spec, Int n) {
    const PProfile base = p_profile(spec, n);
    const PProfile next = p_profile(spec, checked_add(n, spec.rk()));
    json rows = json::array();
    std::vector<Int> correct, wrong;
    for (Int i : base.representatives()) {
        const Int good = psi(spec, n, i), bad = psi_wrong(spec, n, i);
        correct.push_back(good);
        wrong.push_back(bad);
        rows.push_back({{"i", i}, {"psi", good}, {"psi_wrong", bad}, {"diverges", good != bad}});
    }
    std::sort(correct.begin(), correct.end());
    std::sort(wrong.begin(), wrong.end());
    const auto actual = next.representatives();
    return json{{"n", n},
                {"next_n", next.n},
                {"rows", rows},
                {"p_next_actual", actual},
                {"p_next_psi", correct},
                {"p_next_psi_wrong", wrong},
                {"psi_wrong_agrees", wrong == actual}};
}

Output cmd_verify(const VerifyArgs& a) {
    const bool by_spec = !a.shifts.empty() || a.n.has_value();
    const bool by_random = !a.random.empty() || a.seed.has_value() || a.count.has_value();
    if (by_spec == by_random) throw UsageError("verify needs either --shifts with --n, or --random SEED COUNT");
    const auto [lambda_lo, lambda_max] = parse_lambda(a.lambda);
    (void)lambda_lo;
    if (a.rk_max < 2) throw UsageError("--rk-max must be at least 2");
    if (a.cap <= 0) throw UsageError("--cap must be positive");

    Output o;
    auto& env = o.env;
    env.command = "verify";
    std::vector<VerifyCase> cases;
    if (by_spec) {
        if (a.shifts.empty() || !a.n) throw UsageError("--shifts and --n go together");
        cases.push_back({make_spec(parse_list(a.shifts, "--shifts")), *a.n});
        env.inputs = {{"shifts", cases.front().spec.r.values()}, {"n", *a.n}};
    } else {
        std::uint64_t seed = a.seed.value_or(0);
        Int count = a.count.value_or(1);
        if (!a.random.empty()) {
            seed = parse_number<std::uint64_t>(a.random[0], "--random");
            count = parse_number<Int>(a.random[1], "--random");
        }
        if (count < 1) throw UsageError("--random: count must be positive");
        oracle::Xorshift64Star rng(seed);
        for (Int c = 0; c < count; ++c) {
            ShiftSpec spec = oracle::random_family(rng.next(), a.rk_max);
            const Int n = oracle::valid_members_above(spec, spec.n0, 1).front();
            cases.push_back({std::move(spec), n});
        }
        env.inputs = {{"seed", seed}, {"count", count}, {"rk_max", a.rk_max}};
    }
    env.inputs["lambda_max"] = lambda_max;
    env.inputs["cap"] = a.cap;
    if (a.wrong_bijection) env.inputs["show_wrong_bijection"] = true;

    const auto results = run_cases(cases, lambda_max, {a.cap, false});
    json out_cases = json::array();
    std::size_t checked = 0, mismatches = 0;
    for (std::size_t c = 0; c < cases.size(); ++c) {
        json reports = json::array();
        for (const auto& r : results[c]) {
            reports.push_back(to_json(r));
            ++checked;
            if (!r.match) ++mismatches;
        }
        out_cases.push_back({{"shifts", cases[c].spec.r.values()}, {"n", cases[c].n}, {"reports", reports}});
    }
    env.results = {{"cases", out_cases}, {"checked", checked}, {"mismatches", mismatches}};

    if (a.wrong_bijection) {
        json tables = json::array();
        for (const auto& c : cases) tables.push_back(wrong_bijection_table(c.spec, c.n));
        env.results["wrong_bijection"] = tables;
    }
    if (mismatches > 0) o.code = kExitMismatch;
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroups and shifted families M_n = <n, n + r_1, ..., n + r_k>", "shiftfam"};
    app.require_subcommand(1);

    std::string gens;
    bool analyze_json = false;
    auto* analyze = app.add_subcommand("analyze", "Invariants of one numerical semigroup");
    analyze->add_option("--gens", gens, "Generators a,b,c")->required();
    analyze->add_flag("--json", analyze_json, "JSON output (default)");

    FamilyArgs fam;
    bool family_json = false;
    auto* family = app.add_subcommand("family", "Report on M_{n + lambda r_k}");
    family->add_option("--shifts", fam.shifts, "Shifts r1,...,rk")->required();
    family->add_option("--n", fam.n, "Base member n")->required();
    family->add_option("--lambda", fam.lambda, "A..B, or L for 0..L")->capture_default_str();
    family->add_option("--report", fam.report, "Selectors: pf,frobenius,ng,residue,rtype,bounds")
        ->capture_default_str();
    family->add_flag("--observed", fam.observed, "Downgrade threshold errors to warnings");
    auto* fam_json = family->add_flag("--json", family_json, "JSON output (default)");
    family->add_flag("--csv", fam.csv, "CSV output (residue scans)")->excludes(fam_json);

    VerifyArgs ver;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
    verify->add_option("--shifts", ver.shifts, "Shifts r1,...,rk");
    verify->add_option("--n", ver.n, "Base member n");
    verify->add_option("--lambda", ver.lambda, "Largest lambda L, or A..B")->capture_default_str();
    verify->add_option("--random", ver.random, "SEED COUNT")->expected(2);
    verify->add_option("--seed", ver.seed, "Seed for random specs");
    verify->add_option("--count", ver.count, "Number of random specs");
    verify->add_option("--rk-max", ver.rk_max, "Largest shift for random specs")->capture_default_str();
    verify->add_option("--cap", ver.cap, "Largest Frobenius number the oracle may sieve")->capture_default_str();
    verify->add_flag("--show-wrong-bijection", ver.wrong_bijection, "Add the psi_wrong divergence table");
    verify->add_flag("--json", verify_json, "JSON output (default)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        Output o;
        if (analyze->parsed()) {
            o = cmd_analyze(gens);
        } else if (family->parsed()) {
            o = cmd_family(fam);
        } else {
            o = cmd_verify(ver);
        }
        for (const auto& w : o.env.warnings) err << "warning: " << w << '\n';
        if (o.csv) {
            out << *o.csv;
        } else {
            out << serialize(o.env);
        }
        if (o.code == kExitMismatch) err << "verification mismatch\n";
        return o.code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return e.kind() == ErrorKind::InvariantViolation ? kExitMismatch : kExitDomain;
    }
}

}  // namespace shiftfam
