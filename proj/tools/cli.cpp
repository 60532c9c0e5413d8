#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sclean/errors.hpp"
#include "sclean/ring.hpp"
#include "sclean/skewtri.hpp"
#include "sclean/sweep.hpp"
#include "sclean/theorems.hpp"

namespace sclean::cli {

using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string ring;
    std::string sigma = "id";
    std::size_t n = 2;
    std::string matrix;
    std::string suite = "all";
    std::string method = "auto";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t sample = 10'000;
    std::uint64_t seed = 20130917;
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    unsigned threads = 0;
    bool timing = false;
    std::string format = "text";
};

json config_echo(const RunConfig& c) {
    json j = {{"command", c.command}, {"ring", c.ring},        {"sigma", c.sigma},
              {"n", c.n},             {"budget", c.budget},    {"sample", c.sample},
              {"seed", c.seed},       {"exhaustive_limit", c.exhaustive_limit},
              {"format", c.format}};
    if (c.command == "decompose") {
        j["matrix"] = c.matrix;
        j["method"] = c.method;
    }
    if (c.command == "verify") j["suite"] = c.suite;
    if (c.command == "sweep") j["method"] = c.method;
    return j;
}

json envelope(const RunConfig& c) {
    return {{"tool", kToolName}, {"version", kToolVersion}, {"config", config_echo(c)}};
}

VerifyOptions verify_options(const RunConfig& c) {
    VerifyOptions o;
    o.budget = c.budget;
    o.exhaustive_limit = c.exhaustive_limit;
    o.sample_size = c.sample;
    o.seed = c.seed;
    o.threads = c.threads;
    return o;
}

std::string element_list(const FiniteRing& r, const std::vector<Element>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += r.element_name(xs[i]);
    }
    return s + "}";
}

json index_list(const std::vector<Element>& xs) {
    json j = json::array();
    for (auto x : xs) j.push_back(x.index);
    return j;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report_text(std::ostream& out, const ClaimReport& r, bool timing) {
    out << std::left << std::setw(16) << r.claim_id << std::setw(9) << to_string(r.status)
        << std::right << std::setw(10) << r.checked;
    if (timing) out << std::setw(10) << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
    if (r.seed) out << "  sampled(seed " << *r.seed << ")";
    if (!r.reason.empty()) out << "  " << r.reason;
    out << '\n';
    if (r.witness) out << "    witness " << r.witness->dump() << '\n';
}

int emit_reports(std::ostream& out, const RunConfig& c, const std::vector<ClaimReport>& reports,
                 const std::string& header) {
    bool failed = false;
    for (const auto& r : reports) failed |= r.status == ClaimStatus::fails;

    if (c.format == "structured") {
        auto j = envelope(c);
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, c.timing));
        j["reports"] = arr;
        out << j.dump(2) << '\n';
    } else {
        out << header << '\n';
        for (const auto& r : reports) print_report_text(out, r, c.timing);
        out << (failed ? "FAILED" : "OK") << '\n';
    }
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_analyze(std::ostream& out, const RunConfig& c) {
    const auto ring = ring_from_spec(c.ring);
    const auto& r = *ring;
    const auto an = analyze(r);
    const bool bleached = an.is_local && is_bleached(r, an);

    if (c.format == "structured") {
        auto j = envelope(c);
        json names = json::array();
        for (auto x : r.elements()) names.push_back(r.element_name(x));
        j["analysis"] = {
            {"ring", r.label()},
            {"order", r.order()},
            {"elements", names},
            {"local", an.is_local},
            {"units", index_list(an.units)},
            {"radical", index_list(an.radical)},
            {"idempotents", index_list(an.idempotents)},
            {"radical_nilpotency_index",
             an.radical_nilpotency_index ? json(*an.radical_nilpotency_index) : json(nullptr)},
            {"one_is_sum_of_two_units", an.one_is_sum_of_two_units},
            {"bleached", bleached},
        };
        out << j.dump(2) << '\n';
        return 0;
    }

    out << "ring                     " << r.label() << '\n'
        << "order                    " << r.order() << '\n'
        << "local                    " << yes_no(an.is_local) << '\n'
        << "units                    " << element_list(r, an.units) << '\n'
        << "radical                  " << element_list(r, an.radical) << '\n'
        << "idempotents              " << element_list(r, an.idempotents) << '\n'
        << "radical nilpotency index ";
    if (an.radical_nilpotency_index) {
        out << *an.radical_nilpotency_index << '\n';
    } else {
        out << "none (J not nilpotent)\n";
    }
    out << "1 is a sum of two units  " << yes_no(an.one_is_sum_of_two_units) << '\n'
        << "bleached                 " << yes_no(bleached) << '\n';
    if (r.construction().kind != Construction::Kind::zmod) {
        out << "elements                ";
        for (auto x : r.elements()) out << ' ' << x.index << '=' << r.element_name(x);
        out << '\n';
    }
    return 0;
}

int cmd_decompose(std::ostream& out, const RunConfig& c) {
    if (c.matrix.empty()) throw SpecError("decompose needs --matrix");
    const auto ring = ring_from_spec(c.ring);
    const auto sigma = endomorphism_from_spec(ring, c.sigma);
    const TriRing t(sigma, c.n);
    const auto a = parse_matrix_literal(c.matrix, c.n, *ring);

    std::string method = c.method;
    if (method == "auto") method = c.n <= 3 ? "constructive" : "brute";
    if (method == "constructive" && c.n > 3) {
        throw SpecError("constructive decomposition exists only for n = 2 and n = 3");
    }

    std::optional<CleanDecomposition> d;
    std::string failure;
    try {
        if (method == "constructive") {
            d = c.n == 2 ? decompose_t2(t, a) : decompose_t3(t, a);
        } else if (method == "brute") {
            d = brute_force_strongly_clean(t, a, c.budget);
        } else {
            d = is_very_clean(t, a, c.budget);
        }
        if (!d) failure = "no decomposition found";
    } catch (const VerificationError& e) {
        failure = e.what();
    }
    const auto checks = d ? check_decomposition(t, a, *d) : DecompositionChecks{};
    const bool ok = d && checks.all();

    if (c.format == "structured") {
        auto j = envelope(c);
        json dj = {{"ring", ring->label()}, {"sigma", sigma.label()}, {"n", c.n},
                   {"matrix", format_literal(a)}, {"method", method}, {"ok", ok}};
        if (d) {
            dj["kind"] = std::string(to_string(d->kind));
            dj["proof_case"] = d->proof_case;
            dj["e"] = format_matrix(d->e);
            dj["u"] = format_matrix(d->u);
            dj["checks"] = {{"idempotent", checks.idempotent}, {"commutes", checks.commutes},
                            {"sums", checks.sums}, {"unit", checks.unit}};
        } else {
            dj["failure"] = failure;
        }
        j["decomposition"] = dj;
        out << j.dump(2) << '\n';
        return ok ? 0 : 1;
    }

    out << t.describe() << '\n' << "A = " << format_matrix(a) << '\n';
    if (!d) {
        out << "FAILED: " << failure << '\n';
        return 1;
    }
    if (d->proof_case) out << "Case " << d->proof_case << '\n';
    out << "kind " << to_string(d->kind) << '\n'
        << "E = " << format_matrix(d->e) << '\n'
        << "U = " << format_matrix(d->u) << '\n';
    auto line = [&](const char* what, bool pass) {
        out << "  " << std::left << std::setw(12) << what << (pass ? "pass" : "FAIL") << '\n';
    };
    line("E^2 = E", checks.idempotent);
    line("EA = AE", checks.commutes);
    line(d->kind == DecompositionKind::very_clean_plus ? "U = A + E" : "A = E + U", checks.sums);
    line("U unit", checks.unit);
    return ok ? 0 : 1;
}

int cmd_verify(std::ostream& out, const RunConfig& c) {
    const auto suite = parse_suite(c.suite);
    const auto ring = ring_from_spec(c.ring);
    const auto sigma = endomorphism_from_spec(ring, c.sigma);
    TheoremVerifier verifier(sigma, verify_options(c));
    const auto reports = verifier.run(suite);
    return emit_reports(out, c, reports, "verify " + ring->label() + " sigma=" + sigma.label());
}

int cmd_sweep(std::ostream& out, const RunConfig& c) {
    const auto ring = ring_from_spec(c.ring);
    const auto sigma = endomorphism_from_spec(ring, c.sigma);
    const TriRing t(sigma, c.n);
    require_local(t.analysis(), *ring);

    std::string method = c.method;
    if (method == "auto") {
        method = t.size() <= c.budget || c.n > 3 ? "brute" : "constructive";
    }
    if (method == "constructive" && c.n > 3) {
        throw SpecError("constructive decomposition exists only for n = 2 and n = 3");
    }
    if (method == "very-clean") throw SpecError("sweep method must be auto, brute or constructive");

    std::function<bool(const TriMatrix&)> passes;
    if (method == "brute") {
        t.idempotents(c.budget);
        passes = [&](const TriMatrix& a) { return brute_force_strongly_clean(t, a, c.budget).has_value(); };
    } else {
        passes = [&](const TriMatrix& a) {
            try {
                return (c.n == 2 ? decompose_t2(t, a) : decompose_t3(t, a)).has_value();
            } catch (const VerificationError&) {
                return false;
            }
        };
    }

    const auto started = std::chrono::steady_clock::now();
    const auto plan = plan_sweep(t, c.exhaustive_limit, c.sample, c.seed);
    const auto result = run_sweep(t, plan, passes, c.threads);

    ClaimReport r;
    r.claim_id = "sweep-T" + std::to_string(c.n);
    r.ring = ring->label();
    r.sigma = sigma.label();
    r.checked = result.checked;
    r.note = {{"method", method}, {"total", plan.total}, {"failures", result.failures}};
    if (!plan.exhaustive) r.seed = c.seed;
    if (result.first_failure) {
        const auto a = t.from_index(*result.first_failure);
        json entries = json::array();
        for (auto x : a.entries()) entries.push_back(x.index);
        r.status = ClaimStatus::fails;
        r.reason = "matrix is not strongly clean";
        r.witness = {{"type", "matrix"}, {"check", method == "brute" ? "brute_force" : (c.n == 2 ? "decompose_t2" : "decompose_t3")},
                     {"n", c.n}, {"entries", entries}, {"literal", format_literal(a)}};
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return emit_reports(out, c, {r}, "sweep " + t.describe() + " method=" + method);
}

void add_common(CLI::App& app, RunConfig& c) {
    app.add_option("--ring", c.ring, "ring spec, e.g. zmod:4, dual:zmod:4, groupring:zmod:4;C2, "
                                     "quot:zmod:3;x^2+x+1, table:FILE")
        ->required();
    app.add_option("--sigma", c.sigma, "endomorphism: id, negx, aug, table:FILE, optionally ^k")
        ->capture_default_str();
    app.add_option("--n", c.n, "matrix size")->check(CLI::Range(std::size_t{2}, kMaxDimension))
        ->capture_default_str();
    app.add_option("--budget", c.budget, "largest T_n whose idempotents may be enumerated")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--sample", c.sample, "sample size for sweeps over large rings")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", c.seed, "sampling seed")->capture_default_str();
    app.add_option("--exhaustive-limit", c.exhaustive_limit, "sweeps over more matrices are sampled")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--threads", c.threads, "sweep workers, 0 = hardware concurrency")->capture_default_str();
    app.add_flag("--timing", c.timing, "include elapsed times in the output");
    app.add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Strongly clean skew triangular matrix rings over finite local rings", kToolName};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.set_config("--config", "", "TOML file; keys go under the subcommand's section, flags win");
    app.require_subcommand(1);
    app.fallthrough();

    auto* analyze_cmd = app.add_subcommand("analyze", "units, radical and idempotents of a ring");

    auto* decompose_cmd = app.add_subcommand("decompose", "strongly clean decomposition of one matrix");
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem suite on (R, sigma)");
    auto* sweep_cmd = app.add_subcommand("sweep", "check strong cleanness of every (or a sample of) T_n matrix");

    for (auto* sub : {analyze_cmd, decompose_cmd, verify_cmd, sweep_cmd}) add_common(*sub, c);
    decompose_cmd->add_option("--matrix", c.matrix, "upper triangle rows, e.g. [3,1,0;0,1;2]")->required();
    decompose_cmd->add_option("--method", c.method, "decomposition method")
        ->check(CLI::IsMember({"auto", "constructive", "brute", "very-clean"}))->capture_default_str();
    verify_cmd->add_option("--suite", c.suite, "claims to check")
        ->check(CLI::IsMember({"2.1", "3.1", "4.1", "2.6", "corollaries", "all"}))->capture_default_str();
    sweep_cmd->add_option("--method", c.method, "per-matrix check")
        ->check(CLI::IsMember({"auto", "constructive", "brute"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            c.command = "analyze";
            return cmd_analyze(out, c);
        }
        if (decompose_cmd->parsed()) {
            c.command = "decompose";
            return cmd_decompose(out, c);
        }
        if (verify_cmd->parsed()) {
            c.command = "verify";
            return cmd_verify(out, c);
        }
        c.command = "sweep";
        return cmd_sweep(out, c);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --budget)\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace sclean::cli
