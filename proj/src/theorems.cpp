#include "sclean/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>

#include "sclean/errors.hpp"
#include "sclean/operators.hpp"

namespace sclean {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<Element> one_plus_radical(const FiniteRing& r, const RingAnalysis& an) {
    std::vector<Element> out;
    for (auto j : an.radical) out.push_back(r.add(r.one(), j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json map_witness(Element left, Element right) {
    return {{"type", "map"}, {"left", left.index}, {"right", right.index}};
}

json triple_witness(std::string type, Element a, Element b, Element v) {
    return {{"type", std::move(type)}, {"a", a.index}, {"b", b.index}, {"v", v.index}};
}

TriMatrix t2_replay_matrix(const FiniteRing& r, Element a, Element b, Element v) {
    TriMatrix m(2);
    m.at(0, 0) = a;
    m.at(0, 1) = r.neg(v);
    m.at(1, 1) = b;
    return m;
}

TriMatrix t41_replay_matrix(Element a, Element b, Element v) {
    TriMatrix m(3);
    m.at(0, 0) = b;
    m.at(0, 2) = v;
    m.at(1, 1) = b;
    m.at(2, 2) = a;
    return m;
}

// The decomposition of [[a,-v],[0,b]] must use E = [[0,x],[0,1]] with
// a x - x sigma(b) = v.
bool t2_replay_holds(const TriRing& t2, Element a, Element b, Element v, std::uint64_t budget) {
    const auto& r = t2.base();
    const auto a_mat = t2_replay_matrix(r, a, b, v);
    const auto d = brute_force_strongly_clean(t2, a_mat, budget);
    if (!d || d->e(0, 0) != r.zero() || d->e(1, 1) != r.one()) return false;
    const auto x = d->e(0, 1);
    return r.sub(r.mul(a, x), r.mul(x, t2.sigma_pow(1, b))) == v;
}

// The decomposition of [[b,0,v],[0,b,0],[0,0,a]] must use
// E = [[1,0,e13],[0,1,e23],[0,0,0]] with b e13 - e13 sigma^2(a) = v.
bool t41_replay_holds(const TriRing& t3, Element a, Element b, Element v, std::uint64_t budget) {
    const auto& r = t3.base();
    const auto a_mat = t41_replay_matrix(a, b, v);
    const auto d = t3.size() <= budget ? brute_force_strongly_clean(t3, a_mat, budget)
                                       : decompose_t3(t3, a_mat);
    if (!d) return false;
    const auto& e = d->e;
    if (e(0, 0) != r.one() || e(0, 1) != r.zero() || e(1, 1) != r.one() || e(2, 2) != r.zero()) {
        return false;
    }
    const auto e13 = e(0, 2);
    return r.sub(r.mul(b, e13), r.mul(e13, t3.sigma_pow(2, a))) == v;
}

bool solver_holds(const FiniteRing& r, Element a, Element b, Element v) {
    try {
        const auto x = solve_nilpotent(r, a, b, v);
        return r.sub(r.mul(a, x), r.mul(x, b)) == v;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::string_view to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::fails: return "fails";
        case ClaimStatus::skipped: return "skipped";
    }
    return "unknown";
}

ClaimStatus parse_status(std::string_view text) {
    if (text == "holds") return ClaimStatus::holds;
    if (text == "fails") return ClaimStatus::fails;
    if (text == "skipped") return ClaimStatus::skipped;
    throw SpecError("unknown claim status '" + std::string(text) + "'");
}

Suite parse_suite(std::string_view text) {
    if (text == "2.1") return Suite::thm2_1;
    if (text == "3.1") return Suite::thm3_1;
    if (text == "4.1") return Suite::thm4_1;
    if (text == "2.6") return Suite::prop2_6;
    if (text == "corollaries") return Suite::corollaries;
    if (text == "all") return Suite::all;
    throw SpecError("unknown suite '" + std::string(text) + "'");
}

TheoremVerifier::TheoremVerifier(Endomorphism sigma, VerifyOptions options)
    : sigma_(std::move(sigma)),
      options_(options),
      t2_(sigma_, 2),
      t3_(sigma_, 3, t2_.analysis_ptr()) {
    require_local(t2_.analysis(), t2_.base());
}

// ---------------------------------------------------------------------------
// Predicates

TheoremVerifier::MapCheck TheoremVerifier::check_family(Family family, Domain domain) const {
    const auto& r = t3_.base();
    const auto& an = t3_.analysis();
    const auto lefts = domain == Domain::units ? an.units : one_plus_radical(r, an);

    MapCheck out;
    for (auto a : lefts) {
        for (auto b : an.radical) {
            Element left{}, right{};
            switch (family) {
                case Family::a_sigma_b: left = a, right = t3_.sigma_pow(1, b); break;
                case Family::a_sigma2_b: left = a, right = t3_.sigma_pow(2, b); break;
                case Family::b_sigma_a: left = b, right = t3_.sigma_pow(1, a); break;
                case Family::b_sigma2_a: left = b, right = t3_.sigma_pow(2, a); break;
            }
            ++out.checked;
            if (!out.witness && !lr_map(r, left, right).is_surjective()) {
                out.witness = map_witness(left, right);
            }
        }
    }
    return out;
}

TheoremVerifier::MapCheck TheoremVerifier::check_families(std::initializer_list<Family> families,
                                                          Domain domain) const {
    MapCheck out;
    for (auto f : families) {
        const auto m = check_family(f, domain);
        out.checked += m.checked;
        if (!out.witness && m.witness) out.witness = m.witness;
    }
    return out;
}

bool TheoremVerifier::one_plus_radical_condition() {
    return !check_family(Family::a_sigma_b, Domain::one_plus_radical).witness;
}

bool TheoremVerifier::theorem_3_1_hypothesis() {
    return !check_families({Family::a_sigma_b, Family::a_sigma2_b, Family::b_sigma_a}, Domain::units)
                .witness;
}

bool TheoremVerifier::two_is_unit() const {
    return t2_.analysis().is_unit(t2_.base().from_integer(2));
}

bool TheoremVerifier::sigma_idempotent() const {
    for (auto x : sigma_.ring().elements()) {
        if (sigma_(sigma_(x)) != sigma_(x)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Sweeps

TheoremVerifier::SweepSummary TheoremVerifier::sweep(
    const TriRing& ring, const std::function<bool(const TriMatrix&)>& passes, std::string method) const {
    const auto plan = plan_sweep(ring, options_.exhaustive_limit, options_.sample_size, options_.seed);
    SweepSummary s;
    s.result = run_sweep(ring, plan, passes, options_.threads);
    s.sampled = !plan.exhaustive;
    s.method = std::move(method);
    return s;
}

const TheoremVerifier::SweepSummary& TheoremVerifier::t2_brute() {
    if (!t2_brute_) {
        const auto budget = options_.budget;
        t2_.idempotents(budget);
        t2_brute_ = sweep(t2_, [this, budget](const TriMatrix& a) {
            return brute_force_strongly_clean(t2_, a, budget).has_value();
        }, "brute_force");
    }
    return *t2_brute_;
}

const TheoremVerifier::SweepSummary& TheoremVerifier::t2_constructive() {
    if (!t2_constructive_) {
        t2_constructive_ = sweep(t2_, [this](const TriMatrix& a) {
            try {
                return decompose_t2(t2_, a).has_value();
            } catch (const VerificationError&) {
                return false;
            }
        }, "decompose_t2");
    }
    return *t2_constructive_;
}

const TheoremVerifier::SweepSummary& TheoremVerifier::t2_very_clean() {
    if (!t2_very_clean_) {
        const auto budget = options_.budget;
        t2_.idempotents(budget);
        t2_very_clean_ = sweep(t2_, [this, budget](const TriMatrix& a) {
            return is_very_clean(t2_, a, budget).has_value();
        }, "very_clean");
    }
    return *t2_very_clean_;
}

const TheoremVerifier::SweepSummary& TheoremVerifier::t3_brute() {
    if (!t3_brute_) {
        const auto budget = options_.budget;
        t3_.idempotents(budget);
        t3_brute_ = sweep(t3_, [this, budget](const TriMatrix& a) {
            return brute_force_strongly_clean(t3_, a, budget).has_value();
        }, "brute_force");
    }
    return *t3_brute_;
}

const TheoremVerifier::SweepSummary& TheoremVerifier::t3_constructive() {
    if (!t3_constructive_) {
        std::atomic<std::uint64_t> case5{0}, printed_failures{0};
        std::mutex mutex;
        std::optional<std::uint64_t> printed_first;

        t3_constructive_ = sweep(t3_, [&, this](const TriMatrix& a) {
            bool ok = false;
            try {
                ok = decompose_t3(t3_, a).has_value();
            } catch (const VerificationError&) {
                ok = false;
            }
            if (t3_case(t3_, a) == 5) {
                ++case5;
                const auto printed = construct_t3(t3_, a, Case5Rhs::printed);
                const bool printed_ok =
                    printed.e &&
                    check_decomposition(t3_, a, {*printed.e, t3_.sub(a, *printed.e),
                                                 DecompositionKind::strongly_clean, 5})
                        .all();
                if (!printed_ok) {
                    ++printed_failures;
                    const auto idx = t3_.index_of(a);
                    std::lock_guard lock(mutex);
                    if (!printed_first || idx < *printed_first) printed_first = idx;
                }
            }
            return ok;
        }, "decompose_t3");

        case5_note_ = {{"case5_matrices", case5.load()},
                       {"case5_printed_rhs_failures", printed_failures.load()},
                       {"case5_printed_rhs_verifies", printed_failures.load() == 0}};
        if (printed_first) {
            case5_note_["case5_printed_rhs_first_failure"] = format_literal(t3_.from_index(*printed_first));
        }
    }
    return *t3_constructive_;
}

// ---------------------------------------------------------------------------
// Reports

ClaimReport TheoremVerifier::base_report(std::string claim_id) const {
    ClaimReport r;
    r.claim_id = std::move(claim_id);
    r.ring = sigma_.ring().label();
    r.sigma = sigma_.label();
    r.note = json::object();
    return r;
}

void TheoremVerifier::mark_sampled(ClaimReport& report, const SweepSummary& s) const {
    if (s.sampled) {
        report.seed = options_.seed;
        report.note["sampled"] = true;
        report.note["sample_size"] = options_.sample_size;
    }
}

json TheoremVerifier::matrix_witness(const TriRing& ring, std::uint64_t index, std::string check) const {
    const auto a = ring.from_index(index);
    json entries = json::array();
    for (auto x : a.entries()) entries.push_back(x.index);
    return {{"type", "matrix"}, {"check", std::move(check)}, {"n", ring.dim()},
            {"entries", entries}, {"literal", format_literal(a)}};
}

namespace {

void fail(ClaimReport& r, json witness, std::string reason) {
    r.status = ClaimStatus::fails;
    r.witness = std::move(witness);
    r.reason = std::move(reason);
}

void skip(ClaimReport& r, std::string reason) {
    r.status = ClaimStatus::skipped;
    r.reason = std::move(reason);
}

}  // namespace

std::pair<ClaimReport, ClaimReport> TheoremVerifier::theorem_2_1() {
    const auto& r = t2_.base();
    const auto& an = t2_.analysis();

    Stopwatch fw_clock;
    auto forward = base_report("thm2.1-forward");
    const auto& sc = t2_brute();
    mark_sampled(forward, sc);
    forward.note["antecedent_matrices"] = sc.result.checked;
    if (sc.result.first_failure) {
        skip(forward, "antecedent false: T_2 is not strongly clean");
        forward.note["antecedent_witness"] = matrix_witness(t2_, *sc.result.first_failure, sc.method);
    } else {
        const auto m = check_family(Family::a_sigma_b, Domain::one_plus_radical);
        forward.checked = m.checked;
        std::uint64_t replayed = 0;
        std::optional<json> replay_failure;
        for (auto a : one_plus_radical(r, an)) {
            for (auto b : an.radical) {
                for (auto v : r.elements()) {
                    ++replayed;
                    if (!replay_failure && !t2_replay_holds(t2_, a, b, v, options_.budget)) {
                        replay_failure = triple_witness("replay_t2", a, b, v);
                    }
                }
            }
        }
        forward.note["replayed_matrices"] = replayed;
        if (m.witness) {
            fail(forward, *m.witness, "l_a - r_sigma(b) not onto for some a in 1+J, b in J");
        } else if (replay_failure) {
            fail(forward, *replay_failure, "necessity matrix [[a,-v],[0,b]] does not decompose as the proof requires");
        }
    }
    forward.elapsed_ms = fw_clock.elapsed_ms();

    Stopwatch bw_clock;
    auto backward = base_report("thm2.1-backward");
    const auto hyp = check_family(Family::a_sigma_b, Domain::one_plus_radical);
    backward.note["hypothesis_pairs"] = hyp.checked;
    if (hyp.witness) {
        skip(backward, "hypothesis not satisfied");
        backward.note["hypothesis_witness"] = *hyp.witness;
    } else {
        const auto& cs = t2_constructive();
        const auto& bs = t2_brute();
        mark_sampled(backward, cs);
        backward.checked = cs.result.checked;
        if (cs.result.first_failure) {
            fail(backward, matrix_witness(t2_, *cs.result.first_failure, cs.method),
                 "constructive decomposition failed");
        } else if (bs.result.first_failure) {
            fail(backward, matrix_witness(t2_, *bs.result.first_failure, bs.method),
                 "matrix is not strongly clean");
        }
    }
    backward.elapsed_ms = bw_clock.elapsed_ms();
    return {forward, backward};
}

ClaimReport TheoremVerifier::theorem_3_1() {
    Stopwatch clock;
    auto report = base_report("thm3.1");
    const auto hyp =
        check_families({Family::a_sigma_b, Family::a_sigma2_b, Family::b_sigma_a}, Domain::units);
    report.note["hypothesis_pairs"] = hyp.checked;
    if (hyp.witness) {
        skip(report, "hypothesis not satisfied");
        report.note["hypothesis_witness"] = *hyp.witness;
    } else {
        const auto& cs = t3_constructive();
        mark_sampled(report, cs);
        report.checked = cs.result.checked;
        report.note.update(case5_note_);
        if (cs.result.first_failure) {
            fail(report, matrix_witness(t3_, *cs.result.first_failure, cs.method),
                 "constructive decomposition failed");
        }
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

ClaimReport TheoremVerifier::theorem_4_1() {
    Stopwatch clock;
    auto report = base_report("thm4.1");
    const auto& r = t3_.base();
    const auto& an = t3_.analysis();

    const SweepSummary* antecedent = nullptr;
    if (t3_.size() <= options_.budget) {
        antecedent = &t3_brute();
    } else if (theorem_3_1_hypothesis()) {
        antecedent = &t3_constructive();
    }
    if (!antecedent) {
        skip(report, "T_3 too large to enumerate and the constructive route does not apply");
        report.elapsed_ms = clock.elapsed_ms();
        return report;
    }
    mark_sampled(report, *antecedent);
    report.note["antecedent_method"] = antecedent->method;
    report.note["antecedent_matrices"] = antecedent->result.checked;
    if (antecedent->result.first_failure) {
        skip(report, "antecedent false: T_3 is not strongly clean");
        report.note["antecedent_witness"] =
            matrix_witness(t3_, *antecedent->result.first_failure, antecedent->method);
        report.elapsed_ms = clock.elapsed_ms();
        return report;
    }

    const auto m = check_families({Family::a_sigma_b, Family::a_sigma2_b, Family::b_sigma_a},
                                  Domain::one_plus_radical);
    std::uint64_t replayed = 0;
    std::optional<json> replay_failure;
    for (auto a : one_plus_radical(r, an)) {
        for (auto b : an.radical) {
            for (auto v : r.elements()) {
                ++replayed;
                if (!replay_failure && !t41_replay_holds(t3_, a, b, v, options_.budget)) {
                    replay_failure = triple_witness("replay_t4.1", a, b, v);
                }
            }
        }
    }
    report.checked = m.checked + replayed;
    report.note["replayed_matrices"] = replayed;
    if (m.witness) {
        fail(report, *m.witness, "a surjectivity family fails over (1+J) x J");
    } else if (replay_failure) {
        fail(report, *replay_failure,
             "necessity matrix [[b,0,v],[0,b,0],[0,0,a]] does not decompose as the proof requires");
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

ClaimReport TheoremVerifier::prop_2_6() {
    Stopwatch clock;
    auto report = base_report("prop2.6");
    const auto& vc = t2_very_clean();
    const auto& sc = t2_brute();
    mark_sampled(report, vc);

    const bool very_clean = !vc.result.first_failure;
    const bool strongly_clean = !sc.result.first_failure;
    const bool two_unit = two_is_unit();
    report.checked = vc.result.checked;
    report.note["two_is_unit"] = two_unit;
    report.note["very_clean"] = very_clean;
    report.note["strongly_clean"] = strongly_clean;

    if (very_clean && !(two_unit || strongly_clean)) {
        fail(report, matrix_witness(t2_, *sc.result.first_failure, sc.method),
             "T_2 very clean, 2 not a unit, yet this matrix is not strongly clean");
    } else if (!very_clean && (two_unit || strongly_clean)) {
        fail(report, matrix_witness(t2_, *vc.result.first_failure, vc.method),
             "right side holds but this matrix is not very clean");
    }
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

std::vector<ClaimReport> TheoremVerifier::corollaries() {
    const auto& r = t3_.base();
    const auto& an = t3_.analysis();
    std::vector<ClaimReport> out;

    const bool bleached = is_bleached(r, an);
    const bool nil = an.radical_is_nil();

    // Strong cleanness of T_3 as a predicate: brute force when enumerable,
    // otherwise the constructive sweep when its hypothesis holds.
    auto t3_strongly_clean = [this]() -> const SweepSummary* {
        if (t3_.size() <= options_.budget) return &t3_brute();
        if (theorem_3_1_hypothesis()) return &t3_constructive();
        return nullptr;
    };

    {
        Stopwatch clock;
        auto report = base_report("cor2.2");
        report.note["bleached"] = bleached;
        if (!bleached) {
            skip(report, "ring is not bleached");
        } else {
            const auto m = check_family(Family::a_sigma_b, Domain::one_plus_radical);
            const auto& sc = t2_brute();
            mark_sampled(report, sc);
            report.checked = m.checked + sc.result.checked;
            if (m.witness) {
                fail(report, *m.witness, "bleached ring but l_a - r_sigma(b) not onto");
            } else if (sc.result.first_failure) {
                fail(report, matrix_witness(t2_, *sc.result.first_failure, sc.method),
                     "bleached ring but T_2 not strongly clean");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    {
        Stopwatch clock;
        auto report = base_report("cor2.3");
        report.note["radical_nil"] = nil;
        if (!nil) {
            skip(report, "radical is not nil");
        } else {
            std::uint64_t triples = 0;
            std::optional<json> solver_failure;
            for (auto a : an.units) {
                for (auto b : an.radical) {
                    for (auto v : r.elements()) {
                        ++triples;
                        if (!solver_failure && !solver_holds(r, a, b, v)) {
                            solver_failure = triple_witness("solver", a, b, v);
                        }
                    }
                }
            }
            const auto& sc = t2_brute();
            mark_sampled(report, sc);
            report.checked = triples + sc.result.checked;
            report.note["solver_triples"] = triples;
            report.note["bleached"] = bleached;
            if (solver_failure) {
                fail(report, *solver_failure, "series solution does not solve a x - x b = v");
            } else if (!bleached) {
                const auto m = check_families({Family::a_sigma_b}, Domain::units);
                fail(report, m.witness.value_or(json{{"type", "none"}}), "nil radical but ring not bleached");
            } else if (sc.result.first_failure) {
                fail(report, matrix_witness(t2_, *sc.result.first_failure, sc.method),
                     "nil radical but T_2 not strongly clean");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    {
        Stopwatch clock;
        auto report = base_report("cor3.2");
        report.note["radical_nil"] = nil;
        if (!nil) {
            skip(report, "radical is not nil");
        } else {
            std::uint64_t triples = 0;
            std::optional<json> solver_failure;
            for (auto a : an.units) {
                for (auto b : an.radical) {
                    for (unsigned k = 1; k <= 2; ++k) {
                        const auto sb = t3_.sigma_pow(k, b);
                        for (auto v : r.elements()) {
                            ++triples;
                            if (!solver_failure && !solver_holds(r, a, sb, v)) {
                                solver_failure = triple_witness("solver", a, sb, v);
                            }
                        }
                    }
                }
            }
            const auto& cs = t3_constructive();
            mark_sampled(report, cs);
            report.checked = triples + cs.result.checked;
            report.note["solver_triples"] = triples;
            if (solver_failure) {
                fail(report, *solver_failure, "series solution with sigma^k(b) fails");
            } else if (cs.result.first_failure) {
                fail(report, matrix_witness(t3_, *cs.result.first_failure, cs.method),
                     "nil radical but constructive T_3 decomposition failed");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    {
        Stopwatch clock;
        auto report = base_report("cor3.3");
        const bool preserves = preserves_radical(sigma_, an);
        report.note["bleached"] = bleached;
        report.note["sigma_preserves_radical"] = preserves;
        if (!bleached) {
            skip(report, "ring is not bleached");
        } else if (!preserves) {
            skip(report, "sigma(J) is not contained in J");
        } else {
            const auto m = check_families({Family::a_sigma_b, Family::a_sigma2_b, Family::b_sigma_a},
                                          Domain::units);
            const auto& cs = t3_constructive();
            mark_sampled(report, cs);
            report.checked = m.checked + cs.result.checked;
            if (m.witness) {
                fail(report, *m.witness, "bleached, sigma(J) in J, but a T_3 solver map is not onto");
            } else if (cs.result.first_failure) {
                fail(report, matrix_witness(t3_, *cs.result.first_failure, cs.method),
                     "constructive T_3 decomposition failed");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    const bool not_sum = !an.one_is_sum_of_two_units;

    {
        Stopwatch clock;
        auto report = base_report("cor4.2");
        report.note["one_is_sum_of_two_units"] = !not_sum;
        const SweepSummary* t3sc = not_sum ? t3_strongly_clean() : nullptr;
        if (!not_sum) {
            skip(report, "1 is a sum of two units");
        } else if (!t3sc) {
            skip(report, "T_3 too large to enumerate and the constructive route does not apply");
        } else {
            mark_sampled(report, *t3sc);
            const auto m = check_families({Family::a_sigma_b, Family::a_sigma2_b}, Domain::one_plus_radical);
            const auto m3 = check_family(Family::b_sigma_a, Domain::one_plus_radical);
            const bool left = !t3sc->result.first_failure;
            const bool right = !m.witness;
            const bool units_are_one_plus_radical = an.units == one_plus_radical(r, an);
            report.checked = t3sc->result.checked + m.checked + m3.checked;
            report.note["t3_strongly_clean"] = left;
            report.note["maps_onto"] = right;
            report.note["units_equal_one_plus_radical"] = units_are_one_plus_radical;
            if (left && !right) {
                fail(report, *m.witness, "T_3 strongly clean but a map over (1+J) x J is not onto");
            } else if (!left && right) {
                fail(report, matrix_witness(t3_, *t3sc->result.first_failure, t3sc->method),
                     "maps onto but T_3 not strongly clean");
            } else if (right && m3.witness) {
                fail(report, *m3.witness, "l_b - r_sigma(a) not onto although (2) holds");
            } else if (!units_are_one_plus_radical) {
                fail(report, json{{"type", "units"}}, "U(R) differs from 1+J(R)");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    {
        Stopwatch clock;
        auto report = base_report("cor4.3");
        const bool idem = sigma_idempotent();
        report.note["one_is_sum_of_two_units"] = !not_sum;
        report.note["sigma_squared_is_sigma"] = idem;
        const SweepSummary* t3sc = (not_sum && idem) ? t3_strongly_clean() : nullptr;
        if (!not_sum) {
            skip(report, "1 is a sum of two units");
        } else if (!idem) {
            skip(report, "sigma^2 != sigma");
        } else if (!t3sc) {
            skip(report, "T_3 too large to enumerate and the constructive route does not apply");
        } else {
            const auto& t2sc = t2_brute();
            mark_sampled(report, t2sc);
            mark_sampled(report, *t3sc);
            const auto m = check_family(Family::a_sigma_b, Domain::one_plus_radical);
            const bool c1 = !t2sc.result.first_failure;
            const bool c2 = !t3sc->result.first_failure;
            const bool c3 = !m.witness;
            report.checked = t2sc.result.checked + t3sc->result.checked + m.checked;
            report.note["t2_strongly_clean"] = c1;
            report.note["t3_strongly_clean"] = c2;
            report.note["maps_onto"] = c3;
            if (!(c1 == c2 && c2 == c3)) {
                json witness = m.witness.value_or(json{});
                if (!c1) witness = matrix_witness(t2_, *t2sc.result.first_failure, t2sc.method);
                else if (!c2) witness = matrix_witness(t3_, *t3sc->result.first_failure, t3sc->method);
                fail(report, witness, "the three equivalent conditions disagree");
            }
        }
        report.elapsed_ms = clock.elapsed_ms();
        out.push_back(std::move(report));
    }

    return out;
}

std::vector<ClaimReport> TheoremVerifier::run(Suite suite) {
    std::vector<ClaimReport> out;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::thm2_1) {
        auto [fw, bw] = theorem_2_1();
        out.push_back(std::move(fw));
        out.push_back(std::move(bw));
    }
    if (all || suite == Suite::prop2_6) out.push_back(prop_2_6());
    if (all || suite == Suite::thm3_1) out.push_back(theorem_3_1());
    if (all || suite == Suite::thm4_1) out.push_back(theorem_4_1());
    if (all || suite == Suite::corollaries) {
        for (auto& r : corollaries()) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const ClaimReport& x, const ClaimReport& y) { return x.claim_id < y.claim_id; });
    return out;
}

std::pair<ClaimReport, ClaimReport> verify_theorem_2_1(const Endomorphism& sigma,
                                                        const VerifyOptions& options) {
    return TheoremVerifier(sigma, options).theorem_2_1();
}

ClaimReport verify_theorem_3_1(const Endomorphism& sigma, const VerifyOptions& options) {
    return TheoremVerifier(sigma, options).theorem_3_1();
}

ClaimReport verify_theorem_4_1(const Endomorphism& sigma, const VerifyOptions& options) {
    return TheoremVerifier(sigma, options).theorem_4_1();
}

ClaimReport verify_prop_2_6(const Endomorphism& sigma, const VerifyOptions& options) {
    return TheoremVerifier(sigma, options).prop_2_6();
}

std::vector<ClaimReport> verify_corollaries(const Endomorphism& sigma, const VerifyOptions& options) {
    return TheoremVerifier(sigma, options).corollaries();
}

// ---------------------------------------------------------------------------
// Witness replay

namespace {

bool recheck_impl(const json& witness, const Endomorphism& sigma, std::uint64_t budget) {
    const auto& r = sigma.ring();
    const auto type = witness.at("type").get<std::string>();
    auto elem = [&](const char* key) {
        const auto idx = witness.at(key).get<std::uint32_t>();
        if (idx >= r.order()) throw SpecError(std::string("witness field '") + key + "' out of range");
        return Element{idx};
    };

    if (type == "map") {
        return !lr_map(r, elem("left"), elem("right")).is_surjective();
    }
    if (type == "solver") {
        // Only a unit a and radical b are inside the solver's contract.
        const auto an = analyze(r);
        const auto a = elem("a"), b = elem("b");
        if (!an.is_unit(a) || !an.in_radical(b)) return false;
        return !solver_holds(r, a, b, elem("v"));
    }
    if (type == "replay_t2") {
        return !t2_replay_holds(TriRing(sigma, 2), elem("a"), elem("b"), elem("v"), budget);
    }
    if (type == "replay_t4.1") {
        return !t41_replay_holds(TriRing(sigma, 3), elem("a"), elem("b"), elem("v"), budget);
    }
    if (type == "matrix") {
        const auto n = witness.at("n").get<std::size_t>();
        const TriRing ring(sigma, n);
        TriMatrix a(n);
        const auto& entries = witness.at("entries");
        if (entries.size() != a.entries().size()) throw SpecError("witness matrix has wrong entry count");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            a.entries()[k] = Element{entries[k].get<std::uint32_t>()};
        }
        ring.validate(a);
        const auto check = witness.at("check").get<std::string>();
        try {
            if (check == "brute_force") return !brute_force_strongly_clean(ring, a, budget);
            if (check == "very_clean") return !is_very_clean(ring, a, budget);
            if (check == "decompose_t2") return !decompose_t2(ring, a);
            if (check == "decompose_t3") return !decompose_t3(ring, a);
        } catch (const VerificationError&) {
            return true;
        }
        throw SpecError("unknown witness check '" + check + "'");
    }
    throw SpecError("unknown witness type '" + type + "'");
}

}  // namespace

bool recheck_witness(const json& witness, const Endomorphism& sigma, std::uint64_t budget) {
    try {
        return recheck_impl(witness, sigma, budget);
    } catch (const json::exception& e) {
        throw SpecError(std::string("malformed witness: ") + e.what());
    }
}

}  // namespace sclean
