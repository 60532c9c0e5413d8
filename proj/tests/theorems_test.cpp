#include <gtest/gtest.h>

#include "sclean/errors.hpp"
#include "sclean/theorems.hpp"

using namespace sclean;
using nlohmann::json;

namespace {

Endomorphism sig(const std::string& ring, const std::string& sigma) {
    return endomorphism_from_spec(ring_from_spec(ring), sigma);
}

const ClaimReport& find(const std::vector<ClaimReport>& reports, const std::string& id) {
    for (const auto& r : reports)
        if (r.claim_id == id) return r;
    throw std::runtime_error("no report " + id);
}

json dump_all(const std::vector<ClaimReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

void expect_well_formed(const std::vector<ClaimReport>& reports) {
    for (const auto& r : reports) {
        if (r.status == ClaimStatus::fails) {
            EXPECT_TRUE(r.witness.has_value()) << r.claim_id;
        }
        if (r.status == ClaimStatus::skipped) {
            EXPECT_FALSE(r.reason.empty()) << r.claim_id;
        }
    }
}

}  // namespace

TEST(Theorem21, Zmod4Counts) {
    const auto [fw, bw] = verify_theorem_2_1(sig("zmod:4", "id"));
    EXPECT_EQ(fw.claim_id, "thm2.1-forward");
    EXPECT_EQ(fw.status, ClaimStatus::holds);
    EXPECT_EQ(fw.checked, 4u);
    EXPECT_EQ(fw.note["replayed_matrices"], 16);
    EXPECT_EQ(bw.status, ClaimStatus::holds);
    EXPECT_EQ(bw.checked, 64u);
    EXPECT_FALSE(fw.seed.has_value());
}

TEST(Theorem21, OtherRings) {
    for (const auto& [ring, sigma, pairs, matrices] :
         std::vector<std::tuple<std::string, std::string, unsigned, unsigned>>{
             {"dual:zmod:4", "negx", 64, 4096},
             {"zmod:2", "id", 1, 8},
             {"zmod:8", "id", 16, 512},
             {"quot:zmod:3;x^2+x+1", "id", 9, 729}}) {
        const auto [fw, bw] = verify_theorem_2_1(sig(ring, sigma));
        EXPECT_EQ(fw.status, ClaimStatus::holds) << ring;
        EXPECT_EQ(bw.status, ClaimStatus::holds) << ring;
        EXPECT_EQ(fw.checked, pairs) << ring;
        EXPECT_EQ(bw.checked, matrices) << ring;
    }
}

TEST(Theorem31, Zmod4Exhaustive) {
    const auto r = verify_theorem_3_1(sig("zmod:4", "id"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    EXPECT_EQ(r.checked, 4096u);
    EXPECT_FALSE(r.seed.has_value());
    EXPECT_EQ(r.note["case5_matrices"], 512);
    EXPECT_GT(r.note["case5_printed_rhs_failures"].get<int>(), 0);
    EXPECT_EQ(r.note["case5_printed_rhs_verifies"], false);
}

TEST(Theorem31, GroupRingIsSampled) {
    const auto r = verify_theorem_3_1(sig("groupring:zmod:4;C2", "aug"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    EXPECT_EQ(r.checked, 10'000u);
    ASSERT_TRUE(r.seed.has_value());
    EXPECT_EQ(*r.seed, VerifyOptions{}.seed);
    EXPECT_EQ(r.note["sampled"], true);
}

TEST(Theorem31, QuotientExhaustive) {
    const auto r = verify_theorem_3_1(sig("quot:zmod:3;x^2+x+1", "id"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    EXPECT_EQ(r.checked, 531441u);
    EXPECT_FALSE(r.seed.has_value());
}

TEST(Theorem41, Zmod4) {
    const auto r = verify_theorem_4_1(sig("zmod:4", "id"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    // 3 families x 2 x 2 pairs + 2 x 2 x 4 replayed matrices.
    EXPECT_EQ(r.checked, 12u + 16u);
    EXPECT_EQ(r.note["antecedent_method"], "brute_force");
}

TEST(Theorem41, FieldHasOnlyIdentityChecks) {
    const auto r = verify_theorem_4_1(sig("zmod:5", "id"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    // a = 1, b = 0: three maps and five replays.
    EXPECT_EQ(r.checked, 3u + 5u);
}

TEST(Theorem41, SmallBudgetFallsBackToConstruction) {
    VerifyOptions o;
    o.budget = 100;
    const auto r = verify_theorem_4_1(sig("zmod:4", "id"), o);
    EXPECT_EQ(r.status, ClaimStatus::holds);
    EXPECT_EQ(r.note["antecedent_method"], "decompose_t3");
}

TEST(Theorem41, GroupRing) {
    const auto r = verify_theorem_4_1(sig("groupring:zmod:4;C2", "aug"));
    EXPECT_EQ(r.status, ClaimStatus::holds);
    EXPECT_TRUE(r.seed.has_value());
}

TEST(Prop26, Branches) {
    const auto z5 = verify_prop_2_6(sig("zmod:5", "id"));
    EXPECT_EQ(z5.status, ClaimStatus::holds);
    EXPECT_EQ(z5.checked, 125u);
    EXPECT_EQ(z5.note["two_is_unit"], true);

    const auto z4 = verify_prop_2_6(sig("zmod:4", "id"));
    EXPECT_EQ(z4.status, ClaimStatus::holds);
    EXPECT_EQ(z4.checked, 64u);
    EXPECT_EQ(z4.note["two_is_unit"], false);
    EXPECT_EQ(z4.note["strongly_clean"], true);

    const auto z2 = verify_prop_2_6(sig("zmod:2", "id"));
    EXPECT_EQ(z2.status, ClaimStatus::holds);
    EXPECT_EQ(z2.checked, 8u);
    EXPECT_EQ(z2.note["very_clean"], true);
}

TEST(Corollaries, Zmod4) {
    const auto reports = verify_corollaries(sig("zmod:4", "id"));
    ASSERT_EQ(reports.size(), 6u);
    for (const auto& r : reports) EXPECT_EQ(r.status, ClaimStatus::holds) << r.claim_id;
    // 2 units x 2 radical x 4 targets.
    EXPECT_EQ(find(reports, "cor2.3").note["solver_triples"], 16);
}

TEST(Corollaries, Zmod5SkipsUnitSumClaims) {
    const auto reports = verify_corollaries(sig("zmod:5", "id"));
    const auto& c42 = find(reports, "cor4.2");
    EXPECT_EQ(c42.status, ClaimStatus::skipped);
    EXPECT_NE(c42.reason.find("sum of two units"), std::string::npos);
    EXPECT_EQ(find(reports, "cor4.3").status, ClaimStatus::skipped);
    expect_well_formed(reports);
}

TEST(Corollaries, GroupRingExample) {
    const auto reports = verify_corollaries(sig("groupring:zmod:4;C2", "aug"));
    const auto& c43 = find(reports, "cor4.3");
    EXPECT_EQ(c43.status, ClaimStatus::holds);
    EXPECT_EQ(c43.note["sigma_squared_is_sigma"], true);
    EXPECT_EQ(c43.note["t2_strongly_clean"], true);
    EXPECT_EQ(c43.note["t3_strongly_clean"], true);
    EXPECT_EQ(c43.note["maps_onto"], true);
    EXPECT_EQ(find(reports, "cor4.2").note["units_equal_one_plus_radical"], true);
}

TEST(Corollaries, DualRingSkipsSigmaIdempotentClaim) {
    const auto reports = verify_corollaries(sig("dual:zmod:4", "negx"));
    const auto& c43 = find(reports, "cor4.3");
    EXPECT_EQ(c43.status, ClaimStatus::skipped);
    EXPECT_NE(c43.reason.find("sigma^2"), std::string::npos);
}

TEST(Verifier, Predicates) {
    TheoremVerifier gr(sig("groupring:zmod:4;C2", "aug"));
    EXPECT_TRUE(gr.sigma_idempotent());
    EXPECT_FALSE(gr.two_is_unit());
    EXPECT_TRUE(gr.one_plus_radical_condition());
    EXPECT_TRUE(gr.theorem_3_1_hypothesis());

    TheoremVerifier dual(sig("dual:zmod:4", "negx"));
    EXPECT_FALSE(dual.sigma_idempotent());

    TheoremVerifier z5(sig("zmod:5", "id"));
    EXPECT_TRUE(z5.two_is_unit());
}

TEST(Verifier, RejectsNonLocalRing) {
    EXPECT_THROW(TheoremVerifier(sig("zmod:6", "id")), NotLocalError);
}

TEST(Verifier, FullSuiteSortedAndHolding) {
    for (const auto& [ring, sigma] : std::vector<std::pair<std::string, std::string>>{
             {"zmod:2", "id"}, {"zmod:4", "id"}, {"zmod:5", "id"}, {"zmod:8", "id"},
             {"zmod:9", "id"}, {"dual:zmod:4", "negx"}, {"dual:zmod:3", "negx"},
             {"groupring:zmod:4;C2", "aug"}, {"groupring:zmod:2;C2", "aug"},
             {"quot:zmod:2;x^2+x+1", "id"}}) {
        TheoremVerifier v(sig(ring, sigma));
        const auto reports = v.run(Suite::all);
        ASSERT_EQ(reports.size(), 11u);
        for (std::size_t i = 1; i < reports.size(); ++i)
            EXPECT_LT(reports[i - 1].claim_id, reports[i].claim_id);
        for (const auto& r : reports) EXPECT_NE(r.status, ClaimStatus::fails) << ring << " " << r.claim_id;
        expect_well_formed(reports);
    }
}

TEST(Verifier, SuiteSelection) {
    TheoremVerifier v(sig("zmod:4", "id"));
    EXPECT_EQ(v.run(Suite::thm2_1).size(), 2u);
    EXPECT_EQ(v.run(Suite::prop2_6).size(), 1u);
    EXPECT_EQ(v.run(Suite::corollaries).size(), 6u);
    EXPECT_EQ(parse_suite("4.1"), Suite::thm4_1);
    EXPECT_THROW(parse_suite("5.1"), SpecError);
}

TEST(Verifier, DeterministicAcrossRunsAndThreads) {
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions many;
    many.threads = 4;
    const auto s = sig("groupring:zmod:4;C2", "aug");
    const auto a = dump_all(TheoremVerifier(s, one).run(Suite::all));
    const auto b = dump_all(TheoremVerifier(s, many).run(Suite::all));
    const auto c = dump_all(TheoremVerifier(s, many).run(Suite::all));
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(b.dump(), c.dump());
}

TEST(Verifier, SeedChangesSample) {
    VerifyOptions o;
    o.seed = 1;
    const auto r = verify_theorem_3_1(sig("groupring:zmod:4;C2", "aug"), o);
    EXPECT_EQ(r.seed, 1u);
    EXPECT_EQ(r.status, ClaimStatus::holds);
}

// ---------------------------------------------------------------------------

TEST(Report, JsonRoundTrip) {
    TheoremVerifier v(sig("zmod:5", "id"));
    for (const auto& r : v.run(Suite::all)) {
        const auto j = to_json(r);
        EXPECT_TRUE(j["elapsed_ms"].is_null());
        for (const char* key : {"claim_id", "ring", "sigma", "status", "checked", "witness", "elapsed_ms", "seed"})
            EXPECT_TRUE(j.contains(key)) << key;
        const auto back = report_from_json(j);
        EXPECT_EQ(to_json(back), j);
        EXPECT_EQ(back.status, r.status);
    }
}

TEST(Report, TimingIsOptIn) {
    ClaimReport r;
    r.claim_id = "x";
    r.elapsed_ms = 12.5;
    EXPECT_TRUE(to_json(r)["elapsed_ms"].is_null());
    EXPECT_EQ(to_json(r, true)["elapsed_ms"], 12.5);
}

TEST(Report, MalformedJson) {
    EXPECT_THROW(report_from_json(json{{"claim_id", "x"}}), SpecError);
    EXPECT_THROW(report_from_json(json{{"claim_id", "x"}, {"ring", "r"}, {"sigma", "s"},
                                       {"status", "maybe"}, {"checked", 0}}),
                 SpecError);
}

TEST(Recheck, GenuineWitnessesReplay) {
    const auto z4 = sig("zmod:4", "id");
    // l_2 - r_0 is doubling on Z_4.
    EXPECT_TRUE(recheck_witness(json{{"type", "map"}, {"left", 2}, {"right", 0}}, z4));
    EXPECT_FALSE(recheck_witness(json{{"type", "map"}, {"left", 1}, {"right", 2}}, z4));

    // Every matrix of T_2(Z_4) is strongly clean, so no matrix witness is genuine.
    EXPECT_FALSE(recheck_witness(
        json{{"type", "matrix"}, {"check", "brute_force"}, {"n", 2}, {"entries", {0, 1, 1}}}, z4));
    EXPECT_FALSE(recheck_witness(
        json{{"type", "matrix"}, {"check", "decompose_t3"}, {"n", 3}, {"entries", {0, 1, 0, 1, 1, 1}}}, z4));
    EXPECT_FALSE(recheck_witness(json{{"type", "solver"}, {"a", 3}, {"b", 2}, {"v", 1}}, z4));
    // Outside the solver's contract: a = 2 is not a unit.
    EXPECT_FALSE(recheck_witness(json{{"type", "solver"}, {"a", 2}, {"b", 2}, {"v", 1}}, z4));
    EXPECT_FALSE(recheck_witness(json{{"type", "replay_t2"}, {"a", 1}, {"b", 2}, {"v", 3}}, z4));
    EXPECT_FALSE(recheck_witness(json{{"type", "replay_t4.1"}, {"a", 3}, {"b", 2}, {"v", 1}}, z4));
}

TEST(Recheck, MatrixWitnessOverNonLocalRing) {
    // Over Z_6 the constructive route is refused, but brute force still
    // decides strong cleanness; T_2(Z_6) is strongly clean.
    const auto z6 = sig("zmod:6", "id");
    EXPECT_FALSE(recheck_witness(
        json{{"type", "matrix"}, {"check", "brute_force"}, {"n", 2}, {"entries", {2, 5, 3}}}, z6));
}

TEST(Recheck, MalformedWitness) {
    const auto z4 = sig("zmod:4", "id");
    EXPECT_THROW(recheck_witness(json{{"type", "mystery"}}, z4), SpecError);
    EXPECT_THROW(recheck_witness(json{{"type", "map"}, {"left", 9}, {"right", 0}}, z4), SpecError);
    EXPECT_THROW(recheck_witness(json{{"type", "matrix"}, {"check", "brute_force"}, {"n", 2},
                                      {"entries", {0, 1}}}, z4),
                 SpecError);
}
