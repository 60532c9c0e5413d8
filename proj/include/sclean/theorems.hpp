#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sclean/ring.hpp"
#include "sclean/skewtri.hpp"
#include "sclean/sweep.hpp"

namespace sclean {

enum class ClaimStatus { holds, fails, skipped };

std::string_view to_string(ClaimStatus status);
ClaimStatus parse_status(std::string_view text);

/// Outcome of checking one claim on one (R, sigma).
///
/// A `fails` report always carries a witness that recheck_witness can
/// replay on its own; a `skipped` report always carries a reason.
struct ClaimReport {
    std::string claim_id;
    std::string ring;
    std::string sigma;
    ClaimStatus status = ClaimStatus::holds;
    std::uint64_t checked = 0;
    std::optional<nlohmann::json> witness;
    std::string reason;
    double elapsed_ms = 0.0;
    /// Set when any sweep behind the claim was sampled rather than exhaustive.
    std::optional<std::uint64_t> seed;
    /// Side observations (sampling, erratum checks, sub-counts); null if none.
    nlohmann::json note;
};

struct VerifyOptions {
    /// Largest T_n whose idempotents may be enumerated.
    std::uint64_t budget = kDefaultBudget;
    /// Sweeps over more matrices than this are sampled.
    std::uint64_t exhaustive_limit = std::uint64_t{1} << 20;
    std::uint64_t sample_size = 10'000;
    std::uint64_t seed = 20130917;
    unsigned threads = 0;
};

enum class Suite { thm2_1, thm3_1, thm4_1, prop2_6, corollaries, all };

/// "2.1", "3.1", "4.1", "2.6", "corollaries", "all".
Suite parse_suite(std::string_view text);

/// Runs the claim checks for one (R, sigma). Sweep results are memoized so
/// a full suite visits each T_n once per check kind. R must be local.
class TheoremVerifier {
public:
    explicit TheoremVerifier(Endomorphism sigma, VerifyOptions options = {});

    /// (1) => (2) and (2) => (1) of the T_2 characterization.
    std::pair<ClaimReport, ClaimReport> theorem_2_1();
    /// Surjectivity hypothesis over U x J implies T_3 strongly clean.
    ClaimReport theorem_3_1();
    /// T_3 strongly clean implies the three surjectivity families over (1+J) x J.
    ClaimReport theorem_4_1();
    /// T_2 very clean <=> (2 a unit or T_2 strongly clean).
    ClaimReport prop_2_6();
    /// cor2.2, cor2.3, cor3.2, cor3.3, cor4.2, cor4.3.
    std::vector<ClaimReport> corollaries();

    /// Reports for the suite, sorted by claim id.
    std::vector<ClaimReport> run(Suite suite);

    const TriRing& t2() const { return t2_; }
    const TriRing& t3() const { return t3_; }
    const VerifyOptions& options() const { return options_; }

    // Hypothesis predicates.
    bool one_plus_radical_condition();  // l_a - r_sigma(b) onto, a in 1+J, b in J
    bool theorem_3_1_hypothesis();      // three families over U x J
    bool two_is_unit() const;
    bool sigma_idempotent() const;      // sigma^2 = sigma

private:
    struct SweepSummary {
        SweepResult result;
        bool sampled = false;
        std::string method;
    };

    struct MapCheck {
        std::uint64_t checked = 0;
        std::optional<nlohmann::json> witness;
    };

    enum class Domain { one_plus_radical, units };
    enum class Family { a_sigma_b, a_sigma2_b, b_sigma_a, b_sigma2_a };

    MapCheck check_family(Family family, Domain domain) const;
    MapCheck check_families(std::initializer_list<Family> families, Domain domain) const;

    const SweepSummary& t2_brute();
    const SweepSummary& t2_constructive();
    const SweepSummary& t2_very_clean();
    const SweepSummary& t3_brute();
    const SweepSummary& t3_constructive();

    SweepSummary sweep(const TriRing& ring, const std::function<bool(const TriMatrix&)>& passes,
                       std::string method) const;

    ClaimReport base_report(std::string claim_id) const;
    void mark_sampled(ClaimReport& report, const SweepSummary& s) const;
    nlohmann::json matrix_witness(const TriRing& ring, std::uint64_t index, std::string check) const;

    Endomorphism sigma_;
    VerifyOptions options_;
    TriRing t2_;
    TriRing t3_;
    std::optional<SweepSummary> t2_brute_;
    std::optional<SweepSummary> t2_constructive_;
    std::optional<SweepSummary> t2_very_clean_;
    std::optional<SweepSummary> t3_brute_;
    std::optional<SweepSummary> t3_constructive_;
    nlohmann::json case5_note_;
};

std::pair<ClaimReport, ClaimReport> verify_theorem_2_1(const Endomorphism& sigma,
                                                        const VerifyOptions& options = {});
ClaimReport verify_theorem_3_1(const Endomorphism& sigma, const VerifyOptions& options = {});
ClaimReport verify_theorem_4_1(const Endomorphism& sigma, const VerifyOptions& options = {});
ClaimReport verify_prop_2_6(const Endomorphism& sigma, const VerifyOptions& options = {});
std::vector<ClaimReport> verify_corollaries(const Endomorphism& sigma,
                                            const VerifyOptions& options = {});

/// Stable record: claim_id, ring, sigma, status, checked, witness,
/// elapsed_ms, seed, plus reason and note. elapsed_ms is null unless
/// `with_timing`, so that identical runs serialize identically.
nlohmann::json to_json(const ClaimReport& report, bool with_timing = false);
ClaimReport report_from_json(const nlohmann::json& j);

/// Replays a failure witness in isolation. Returns true iff it is a genuine
/// counterexample to the claim it was reported against.
bool recheck_witness(const nlohmann::json& witness, const Endomorphism& sigma,
                     std::uint64_t budget = kDefaultBudget);

}  // namespace sclean
