#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sclean/operators.hpp"
#include "sclean/ring.hpp"

namespace sclean {

inline constexpr std::size_t kMaxDimension = 8;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// An upper triangular n x n matrix over a finite ring. Entries are stored
/// row-major over the upper triangle (a11, a12, ..., a1n, a22, ..., ann);
/// entries below the diagonal are zero and not stored. Indices are 0-based.
class TriMatrix {
public:
    static constexpr std::size_t kMaxEntries = kMaxDimension * (kMaxDimension + 1) / 2;

    TriMatrix() = default;
    explicit TriMatrix(std::size_t n);

    static constexpr std::size_t entry_count(std::size_t n) { return n * (n + 1) / 2; }
    static constexpr std::size_t offset(std::size_t n, std::size_t i, std::size_t j) {
        return i * n - i * (i - 1) / 2 + (j - i);
    }

    std::size_t dim() const { return n_; }

    Element operator()(std::size_t i, std::size_t j) const {
        return i > j ? Element{} : entries_[offset(n_, i, j)];
    }
    Element& at(std::size_t i, std::size_t j) { return entries_[offset(n_, i, j)]; }

    std::span<const Element> entries() const { return {entries_.data(), entry_count(n_)}; }
    std::span<Element> entries() { return {entries_.data(), entry_count(n_)}; }

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::array<Element, kMaxEntries> entries_{};
};

/// The ring T_n(R, sigma): upper triangular matrices over R with the product
///   (AB)_ij = sum_{k=i..j} a_ik sigma^(k-i)(b_kj).
///
/// Holds the per-(R, sigma, n) data that the decomposers and sweeps reuse:
/// the ring analysis, tables for sigma^k, a least-preimage table for small
/// rings, and the lazily enumerated idempotents. Copies share the caches.
class TriRing {
public:
    TriRing(Endomorphism sigma, std::size_t n);
    TriRing(Endomorphism sigma, std::size_t n, std::shared_ptr<const RingAnalysis> analysis);

    const FiniteRing& base() const { return sigma_.ring(); }
    const Endomorphism& sigma() const { return sigma_; }
    const RingAnalysis& analysis() const { return *analysis_; }
    const std::shared_ptr<const RingAnalysis>& analysis_ptr() const { return analysis_; }
    std::size_t dim() const { return n_; }

    /// Number of matrices, |R|^(n(n+1)/2), saturating at UINT64_MAX.
    std::uint64_t size() const { return size_; }

    Element sigma_pow(std::size_t k, Element x) const;

    TriMatrix zero() const { return TriMatrix(n_); }
    TriMatrix identity() const;

    TriMatrix mul(const TriMatrix& a, const TriMatrix& b) const;
    TriMatrix add(const TriMatrix& a, const TriMatrix& b) const;
    TriMatrix sub(const TriMatrix& a, const TriMatrix& b) const;
    bool commute(const TriMatrix& a, const TriMatrix& b) const { return mul(a, b) == mul(b, a); }

    /// All diagonal entries are units of R. For triangular matrices this is
    /// equivalent to invertibility over any ring, local or not.
    bool has_unit_diagonal(const TriMatrix& a) const;

    /// Position in the enumeration order: entries read as base-|R| digits,
    /// a11 most significant.
    std::uint64_t index_of(const TriMatrix& a) const;
    TriMatrix from_index(std::uint64_t index) const;

    /// Least-index x with a*x - x*b = v.
    std::optional<Element> solve(Element a, Element b, Element v) const;

    /// Every idempotent of T_n(R, sigma) in enumeration order. Computed on
    /// first use and cached. Throws BudgetExceeded if size() > budget.
    const std::vector<TriMatrix>& idempotents(std::uint64_t budget = kDefaultBudget) const;

    /// Least-position idempotent E with A - E invertible and EA = AE, if any.
    /// Positions refer to idempotents().
    std::optional<std::size_t> first_clean_idempotent(const TriMatrix& a, bool plus,
                                                      std::uint64_t budget) const;

    /// "T_3(zmod:4, id)".
    std::string describe() const;

    /// Throws ShapeError unless `a` has this ring's dimension and in-range entries.
    void validate(const TriMatrix& a) const;

private:
    struct IdempotentCache;

    Endomorphism sigma_;
    std::size_t n_;
    std::shared_ptr<const RingAnalysis> analysis_;
    std::uint64_t size_;
    std::vector<std::vector<Element>> sigma_powers_;
    std::shared_ptr<const PreimageTable> preimages_;
    std::shared_ptr<IdempotentCache> idempotents_;
};

/// Validated skew product.
TriMatrix mat_mul(const TriRing& ring, const TriMatrix& a, const TriMatrix& b);

/// A is a unit of T_n(R, sigma). R must be local.
bool is_unit_tri(const TriRing& ring, const TriMatrix& a);

/// Two-sided inverse by back-substitution through the skew product.
std::optional<TriMatrix> invert_tri(const TriRing& ring, const TriMatrix& a);

enum class DecompositionKind { strongly_clean, very_clean_minus, very_clean_plus };

std::string_view to_string(DecompositionKind kind);

/// A = E + U (strongly clean, very clean minus) or U = A + E (very clean
/// plus), with E idempotent, EU = UE and U a unit.
struct CleanDecomposition {
    TriMatrix e;
    TriMatrix u;
    DecompositionKind kind = DecompositionKind::strongly_clean;
    /// Which branch of the constructive proof produced it; 0 for searches.
    int proof_case = 0;
};

struct DecompositionChecks {
    bool idempotent = false;
    bool commutes = false;
    bool sums = false;
    bool unit = false;

    bool all() const { return idempotent && commutes && sums && unit; }
};

DecompositionChecks check_decomposition(const TriRing& ring, const TriMatrix& a,
                                        const CleanDecomposition& d);

/// Constructive decomposition in T_2(R, sigma). Branches (proof_case):
///   1  a, b units                      E = 0
///   2  a, b radical                    E = I
///   3  a unit, b radical, a-1 unit     E = I
///   4  a unit, b radical, a-1 radical  E = [[0, x], [0, 1]],  ax - x sigma(b) = -v
///   5  a radical, b unit, b-1 unit     E = I
///   6  a radical, b unit, b-1 radical  E = [[1, x], [0, 0]],  ax - x sigma(b) = v
/// Absent only when the needed equation has no solution.
std::optional<CleanDecomposition> decompose_t2(const TriRing& ring, const TriMatrix& a);

/// Which of the eight unit/radical patterns of (a11, a22, a33) A falls in:
///   1 JJJ  2 UJJ  3 JUJ  4 JJU  5 JUU  6 UJU  7 UUJ  8 UUU
int t3_case(const TriRing& ring, const TriMatrix& a);

/// Right-hand side used for e13 in case 5. The corrected form
/// a13 + e12 sigma(a23) follows from (EA)_13 = (AE)_13; the printed form
/// a13 + e12 sigma(e23) reduces to a13 because E has no (2,3) entry.
enum class Case5Rhs { corrected, printed };

struct T3Candidate {
    int proof_case = 0;
    /// Absent when one of the case's equations has no solution.
    std::optional<TriMatrix> e;
};

/// The case construction without the post-check.
T3Candidate construct_t3(const TriRing& ring, const TriMatrix& a,
                         Case5Rhs case5 = Case5Rhs::corrected);

/// Constructive decomposition in T_3(R, sigma), re-verified before return.
/// Throws VerificationError if a constructed E fails the checks.
std::optional<CleanDecomposition> decompose_t3(const TriRing& ring, const TriMatrix& a);

/// First idempotent E in enumeration order with A - E a unit and EA = AE.
std::optional<CleanDecomposition> brute_force_strongly_clean(const TriRing& ring,
                                                             const TriMatrix& a,
                                                             std::uint64_t budget = kDefaultBudget);

/// First commuting idempotent with A - E a unit (minus witness); failing
/// that, the first with A + E a unit (plus witness).
std::optional<CleanDecomposition> is_very_clean(const TriRing& ring, const TriMatrix& a,
                                                std::uint64_t budget = kDefaultBudget);

/// Parses "[a11,a12,...;a22,...;...;ann]" (element indices, one row of the
/// upper triangle per ';').
TriMatrix parse_matrix_literal(std::string_view text, std::size_t n, const FiniteRing& ring);

/// Compact literal form, the inverse of parse_matrix_literal.
std::string format_literal(const TriMatrix& a);

/// Full square form with zeros below the diagonal: "[[3,1],[0,2]]".
std::string format_matrix(const TriMatrix& a);

}  // namespace sclean
