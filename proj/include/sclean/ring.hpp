#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sclean {

/// An element of a FiniteRing, identified by its index in the ring's
/// canonical enumeration. Index 0 is always the additive identity.
struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

/// How a ring was built. Builtin endomorphisms (negx, aug) and the
/// human-readable element names depend on it.
struct Construction {
    enum class Kind { zmod, dual, group_ring_c2, quotient, table };

    Kind kind = Kind::table;
    std::uint32_t modulus = 0;  // n of Z/nZ for the generated constructions
    std::uint32_t degree = 0;   // quotient rings: degree of the monic modulus
};

/// A finite unital ring held as Cayley tables.
///
/// Element encodings for the generated constructions:
///   zmod:n              residue r            -> r
///   dual:zmod:n         (a, b) = a + b*eps   -> a*n + b
///   groupring:zmod:n;C2 a + b*g              -> a*n + b
///   quot:zmod:n;f       c0 + c1 x + ...      -> c0 c1 ... read as base-n digits
///
/// The constructor checks the ring axioms: exhaustively for order <= 256,
/// on 10^4 fixed-seed random triples above that.
class FiniteRing {
public:
    static constexpr std::size_t kExhaustiveAxiomOrder = 256;
    static constexpr std::size_t kSampledAxiomTriples = 10'000;

    FiniteRing(std::size_t order, std::vector<std::uint32_t> add_table,
               std::vector<std::uint32_t> mul_table, Element one, std::string label,
               Construction construction = {});

    std::size_t order() const { return order_; }
    Element zero() const { return Element{0}; }
    Element one() const { return one_; }
    const std::string& label() const { return label_; }
    const Construction& construction() const { return construction_; }

    Element add(Element x, Element y) const { return Element{add_[x.index * order_ + y.index]}; }
    Element mul(Element x, Element y) const { return Element{mul_[x.index * order_ + y.index]}; }
    Element neg(Element x) const { return Element{neg_[x.index]}; }
    Element sub(Element x, Element y) const { return add(x, neg(y)); }

    /// k * 1, i.e. the image of the integer k.
    Element from_integer(long long k) const;

    bool contains(Element x) const { return x.index < order_; }

    /// All elements in index order.
    std::vector<Element> elements() const;

    /// Readable form such as "3", "(2,1)", "1+3g", "2+x".
    std::string element_name(Element x) const;

private:
    void build_negation();
    void check_axioms() const;

    std::size_t order_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> neg_;
    Element one_;
    std::string label_;
    Construction construction_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Builds a ring from its spec string:
///   zmod:<n> | dual:zmod:<n> | groupring:zmod:<n>;C2 |
///   quot:zmod:<n>;<monic polynomial in x> | table:<path>
/// Throws SpecError on malformed input and AxiomError on invalid tables.
RingPtr ring_from_spec(std::string_view spec);

RingPtr make_zmod(std::uint32_t n);
RingPtr make_dual(std::uint32_t n);
RingPtr make_group_ring_c2(std::uint32_t n);
/// Z_n[x]/(f). `coefficients` lists f from the constant term upward and
/// must be monic of degree >= 1.
RingPtr make_quotient(std::uint32_t n, const std::vector<std::uint32_t>& coefficients,
                      std::string label);

/// Parses a text table file: the order, then order rows of the addition
/// table, order rows of the multiplication table, then the index of 1.
RingPtr ring_from_table_file(const std::string& path);

/// Unit group, Jacobson radical and related structure of a ring.
struct RingAnalysis {
    std::vector<Element> units;
    std::vector<Element> radical;
    std::vector<Element> idempotents;
    bool is_local = false;
    /// Least k with J^k = 0. Reported as 1 when J = 0.
    std::optional<unsigned> radical_nilpotency_index;
    bool one_is_sum_of_two_units = false;

    std::vector<bool> unit_mask;
    std::vector<bool> radical_mask;
    /// inverse[x] is the two-sided inverse of x; only meaningful for units.
    std::vector<Element> inverse;

    bool is_unit(Element x) const { return unit_mask[x.index]; }
    bool in_radical(Element x) const { return radical_mask[x.index]; }
    std::optional<Element> inverse_of(Element x) const;
    bool radical_is_nil() const { return radical_nilpotency_index.has_value(); }
};

RingAnalysis analyze(const FiniteRing& ring);

/// Throws NotLocalError unless the analysis says the ring is local.
void require_local(const RingAnalysis& analysis, const FiniteRing& ring);

/// True iff for every unit a and radical element b, both x -> ax - xb and
/// x -> bx - xa are surjective. Local rings only.
bool is_bleached(const FiniteRing& ring, const RingAnalysis& analysis);
bool is_bleached(const FiniteRing& ring);

/// A unital ring endomorphism, verified exhaustively on construction.
class Endomorphism {
public:
    Endomorphism(RingPtr ring, std::vector<Element> image, std::string label);

    static Endomorphism identity(RingPtr ring);

    Element operator()(Element x) const { return image_[x.index]; }

    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const std::vector<Element>& image() const { return image_; }
    const std::string& label() const { return label_; }

    bool is_identity() const;
    bool same_map(const Endomorphism& other) const { return image_ == other.image_; }

    /// The composite x -> this(inner(x)).
    Endomorphism after(const Endomorphism& inner) const;

private:
    RingPtr ring_;
    std::vector<Element> image_;
    std::string label_;
};

/// Builtins: "id" (any ring), "negx" (dual rings: (a,b) -> (a,-b)),
/// "aug" (C2 group rings: a+bg -> a+b), or "table:<path>" listing the
/// image of every element in index order. A trailing "^k" takes the k-th power.
Endomorphism endomorphism_from_spec(RingPtr ring, std::string_view spec);

/// k-fold composite; k = 0 yields the identity.
Endomorphism endo_power(const Endomorphism& sigma, unsigned k);

/// sigma(J) is contained in J.
bool preserves_radical(const Endomorphism& sigma, const RingAnalysis& analysis);

}  // namespace sclean
