#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sclean/ring.hpp"

namespace sclean {

/// The additive endomorphism x -> a*x - x*b of a ring, i.e. l_a - r_b.
///
/// The image table is filled once on construction, so every query after
/// that is a lookup. The ring must outlive the map.
class AdditiveMap {
public:
    AdditiveMap(const FiniteRing& ring, Element a, Element b);

    Element a() const { return a_; }
    Element b() const { return b_; }
    const FiniteRing& ring() const { return *ring_; }

    Element operator()(Element x) const { return image_[x.index]; }
    const std::vector<Element>& image() const { return image_; }

    /// Size of the image set.
    std::size_t image_size() const;
    /// Kernel is {0}.
    bool is_injective() const;
    bool is_surjective() const;

    /// Least-index x with a*x - x*b = v, if any.
    std::optional<Element> solve(Element v) const;

private:
    const FiniteRing* ring_;
    Element a_;
    Element b_;
    std::vector<Element> image_;
};

AdditiveMap lr_map(const FiniteRing& ring, Element a, Element b);

inline bool is_surjective(const AdditiveMap& map) { return map.is_surjective(); }

inline std::optional<Element> solve(const AdditiveMap& map, Element v) { return map.solve(v); }

/// Solves a*x - x*b = v for a unit a and nilpotent b with the finite series
///   x = a^-1 v + a^-2 v b + ... + a^-n v b^(n-1),   b^n = 0,
/// which telescopes to v under x -> a*x - x*b.
/// Throws NotUnitError if a has no inverse and NotNilpotentError if no power
/// of b up to the ring order vanishes.
Element solve_nilpotent(const FiniteRing& ring, Element a, Element b, Element v);

/// Least preimages of every map l_a - r_b, for all (a, b, v) at once.
/// Built for small rings so that exhaustive sweeps do no per-call work;
/// answers always agree with AdditiveMap::solve.
class PreimageTable {
public:
    static constexpr std::size_t kMaxOrder = 64;

    explicit PreimageTable(const FiniteRing& ring);

    std::optional<Element> solve(Element a, Element b, Element v) const {
        const auto x = table_[(a.index * order_ + b.index) * order_ + v.index];
        if (x == kNone) return std::nullopt;
        return Element{x};
    }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::size_t order_;
    std::vector<std::uint32_t> table_;
};

}  // namespace sclean
