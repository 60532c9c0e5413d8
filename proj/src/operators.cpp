#include "sclean/operators.hpp"

#include "sclean/errors.hpp"

namespace sclean {

AdditiveMap::AdditiveMap(const FiniteRing& ring, Element a, Element b)
    : ring_(&ring), a_(a), b_(b), image_(ring.order()) {
    for (auto x : ring.elements()) {
        image_[x.index] = ring.sub(ring.mul(a, x), ring.mul(x, b));
    }
}

std::size_t AdditiveMap::image_size() const {
    std::vector<bool> hit(image_.size(), false);
    std::size_t count = 0;
    for (auto y : image_) {
        if (!hit[y.index]) {
            hit[y.index] = true;
            ++count;
        }
    }
    return count;
}

bool AdditiveMap::is_injective() const {
    for (std::size_t x = 1; x < image_.size(); ++x) {
        if (image_[x] == ring_->zero()) return false;
    }
    return true;
}

// Injective and surjective coincide on a finite set; the kernel test is the
// cheaper of the two.
bool AdditiveMap::is_surjective() const { return is_injective(); }

std::optional<Element> AdditiveMap::solve(Element v) const {
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (image_[x] == v) return Element{static_cast<std::uint32_t>(x)};
    }
    return std::nullopt;
}

AdditiveMap lr_map(const FiniteRing& ring, Element a, Element b) { return AdditiveMap(ring, a, b); }

Element solve_nilpotent(const FiniteRing& ring, Element a, Element b, Element v) {
    std::optional<Element> a_inv;
    for (auto y : ring.elements()) {
        if (ring.mul(a, y) == ring.one() && ring.mul(y, a) == ring.one()) {
            a_inv = y;
            break;
        }
    }
    if (!a_inv) {
        throw NotUnitError("element " + ring.element_name(a) + " of " + ring.label() +
                           " is not a unit");
    }

    // Terms a^-k v b^(k-1) for k = 1, 2, ... until b^(k-1) vanishes.
    Element x = ring.zero();
    Element left = *a_inv;   // a^-k
    Element right = ring.one();  // b^(k-1)
    for (std::size_t k = 1; k <= ring.order() + 1; ++k) {
        if (right == ring.zero()) return x;
        x = ring.add(x, ring.mul(ring.mul(left, v), right));
        left = ring.mul(left, *a_inv);
        right = ring.mul(right, b);
    }
    throw NotNilpotentError("element " + ring.element_name(b) + " of " + ring.label() +
                            " is not nilpotent");
}

PreimageTable::PreimageTable(const FiniteRing& ring)
    : order_(ring.order()), table_(order_ * order_ * order_, kNone) {
    if (order_ > kMaxOrder) {
        throw Error("preimage table limited to rings of order " + std::to_string(kMaxOrder));
    }
    for (auto a : ring.elements()) {
        for (auto b : ring.elements()) {
            const AdditiveMap map(ring, a, b);
            auto* row = &table_[(a.index * order_ + b.index) * order_];
            // Descending x leaves the least preimage in place.
            for (std::size_t x = order_; x-- > 0;) {
                row[map.image()[x].index] = static_cast<std::uint32_t>(x);
            }
        }
    }
}

}  // namespace sclean
