#include <deque>

#include "sclean/errors.hpp"
#include "sclean/operators.hpp"
#include "sclean/ring.hpp"

namespace sclean {

namespace {

// Additive subgroup generated by `generators`, as a membership mask.
std::vector<bool> additive_closure(const FiniteRing& ring, const std::vector<Element>& generators) {
    std::vector<bool> member(ring.order(), false);
    std::deque<Element> queue{ring.zero()};
    member[0] = true;
    while (!queue.empty()) {
        const auto y = queue.front();
        queue.pop_front();
        for (auto g : generators) {
            const auto z = ring.add(y, g);
            if (!member[z.index]) {
                member[z.index] = true;
                queue.push_back(z);
            }
        }
    }
    return member;
}

std::optional<unsigned> nilpotency_index(const FiniteRing& ring, const std::vector<Element>& radical) {
    if (radical.size() == 1) return 1u;
    std::vector<Element> power = radical;  // J^k
    for (unsigned k = 1; k <= ring.order(); ++k) {
        std::vector<Element> products;
        std::vector<bool> seen(ring.order(), false);
        for (auto s : power) {
            for (auto j : radical) {
                const auto p = ring.mul(s, j);
                if (!seen[p.index]) {
                    seen[p.index] = true;
                    products.push_back(p);
                }
            }
        }
        const auto next = additive_closure(ring, products);
        power.clear();
        for (std::uint32_t x = 0; x < ring.order(); ++x) {
            if (next[x]) power.push_back(Element{x});
        }
        if (power.size() == 1) return k + 1;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Element> RingAnalysis::inverse_of(Element x) const {
    if (!is_unit(x)) return std::nullopt;
    return inverse[x.index];
}

RingAnalysis analyze(const FiniteRing& ring) {
    const auto n = ring.order();
    RingAnalysis out;
    out.unit_mask.assign(n, false);
    out.radical_mask.assign(n, false);
    out.inverse.assign(n, ring.zero());

    for (auto x : ring.elements()) {
        for (auto y : ring.elements()) {
            if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) {
                out.unit_mask[x.index] = true;
                out.inverse[x.index] = y;
                out.units.push_back(x);
                break;
            }
        }
        if (ring.mul(x, x) == x) out.idempotents.push_back(x);
    }

    for (auto x : ring.elements()) {
        bool quasi_regular = true;
        for (auto r : ring.elements()) {
            if (!out.unit_mask[ring.sub(ring.one(), ring.mul(r, x)).index]) {
                quasi_regular = false;
                break;
            }
        }
        if (quasi_regular) {
            out.radical_mask[x.index] = true;
            out.radical.push_back(x);
        }
    }

    out.is_local = true;
    for (auto x : ring.elements()) {
        if (!out.unit_mask[x.index] && !out.unit_mask[ring.sub(ring.one(), x).index]) {
            out.is_local = false;
            break;
        }
    }

    for (auto u : out.units) {
        if (out.unit_mask[ring.sub(ring.one(), u).index]) {
            out.one_is_sum_of_two_units = true;
            break;
        }
    }

    out.radical_nilpotency_index = nilpotency_index(ring, out.radical);
    return out;
}

void require_local(const RingAnalysis& analysis, const FiniteRing& ring) {
    if (!analysis.is_local) {
        throw NotLocalError("ring " + ring.label() + " is not local");
    }
}

bool is_bleached(const FiniteRing& ring, const RingAnalysis& analysis) {
    require_local(analysis, ring);
    for (auto a : analysis.units) {
        for (auto b : analysis.radical) {
            if (!lr_map(ring, a, b).is_surjective() || !lr_map(ring, b, a).is_surjective()) {
                return false;
            }
        }
    }
    return true;
}

bool is_bleached(const FiniteRing& ring) { return is_bleached(ring, analyze(ring)); }

}  // namespace sclean
