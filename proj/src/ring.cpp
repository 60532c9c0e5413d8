#include "sclean/ring.hpp"

#include <random>
#include <sstream>

#include "sclean/errors.hpp"

namespace sclean {

namespace {

std::string triple(std::string_view names, Element x, Element y, Element z) {
    std::ostringstream os;
    os << names << " = " << x.index << ", " << y.index << ", " << z.index;
    return os.str();
}

}  // namespace

FiniteRing::FiniteRing(std::size_t order, std::vector<std::uint32_t> add_table,
                       std::vector<std::uint32_t> mul_table, Element one, std::string label,
                       Construction construction)
    : order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      one_(one),
      label_(std::move(label)),
      construction_(construction) {
    if (order_ < 2) {
        throw AxiomError("ring of order " + std::to_string(order_) + " has 0 = 1");
    }
    if (add_.size() != order_ * order_ || mul_.size() != order_ * order_) {
        throw AxiomError("table size does not match order " + std::to_string(order_));
    }
    for (std::size_t i = 0; i < add_.size(); ++i) {
        if (add_[i] >= order_ || mul_[i] >= order_) {
            throw AxiomError("table entry out of range at position " + std::to_string(i));
        }
    }
    if (one_.index >= order_) {
        throw AxiomError("identity index " + std::to_string(one_.index) + " out of range");
    }
    if (one_.index == 0) {
        throw AxiomError("zero equals one");
    }
    build_negation();
    check_axioms();
}

void FiniteRing::build_negation() {
    const auto n = static_cast<std::uint32_t>(order_);
    neg_.assign(order_, n);
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
            if (add_[x * order_ + y] == 0) {
                neg_[x] = y;
                break;
            }
        }
        if (neg_[x] == n) {
            throw AxiomError("additive inverse missing for x = " + std::to_string(x));
        }
    }
}

void FiniteRing::check_axioms() const {
    const auto n = static_cast<std::uint32_t>(order_);
    for (std::uint32_t x = 0; x < n; ++x) {
        const Element ex{x};
        if (add(zero(), ex) != ex || add(ex, zero()) != ex) {
            throw AxiomError("additive identity fails: 0 + x != x for x = " + std::to_string(x));
        }
        if (mul(one_, ex) != ex || mul(ex, one_) != ex) {
            throw AxiomError("multiplicative identity fails: 1 * x != x for x = " +
                             std::to_string(x));
        }
        for (std::uint32_t y = 0; y < n; ++y) {
            if (add(ex, Element{y}) != add(Element{y}, ex)) {
                throw AxiomError("additive commutativity fails for x, y = " + std::to_string(x) +
                                 ", " + std::to_string(y));
            }
        }
    }

    auto check = [this](Element x, Element y, Element z) {
        if (add(add(x, y), z) != add(x, add(y, z))) {
            throw AxiomError("additive associativity fails: " + triple("x, y, z", x, y, z));
        }
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw AxiomError("multiplicative associativity fails: " + triple("x, y, z", x, y, z));
        }
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            throw AxiomError("left distributivity fails: " + triple("x, y, z", x, y, z));
        }
        if (mul(add(y, z), x) != add(mul(y, x), mul(z, x))) {
            throw AxiomError("right distributivity fails: " + triple("x, y, z", x, y, z));
        }
    };

    if (order_ <= kExhaustiveAxiomOrder) {
        for (std::uint32_t x = 0; x < n; ++x) {
            for (std::uint32_t y = 0; y < n; ++y) {
                for (std::uint32_t z = 0; z < n; ++z) {
                    check(Element{x}, Element{y}, Element{z});
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x5eedf00dULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
        for (std::size_t t = 0; t < kSampledAxiomTriples; ++t) {
            check(Element{pick(rng)}, Element{pick(rng)}, Element{pick(rng)});
        }
    }
}

Element FiniteRing::from_integer(long long k) const {
    const auto m = static_cast<long long>(order_);
    long long r = k % m;
    if (r < 0) r += m;
    Element acc = zero();
    for (long long i = 0; i < r; ++i) acc = add(acc, one_);
    return acc;
}

std::vector<Element> FiniteRing::elements() const {
    std::vector<Element> out(order_);
    for (std::size_t i = 0; i < order_; ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
    return out;
}

std::string FiniteRing::element_name(Element x) const {
    const auto m = construction_.modulus;
    switch (construction_.kind) {
        case Construction::Kind::zmod:
        case Construction::Kind::table:
            return std::to_string(x.index);
        case Construction::Kind::dual:
            return "(" + std::to_string(x.index / m) + "," + std::to_string(x.index % m) + ")";
        case Construction::Kind::group_ring_c2:
            return std::to_string(x.index / m) + "+" + std::to_string(x.index % m) + "g";
        case Construction::Kind::quotient: {
            const auto d = construction_.degree;
            std::vector<std::uint32_t> c(d);
            auto idx = x.index;
            for (std::uint32_t i = d; i-- > 0;) {
                c[i] = idx % m;
                idx /= m;
            }
            std::string out;
            for (std::uint32_t i = 0; i < d; ++i) {
                if (c[i] == 0) continue;
                if (!out.empty()) out += "+";
                if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
                if (i >= 1) out += "x";
                if (i >= 2) out += "^" + std::to_string(i);
            }
            return out.empty() ? "0" : out;
        }
    }
    return std::to_string(x.index);
}

}  // namespace sclean
