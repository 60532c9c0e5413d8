#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "sclean/errors.hpp"
#include "sclean/ring.hpp"

namespace sclean {

Endomorphism::Endomorphism(RingPtr ring, std::vector<Element> image, std::string label)
    : ring_(std::move(ring)), image_(std::move(image)), label_(std::move(label)) {
    const auto& r = *ring_;
    if (image_.size() != r.order()) {
        throw EndomorphismError("endomorphism '" + label_ + "' has " + std::to_string(image_.size()) +
                                " images for a ring of order " + std::to_string(r.order()));
    }
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (!r.contains(image_[x])) {
            throw EndomorphismError("endomorphism '" + label_ + "' maps " + std::to_string(x) +
                                    " outside the ring");
        }
    }
    if ((*this)(r.one()) != r.one()) {
        throw EndomorphismError("endomorphism '" + label_ + "' is not unital: sigma(1) = " +
                                std::to_string((*this)(r.one()).index));
    }
    for (auto x : r.elements()) {
        for (auto y : r.elements()) {
            if ((*this)(r.add(x, y)) != r.add((*this)(x), (*this)(y))) {
                throw EndomorphismError("endomorphism '" + label_ +
                                        "' is not additive: sigma(x+y) != sigma(x)+sigma(y) for x, y = " +
                                        std::to_string(x.index) + ", " + std::to_string(y.index));
            }
            if ((*this)(r.mul(x, y)) != r.mul((*this)(x), (*this)(y))) {
                throw EndomorphismError("endomorphism '" + label_ +
                                        "' is not multiplicative: sigma(xy) != sigma(x)sigma(y) for x, y = " +
                                        std::to_string(x.index) + ", " + std::to_string(y.index));
            }
        }
    }
}

Endomorphism Endomorphism::identity(RingPtr ring) {
    auto elements = ring->elements();
    return Endomorphism(std::move(ring), std::move(elements), "id");
}

bool Endomorphism::is_identity() const {
    for (std::size_t x = 0; x < image_.size(); ++x) {
        if (image_[x].index != x) return false;
    }
    return true;
}

Endomorphism Endomorphism::after(const Endomorphism& inner) const {
    if (ring_.get() != inner.ring_.get() && ring_->label() != inner.ring_->label()) {
        throw EndomorphismError("cannot compose endomorphisms of different rings");
    }
    std::vector<Element> image(image_.size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = image_[inner.image_[x].index];
    return Endomorphism(ring_, std::move(image), label_ + "." + inner.label_);
}

Endomorphism endo_power(const Endomorphism& sigma, unsigned k) {
    if (k == 0) return Endomorphism::identity(sigma.ring_ptr());
    std::vector<Element> image = sigma.image();
    for (unsigned i = 1; i < k; ++i) {
        for (auto& y : image) y = sigma(y);
    }
    const auto label = k == 1 ? sigma.label() : sigma.label() + "^" + std::to_string(k);
    return Endomorphism(sigma.ring_ptr(), std::move(image), label);
}

Endomorphism endomorphism_from_spec(RingPtr ring, std::string_view spec) {
    if (const auto caret = spec.rfind('^'); caret != std::string_view::npos && caret > 0) {
        const auto digits = spec.substr(caret + 1);
        const bool numeric = !digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch)) != 0;
        });
        if (numeric) {
            unsigned k = 0;
            const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec != std::errc{} || k > 1024) {
                throw SpecError("endomorphism power '" + std::string(digits) + "' must be at most 1024");
            }
            return endo_power(endomorphism_from_spec(std::move(ring), spec.substr(0, caret)), k);
        }
    }

    const auto& c = ring->construction();
    const auto m = c.modulus;

    if (spec == "id") return Endomorphism::identity(std::move(ring));

    if (spec == "negx") {
        if (c.kind != Construction::Kind::dual) {
            throw SpecError("'negx' needs a dual:zmod ring, got " + ring->label());
        }
        std::vector<Element> image(ring->order());
        for (std::uint32_t x = 0; x < ring->order(); ++x) {
            const auto a = x / m, b = x % m;
            image[x] = Element{a * m + (m - b) % m};
        }
        return Endomorphism(std::move(ring), std::move(image), "negx");
    }

    if (spec == "aug") {
        if (c.kind != Construction::Kind::group_ring_c2) {
            throw SpecError("'aug' needs a groupring:zmod:<n>;C2 ring, got " + ring->label());
        }
        std::vector<Element> image(ring->order());
        for (std::uint32_t x = 0; x < ring->order(); ++x) {
            const auto a = x / m, b = x % m;
            image[x] = Element{((a + b) % m) * m};
        }
        return Endomorphism(std::move(ring), std::move(image), "aug");
    }

    if (spec.substr(0, 6) == "table:") {
        const std::string path(spec.substr(6));
        std::ifstream in(path);
        if (!in) throw SpecError("cannot open endomorphism table '" + path + "'");
        std::vector<Element> image(ring->order());
        for (std::size_t x = 0; x < image.size(); ++x) {
            if (!(in >> image[x].index)) {
                throw SpecError("endomorphism table '" + path + "' truncated at entry " +
                                std::to_string(x));
            }
        }
        return Endomorphism(std::move(ring), std::move(image), std::string(spec));
    }

    throw SpecError("unknown endomorphism spec '" + std::string(spec) + "'");
}

bool preserves_radical(const Endomorphism& sigma, const RingAnalysis& analysis) {
    for (auto b : analysis.radical) {
        if (!analysis.in_radical(sigma(b))) return false;
    }
    return true;
}

}  // namespace sclean
