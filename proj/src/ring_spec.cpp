#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>

#include "sclean/errors.hpp"
#include "sclean/ring.hpp"

namespace sclean {

namespace {

// Generated rings keep both tables in memory (order^2 entries each).
constexpr std::size_t kMaxGeneratedOrder = 4096;

std::uint32_t parse_modulus(std::string_view text, std::string_view spec) {
    std::uint32_t n = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw SpecError("bad modulus '" + std::string(text) + "' in ring spec '" +
                        std::string(spec) + "'");
    }
    if (n < 2) {
        throw SpecError("modulus must be at least 2 in ring spec '" + std::string(spec) + "'");
    }
    return n;
}

void check_order(std::size_t order, std::string_view spec) {
    if (order > kMaxGeneratedOrder) {
        throw SpecError("ring '" + std::string(spec) + "' has order " + std::to_string(order) +
                        ", limit is " + std::to_string(kMaxGeneratedOrder));
    }
}

using BinaryOp = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

RingPtr tabulate(std::size_t order, const BinaryOp& add, const BinaryOp& mul, Element one,
                 std::string label, Construction construction) {
    std::vector<std::uint32_t> add_table(order * order);
    std::vector<std::uint32_t> mul_table(order * order);
    for (std::uint32_t x = 0; x < order; ++x) {
        for (std::uint32_t y = 0; y < order; ++y) {
            add_table[x * order + y] = add(x, y);
            mul_table[x * order + y] = mul(x, y);
        }
    }
    return std::make_shared<const FiniteRing>(order, std::move(add_table), std::move(mul_table),
                                              one, std::move(label), construction);
}

// Monic polynomial over Z_n in x, e.g. "x^2+x+1", "x^3-2x+4", "2*x^2+x".
// Returns coefficients from the constant term upward, reduced mod n.
std::vector<std::uint32_t> parse_polynomial(std::string_view text, std::uint32_t n,
                                            std::string_view spec) {
    auto fail = [&](const std::string& why) -> SpecError {
        return SpecError("bad polynomial '" + std::string(text) + "' in ring spec '" +
                         std::string(spec) + "': " + why);
    };

    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw fail("empty");

    std::vector<long long> coeff;
    std::size_t pos = 0;
    auto read_number = [&](long long& out) {
        const auto start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return false;
        out = 0;
        auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, out);
        if (ec != std::errc{}) throw fail("number out of range");
        return true;
    };

    bool first = true;
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;

        long long c = 1;
        const bool has_coeff = read_number(c);
        if (has_coeff && pos < s.size() && s[pos] == '*') ++pos;

        std::size_t power = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                long long p = 0;
                if (!read_number(p)) throw fail("missing exponent at position " + std::to_string(pos));
                power = static_cast<std::size_t>(p);
            }
        } else if (!has_coeff) {
            throw fail("expected a term at position " + std::to_string(pos));
        }
        if (power > 16) throw fail("degree above 16");
        if (coeff.size() <= power) coeff.resize(power + 1, 0);
        coeff[power] += sign * c;
    }

    std::vector<std::uint32_t> out(coeff.size());
    const auto m = static_cast<long long>(n);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        out[i] = static_cast<std::uint32_t>(((coeff[i] % m) + m) % m);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    if (out.size() < 2) throw fail("degree must be at least 1");
    if (out.back() != 1) throw fail("polynomial must be monic");
    return out;
}

}  // namespace

RingPtr make_zmod(std::uint32_t n) {
    if (n < 2) throw SpecError("zmod needs n >= 2");
    check_order(n, "zmod:" + std::to_string(n));
    return tabulate(
        n, [n](auto x, auto y) { return (x + y) % n; },
        [n](auto x, auto y) { return static_cast<std::uint32_t>(std::uint64_t{x} * y % n); },
        Element{1 % n}, "zmod:" + std::to_string(n), {Construction::Kind::zmod, n, 1});
}

RingPtr make_dual(std::uint32_t n) {
    if (n < 2) throw SpecError("dual:zmod needs n >= 2");
    const std::string label = "dual:zmod:" + std::to_string(n);
    check_order(std::size_t{n} * n, label);
    // (a,b)(c,d) = (ac, ad + bc): the ring of matrices [[a, b], [0, a]].
    return tabulate(
        std::size_t{n} * n,
        [n](auto x, auto y) { return ((x / n + y / n) % n) * n + (x % n + y % n) % n; },
        [n](auto x, auto y) {
            const auto a = x / n, b = x % n, c = y / n, d = y % n;
            return ((a * c) % n) * n + (a * d + b * c) % n;
        },
        Element{n}, label, {Construction::Kind::dual, n, 2});
}

RingPtr make_group_ring_c2(std::uint32_t n) {
    if (n < 2) throw SpecError("groupring:zmod needs n >= 2");
    const std::string label = "groupring:zmod:" + std::to_string(n) + ";C2";
    check_order(std::size_t{n} * n, label);
    // (a + bg)(c + dg) = (ac + bd) + (ad + bc)g since g^2 = 1.
    return tabulate(
        std::size_t{n} * n,
        [n](auto x, auto y) { return ((x / n + y / n) % n) * n + (x % n + y % n) % n; },
        [n](auto x, auto y) {
            const auto a = x / n, b = x % n, c = y / n, d = y % n;
            return ((a * c + b * d) % n) * n + (a * d + b * c) % n;
        },
        Element{n}, label, {Construction::Kind::group_ring_c2, n, 2});
}

RingPtr make_quotient(std::uint32_t n, const std::vector<std::uint32_t>& f, std::string label) {
    if (n < 2) throw SpecError("quot:zmod needs n >= 2");
    if (f.size() < 2 || f.back() % n != 1) {
        throw SpecError("quotient modulus must be monic of degree >= 1");
    }
    const auto d = static_cast<std::uint32_t>(f.size() - 1);
    std::size_t order = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        order *= n;
        check_order(order, label);
    }

    auto decode = [n, d](std::uint32_t idx) {
        std::vector<std::uint64_t> c(d);
        for (std::uint32_t i = d; i-- > 0;) {
            c[i] = idx % n;
            idx /= n;
        }
        return c;
    };
    auto encode = [n](const std::vector<std::uint64_t>& c, std::uint32_t deg) {
        std::uint32_t idx = 0;
        for (std::uint32_t i = 0; i < deg; ++i) idx = idx * n + static_cast<std::uint32_t>(c[i] % n);
        return idx;
    };

    auto add = [=](std::uint32_t x, std::uint32_t y) {
        auto a = decode(x);
        const auto b = decode(y);
        for (std::uint32_t i = 0; i < d; ++i) a[i] = (a[i] + b[i]) % n;
        return encode(a, d);
    };
    auto mul = [=](std::uint32_t x, std::uint32_t y) {
        const auto a = decode(x);
        const auto b = decode(y);
        std::vector<std::uint64_t> c(2 * d - 1, 0);
        for (std::uint32_t i = 0; i < d; ++i) {
            for (std::uint32_t j = 0; j < d; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % n;
        }
        // x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
        for (std::size_t k = c.size(); k-- > d;) {
            const auto t = c[k];
            c[k] = 0;
            for (std::uint32_t i = 0; i < d; ++i) {
                c[k - d + i] = (c[k - d + i] + (n - f[i] % n) * t) % n;
            }
        }
        return encode(c, d);
    };

    std::vector<std::uint64_t> one_coeffs(d, 0);
    one_coeffs[0] = 1;
    return tabulate(order, add, mul, Element{encode(one_coeffs, d)}, std::move(label),
                    {Construction::Kind::quotient, n, d});
}

RingPtr ring_from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open ring table '" + path + "'");
    std::size_t order = 0;
    if (!(in >> order) || order < 2 || order > kMaxGeneratedOrder) {
        throw SpecError("ring table '" + path + "': bad order");
    }
    auto read_table = [&](const char* what) {
        std::vector<std::uint32_t> t(order * order);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!(in >> t[i])) {
                throw SpecError("ring table '" + path + "': " + what + " table truncated at row " +
                                std::to_string(i / order + 1) + ", column " +
                                std::to_string(i % order + 1));
            }
        }
        return t;
    };
    auto add = read_table("addition");
    auto mul = read_table("multiplication");
    std::uint32_t one = 0;
    if (!(in >> one)) throw SpecError("ring table '" + path + "': missing index of 1");
    return std::make_shared<const FiniteRing>(order, std::move(add), std::move(mul), Element{one},
                                              "table:" + path, Construction{});
}

RingPtr ring_from_spec(std::string_view spec) {
    auto starts = [&](std::string_view prefix) { return spec.substr(0, prefix.size()) == prefix; };

    if (starts("table:")) {
        return ring_from_table_file(std::string(spec.substr(6)));
    }
    if (starts("zmod:")) {
        return make_zmod(parse_modulus(spec.substr(5), spec));
    }
    if (starts("dual:zmod:")) {
        return make_dual(parse_modulus(spec.substr(10), spec));
    }
    if (starts("groupring:zmod:")) {
        const auto rest = spec.substr(15);
        const auto semi = rest.find(';');
        if (semi == std::string_view::npos || rest.substr(semi + 1) != "C2") {
            throw SpecError("group ring spec must end in ';C2': '" + std::string(spec) + "'");
        }
        return make_group_ring_c2(parse_modulus(rest.substr(0, semi), spec));
    }
    if (starts("quot:zmod:")) {
        const auto rest = spec.substr(10);
        const auto semi = rest.find(';');
        if (semi == std::string_view::npos) {
            throw SpecError("quotient spec needs ';<polynomial>': '" + std::string(spec) + "'");
        }
        const auto n = parse_modulus(rest.substr(0, semi), spec);
        return make_quotient(n, parse_polynomial(rest.substr(semi + 1), n, spec), std::string(spec));
    }
    throw SpecError("unknown ring spec '" + std::string(spec) + "'");
}

}  // namespace sclean
