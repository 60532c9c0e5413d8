#include "sclean/skewtri.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "sclean/errors.hpp"

namespace sclean {

TriMatrix::TriMatrix(std::size_t n) : n_(n) {
    if (n == 0 || n > kMaxDimension) {
        throw ShapeError("matrix dimension " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxDimension));
    }
}

struct TriRing::IdempotentCache {
    std::once_flag once;
    std::vector<TriMatrix> list;
    // Diagonal pattern (digits over the idempotents of R) -> positions in list.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
};

TriRing::TriRing(Endomorphism sigma, std::size_t n)
    : TriRing(sigma, n, std::make_shared<const RingAnalysis>(analyze(sigma.ring()))) {}

TriRing::TriRing(Endomorphism sigma, std::size_t n, std::shared_ptr<const RingAnalysis> analysis)
    : sigma_(std::move(sigma)),
      n_(n),
      analysis_(std::move(analysis)),
      idempotents_(std::make_shared<IdempotentCache>()) {
    if (n_ < 1 || n_ > kMaxDimension) {
        throw ShapeError("dimension " + std::to_string(n_) + " outside 1.." +
                         std::to_string(kMaxDimension));
    }
    const auto& r = base();

    size_ = 1;
    const auto order = static_cast<std::uint64_t>(r.order());
    for (std::size_t k = 0; k < TriMatrix::entry_count(n_); ++k) {
        if (size_ > std::numeric_limits<std::uint64_t>::max() / order) {
            size_ = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        size_ *= order;
    }

    // sigma^0 .. sigma^max(n-1, 2); sigma^2 is used by the n = 3 constructions.
    const std::size_t powers = std::max<std::size_t>(n_, 3);
    sigma_powers_.push_back(r.elements());
    for (std::size_t k = 1; k < powers; ++k) {
        std::vector<Element> next(r.order());
        for (std::size_t x = 0; x < next.size(); ++x) next[x] = sigma_(sigma_powers_[k - 1][x]);
        sigma_powers_.push_back(std::move(next));
    }

    if (r.order() <= PreimageTable::kMaxOrder) {
        preimages_ = std::make_shared<const PreimageTable>(r);
    }
}

Element TriRing::sigma_pow(std::size_t k, Element x) const {
    if (k < sigma_powers_.size()) return sigma_powers_[k][x.index];
    for (std::size_t i = 0; i < k; ++i) x = sigma_(x);
    return x;
}

TriMatrix TriRing::identity() const {
    TriMatrix id(n_);
    for (std::size_t i = 0; i < n_; ++i) id.at(i, i) = base().one();
    return id;
}

TriMatrix TriRing::mul(const TriMatrix& a, const TriMatrix& b) const {
    const auto& r = base();
    TriMatrix c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            Element acc = r.zero();
            for (std::size_t k = i; k <= j; ++k) {
                acc = r.add(acc, r.mul(a(i, k), sigma_powers_[k - i][b(k, j).index]));
            }
            c.at(i, j) = acc;
        }
    }
    return c;
}

TriMatrix TriRing::add(const TriMatrix& a, const TriMatrix& b) const {
    TriMatrix c(n_);
    for (std::size_t k = 0; k < TriMatrix::entry_count(n_); ++k) {
        c.entries()[k] = base().add(a.entries()[k], b.entries()[k]);
    }
    return c;
}

TriMatrix TriRing::sub(const TriMatrix& a, const TriMatrix& b) const {
    TriMatrix c(n_);
    for (std::size_t k = 0; k < TriMatrix::entry_count(n_); ++k) {
        c.entries()[k] = base().sub(a.entries()[k], b.entries()[k]);
    }
    return c;
}

bool TriRing::has_unit_diagonal(const TriMatrix& a) const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (!analysis_->is_unit(a(i, i))) return false;
    }
    return true;
}

std::uint64_t TriRing::index_of(const TriMatrix& a) const {
    std::uint64_t idx = 0;
    for (auto x : a.entries()) idx = idx * base().order() + x.index;
    return idx;
}

TriMatrix TriRing::from_index(std::uint64_t index) const {
    TriMatrix a(n_);
    auto entries = a.entries();
    const auto order = base().order();
    for (std::size_t k = entries.size(); k-- > 0;) {
        entries[k] = Element{static_cast<std::uint32_t>(index % order)};
        index /= order;
    }
    return a;
}

std::optional<Element> TriRing::solve(Element a, Element b, Element v) const {
    if (preimages_) return preimages_->solve(a, b, v);
    return lr_map(base(), a, b).solve(v);
}

const std::vector<TriMatrix>& TriRing::idempotents(std::uint64_t budget) const {
    if (size_ > budget) throw BudgetExceeded(size_, budget);

    std::call_once(idempotents_->once, [this] {
        const auto& r = base();
        const auto& idem = analysis_->idempotents;
        const std::size_t m = TriMatrix::entry_count(n_);

        // (E^2)_ii = e_ii^2, so the diagonal of an idempotent is made of
        // idempotents of R. Enumerate those diagonals and every off-diagonal
        // filling; the E^2 = E filter does the rest.
        std::vector<std::size_t> diag_pos(n_);
        for (std::size_t i = 0; i < n_; ++i) diag_pos[i] = TriMatrix::offset(n_, i, i);
        std::vector<bool> on_diag(m, false);
        for (auto p : diag_pos) on_diag[p] = true;

        std::vector<std::size_t> digit(m, 0);
        auto& list = idempotents_->list;
        TriMatrix e(n_);
        while (true) {
            for (std::size_t k = 0; k < m; ++k) {
                e.entries()[k] = on_diag[k] ? idem[digit[k]] : Element{static_cast<std::uint32_t>(digit[k])};
            }
            if (mul(e, e) == e) list.push_back(e);

            std::size_t k = m;
            while (k-- > 0) {
                const std::size_t radix = on_diag[k] ? idem.size() : r.order();
                if (++digit[k] < radix) break;
                digit[k] = 0;
            }
            if (k == static_cast<std::size_t>(-1)) break;
        }
        std::sort(list.begin(), list.end(), [this](const TriMatrix& x, const TriMatrix& y) {
            return index_of(x) < index_of(y);
        });

        std::vector<std::uint32_t> idem_pos(r.order(), 0);
        for (std::size_t i = 0; i < idem.size(); ++i) idem_pos[idem[i].index] = static_cast<std::uint32_t>(i);
        for (std::size_t p = 0; p < list.size(); ++p) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < n_; ++i) key = key * idem.size() + idem_pos[list[p](i, i).index];
            idempotents_->buckets[key].push_back(static_cast<std::uint32_t>(p));
        }
    });
    return idempotents_->list;
}

std::optional<std::size_t> TriRing::first_clean_idempotent(const TriMatrix& a, bool plus,
                                                           std::uint64_t budget) const {
    const auto& list = idempotents(budget);
    const auto& r = base();
    const auto& idem = analysis_->idempotents;

    // A -/+ E is a unit iff every a_ii -/+ e_ii is, which pins down the
    // admissible diagonal patterns before any product is formed.
    std::vector<std::vector<std::uint32_t>> allowed(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t f = 0; f < idem.size(); ++f) {
            const auto d = plus ? r.add(a(i, i), idem[f]) : r.sub(a(i, i), idem[f]);
            if (analysis_->is_unit(d)) allowed[i].push_back(static_cast<std::uint32_t>(f));
        }
        if (allowed[i].empty()) return std::nullopt;
    }

    std::optional<std::size_t> best;
    std::vector<std::size_t> choice(n_, 0);
    while (true) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n_; ++i) key = key * idem.size() + allowed[i][choice[i]];
        if (auto it = idempotents_->buckets.find(key); it != idempotents_->buckets.end()) {
            for (auto p : it->second) {
                if (best && p >= *best) break;
                if (commute(list[p], a)) {
                    best = p;
                    break;
                }
            }
        }
        std::size_t i = n_;
        while (i-- > 0) {
            if (++choice[i] < allowed[i].size()) break;
            choice[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return best;
}

std::string TriRing::describe() const {
    return "T_" + std::to_string(n_) + "(" + base().label() + ", " + sigma_.label() + ")";
}

void TriRing::validate(const TriMatrix& a) const {
    if (a.dim() != n_) {
        throw ShapeError("matrix of dimension " + std::to_string(a.dim()) + " used in " + describe());
    }
    for (auto x : a.entries()) {
        if (!base().contains(x)) {
            throw ShapeError("entry " + std::to_string(x.index) + " outside " + base().label());
        }
    }
}

TriMatrix mat_mul(const TriRing& ring, const TriMatrix& a, const TriMatrix& b) {
    ring.validate(a);
    ring.validate(b);
    return ring.mul(a, b);
}

bool is_unit_tri(const TriRing& ring, const TriMatrix& a) {
    require_local(ring.analysis(), ring.base());
    ring.validate(a);
    return ring.has_unit_diagonal(a);
}

std::optional<TriMatrix> invert_tri(const TriRing& ring, const TriMatrix& a) {
    ring.validate(a);
    const auto& r = ring.base();
    const auto n = ring.dim();
    if (!ring.has_unit_diagonal(a)) return std::nullopt;

    // Solve A B = I row by row from the bottom:
    //   a_ii b_ij = -sum_{k=i+1..j} a_ik sigma^(k-i)(b_kj),  j > i.
    TriMatrix b(n);
    for (std::size_t i = n; i-- > 0;) {
        const auto inv = *ring.analysis().inverse_of(a(i, i));
        b.at(i, i) = inv;
        for (std::size_t j = i + 1; j < n; ++j) {
            Element acc = r.zero();
            for (std::size_t k = i + 1; k <= j; ++k) {
                acc = r.add(acc, r.mul(a(i, k), ring.sigma_pow(k - i, b(k, j))));
            }
            b.at(i, j) = r.mul(inv, r.neg(acc));
        }
    }
    const auto id = ring.identity();
    if (ring.mul(a, b) != id || ring.mul(b, a) != id) return std::nullopt;
    return b;
}

std::string_view to_string(DecompositionKind kind) {
    switch (kind) {
        case DecompositionKind::strongly_clean: return "strongly-clean";
        case DecompositionKind::very_clean_minus: return "very-clean-minus";
        case DecompositionKind::very_clean_plus: return "very-clean-plus";
    }
    return "unknown";
}

DecompositionChecks check_decomposition(const TriRing& ring, const TriMatrix& a,
                                        const CleanDecomposition& d) {
    DecompositionChecks c;
    c.idempotent = ring.mul(d.e, d.e) == d.e;
    c.commutes = ring.commute(d.e, d.u);
    c.sums = d.kind == DecompositionKind::very_clean_plus ? ring.add(a, d.e) == d.u
                                                          : ring.add(d.e, d.u) == a;
    c.unit = ring.has_unit_diagonal(d.u) && invert_tri(ring, d.u).has_value();
    return c;
}

std::optional<CleanDecomposition> brute_force_strongly_clean(const TriRing& ring, const TriMatrix& a,
                                                             std::uint64_t budget) {
    ring.validate(a);
    const auto pos = ring.first_clean_idempotent(a, false, budget);
    if (!pos) return std::nullopt;
    const auto& e = ring.idempotents(budget)[*pos];
    return CleanDecomposition{e, ring.sub(a, e), DecompositionKind::strongly_clean, 0};
}

std::optional<CleanDecomposition> is_very_clean(const TriRing& ring, const TriMatrix& a,
                                                std::uint64_t budget) {
    ring.validate(a);
    if (const auto pos = ring.first_clean_idempotent(a, false, budget)) {
        const auto& e = ring.idempotents(budget)[*pos];
        return CleanDecomposition{e, ring.sub(a, e), DecompositionKind::very_clean_minus, 0};
    }
    if (const auto pos = ring.first_clean_idempotent(a, true, budget)) {
        const auto& e = ring.idempotents(budget)[*pos];
        return CleanDecomposition{e, ring.add(a, e), DecompositionKind::very_clean_plus, 0};
    }
    return std::nullopt;
}

TriMatrix parse_matrix_literal(std::string_view text, std::size_t n, const FiniteRing& ring) {
    auto fail = [&](const std::string& why) {
        return SpecError("matrix literal '" + std::string(text) + "': " + why);
    };

    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s += c;
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail("must be enclosed in [ ]");
    s = s.substr(1, s.size() - 2);

    TriMatrix a(n);
    std::size_t row = 0;
    std::size_t start = 0;
    while (true) {
        const auto end = s.find(';', start);
        const auto row_text = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (row >= n) throw fail("more than " + std::to_string(n) + " rows");

        std::size_t col = row;
        std::size_t p = 0;
        while (true) {
            const auto comma = row_text.find(',', p);
            const auto item = row_text.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
            if (col >= n) {
                throw fail("row " + std::to_string(row + 1) + " has more than " +
                           std::to_string(n - row) + " entries");
            }
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
                throw fail("entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                           ") is not an element index: '" + item + "'");
            }
            if (value >= ring.order()) {
                throw fail("entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                           ") = " + std::to_string(value) + " is out of range for ring of order " +
                           std::to_string(ring.order()));
            }
            a.at(row, col) = Element{value};
            ++col;
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        if (col != n) {
            throw fail("row " + std::to_string(row + 1) + " has " + std::to_string(col - row) +
                       " entries, expected " + std::to_string(n - row));
        }
        ++row;
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (row != n) throw fail("has " + std::to_string(row) + " rows, expected " + std::to_string(n));
    return a;
}

std::string format_literal(const TriMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i > 0) os << ';';
        for (std::size_t j = i; j < a.dim(); ++j) {
            if (j > i) os << ',';
            os << a(i, j).index;
        }
    }
    os << ']';
    return os.str();
}

std::string format_matrix(const TriMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i > 0) os << ',';
        os << '[';
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j > 0) os << ',';
            os << a(i, j).index;
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace sclean
