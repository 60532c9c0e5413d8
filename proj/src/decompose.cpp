#include "sclean/errors.hpp"
#include "sclean/skewtri.hpp"

namespace sclean {

namespace {

void require_dim(const TriRing& ring, std::size_t n, const char* op) {
    if (ring.dim() != n) {
        throw ShapeError(std::string(op) + " needs n = " + std::to_string(n) + ", got " +
                         ring.describe());
    }
}

CleanDecomposition finish(const TriRing& ring, const TriMatrix& a, TriMatrix e, int proof_case) {
    CleanDecomposition d{e, ring.sub(a, e), DecompositionKind::strongly_clean, proof_case};
    if (!check_decomposition(ring, a, d).all()) {
        throw VerificationError("case " + std::to_string(proof_case) + " construction for " +
                                format_literal(a) + " in " + ring.describe() +
                                " gave E = " + format_literal(e) + ", which fails the checks");
    }
    return d;
}

}  // namespace

std::optional<CleanDecomposition> decompose_t2(const TriRing& ring, const TriMatrix& a) {
    require_local(ring.analysis(), ring.base());
    require_dim(ring, 2, "decompose_t2");
    ring.validate(a);

    const auto& r = ring.base();
    const auto& an = ring.analysis();
    const Element a11 = a(0, 0), v = a(0, 1), b = a(1, 1);
    const Element sb = ring.sigma_pow(1, b);

    TriMatrix e(2);
    int proof_case = 0;
    if (an.is_unit(a11) && an.is_unit(b)) {
        proof_case = 1;
    } else if (!an.is_unit(a11) && !an.is_unit(b)) {
        proof_case = 2;
        e = ring.identity();
    } else if (an.is_unit(a11)) {
        if (an.is_unit(r.sub(a11, r.one()))) {
            proof_case = 3;
            e = ring.identity();
        } else {
            // (AE)_12 = a x + v, (EA)_12 = x sigma(b).
            proof_case = 4;
            const auto x = ring.solve(a11, sb, r.neg(v));
            if (!x) return std::nullopt;
            e.at(0, 1) = *x;
            e.at(1, 1) = r.one();
        }
    } else {
        if (an.is_unit(r.sub(b, r.one()))) {
            proof_case = 5;
            e = ring.identity();
        } else {
            // (AE)_12 = a x, (EA)_12 = v + x sigma(b).
            proof_case = 6;
            const auto x = ring.solve(a11, sb, v);
            if (!x) return std::nullopt;
            e.at(0, 0) = r.one();
            e.at(0, 1) = *x;
        }
    }
    return finish(ring, a, e, proof_case);
}

int t3_case(const TriRing& ring, const TriMatrix& a) {
    require_local(ring.analysis(), ring.base());
    require_dim(ring, 3, "t3_case");
    const auto& an = ring.analysis();
    const bool u1 = an.is_unit(a(0, 0)), u2 = an.is_unit(a(1, 1)), u3 = an.is_unit(a(2, 2));
    if (!u1 && !u2 && !u3) return 1;
    if (u1 && !u2 && !u3) return 2;
    if (!u1 && u2 && !u3) return 3;
    if (!u1 && !u2 && u3) return 4;
    if (!u1 && u2 && u3) return 5;
    if (u1 && !u2 && u3) return 6;
    if (u1 && u2 && !u3) return 7;
    return 8;
}

T3Candidate construct_t3(const TriRing& ring, const TriMatrix& a, Case5Rhs case5) {
    const int c = t3_case(ring, a);
    ring.validate(a);

    const auto& r = ring.base();
    auto s1 = [&](Element x) { return ring.sigma_pow(1, x); };
    auto s2 = [&](Element x) { return ring.sigma_pow(2, x); };
    auto mul = [&](Element x, Element y) { return r.mul(x, y); };
    const Element a11 = a(0, 0), a12 = a(0, 1), a13 = a(0, 2);
    const Element a22 = a(1, 1), a23 = a(1, 2), a33 = a(2, 2);
    const Element one = r.one();

    T3Candidate out{c, std::nullopt};
    TriMatrix e(3);
    switch (c) {
        case 1:
            e = ring.identity();
            break;
        case 2: {
            const auto e12 = ring.solve(a11, s1(a22), r.neg(a12));
            if (!e12) return out;
            const auto e13 = ring.solve(a11, s2(a33), r.sub(mul(*e12, s1(a23)), a13));
            if (!e13) return out;
            e.at(0, 1) = *e12;
            e.at(0, 2) = *e13;
            e.at(1, 1) = one;
            e.at(2, 2) = one;
            break;
        }
        case 3: {
            const auto e12 = ring.solve(a11, s1(a22), a12);
            if (!e12) return out;
            const auto e23 = ring.solve(a22, s1(a33), r.neg(a23));
            if (!e23) return out;
            e.at(0, 0) = one;
            e.at(0, 1) = *e12;
            e.at(0, 2) = r.neg(mul(*e12, s1(*e23)));
            e.at(1, 2) = *e23;
            e.at(2, 2) = one;
            break;
        }
        case 4: {
            const auto e23 = ring.solve(a22, s1(a33), a23);
            if (!e23) return out;
            const auto e13 = ring.solve(a11, s2(a33), r.sub(a13, mul(a12, s1(*e23))));
            if (!e13) return out;
            e.at(0, 0) = one;
            e.at(0, 2) = *e13;
            e.at(1, 1) = one;
            e.at(1, 2) = *e23;
            break;
        }
        case 5: {
            const auto e12 = ring.solve(a11, s1(a22), a12);
            if (!e12) return out;
            // E has no (2,3) entry, so the printed e12 sigma(e23) term is zero.
            const Element rhs = case5 == Case5Rhs::corrected
                                    ? r.add(a13, mul(*e12, s1(a23)))
                                    : r.add(a13, mul(*e12, s1(r.zero())));
            const auto e13 = ring.solve(a11, s2(a33), rhs);
            if (!e13) return out;
            e.at(0, 0) = one;
            e.at(0, 1) = *e12;
            e.at(0, 2) = *e13;
            break;
        }
        case 6: {
            const auto e23 = ring.solve(a22, s1(a33), a23);
            if (!e23) return out;
            const auto e12 = ring.solve(a11, s1(a22), r.neg(a12));
            if (!e12) return out;
            e.at(0, 1) = *e12;
            e.at(0, 2) = mul(*e12, s1(*e23));
            e.at(1, 1) = one;
            e.at(1, 2) = *e23;
            break;
        }
        case 7: {
            const auto e23 = ring.solve(a22, s1(a33), r.neg(a23));
            if (!e23) return out;
            const auto e13 = ring.solve(a11, s2(a33), r.sub(r.neg(a13), mul(a12, s1(*e23))));
            if (!e13) return out;
            e.at(0, 2) = *e13;
            e.at(1, 2) = *e23;
            e.at(2, 2) = one;
            break;
        }
        default:
            break;  // case 8: E = 0
    }
    out.e = e;
    return out;
}

std::optional<CleanDecomposition> decompose_t3(const TriRing& ring, const TriMatrix& a) {
    const auto candidate = construct_t3(ring, a, Case5Rhs::corrected);
    if (!candidate.e) return std::nullopt;
    return finish(ring, a, *candidate.e, candidate.proof_case);
}

}  // namespace sclean
