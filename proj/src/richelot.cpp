#include "ssg2/richelot.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssg2 {

namespace {

Poly pair_factor(const Fp2& F, RootP1 r, RootP1 s) {
    if (r.at_infinity && s.at_infinity) throw std::invalid_argument("curve is singular");
    if (r.at_infinity) return Poly{{F.neg(s.v), F.one()}};
    if (s.at_infinity) return Poly{{F.neg(r.v), F.one()}};
    Poly out;
    out.c = {F.mul(r.v, s.v), F.neg(F.add(r.v, s.v)), F.one()};
    return out;
}

}  // namespace

std::vector<QuadraticSplitting> splittings(const Fp2& F, const HyperellipticCurve& C) {
    if (C.genus != 2 || !C.roots_known())
        throw std::invalid_argument("roots not rational");

    std::array<RootP1, 6> r{};
    for (size_t i = 0; i < C.finite_roots.size(); ++i) r[i] = RootP1::finite(C.finite_roots[i]);
    if (C.root_at_infinity) r[5] = RootP1::infinity();

    // Perfect matchings of six items into three unordered pairs: item 0 pairs
    // with any of the rest, then the least remaining item pairs with one of
    // the other three.
    std::vector<QuadraticSplitting> out;
    out.reserve(15);
    for (int i = 1; i < 6; ++i) {
        std::array<int, 4> rest{};
        int n = 0;
        for (int k = 1; k < 6; ++k)
            if (k != i) rest[n++] = k;
        for (int j = 1; j < 4; ++j) {
            QuadraticSplitting s;
            s.g[0] = pair_factor(F, r[0], r[i]);
            s.g[1] = pair_factor(F, r[rest[0]], r[rest[j]]);
            int o1 = -1, o2 = -1;
            for (int k = 1; k < 4; ++k)
                if (k != j) (o1 < 0 ? o1 : o2) = k;
            s.g[2] = pair_factor(F, r[rest[o1]], r[rest[o2]]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

Fp2El splitting_delta(const Fp2& F, const QuadraticSplitting& s) {
    std::array<std::array<Fp2El, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = poly_coeff(s.g[i], 2 - j);
    auto det2 = [&](Fp2El a, Fp2El b, Fp2El c, Fp2El d) {
        return F.sub(F.mul(a, d), F.mul(b, c));
    };
    Fp2El det = F.mul(m[0][0], det2(m[1][1], m[1][2], m[2][1], m[2][2]));
    det = F.sub(det, F.mul(m[0][1], det2(m[1][0], m[1][2], m[2][0], m[2][2])));
    det = F.add(det, F.mul(m[0][2], det2(m[1][0], m[1][1], m[2][0], m[2][1])));
    return det;
}

RichelotResult richelot_codomain(const Fp2& F, const QuadraticSplitting& s) {
    Fp2El delta = splitting_delta(F, s);
    if (F.is_zero(delta)) return SplitProduct{};

    auto bracket = [&](const Poly& a, const Poly& b) {
        return poly_sub(F, poly_mul(F, poly_derivative(F, a), b),
                        poly_mul(F, a, poly_derivative(F, b)));
    };
    std::array<Poly, 3> h = {bracket(s.g[1], s.g[2]), bracket(s.g[2], s.g[0]),
                             bracket(s.g[0], s.g[1])};

    Poly prod = poly_mul(F, poly_mul(F, h[0], h[1]), h[2]);
    if ((prod.deg() != 5 && prod.deg() != 6) || !poly_squarefree(F, prod))
        throw std::runtime_error("unexpected degeneration");

    // With deg(prod) in {5,6} each H_i has degree 1 or 2.
    std::vector<Fp2El> roots;
    bool rational = true;
    for (const Poly& hi : h) {
        auto r = quadratic_roots(F, hi);
        if (r.size() != static_cast<size_t>(hi.deg())) rational = false;
        roots.insert(roots.end(), r.begin(), r.end());
    }

    HyperellipticCurve C = curve_from_poly(F, F.inv(delta), prod, 2);
    if (rational) {
        std::sort(roots.begin(), roots.end());
        C.finite_roots = std::move(roots);
        C.root_at_infinity = prod.deg() == 5;
    }
    return C;
}

SplittingDiagnostics diagnostics(const Fp2& F, const std::array<Fp2El, 5>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw std::invalid_argument("singular configuration");
    auto d = [&](Fp2El x, Fp2El y) { return F.sub(x, y); };
    SplittingDiagnostics out;
    out.d1 = F.mul(F.mul(d(a[1], a[3]), d(a[1], a[4])), F.mul(d(a[2], a[3]), d(a[2], a[4])));
    out.d2 = F.mul(d(a[0], a[3]), d(a[0], a[4]));
    out.d3 = F.mul(d(a[0], a[1]), d(a[0], a[2]));
    return out;
}

}  // namespace ssg2
