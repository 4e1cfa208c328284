#include "ssg2/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssg2 {

namespace {

void check_genus(int genus) {
    if (genus < 1 || genus > 4) throw std::invalid_argument("unsupported genus");
}

}  // namespace

HyperellipticCurve curve_from_roots(const Fp2& F, Fp2El c, const std::vector<RootP1>& roots,
                                    int genus) {
    check_genus(genus);
    if (F.is_zero(c)) throw std::invalid_argument("curve is singular");
    if (roots.size() != static_cast<size_t>(2 * genus + 2))
        throw std::invalid_argument("curve is singular");

    HyperellipticCurve C;
    C.c = c;
    C.genus = genus;
    for (const RootP1& r : roots) {
        if (r.at_infinity) {
            if (C.root_at_infinity) throw std::invalid_argument("curve is singular");
            C.root_at_infinity = true;
        } else {
            C.finite_roots.push_back(r.v);
        }
    }
    for (size_t i = 0; i < C.finite_roots.size(); ++i)
        for (size_t j = i + 1; j < C.finite_roots.size(); ++j)
            if (C.finite_roots[i] == C.finite_roots[j])
                throw std::invalid_argument("curve is singular");
    C.f = poly_from_roots(F, C.finite_roots);
    return C;
}

HyperellipticCurve curve_from_poly(const Fp2& F, Fp2El c, Poly f, int genus) {
    check_genus(genus);
    if (F.is_zero(c)) throw std::invalid_argument("curve is singular");
    if (f.deg() != 2 * genus + 1 && f.deg() != 2 * genus + 2)
        throw std::invalid_argument("curve is singular");
    if (!poly_squarefree(F, f)) throw std::invalid_argument("curve is singular");

    HyperellipticCurve C;
    C.c = c;
    C.f = std::move(f);
    C.genus = genus;
    return C;
}

HyperellipticCurve even_model(const Fp2& F, const std::vector<Fp2El>& params) {
    int genus = static_cast<int>(params.size());
    check_genus(genus);
    // Distinct nonzero parameters (and none equal to 1) make the product of
    // the x^2 - a_i squarefree, so the gcd test is unnecessary here.
    for (size_t i = 0; i < params.size(); ++i) {
        if (F.is_zero(params[i]) || F.is_one(params[i]))
            throw std::invalid_argument("curve is singular");
        for (size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw std::invalid_argument("curve is singular");
    }
    Poly f = make_poly(F, {-1, 0, 1});  // x^2 - 1
    for (Fp2El a : params) {
        Poly quad;
        quad.c = {F.neg(a), F.zero(), F.one()};
        f = poly_mul(F, f, quad);
    }
    HyperellipticCurve C;
    C.c = F.one();
    C.f = std::move(f);
    C.genus = genus;
    return C;
}

HyperellipticCurve legendre_model(const Fp2& F, const LegendreCurve& E) {
    if (F.is_zero(E.t) || F.is_one(E.t))
        throw std::invalid_argument("singular Legendre parameter");
    return curve_from_roots(
        F, F.one(),
        {RootP1::finite(F.zero()), RootP1::finite(F.one()), RootP1::finite(E.t),
         RootP1::infinity()},
        1);
}

bool CartierManinMatrix::is_zero() const {
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (!(m[i][j] == Fp2El{0, 0})) return false;
    return true;
}

CartierManinMatrix cartier_manin(const Fp2& F, const HyperellipticCurve& C) {
    Poly h = poly_pow(F, poly_scale(F, C.f, C.c), (F.p() - 1) / 2);
    CartierManinMatrix M;
    M.g = C.genus;
    for (int i = 1; i <= C.genus; ++i)
        for (int j = 1; j <= C.genus; ++j)
            M.m[i - 1][j - 1] = poly_coeff(h, (size_t)i * F.p() - j);
    return M;
}

bool is_superspecial(const Fp2& F, const HyperellipticCurve& C) {
    return cartier_manin(F, C).is_zero();
}

Poly hasse_polynomial(const Fp2& F) {
    const PrimeField& fp = F.base();
    uint32_t m = (F.p() - 1) / 2;
    Poly h;
    h.c.resize(m + 1);
    uint32_t binom = 1;
    h.c[0] = F.one();
    for (uint32_t i = 1; i <= m; ++i) {
        binom = fp.mul(binom, fp.mul(m - i + 1, fp.inv(i)));
        h.c[i] = F.from_base(fp.mul(binom, binom));
    }
    return h;
}

bool is_supersingular_legendre(const Fp2& F, const LegendreCurve& E) {
    if (F.is_zero(E.t) || F.is_one(E.t))
        throw std::invalid_argument("singular Legendre parameter");
    return F.is_zero(poly_eval(F, hasse_polynomial(F), E.t));
}

QuadCharTable::QuadCharTable(const Fp2& F) : p_(F.p()) {
    table_.assign(F.q(), -1);
    table_[0] = 0;
    for (uint64_t k = 1; k < F.q(); ++k) table_[F.key(F.sqr(F.element(k)))] = 1;
}

uint64_t count_points(const Fp2& F, const HyperellipticCurve& C, const QuadCharTable* table) {
    auto chi = [&](Fp2El x) { return table ? table->chi(x) : F.chi(x); };

    uint64_t count = 0;
    for (uint64_t k = 0; k < F.q(); ++k) {
        Fp2El v = F.mul(C.c, poly_eval(F, C.f, F.element(k)));
        count += static_cast<uint64_t>(1 + chi(v));
    }
    if (C.f.deg() % 2 == 1)
        count += 1;
    else if (chi(F.mul(C.c, poly_lead(C.f))) == 1)
        count += 2;
    return count;
}

const char* to_string(CurveClass k) {
    switch (k) {
        case CurveClass::Maximal: return "maximal";
        case CurveClass::Minimal: return "minimal";
        default: return "neither";
    }
}

Classification classify(const Fp2& F, const HyperellipticCurve& C, const QuadCharTable* table) {
    uint64_t n = count_points(F, C, table);
    uint64_t mid = F.q() + 1;
    uint64_t gap = 2ull * C.genus * F.p();
    Classification out{CurveClass::Neither, n};
    if (n == mid + gap) out.kind = CurveClass::Maximal;
    else if (n == mid - gap) out.kind = CurveClass::Minimal;
    return out;
}

std::pair<Fp2El, Fp2El> glue_parameters(const Fp2& F, Fp2El t1, Fp2El t2) {
    for (Fp2El t : {t1, t2})
        if (F.is_zero(t) || F.is_one(t))
            throw std::invalid_argument("singular Legendre parameter");
    Fp2El b = F.div(t1, t2);
    Fp2El a = F.mul(b, F.div(F.sub(F.one(), t2), F.sub(F.one(), t1)));
    return {a, b};
}

HyperellipticCurve glue_from_legendre_pair(const Fp2& F, Fp2El t1, Fp2El t2) {
    auto [a, b] = glue_parameters(F, t1, t2);
    // The sextic (x^2-1)(x^2-a)(x^2-b) is squarefree iff {1,a,b} are pairwise
    // distinct and a, b nonzero.
    if (a == b || F.is_zero(a) || F.is_zero(b) || F.is_one(a) || F.is_one(b))
        throw std::invalid_argument("degenerate gluing");

    auto sa = F.sqrt(a);
    auto sb = F.sqrt(b);
    if (sa && sb) {
        return curve_from_roots(F, F.one(),
                                {RootP1::finite(F.one()), RootP1::finite(F.from_int(-1)),
                                 RootP1::finite(*sa), RootP1::finite(F.neg(*sa)),
                                 RootP1::finite(*sb), RootP1::finite(F.neg(*sb))},
                                2);
    }
    return even_model(F, {a, b});
}

}  // namespace ssg2
