#include "ssg2/poly.hpp"

#include <stdexcept>

namespace ssg2 {

void poly_trim(Poly& f) {
    while (!f.c.empty() && f.c.back() == Fp2El{0, 0}) f.c.pop_back();
}

Poly poly_one(const Fp2& F) { return Poly{{F.one()}}; }

Poly make_poly(const Fp2& F, std::initializer_list<int64_t> ascending) {
    Poly f;
    f.c.reserve(ascending.size());
    for (int64_t v : ascending) f.c.push_back(F.from_int(v));
    poly_trim(f);
    return f;
}

Fp2El poly_coeff(const Poly& f, size_t k) {
    return k < f.c.size() ? f.c[k] : Fp2El{0, 0};
}

Fp2El poly_lead(const Poly& f) { return f.c.empty() ? Fp2El{0, 0} : f.c.back(); }

Poly poly_add(const Fp2& F, const Poly& f, const Poly& g) {
    Poly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(poly_coeff(f, i), poly_coeff(g, i));
    poly_trim(r);
    return r;
}

Poly poly_sub(const Fp2& F, const Poly& f, const Poly& g) {
    Poly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), F.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(poly_coeff(f, i), poly_coeff(g, i));
    poly_trim(r);
    return r;
}

Poly poly_scale(const Fp2& F, const Poly& f, Fp2El s) {
    Poly r = f;
    for (auto& ci : r.c) ci = F.mul(ci, s);
    poly_trim(r);
    return r;
}

Poly poly_mul(const Fp2& F, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    Poly r;
    r.c.assign(f.c.size() + g.c.size() - 1, F.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == Fp2El{0, 0}) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(f.c[i], g.c[j]));
    }
    poly_trim(r);
    return r;
}

Poly poly_pow(const Fp2& F, Poly f, uint64_t e) {
    Poly r = poly_one(F);
    while (e) {
        if (e & 1) r = poly_mul(F, r, f);
        e >>= 1;
        if (e) f = poly_mul(F, f, f);
    }
    return r;
}

Poly poly_derivative(const Fp2& F, const Poly& f) {
    Poly r;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t k = 1; k < f.c.size(); ++k) {
        Fp2El kk = F.from_base(static_cast<uint32_t>(k % F.p()));
        r.c[k - 1] = F.mul(kk, f.c[k]);
    }
    poly_trim(r);
    return r;
}

Fp2El poly_eval(const Fp2& F, const Poly& f, Fp2El x) {
    Fp2El r = F.zero();
    for (size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

Poly poly_from_roots(const Fp2& F, std::span<const Fp2El> roots) {
    Poly r = poly_one(F);
    for (Fp2El a : roots) {
        Poly lin;
        lin.c = {F.neg(a), F.one()};
        r = poly_mul(F, r, lin);
    }
    return r;
}

namespace {

Poly poly_rem(const Fp2& F, Poly a, const Poly& b) {
    Fp2El lead_inv = F.inv(poly_lead(b));
    while (a.deg() >= b.deg() && !a.is_zero()) {
        Fp2El coef = F.mul(poly_lead(a), lead_inv);
        size_t shift = a.c.size() - b.c.size();
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[i + shift] = F.sub(a.c[i + shift], F.mul(coef, b.c[i]));
        poly_trim(a);
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Fp2& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = poly_scale(F, a, F.inv(poly_lead(a)));
    return a;
}

bool poly_squarefree(const Fp2& F, const Poly& f) {
    if (f.deg() <= 0) return !f.is_zero();
    Poly d = poly_derivative(F, f);
    if (d.is_zero()) return false;  // p-th power factor
    return poly_gcd(F, f, d).deg() == 0;
}

std::vector<Fp2El> quadratic_roots(const Fp2& F, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("quadratic_roots: zero polynomial");
    if (g.deg() > 2) throw std::invalid_argument("quadratic_roots: degree exceeds 2");
    if (g.deg() == 0) return {};
    if (g.deg() == 1) return {F.neg(F.div(g.c[0], g.c[1]))};

    Fp2El a = g.c[2], b = g.c[1], c = g.c[0];
    Fp2El disc = F.sub(F.sqr(b), F.mul(F.from_int(4), F.mul(a, c)));
    auto s = F.sqrt(disc);
    if (!s) return {};
    Fp2El inv2a = F.inv(F.add(a, a));
    return {F.mul(F.sub(*s, b), inv2a), F.mul(F.sub(F.neg(b), *s), inv2a)};
}

std::string poly_to_string(const Fp2& F, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i] == Fp2El{0, 0}) continue;
        if (!out.empty()) out += " + ";
        bool base_one = F.is_one(f.c[i]) && i > 0;
        if (!base_one) {
            bool needs_parens = f.c[i].c1 != 0;
            out += needs_parens ? "(" + F.to_string(f.c[i]) + ")" : F.to_string(f.c[i]);
            if (i > 0) out += "*";
        }
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace ssg2
