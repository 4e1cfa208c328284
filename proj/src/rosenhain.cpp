#include "ssg2/rosenhain.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssg2 {

void validate_triple(const Fp2& F, const RosenhainTriple& t) {
    std::array<Fp2El, 5> pts = {F.zero(), F.one(), t.lambda, t.mu, t.nu};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("singular configuration");
}

Mobius mobius_to_standard(const Fp2& F, RootP1 r0, RootP1 r1, RootP1 rinf) {
    // M(X) = k (X - r0)/(X - rinf) with k fixed by M(r1) = 1; each infinite
    // input degenerates the corresponding linear factor to a constant.
    if (r0.at_infinity) {
        // (r1 - rinf)/(X - rinf)
        return {F.zero(), F.sub(r1.v, rinf.v), F.one(), F.neg(rinf.v)};
    }
    if (r1.at_infinity) {
        // (X - r0)/(X - rinf)
        return {F.one(), F.neg(r0.v), F.one(), F.neg(rinf.v)};
    }
    if (rinf.at_infinity) {
        // (X - r0)/(r1 - r0)
        Fp2El k = F.inv(F.sub(r1.v, r0.v));
        return {k, F.neg(F.mul(k, r0.v)), F.zero(), F.one()};
    }
    Fp2El k = F.div(F.sub(r1.v, rinf.v), F.sub(r1.v, r0.v));
    return {k, F.neg(F.mul(k, r0.v)), F.one(), F.neg(rinf.v)};
}

RootP1 mobius_apply(const Fp2& F, const Mobius& M, RootP1 x) {
    Fp2El num, den;
    if (x.at_infinity) {
        num = M.a;
        den = M.c;
    } else {
        num = F.add(F.mul(M.a, x.v), M.b);
        den = F.add(F.mul(M.c, x.v), M.d);
    }
    if (F.is_zero(den)) return RootP1::infinity();
    return RootP1::finite(F.div(num, den));
}

RosenhainForm to_rosenhain(const Fp2& F, const std::array<RootP1, 6>& roots, Fp2El c,
                           const std::array<int, 3>& ordering) {
    int inf_count = 0;
    for (const RootP1& r : roots) inf_count += r.at_infinity ? 1 : 0;
    if (inf_count > 1) throw std::invalid_argument("singular configuration");
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw std::invalid_argument("singular configuration");
    if (F.is_zero(c)) throw std::invalid_argument("singular configuration");

    const RootP1& a1 = roots[ordering[0]];
    const RootP1& a2 = roots[ordering[1]];
    const RootP1& a3 = roots[ordering[2]];
    Mobius M = mobius_to_standard(F, a1, a2, a3);

    std::array<Fp2El, 3> image;
    int out = 0;
    for (int i = 0; i < 6; ++i) {
        if (i == ordering[0] || i == ordering[1] || i == ordering[2]) continue;
        RootP1 y = mobius_apply(F, M, roots[i]);
        if (y.at_infinity) throw std::logic_error("cross-ratio sent a root to infinity");
        image[out++] = y.v;
    }

    // kappa = c (a1-a2)(a3-a4)(a3-a5)(a3-a6), factors containing oo dropped.
    Fp2El kappa = c;
    if (!a1.at_infinity && !a2.at_infinity) kappa = F.mul(kappa, F.sub(a1.v, a2.v));
    if (!a3.at_infinity) {
        for (int i = 0; i < 6; ++i) {
            if (i == ordering[0] || i == ordering[1] || i == ordering[2]) continue;
            if (!roots[i].at_infinity) kappa = F.mul(kappa, F.sub(a3.v, roots[i].v));
        }
    }

    RosenhainForm form;
    form.triple = {image[0], image[1], image[2],
                   F.is_square(kappa) ? TwistClass::Trivial : TwistClass::NonTrivial};
    form.kappa = kappa;
    return form;
}

std::vector<std::array<Fp2El, 3>> orbit_of_roots(const Fp2& F,
                                                 const std::array<RootP1, 6>& roots) {
    std::vector<std::array<Fp2El, 3>> orbit;
    orbit.reserve(120);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                if (i == j || j == k || i == k) continue;
                RosenhainForm f = to_rosenhain(F, roots, F.one(), {i, j, k});
                std::array<Fp2El, 3> t = {f.triple.lambda, f.triple.mu, f.triple.nu};
                std::sort(t.begin(), t.end());
                orbit.push_back(t);
            }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

CanonicalKey canonical_key_of_roots(const Fp2& F, const std::array<RootP1, 6>& roots) {
    std::array<Fp2El, 3> best{};
    bool have = false;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                if (i == j || j == k || i == k) continue;
                RosenhainForm f = to_rosenhain(F, roots, F.one(), {i, j, k});
                std::array<Fp2El, 3> t = {f.triple.lambda, f.triple.mu, f.triple.nu};
                std::sort(t.begin(), t.end());
                if (!have || t < best) {
                    best = t;
                    have = true;
                }
            }
    return CanonicalKey{best};
}

std::array<RootP1, 6> rosenhain_roots(const RosenhainTriple& t) {
    return {RootP1::finite({0, 0}), RootP1::finite({1, 0}), RootP1::infinity(),
            RootP1::finite(t.lambda), RootP1::finite(t.mu), RootP1::finite(t.nu)};
}

HyperellipticCurve rosenhain_curve(const Fp2& F, const RosenhainTriple& t) {
    validate_triple(F, t);
    auto r = rosenhain_roots(t);
    return curve_from_roots(F, F.one(), std::vector<RootP1>(r.begin(), r.end()), 2);
}

std::vector<RosenhainTriple> orbit_120(const Fp2& F, const RosenhainTriple& t) {
    validate_triple(F, t);
    std::vector<RosenhainTriple> out;
    for (const auto& a : orbit_of_roots(F, rosenhain_roots(t)))
        out.push_back({a[0], a[1], a[2], TwistClass::Trivial});
    return out;
}

CanonicalKey canonical_key(const Fp2& F, const RosenhainTriple& t) {
    validate_triple(F, t);
    return canonical_key_of_roots(F, rosenhain_roots(t));
}

bool all_rosenhain_defined_over(const Fp2& F, const RosenhainTriple& t) {
    const Fp2El one = F.one();
    std::array<Fp2El, 9> vals = {
        t.lambda,
        t.mu,
        t.nu,
        F.sub(one, t.lambda),
        F.sub(one, t.mu),
        F.sub(one, t.nu),
        F.sub(t.lambda, t.mu),
        F.sub(t.mu, t.nu),
        F.sub(t.nu, t.lambda),
    };
    for (Fp2El v : vals)
        if (!F.is_square(v)) return false;
    return true;
}

bool five_products_fourth_powers(const Fp2& F, const RosenhainTriple& t) {
    const Fp2El one = F.one();
    auto diff_product = [&](Fp2El x, Fp2El y, Fp2El z) {
        // x(x-1)(x-y)(x-z)
        return F.mul(F.mul(x, F.sub(x, one)), F.mul(F.sub(x, y), F.sub(x, z)));
    };
    std::array<Fp2El, 5> vals = {
        F.mul(t.lambda, F.mul(t.mu, t.nu)),
        F.mul(F.sub(one, t.lambda), F.mul(F.sub(one, t.mu), F.sub(one, t.nu))),
        diff_product(t.lambda, t.mu, t.nu),
        diff_product(t.mu, t.lambda, t.nu),
        diff_product(t.nu, t.lambda, t.mu),
    };
    for (Fp2El v : vals)
        if (!F.is_fourth_power(v)) return false;
    return true;
}

std::string triple_to_string(const Fp2& F, const RosenhainTriple& t) {
    return "(" + F.to_string(t.lambda) + "; " + F.to_string(t.mu) + "; " + F.to_string(t.nu) +
           ")";
}

std::string key_to_string(const Fp2& F, const CanonicalKey& k) {
    return triple_to_string(F, {k.v[0], k.v[1], k.v[2], TwistClass::Trivial});
}

RosenhainTriple parse_triple(const Fp2& F, std::string_view s) {
    size_t open = s.find('(');
    size_t close = s.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close <= open)
        throw std::invalid_argument("bad triple: '" + std::string(s) + "'");
    std::string_view inner = s.substr(open + 1, close - open - 1);

    std::array<Fp2El, 3> vals{};
    size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        size_t sep = i < 2 ? inner.find(';', start) : inner.size();
        if (sep == std::string_view::npos)
            throw std::invalid_argument("bad triple: '" + std::string(s) + "'");
        vals[i] = F.parse(inner.substr(start, sep - start));
        start = sep + 1;
    }
    return {vals[0], vals[1], vals[2], TwistClass::Trivial};
}

}  // namespace ssg2
