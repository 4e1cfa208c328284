#pragma once

// Curve models over F_{p^2}: Legendre elliptic curves and hyperelliptic
// curves y^2 = c*f(x) of genus 1..4, plus the two independent superspecial /
// supersingular tests used throughout:
//
//   * the g x g Cartier-Manin matrix M_{ij} = coeff_{i*p-j}((c f)^((p-1)/2)),
//     whose vanishing characterizes superspeciality, and
//   * exact point counting over F_{p^2} by a quadratic-character sum,
//     which yields the maximal / minimal classification against the
//     Hasse-Weil bounds p^2 + 1 +- 2gp.

#include "ssg2/fp2.hpp"
#include "ssg2/poly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace ssg2 {

// A point of P^1(F_{p^2}): a field element or the point at infinity.
struct RootP1 {
    bool at_infinity = false;
    Fp2El v{};

    static RootP1 infinity() { return {true, {}}; }
    static RootP1 finite(Fp2El x) { return {false, x}; }

    friend bool operator==(const RootP1&, const RootP1&) = default;
};

// y^2 = x(x-1)(x-t), nonsingular iff t is not 0 or 1.
struct LegendreCurve {
    Fp2El t;
};

// y^2 = c * f(x) with f squarefree of degree 2g+1 or 2g+2.  finite_roots
// lists the roots of f when they are known to lie in F_{p^2} (together with
// root_at_infinity they then account for all 2g+2 Weierstrass points);
// curves built from a bare polynomial leave it empty.
struct HyperellipticCurve {
    Fp2El c;
    Poly f;
    int genus = 0;
    std::vector<Fp2El> finite_roots;
    bool root_at_infinity = false;

    bool roots_known() const {
        return finite_roots.size() + (root_at_infinity ? 1 : 0) ==
               static_cast<size_t>(2 * genus + 2);
    }
};

HyperellipticCurve curve_from_roots(const Fp2& F, Fp2El c, const std::vector<RootP1>& roots,
                                    int genus);
HyperellipticCurve curve_from_poly(const Fp2& F, Fp2El c, Poly f, int genus);

// y^2 = (x^2-1)(x^2-a_1)...(x^2-a_k), genus k+1; params must be nonzero,
// distinct and different from 1.
HyperellipticCurve even_model(const Fp2& F, const std::vector<Fp2El>& params);

HyperellipticCurve legendre_model(const Fp2& F, const LegendreCurve& E);

struct CartierManinMatrix {
    int g = 0;
    std::array<std::array<Fp2El, 4>, 4> m{};

    Fp2El at(int i, int j) const { return m[i - 1][j - 1]; }  // 1-based
    bool is_zero() const;
};

CartierManinMatrix cartier_manin(const Fp2& F, const HyperellipticCurve& C);
bool is_superspecial(const Fp2& F, const HyperellipticCurve& C);

// H_p(t) = sum_{i<=m} binom(m,i)^2 t^i with m = (p-1)/2; the Legendre curve
// with parameter t is supersingular iff H_p(t) = 0.
Poly hasse_polynomial(const Fp2& F);
bool is_supersingular_legendre(const Fp2& F, const LegendreCurve& E);

// chi on all of F_{p^2}, tabulated once per prime (size q) and shared
// read-only by the counting loops.
class QuadCharTable {
public:
    explicit QuadCharTable(const Fp2& F);
    int chi(Fp2El x) const { return table_[x.c0 + (uint64_t)x.c1 * p_]; }

private:
    uint32_t p_;
    std::vector<int8_t> table_;
};

// Number of F_{p^2}-points of the smooth projective model:
// sum_x (1 + chi(c f(x))) plus 1 point at infinity for odd-degree f, or
// 2 resp. 0 for even-degree f as c*lead(f) is a square or not.
uint64_t count_points(const Fp2& F, const HyperellipticCurve& C,
                      const QuadCharTable* table = nullptr);

enum class CurveClass { Maximal, Minimal, Neither };
const char* to_string(CurveClass k);

struct Classification {
    CurveClass kind = CurveClass::Neither;
    uint64_t point_count = 0;

    friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Fp2& F, const HyperellipticCurve& C,
                        const QuadCharTable* table = nullptr);

// The decomposed genus-2 curve y^2 = (x^2-1)(x^2-a)(x^2-b) whose Jacobian is
// (2,2)-isogenous to the product of the Legendre curves with parameters
// t1, t2; it is superspecial iff both of those curves are supersingular.
std::pair<Fp2El, Fp2El> glue_parameters(const Fp2& F, Fp2El t1, Fp2El t2);
HyperellipticCurve glue_from_legendre_pair(const Fp2& F, Fp2El t1, Fp2El t2);

}  // namespace ssg2
