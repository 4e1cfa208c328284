#pragma once

// Richelot isogenies of genus-2 curves.  A quadratic splitting groups the six
// Weierstrass roots (one possibly at infinity) into three monic factors
// G_1 G_2 G_3 = f of degree <= 2; there are exactly 15.  With
//
//   delta = det(g_{i,2}, g_{i,1}, g_{i,0})      (rows i = 1..3)
//   H_1 = G_2' G_3 - G_2 G_3'   (and cyclically for H_2, H_3)
//
// the quotient of Jac(C) by the corresponding (2,2)-subgroup is the Jacobian
// of  C': y^2 = delta^{-1} H_1 H_2 H_3  when delta != 0, and a product of two
// elliptic curves when delta = 0.

#include "ssg2/curves.hpp"
#include "ssg2/poly.hpp"

#include <array>
#include <variant>
#include <vector>

namespace ssg2 {

struct QuadraticSplitting {
    std::array<Poly, 3> g;  // monic, degree 1 or 2
};

// All 15 splittings of a genus-2 curve whose roots are known in
// P^1(F_{p^2}); the pair containing the infinite root yields a linear factor.
// Throws "roots not rational" when the root list is unavailable.
std::vector<QuadraticSplitting> splittings(const Fp2& F, const HyperellipticCurve& C);

Fp2El splitting_delta(const Fp2& F, const QuadraticSplitting& s);

struct SplitProduct {};
using RichelotResult = std::variant<HyperellipticCurve, SplitProduct>;

// The codomain curve y^2 = delta^{-1} H_1 H_2 H_3 (with its roots attached
// when all three H_i split over F_{p^2}), or SplitProduct when delta = 0.
RichelotResult richelot_codomain(const Fp2& F, const QuadraticSplitting& s);

// For five finite roots (a_1..a_5) and the distinguished splitting
// G_1 = X - a_1 (paired with the root at infinity), G_2 = (X-a_2)(X-a_3),
// G_3 = (X-a_4)(X-a_5):
//   D_1 = (a_2-a_4)(a_2-a_5)(a_3-a_4)(a_3-a_5)
//   D_2 = (a_1-a_4)(a_1-a_5)
//   D_3 = (a_1-a_2)(a_1-a_3)
// and delta of that splitting equals -(D_2 - D_3).
struct SplittingDiagnostics {
    Fp2El d1, d2, d3;
};

SplittingDiagnostics diagnostics(const Fp2& F, const std::array<Fp2El, 5>& a);

}  // namespace ssg2
