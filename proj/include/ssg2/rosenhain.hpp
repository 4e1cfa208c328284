#pragma once

// Rosenhain forms of genus-2 curves.  A curve with Weierstrass roots
// {a_1..a_6} in P^1(F_{p^2}) is carried to y^2 = x(x-1)(x-l)(x-m)(x-n) by the
// Moebius map sending a chosen (a_1, a_2, a_3) to (0, 1, oo); the remaining
// roots map to the Rosenhain invariants, and the twist scalar
//
//     kappa = c (a_1-a_2)(a_3-a_4)(a_3-a_5)(a_3-a_6)
//
// (factors containing oo excluded) is a square exactly when the isomorphism
// is defined over F_{p^2}.  There are at most 120 Rosenhain forms, one per
// ordered choice of (a_1, a_2, a_3); we canonicalize every form to a
// key-sorted triple so that the orbit has exactly 120/|RA(C)| members and
// orbit equality decides isomorphism over the algebraic closure.  The census
// presents each class by its canonical key, the lexicographic minimum of the
// orbit (a convention of this toolkit; any fixed form would do).

#include "ssg2/curves.hpp"
#include "ssg2/fp2.hpp"

#include <array>
#include <string>
#include <vector>

namespace ssg2 {

enum class TwistClass { Trivial, NonTrivial };

struct RosenhainTriple {
    Fp2El lambda{}, mu{}, nu{};
    TwistClass twist = TwistClass::Trivial;
};

// Throws "singular configuration" unless {0, 1, lambda, mu, nu} are
// pairwise distinct.
void validate_triple(const Fp2& F, const RosenhainTriple& t);

struct CanonicalKey {
    std::array<Fp2El, 3> v{};

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) { return a.v < b.v; }
};

struct RosenhainForm {
    RosenhainTriple triple;
    Fp2El kappa;
};

// X -> (aX + b)/(cX + d) with ad - bc != 0, acting on P^1.
struct Mobius {
    Fp2El a, b, c, d;
};

Mobius mobius_to_standard(const Fp2& F, RootP1 r0, RootP1 r1, RootP1 rinf);
RootP1 mobius_apply(const Fp2& F, const Mobius& M, RootP1 x);

// Rosenhain form for the ordered choice (roots[o[0]], roots[o[1]], roots[o[2]])
// of (a_1, a_2, a_3); the remaining roots in input order become (l, m, n).
// The twist flag of the result records the square class of kappa.
RosenhainForm to_rosenhain(const Fp2& F, const std::array<RootP1, 6>& roots, Fp2El c,
                           const std::array<int, 3>& ordering);

// All Rosenhain forms of the configuration, each canonicalized to a
// key-sorted triple; deduplicated and returned in increasing order.
std::vector<std::array<Fp2El, 3>> orbit_of_roots(const Fp2& F,
                                                 const std::array<RootP1, 6>& roots);
CanonicalKey canonical_key_of_roots(const Fp2& F, const std::array<RootP1, 6>& roots);

std::array<RootP1, 6> rosenhain_roots(const RosenhainTriple& t);
HyperellipticCurve rosenhain_curve(const Fp2& F, const RosenhainTriple& t);

std::vector<RosenhainTriple> orbit_120(const Fp2& F, const RosenhainTriple& t);
CanonicalKey canonical_key(const Fp2& F, const RosenhainTriple& t);

// True iff the nine values l, m, n, 1-l, 1-m, 1-n, l-m, m-n, n-l are all
// squares in F_{p^2}; then every Rosenhain form of the curve is reached by a
// transformation defined over F_{p^2}.
bool all_rosenhain_defined_over(const Fp2& F, const RosenhainTriple& t);

// True iff lmn, (1-l)(1-m)(1-n), l(l-1)(l-m)(l-n), m(m-1)(m-l)(m-n) and
// n(n-1)(n-l)(n-m) are all fourth powers in F_{p^2}.
bool five_products_fourth_powers(const Fp2& F, const RosenhainTriple& t);

// "(l; m; n)" with each element in the field's textual encoding.
std::string triple_to_string(const Fp2& F, const RosenhainTriple& t);
std::string key_to_string(const Fp2& F, const CanonicalKey& k);
RosenhainTriple parse_triple(const Fp2& F, std::string_view s);

}  // namespace ssg2
