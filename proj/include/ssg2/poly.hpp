#pragma once

// Dense univariate polynomials over F_{p^2}.  Coefficient k is the x^k term;
// the zero polynomial has an empty coefficient vector and degree -1.  All
// degrees in play stay small (the largest is f^((p-1)/2) for a degree-10 f),
// so schoolbook multiplication and binary powering are enough.

#include "ssg2/fp2.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace ssg2 {

struct Poly {
    std::vector<Fp2El> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

void poly_trim(Poly& f);

Poly poly_one(const Fp2& F);
// Coefficients in ascending degree order, reduced via from_int.
Poly make_poly(const Fp2& F, std::initializer_list<int64_t> ascending);

Fp2El poly_coeff(const Poly& f, size_t k);
Fp2El poly_lead(const Poly& f);  // zero for the zero polynomial

Poly poly_add(const Fp2& F, const Poly& f, const Poly& g);
Poly poly_sub(const Fp2& F, const Poly& f, const Poly& g);
Poly poly_scale(const Fp2& F, const Poly& f, Fp2El s);
Poly poly_mul(const Fp2& F, const Poly& f, const Poly& g);
Poly poly_pow(const Fp2& F, Poly f, uint64_t e);
Poly poly_derivative(const Fp2& F, const Poly& f);
Fp2El poly_eval(const Fp2& F, const Poly& f, Fp2El x);
Poly poly_from_roots(const Fp2& F, std::span<const Fp2El> roots);

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(const Fp2& F, Poly a, Poly b);
bool poly_squarefree(const Fp2& F, const Poly& f);

// Roots in F_{p^2} of a nonzero polynomial of degree <= 2, as a multiset
// (a double root appears twice, a non-split quadratic yields no roots).
std::vector<Fp2El> quadratic_roots(const Fp2& F, const Poly& g);

std::string poly_to_string(const Fp2& F, const Poly& f);

}  // namespace ssg2
