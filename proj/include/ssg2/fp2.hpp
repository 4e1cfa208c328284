#pragma once

// Exact arithmetic in F_p and F_{p^2} for word-size odd primes.
//
// F_{p^2} is realized as F_p[u]/(u^2 - n) where n is the smallest positive
// quadratic non-residue mod p, so encodings are reproducible across runs.
// An element is a pair (c0, c1) meaning c0 + c1*u, both coordinates reduced
// to [0, p).  Canonical choices (square roots, sorted triples, census keys)
// use the integer key c0 + c1*p; for reduced coordinates that order is
// lexicographic on (c1, c0), which is what operator< implements.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ssg2 {

inline constexpr uint32_t kMaxPrime = 1u << 20;

bool is_prime_u32(uint32_t n);

// The prime field F_p, p an odd prime with 3 <= p < 2^20.
class PrimeField {
public:
    explicit PrimeField(uint32_t p);

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t inv(uint32_t a) const;  // throws on a == 0
    uint32_t from_int(int64_t v) const;

    // Quadratic character of F_p: -1, 0 or +1.
    int legendre(uint32_t a) const;

private:
    uint32_t p_;
};

struct Fp2El {
    uint32_t c0 = 0;
    uint32_t c1 = 0;

    friend bool operator==(const Fp2El&, const Fp2El&) = default;
    // Key order c0 + c1*p, valid for reduced coordinates of a common field.
    friend bool operator<(const Fp2El& a, const Fp2El& b) {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c0 < b.c0;
    }
    friend bool operator>(const Fp2El& a, const Fp2El& b) { return b < a; }
};

// Context for F_{p^2} = F_p[u]/(u^2 - n).  Immutable after construction;
// all operations are pure, so contexts and elements can be shared freely
// across threads.
class Fp2 {
public:
    explicit Fp2(uint32_t p);

    const PrimeField& base() const { return fp_; }
    uint32_t p() const { return fp_.p(); }
    uint64_t q() const { return (uint64_t)fp_.p() * fp_.p(); }
    uint32_t nonresidue() const { return n_; }

    Fp2El zero() const { return {0, 0}; }
    Fp2El one() const { return {1, 0}; }
    Fp2El gen_u() const { return {0, 1}; }
    Fp2El from_base(uint32_t a) const { return {a % fp_.p(), 0}; }
    Fp2El from_int(int64_t v) const { return {fp_.from_int(v), 0}; }
    Fp2El make(int64_t a, int64_t b) const { return {fp_.from_int(a), fp_.from_int(b)}; }

    // Bijection between F_{p^2} and [0, q): key(x) = c0 + c1*p.
    uint64_t key(Fp2El x) const { return x.c0 + (uint64_t)x.c1 * fp_.p(); }
    Fp2El element(uint64_t k) const {
        return {static_cast<uint32_t>(k % fp_.p()), static_cast<uint32_t>(k / fp_.p())};
    }

    bool is_zero(Fp2El x) const { return x.c0 == 0 && x.c1 == 0; }
    bool is_one(Fp2El x) const { return x.c0 == 1 && x.c1 == 0; }
    bool in_base_field(Fp2El x) const { return x.c1 == 0; }

    Fp2El add(Fp2El x, Fp2El y) const { return {fp_.add(x.c0, y.c0), fp_.add(x.c1, y.c1)}; }
    Fp2El sub(Fp2El x, Fp2El y) const { return {fp_.sub(x.c0, y.c0), fp_.sub(x.c1, y.c1)}; }
    Fp2El neg(Fp2El x) const { return {fp_.neg(x.c0), fp_.neg(x.c1)}; }
    Fp2El mul(Fp2El x, Fp2El y) const {
        // (a0 + a1 u)(b0 + b1 u) = a0 b0 + n a1 b1 + (a0 b1 + a1 b0) u
        uint32_t t0 = fp_.add(fp_.mul(x.c0, y.c0), fp_.mul(n_, fp_.mul(x.c1, y.c1)));
        uint32_t t1 = fp_.add(fp_.mul(x.c0, y.c1), fp_.mul(x.c1, y.c0));
        return {t0, t1};
    }
    Fp2El sqr(Fp2El x) const { return mul(x, x); }
    Fp2El inv(Fp2El x) const;  // throws "division by zero" on x == 0
    Fp2El div(Fp2El x, Fp2El y) const { return mul(x, inv(y)); }
    Fp2El pow(Fp2El x, uint64_t e) const;

    // Frobenius x -> x^p; fixes exactly the elements with c1 == 0.
    Fp2El frobenius(Fp2El x) const { return {x.c0, fp_.neg(x.c1)}; }

    // Norm to F_p: x * x^p = c0^2 - n c1^2.
    uint32_t norm(Fp2El x) const {
        return fp_.sub(fp_.mul(x.c0, x.c0), fp_.mul(n_, fp_.mul(x.c1, x.c1)));
    }

    // Quadratic character chi of F_{p^2}: -1, 0 or +1.  chi(x) for x != 0
    // equals the Legendre symbol of the norm of x in F_p.
    int chi(Fp2El x) const;

    // 0 counts as a square and a fourth power; nonzero values are tested by
    // x^((q-1)/2) resp. x^((q-1)/4).
    bool is_square(Fp2El x) const { return chi(x) >= 0; }
    bool is_fourth_power(Fp2El x) const;

    // Tonelli-Shanks in F_{p^2}.  Returns the canonical root (the smaller of
    // {r, -r} in key order) or nullopt when x is not a square.
    std::optional<Fp2El> sqrt(Fp2El x) const;

    // Textual encoding: "c0" when c1 == 0, else "c0+c1*u".
    std::string to_string(Fp2El x) const;
    Fp2El parse(std::string_view s) const;  // throws std::invalid_argument

private:
    PrimeField fp_;
    uint32_t n_;        // smallest positive non-residue mod p
    uint64_t q1_half_;  // (q-1)/2
    uint32_t ts_s_ = 0; // q-1 = 2^s * m with m odd
    uint64_t ts_m_ = 0;
    Fp2El ts_z_{};      // fixed quadratic non-residue of F_{p^2}
};

}  // namespace ssg2
