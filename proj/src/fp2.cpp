#include "ssg2/fp2.hpp"

#include <cctype>
#include <stdexcept>

namespace ssg2 {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; (uint64_t)d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p < 3 || p >= kMaxPrime || !is_prime_u32(p))
        throw std::invalid_argument("not an odd prime in the supported range: " +
                                    std::to_string(p));
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("division by zero");
    return pow(a, p_ - 2);
}

uint32_t PrimeField::from_int(int64_t v) const {
    int64_t r = v % (int64_t)p_;
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

int PrimeField::legendre(uint32_t a) const {
    a %= p_;
    if (a == 0) return 0;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

Fp2::Fp2(uint32_t p) : fp_(p) {
    n_ = 2;
    while (fp_.legendre(n_) != -1) ++n_;

    uint64_t q1 = q() - 1;
    q1_half_ = q1 / 2;
    ts_m_ = q1;
    while ((ts_m_ & 1) == 0) {
        ts_m_ >>= 1;
        ++ts_s_;
    }
    // Deterministic non-residue of F_{p^2}: first element in key order.
    for (uint64_t k = 2;; ++k) {
        Fp2El z = element(k);
        if (chi(z) == -1) {
            ts_z_ = z;
            break;
        }
    }
}

Fp2El Fp2::inv(Fp2El x) const {
    if (is_zero(x)) throw std::domain_error("division by zero");
    // 1/(c0 + c1 u) = (c0 - c1 u) / (c0^2 - n c1^2)
    uint32_t d = fp_.inv(norm(x));
    return {fp_.mul(x.c0, d), fp_.mul(fp_.neg(x.c1), d)};
}

Fp2El Fp2::pow(Fp2El x, uint64_t e) const {
    Fp2El r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

int Fp2::chi(Fp2El x) const {
    if (is_zero(x)) return 0;
    // x^((q-1)/2) = norm(x)^((p-1)/2) since (q-1)/2 = (p-1)/2 * (p+1).
    return fp_.legendre(norm(x));
}

bool Fp2::is_fourth_power(Fp2El x) const {
    if (is_zero(x)) return true;
    return is_one(pow(x, q1_half_ / 2));
}

std::optional<Fp2El> Fp2::sqrt(Fp2El x) const {
    if (is_zero(x)) return zero();
    if (chi(x) != 1) return std::nullopt;

    uint32_t m = ts_s_;
    Fp2El c = pow(ts_z_, ts_m_);
    Fp2El t = pow(x, ts_m_);
    Fp2El r = pow(x, (ts_m_ + 1) / 2);
    while (!is_one(t)) {
        uint32_t i = 0;
        Fp2El s = t;
        while (!is_one(s)) {
            s = sqr(s);
            ++i;
        }
        Fp2El b = c;
        for (uint32_t j = 0; j + i + 1 < m; ++j) b = sqr(b);
        m = i;
        c = sqr(b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Fp2El nr = neg(r);
    return nr < r ? nr : r;
}

std::string Fp2::to_string(Fp2El x) const {
    if (x.c1 == 0) return std::to_string(x.c0);
    return std::to_string(x.c0) + "+" + std::to_string(x.c1) + "*u";
}

namespace {

bool parse_coord(std::string_view s, size_t& pos, int64_t& out) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) return false;
    int64_t v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        v = v * 10 + (s[pos] - '0');
        if (v > (int64_t)1 << 40) return false;
        ++pos;
    }
    out = negative ? -v : v;
    return true;
}

}  // namespace

Fp2El Fp2::parse(std::string_view s) const {
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace((unsigned char)s[begin])) ++begin;
    while (end > begin && std::isspace((unsigned char)s[end - 1])) --end;
    s = s.substr(begin, end - begin);

    size_t pos = 0;
    int64_t a = 0;
    if (!parse_coord(s, pos, a))
        throw std::invalid_argument("bad field element: '" + std::string(s) + "'");
    if (pos == s.size()) return {fp_.from_int(a), 0};

    if (s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("bad field element: '" + std::string(s) + "'");
    int64_t b = 0;
    if (!parse_coord(s, pos, b) || pos + 2 != s.size() || s[pos] != '*' || s[pos + 1] != 'u')
        throw std::invalid_argument("bad field element: '" + std::string(s) + "'");
    return {fp_.from_int(a), fp_.from_int(b)};
}

}  // namespace ssg2
