#include "ssg2/rosenhain.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

using namespace ssg2;

namespace {

Mobius mobius_inverse(const Fp2& F, const Mobius& M) {
    return {M.d, F.neg(M.b), F.neg(M.c), M.a};
}

Mobius mobius_compose(const Fp2& F, const Mobius& M, const Mobius& N) {
    // (M o N)(x) = M(N(x))
    return {F.add(F.mul(M.a, N.a), F.mul(M.b, N.c)), F.add(F.mul(M.a, N.b), F.mul(M.b, N.d)),
            F.add(F.mul(M.c, N.a), F.mul(M.d, N.c)), F.add(F.mul(M.c, N.b), F.mul(M.d, N.d))};
}

bool same_root_set(std::vector<RootP1> a, std::vector<RootP1> b) {
    auto lt = [](const RootP1& x, const RootP1& y) {
        if (x.at_infinity != y.at_infinity) return y.at_infinity;
        return x.v < y.v;
    };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

// Order of the group of Moebius transformations preserving the root set:
// every candidate is pinned by the images of the first three roots.
size_t mobius_automorphism_count(const Fp2& F, const std::array<RootP1, 6>& roots) {
    std::vector<RootP1> all(roots.begin(), roots.end());
    size_t count = 0;
    Mobius base = mobius_to_standard(F, roots[0], roots[1], roots[2]);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                if (i == j || j == k || i == k) continue;
                Mobius target = mobius_to_standard(F, roots[i], roots[j], roots[k]);
                Mobius M = mobius_compose(F, mobius_inverse(F, target), base);
                std::vector<RootP1> image;
                for (const RootP1& r : all) image.push_back(mobius_apply(F, M, r));
                if (same_root_set(image, all)) ++count;
            }
    return count;
}

}  // namespace

TEST_CASE("identity and complementary orderings") {
    Fp2 F(13);
    RosenhainTriple t{F.from_int(3), F.from_int(5), F.from_int(9), TwistClass::Trivial};
    auto roots = rosenhain_roots(t);

    RosenhainForm id = to_rosenhain(F, roots, F.one(), {0, 1, 2});
    CHECK(id.triple.lambda == t.lambda);
    CHECK(id.triple.mu == t.mu);
    CHECK(id.triple.nu == t.nu);

    // ordering (1, 0, oo) applies x -> 1 - x
    RosenhainForm swapped = to_rosenhain(F, roots, F.one(), {1, 0, 2});
    CHECK(swapped.triple.lambda == F.sub(F.one(), t.lambda));
    CHECK(swapped.triple.mu == F.sub(F.one(), t.mu));
    CHECK(swapped.triple.nu == F.sub(F.one(), t.nu));
}

TEST_CASE("kappa for a fully finite configuration") {
    Fp2 F(7);
    std::array<RootP1, 6> roots{};
    for (int i = 0; i < 6; ++i) roots[i] = RootP1::finite(F.from_int(i));
    RosenhainForm f = to_rosenhain(F, roots, F.one(), {0, 1, 2});
    // (0-1)(2-3)(2-4)(2-5) = 6 mod 7
    CHECK(f.kappa == F.from_int(6));
    CHECK(f.triple.twist == (F.is_square(f.kappa) ? TwistClass::Trivial
                                                  : TwistClass::NonTrivial));

    std::array<RootP1, 6> repeated = roots;
    repeated[3] = roots[2];
    CHECK_THROWS_AS(to_rosenhain(F, repeated, F.one(), {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("cross-ratio is invariant under Moebius maps of the roots") {
    Fp2 F(13);
    std::mt19937_64 rng(0xAB);
    std::uniform_int_distribution<uint64_t> pick(0, F.q() - 1);
    RosenhainTriple t{F.from_int(3), F.make(2, 5), F.from_int(11), TwistClass::Trivial};
    auto roots = rosenhain_roots(t);

    int tried = 0;
    while (tried < 40) {
        Fp2El a = F.element(pick(rng)), b = F.element(pick(rng));
        Fp2El c = F.element(pick(rng)), d = F.element(pick(rng));
        if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c)))) continue;
        ++tried;
        Mobius M{a, b, c, d};
        std::array<RootP1, 6> moved{};
        for (int i = 0; i < 6; ++i) moved[i] = mobius_apply(F, M, roots[i]);
        for (auto ordering : {std::array<int, 3>{0, 1, 2}, std::array<int, 3>{3, 5, 1},
                              std::array<int, 3>{4, 2, 0}}) {
            RosenhainForm expect = to_rosenhain(F, roots, F.one(), ordering);
            RosenhainForm got = to_rosenhain(F, moved, F.one(), ordering);
            CHECK(got.triple.lambda == expect.triple.lambda);
            CHECK(got.triple.mu == expect.triple.mu);
            CHECK(got.triple.nu == expect.triple.nu);
        }
    }
}

TEST_CASE("orbit sizes are 120 over the automorphism count") {
    Fp2 F(13);

    // trivial reduced automorphisms (fully rational triples over F_13 always
    // carry an involution; this one does not)
    RosenhainTriple generic{F.from_int(2), F.from_int(3), F.gen_u(), TwistClass::Trivial};
    CHECK(mobius_automorphism_count(F, rosenhain_roots(generic)) == 1);
    CHECK(orbit_120(F, generic).size() == 120);

    // dihedral of order 12: roots {0,1,oo,-1,2,1/2}
    RosenhainTriple d12{F.from_int(-1), F.from_int(2), F.inv(F.from_int(2)),
                        TwistClass::Trivial};
    CHECK(mobius_automorphism_count(F, rosenhain_roots(d12)) == 12);
    CHECK(orbit_120(F, d12).size() == 10);

    // symmetric group S4: roots {0,1,oo,-1,i,-i} with i^2 = -1
    Fp2El i13 = *F.sqrt(F.from_int(-1));
    RosenhainTriple s4{F.from_int(-1), i13, F.neg(i13), TwistClass::Trivial};
    CHECK(mobius_automorphism_count(F, rosenhain_roots(s4)) == 24);
    CHECK(orbit_120(F, s4).size() == 5);

    // cyclic of order 5: y^2 = x^5 - 1 at p = 19, roots {1,z,z^2,z^3,z^4,oo}
    Fp2 F19(19);
    Fp2El zeta{};
    for (uint64_t k = 2; k < F19.q(); ++k) {
        Fp2El z = F19.element(k);
        if (!F19.is_one(z) && F19.is_one(F19.pow(z, 5))) {
            zeta = z;
            break;
        }
    }
    REQUIRE(F19.is_one(F19.pow(zeta, 5)));
    std::array<RootP1, 6> c5roots = {RootP1::finite(F19.one()),
                                     RootP1::finite(zeta),
                                     RootP1::finite(F19.pow(zeta, 2)),
                                     RootP1::finite(F19.pow(zeta, 3)),
                                     RootP1::finite(F19.pow(zeta, 4)),
                                     RootP1::infinity()};
    CHECK(mobius_automorphism_count(F19, c5roots) == 5);
    CHECK(orbit_of_roots(F19, c5roots).size() == 24);

    // random triples: orbit size * automorphism count = 120
    std::mt19937_64 rng(0x71);
    std::uniform_int_distribution<uint64_t> pick(2, F.q() - 1);
    int tried = 0;
    while (tried < 15) {
        RosenhainTriple t{F.element(pick(rng)), F.element(pick(rng)), F.element(pick(rng)),
                          TwistClass::Trivial};
        try {
            validate_triple(F, t);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tried;
        size_t aut = mobius_automorphism_count(F, rosenhain_roots(t));
        size_t orbit = orbit_120(F, t).size();
        CHECK(orbit * aut == 120);
    }
}

TEST_CASE("orbit contains the sorted input and canonical key is its minimum") {
    Fp2 F(11);
    RosenhainTriple t{F.from_int(7), F.from_int(2), F.make(1, 3), TwistClass::Trivial};
    auto orbit = orbit_120(F, t);
    std::array<Fp2El, 3> sorted = {t.lambda, t.mu, t.nu};
    std::sort(sorted.begin(), sorted.end());
    bool contains = false;
    for (const RosenhainTriple& o : orbit)
        if (o.lambda == sorted[0] && o.mu == sorted[1] && o.nu == sorted[2]) contains = true;
    CHECK(contains);

    CanonicalKey key = canonical_key(F, t);
    CHECK(key.v == std::array<Fp2El, 3>{orbit.front().lambda, orbit.front().mu,
                                        orbit.front().nu});
    // idempotence and ordering independence
    RosenhainTriple rep{key.v[0], key.v[1], key.v[2], TwistClass::Trivial};
    CHECK(canonical_key(F, rep) == key);
    RosenhainTriple perm{t.nu, t.lambda, t.mu, TwistClass::Trivial};
    CHECK(canonical_key(F, perm) == key);
}

TEST_CASE("canonical key separates orbits exhaustively at p = 7") {
    Fp2 F(7);
    std::vector<Fp2El> pool;
    for (uint64_t k = 2; k < F.q(); ++k)
        if (!F.is_one(F.element(k))) pool.push_back(F.element(k));

    std::map<CanonicalKey, std::vector<std::array<Fp2El, 3>>> groups;
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j)
            for (size_t k = j + 1; k < pool.size(); ++k) {
                RosenhainTriple t{pool[i], pool[j], pool[k], TwistClass::Trivial};
                groups[canonical_key(F, t)].push_back({pool[i], pool[j], pool[k]});
            }

    size_t total = 0;
    for (const auto& [key, members] : groups) {
        RosenhainTriple rep{members[0][0], members[0][1], members[0][2],
                            TwistClass::Trivial};
        auto orbit = orbit_of_roots(F, rosenhain_roots(rep));
        CHECK(orbit == members);  // both sorted ascending and duplicate-free
        total += members.size();
    }
    CHECK(total == pool.size() * (pool.size() - 1) * (pool.size() - 2) / 6);
}

TEST_CASE("nine-squares predicate matches the kappa classes of all orderings") {
    Fp2 F(7);
    std::mt19937_64 rng(0x99);
    std::uniform_int_distribution<uint64_t> pick(2, F.q() - 1);
    int tried = 0;
    while (tried < 60) {
        RosenhainTriple t{F.element(pick(rng)), F.element(pick(rng)), F.element(pick(rng)),
                          TwistClass::Trivial};
        try {
            validate_triple(F, t);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tried;
        auto roots = rosenhain_roots(t);
        bool all_kappa_square = true;
        for (int i = 0; i < 6 && all_kappa_square; ++i)
            for (int j = 0; j < 6 && all_kappa_square; ++j)
                for (int k = 0; k < 6 && all_kappa_square; ++k) {
                    if (i == j || j == k || i == k) continue;
                    RosenhainForm f = to_rosenhain(F, roots, F.one(), {i, j, k});
                    if (!F.is_square(f.kappa)) all_kappa_square = false;
                }
        CHECK(all_rosenhain_defined_over(F, t) == all_kappa_square);
    }

    // a triple with non-square lambda fails immediately
    Fp2El nonsq{};
    for (uint64_t k = 2; k < F.q(); ++k)
        if (!F.is_square(F.element(k))) {
            nonsq = F.element(k);
            break;
        }
    RosenhainTriple bad{nonsq, F.from_int(2), F.from_int(3), TwistClass::Trivial};
    CHECK_FALSE(all_rosenhain_defined_over(F, bad));
}

TEST_CASE("triple text encoding") {
    Fp2 F(11);
    RosenhainTriple t{F.from_int(3), F.make(5, 2), F.from_int(9), TwistClass::Trivial};
    CHECK(triple_to_string(F, t) == "(3; 5+2*u; 9)");
    RosenhainTriple back = parse_triple(F, triple_to_string(F, t));
    CHECK(back.lambda == t.lambda);
    CHECK(back.mu == t.mu);
    CHECK(back.nu == t.nu);
    CHECK_THROWS_AS(parse_triple(F, "(1; 2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_triple(F, "1; 2; 3"), std::invalid_argument);

    CHECK_THROWS_AS(validate_triple(F, {F.from_int(2), F.from_int(2), F.from_int(2),
                                        TwistClass::Trivial}),
                    std::invalid_argument);
}
