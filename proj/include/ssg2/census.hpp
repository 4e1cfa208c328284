#pragma once

// Enumeration of superspecial genus-2 curves over F_{p^2}, by two
// independent routes:
//
//  * the isogeny walk: seed with every decomposed curve glued from a pair of
//    supersingular Legendre parameters, then close under Richelot-isogeny
//    neighbors until no new isomorphism class appears (the superspecial
//    (2,2)-isogeny graph is connected, so this reaches everything);
//
//  * brute force: scan Rosenhain triples directly and keep the ones whose
//    Cartier-Manin matrix vanishes.  By default the scan is restricted to
//    the set S of elements s with s and 1-s both squares, which provably
//    contains every invariant of a superspecial curve.
//
// Both produce a census keyed by canonical Rosenhain key (one entry per
// isomorphism class over the algebraic closure); their key sets must agree.

#include "ssg2/curves.hpp"
#include "ssg2/rosenhain.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ssg2 {

struct CensusEntry {
    RosenhainTriple representative;  // the canonical key's triple
    Classification cls;
    std::string provenance;              // "seed", "richelot:<step>" or "brute"
    uint64_t split_product_splittings = 0;  // delta = 0 splittings seen while saturating
};

struct CurveCensus {
    uint32_t p = 0;
    std::map<CanonicalKey, CensusEntry> entries;

    std::vector<CanonicalKey> keys() const;
};

// S = { s in F_{p^2} with s, 1-s nonzero squares }, in key order.
std::vector<Fp2El> square_pair_set(const Fp2& F);

// All t outside {0, 1} with H_p(t) = 0, in key order (every supersingular
// j-invariant is covered by each of its Legendre parameters).
std::vector<Fp2El> supersingular_legendre_params(const Fp2& F, unsigned threads = 0);

struct SeedStats {
    uint64_t pairs_total = 0;
    uint64_t pairs_degenerate = 0;
};

// Decomposed superspecial curves from all ordered pairs of supersingular
// Legendre parameters.  Requires p >= 7.
CurveCensus seed_census(const Fp2& F, const QuadCharTable& chi, SeedStats* stats = nullptr);

// Closure of the census under nondegenerate Richelot codomains (breadth
// first, re-scanning appended entries, until a fixpoint).
CurveCensus saturate(const Fp2& F, CurveCensus census, const QuadCharTable& chi);

struct BruteForceOptions {
    uint32_t max_p = 13;   // guard for the O(|S|^3) scan
    bool prune = true;     // restrict invariants to square_pair_set
    unsigned threads = 0;
};

CurveCensus brute_force_census(const Fp2& F, const QuadCharTable& chi,
                               BruteForceOptions opts = {});

// The isogeny-walk route; p = 3 and p = 5 fall back to brute force (the walk
// requires p >= 7).
CurveCensus algorithm1_census(const Fp2& F, const QuadCharTable& chi,
                              SeedStats* stats = nullptr);

// Rows {p, key, lambda, mu, nu, classification, point_count, provenance},
// ordered by key; the CSV mirror has the same columns.
nlohmann::ordered_json census_to_json(const Fp2& F, const CurveCensus& census);
std::string census_to_csv(const Fp2& F, const CurveCensus& census);

}  // namespace ssg2
