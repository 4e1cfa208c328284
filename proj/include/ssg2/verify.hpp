#pragma once

// Machine-checkable forms of the structural facts about superspecial curves
// that this toolkit is built around.  Every checker returns a TheoremReport
// whose failures replay: each payload carries enough data for
// replay_failure() to re-evaluate the violated predicate from scratch.
//
//   A        every census triple (over its whole orbit of Rosenhain forms)
//            has the nine differences among {0,1,l,m,n} square and the five
//            Weierstrass products fourth powers
//   B        every census curve attains the Hasse-Weil bound: maximal with
//            p^2+1+4p points when p = 3 mod 4, minimal with p^2+1-4p when
//            p = 1 mod 4
//   p3       in characteristic 3 the set S = {s : s, 1-s squares} is {2},
//            so no superspecial genus-2 curve exists
//   genus3   superspecial y^2 = (x^2-1)(x^2-a)(x^2-b)(x^2-c) have a, b, c
//            square and are maximal / minimal by p mod 4
//   genus4   superspecial y^2 = (x^2-1)(x^2-a)...(x^2-d) have a..d square,
//            1-a..1-d in one square class, and extremality decided by that
//            class crossed with p mod 4
//   lemma32  for every arrangement (a_1..a_5) of {0,1,l,m,n} of a census
//            curve, the products D_i D_j are fourth powers
//   lemma33  a decomposed curve (x^2-1)(x^2-a)(x^2-b) glued from
//            supersingular parameters is maximal iff (1-a is a square) ==
//            (p = 3 mod 4)

#include "ssg2/census.hpp"
#include "ssg2/curves.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ssg2 {

struct TheoremReport {
    std::string theorem;
    uint32_t p = 0;
    uint64_t checked = 0;
    std::vector<nlohmann::ordered_json> failures;
    double elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

TheoremReport verify_census_squares(const Fp2& F, const CurveCensus& census);       // A
TheoremReport verify_census_extremality(const Fp2& F, const CurveCensus& census,
                                        const QuadCharTable& chi);                  // B
TheoremReport verify_char3_empty();                                                 // p3
TheoremReport verify_genus3_scan(const Fp2& F, const QuadCharTable& chi,
                                 unsigned threads = 0);                             // genus3

struct Genus4Options {
    uint32_t full_scan_max_p = 7;
    uint64_t sample_budget = 200000;  // instances sampled when p > full_scan_max_p
    uint64_t sample_seed = 0x55672u;
    unsigned threads = 0;
};
TheoremReport verify_genus4_scan(const Fp2& F, const QuadCharTable& chi,
                                 Genus4Options opts = {});                          // genus4
TheoremReport verify_splitting_products(const Fp2& F, const CurveCensus& census);   // lemma32
TheoremReport verify_decomposed_criterion(const Fp2& F, const QuadCharTable& chi);  // lemma33

// Re-evaluates the predicate recorded in a failure payload; a genuine
// failure returns false again.
bool replay_failure(const Fp2& F, const nlohmann::ordered_json& payload);

nlohmann::ordered_json report_to_json(const TheoremReport& r);

}  // namespace ssg2
