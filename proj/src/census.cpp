#include "ssg2/census.hpp"

#include "ssg2/parallel.hpp"
#include "ssg2/richelot.hpp"

#include <sstream>
#include <stdexcept>

namespace ssg2 {

std::vector<CanonicalKey> CurveCensus::keys() const {
    std::vector<CanonicalKey> out;
    out.reserve(entries.size());
    for (const auto& [k, _] : entries) out.push_back(k);
    return out;
}

std::vector<Fp2El> square_pair_set(const Fp2& F) {
    std::vector<Fp2El> out;
    for (uint64_t k = 2; k < F.q(); ++k) {
        Fp2El s = F.element(k);
        if (F.is_one(s)) continue;
        if (F.is_square(s) && F.is_square(F.sub(F.one(), s))) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Fp2El> supersingular_legendre_params(const Fp2& F, unsigned threads) {
    Poly h = hasse_polynomial(F);
    unsigned workers = resolve_threads(threads);
    std::vector<std::vector<Fp2El>> found(workers);
    parallel_chunks(F.q(), workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        for (uint64_t k = begin; k < end; ++k) {
            Fp2El t = F.element(k);
            if (F.is_zero(t) || F.is_one(t)) continue;
            if (F.is_zero(poly_eval(F, h, t))) found[w].push_back(t);
        }
    });
    std::vector<Fp2El> out;
    for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

CensusEntry make_entry(const Fp2& F, const CanonicalKey& key, const QuadCharTable& chi,
                       std::string provenance) {
    RosenhainTriple rep{key.v[0], key.v[1], key.v[2], TwistClass::Trivial};
    CensusEntry e;
    e.representative = rep;
    e.cls = classify(F, rosenhain_curve(F, rep), &chi);
    e.provenance = std::move(provenance);
    return e;
}

}  // namespace

CurveCensus seed_census(const Fp2& F, const QuadCharTable& chi, SeedStats* stats) {
    if (F.p() < 7) throw std::invalid_argument("isogeny walk requires p >= 7");

    CurveCensus census;
    census.p = F.p();
    SeedStats local;
    std::vector<Fp2El> params = supersingular_legendre_params(F);
    for (Fp2El t1 : params) {
        for (Fp2El t2 : params) {
            ++local.pairs_total;
            HyperellipticCurve C;
            try {
                C = glue_from_legendre_pair(F, t1, t2);
            } catch (const std::invalid_argument&) {
                ++local.pairs_degenerate;
                continue;
            }
            if (!is_superspecial(F, C))
                throw std::logic_error("glued curve with supersingular factors not superspecial");
            if (!C.roots_known())
                throw std::logic_error("glued superspecial curve has irrational roots");
            std::array<RootP1, 6> roots{};
            for (int i = 0; i < 6; ++i) roots[i] = RootP1::finite(C.finite_roots[i]);
            CanonicalKey key = canonical_key_of_roots(F, roots);
            if (!census.entries.count(key))
                census.entries.emplace(key, make_entry(F, key, chi, "seed"));
        }
    }
    if (stats) *stats = local;
    return census;
}

CurveCensus saturate(const Fp2& F, CurveCensus census, const QuadCharTable& chi) {
    std::vector<CanonicalKey> worklist = census.keys();
    for (size_t i = 0; i < worklist.size(); ++i) {
        const RosenhainTriple rep = census.entries.at(worklist[i]).representative;
        HyperellipticCurve C = rosenhain_curve(F, rep);
        uint64_t split_count = 0;
        for (const QuadraticSplitting& s : splittings(F, C)) {
            RichelotResult res = richelot_codomain(F, s);
            if (std::holds_alternative<SplitProduct>(res)) {
                ++split_count;
                continue;
            }
            const HyperellipticCurve& next = std::get<HyperellipticCurve>(res);
            if (!next.roots_known())
                throw std::logic_error("codomain of superspecial curve has irrational roots");
            std::array<RootP1, 6> roots{};
            for (size_t k = 0; k < next.finite_roots.size(); ++k)
                roots[k] = RootP1::finite(next.finite_roots[k]);
            if (next.root_at_infinity) roots[5] = RootP1::infinity();
            CanonicalKey key = canonical_key_of_roots(F, roots);
            if (!census.entries.count(key)) {
                census.entries.emplace(
                    key, make_entry(F, key, chi, "richelot:" + std::to_string(i + 1)));
                worklist.push_back(key);
            }
        }
        census.entries.at(worklist[i]).split_product_splittings = split_count;
    }
    return census;
}

CurveCensus brute_force_census(const Fp2& F, const QuadCharTable& chi, BruteForceOptions opts) {
    if (F.p() > opts.max_p) throw std::invalid_argument("brute force out of configured range");

    std::vector<Fp2El> pool;
    if (opts.prune) {
        pool = square_pair_set(F);
    } else {
        for (uint64_t k = 2; k < F.q(); ++k) {
            Fp2El s = F.element(k);
            if (!F.is_one(s)) pool.push_back(s);
        }
        std::sort(pool.begin(), pool.end());
    }

    // Sorted triples cover every curve: the quintic is symmetric in l, m, n.
    uint64_t n = pool.size();
    unsigned workers = resolve_threads(opts.threads);
    std::vector<std::vector<CanonicalKey>> found(workers);
    parallel_chunks(n, workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i)
            for (uint64_t j = i + 1; j < n; ++j)
                for (uint64_t k = j + 1; k < n; ++k) {
                    RosenhainTriple t{pool[i], pool[j], pool[k], TwistClass::Trivial};
                    if (is_superspecial(F, rosenhain_curve(F, t)))
                        found[w].push_back(canonical_key(F, t));
                }
    });

    CurveCensus census;
    census.p = F.p();
    for (const auto& part : found)
        for (const CanonicalKey& key : part)
            if (!census.entries.count(key))
                census.entries.emplace(key, make_entry(F, key, chi, "brute"));
    return census;
}

CurveCensus algorithm1_census(const Fp2& F, const QuadCharTable& chi, SeedStats* stats) {
    if (F.p() < 7) return brute_force_census(F, chi);
    return saturate(F, seed_census(F, chi, stats), chi);
}

nlohmann::ordered_json census_to_json(const Fp2& F, const CurveCensus& census) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [key, e] : census.entries) {
        nlohmann::ordered_json row;
        row["p"] = census.p;
        row["key"] = key_to_string(F, key);
        row["lambda"] = F.to_string(e.representative.lambda);
        row["mu"] = F.to_string(e.representative.mu);
        row["nu"] = F.to_string(e.representative.nu);
        row["classification"] = to_string(e.cls.kind);
        row["point_count"] = e.cls.point_count;
        row["provenance"] = e.provenance;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string census_to_csv(const Fp2& F, const CurveCensus& census) {
    std::ostringstream out;
    out << "p,key,lambda,mu,nu,classification,point_count,provenance\n";
    for (const auto& [key, e] : census.entries) {
        out << census.p << ',' << key_to_string(F, key) << ','
            << F.to_string(e.representative.lambda) << ',' << F.to_string(e.representative.mu)
            << ',' << F.to_string(e.representative.nu) << ',' << to_string(e.cls.kind) << ','
            << e.cls.point_count << ',' << e.provenance << '\n';
    }
    return out.str();
}

}  // namespace ssg2
