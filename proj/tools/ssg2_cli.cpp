// ssg2 — census building, single-curve inspection and verification sweeps
// for superspecial genus-2 curves over F_{p^2} (with the genus-3/4 even-model
// scans attached).
//
//   ssg2 enumerate --p 11 --method both --format json --out census.json
//   ssg2 check --p 19 --poly "1,0,0,0,0,-1"
//   ssg2 check --p 11 --triple "(5; 9; 10+3*u)"
//   ssg2 verify --p 5..13 --theorems A,B --out reports.json
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "ssg2/census.hpp"
#include "ssg2/curves.hpp"
#include "ssg2/richelot.hpp"
#include "ssg2/rosenhain.hpp"
#include "ssg2/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::ordered_json;
using namespace ssg2;

std::vector<uint32_t> parse_prime_selector(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos) {
        uint32_t p = static_cast<uint32_t>(std::stoul(s));
        if (p < 3 || p >= kMaxPrime || !is_prime_u32(p))
            throw std::invalid_argument("not prime: " + s);
        return {p};
    }
    uint32_t lo = static_cast<uint32_t>(std::stoul(s.substr(0, dots)));
    uint32_t hi = static_cast<uint32_t>(std::stoul(s.substr(dots + 2)));
    std::vector<uint32_t> primes;
    for (uint32_t p = std::max(lo, 3u); p <= hi && p < kMaxPrime; ++p)
        if (p % 2 == 1 && is_prime_u32(p)) primes.push_back(p);
    if (primes.empty()) throw std::invalid_argument("no odd primes in range: " + s);
    return primes;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

void print_census_summary(const Fp2& F, const CurveCensus& census, const SeedStats* stats) {
    size_t maximal = 0, minimal = 0, neither = 0;
    for (const auto& [k, e] : census.entries) {
        switch (e.cls.kind) {
            case CurveClass::Maximal: ++maximal; break;
            case CurveClass::Minimal: ++minimal; break;
            default: ++neither; break;
        }
    }
    std::cout << "p=" << F.p() << ": " << census.entries.size() << " superspecial classes ("
              << maximal << " maximal, " << minimal << " minimal, " << neither << " neither)";
    if (stats)
        std::cout << "; gluing pairs: " << stats->pairs_total << " total, "
                  << stats->pairs_degenerate << " degenerate";
    std::cout << "\n";
}

int cmd_enumerate(const std::string& prime_sel, const std::string& method,
                  const std::string& format, const std::string& out_path, unsigned threads) {
    std::vector<uint32_t> primes = parse_prime_selector(prime_sel);
    ordered_json all_rows = ordered_json::array();
    std::ostringstream csv;
    bool first_prime = true;

    for (uint32_t p : primes) {
        Fp2 F(p);
        QuadCharTable chi(F);
        std::optional<CurveCensus> census;
        SeedStats stats;
        bool have_stats = false;

        if (method == "brute") {
            BruteForceOptions opts;
            opts.threads = threads;
            census = brute_force_census(F, chi, opts);
        } else if (method == "algorithm1") {
            census = algorithm1_census(F, chi, &stats);
            have_stats = p >= 7;
        } else {  // both
            CurveCensus walk = algorithm1_census(F, chi, &stats);
            have_stats = p >= 7;
            BruteForceOptions opts;
            opts.threads = threads;
            CurveCensus brute = brute_force_census(F, chi, opts);
            if (walk.keys() != brute.keys()) {
                std::cerr << "oracle mismatch at p=" << p << ": isogeny walk found "
                          << walk.entries.size() << " classes, brute force found "
                          << brute.entries.size() << "\n";
                return 1;
            }
            census = std::move(walk);
        }

        print_census_summary(F, *census, have_stats ? &stats : nullptr);
        ordered_json rows = census_to_json(F, *census);
        for (auto& row : rows) all_rows.push_back(std::move(row));
        std::string csv_block = census_to_csv(F, *census);
        if (!first_prime) {
            // drop the repeated header
            csv_block.erase(0, csv_block.find('\n') + 1);
        }
        csv << csv_block;
        first_prime = false;
    }

    if (format == "csv") {
        write_output(out_path, csv.str());
    } else {
        ordered_json doc;
        doc["schema"] = 1;
        doc["census"] = std::move(all_rows);
        write_output(out_path, doc.dump(2) + "\n");
    }
    return 0;
}

void print_matrix(const Fp2& F, const CartierManinMatrix& M) {
    for (int i = 1; i <= M.g; ++i) {
        std::cout << "    [";
        for (int j = 1; j <= M.g; ++j)
            std::cout << (j > 1 ? ", " : "") << F.to_string(M.at(i, j));
        std::cout << "]\n";
    }
}

int cmd_check(uint32_t p, const std::string& triple_text, const std::string& poly_text,
              const std::string& twist_text, int genus) {
    Fp2 F(p);
    HyperellipticCurve C;
    std::optional<RosenhainTriple> triple;

    if (!triple_text.empty()) {
        RosenhainTriple t = parse_triple(F, triple_text);
        validate_triple(F, t);
        triple = t;
        C = rosenhain_curve(F, t);
    } else {
        Poly f;
        std::stringstream ss(poly_text);
        std::string item;
        std::vector<Fp2El> desc;
        while (std::getline(ss, item, ',')) desc.push_back(F.parse(item));
        f.c.assign(desc.rbegin(), desc.rend());
        poly_trim(f);
        Fp2El c = twist_text.empty() ? F.one() : F.parse(twist_text);
        if (genus == 0) genus = (f.deg() - 1) / 2;
        C = curve_from_poly(F, c, std::move(f), genus);
    }

    std::cout << "p = " << p << ", genus " << C.genus << "\n";
    std::cout << "curve: y^2 = ";
    if (!F.is_one(C.c)) std::cout << "(" << F.to_string(C.c) << ") * (";
    std::cout << poly_to_string(F, C.f);
    if (!F.is_one(C.c)) std::cout << ")";
    std::cout << "\n";

    CartierManinMatrix M = cartier_manin(F, C);
    std::cout << "cartier_manin:\n";
    print_matrix(F, M);
    std::cout << "superspecial: " << (M.is_zero() ? "true" : "false") << "\n";

    Classification cls = classify(F, C);
    std::cout << "point_count over F_{p^2}: " << cls.point_count << "\n";
    std::cout << "classification: " << to_string(cls.kind) << "\n";

    if (triple) {
        std::cout << "nine_squares: "
                  << (all_rosenhain_defined_over(F, *triple) ? "true" : "false") << "\n";
        std::cout << "five_fourth_powers: "
                  << (five_products_fourth_powers(F, *triple) ? "true" : "false") << "\n";
        std::cout << "canonical_key: " << key_to_string(F, canonical_key(F, *triple)) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& prime_sel, const std::string& theorems,
               const std::string& out_path, uint64_t genus4_budget, unsigned threads) {
    std::vector<uint32_t> primes = parse_prime_selector(prime_sel);

    std::vector<std::string> selected;
    std::stringstream ss(theorems);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok != "A" && tok != "B" && tok != "p3" && tok != "genus3" && tok != "genus4" &&
            tok != "lemma32" && tok != "lemma33")
            throw std::invalid_argument("unknown theorem selector: " + tok);
        selected.push_back(tok);
    }
    if (selected.empty()) throw std::invalid_argument("no theorems selected");

    auto wants = [&](const std::string& name) {
        return std::find(selected.begin(), selected.end(), name) != selected.end();
    };

    std::vector<TheoremReport> reports;
    for (uint32_t p : primes) {
        if (wants("p3") && p == 3) reports.push_back(verify_char3_empty());
        if (p < 5) continue;

        Fp2 F(p);
        QuadCharTable chi(F);
        std::optional<CurveCensus> census;
        auto get_census = [&]() -> const CurveCensus& {
            if (!census) {
                if (p <= 13) {
                    BruteForceOptions opts;
                    opts.threads = threads;
                    census = brute_force_census(F, chi, opts);
                } else {
                    census = algorithm1_census(F, chi);
                }
            }
            return *census;
        };

        if (wants("A")) reports.push_back(verify_census_squares(F, get_census()));
        if (wants("B")) reports.push_back(verify_census_extremality(F, get_census(), chi));
        if (wants("genus3")) reports.push_back(verify_genus3_scan(F, chi, threads));
        if (wants("genus4")) {
            Genus4Options opts;
            opts.sample_budget = genus4_budget;
            opts.threads = threads;
            reports.push_back(verify_genus4_scan(F, chi, opts));
        }
        if (wants("lemma32")) reports.push_back(verify_splitting_products(F, get_census()));
        if (wants("lemma33") && p >= 7)
            reports.push_back(verify_decomposed_criterion(F, chi));
    }

    bool all_ok = true;
    ordered_json doc;
    doc["schema"] = 1;
    doc["reports"] = ordered_json::array();
    for (const TheoremReport& r : reports) {
        all_ok = all_ok && r.ok();
        std::cout << "theorem " << r.theorem << " @ p=" << r.p << ": " << r.checked
                  << " instances, " << r.failures.size() << " failures\n";
        doc["reports"].push_back(report_to_json(r));
    }
    write_output(out_path, doc.dump(2) + "\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superspecial genus-2 curve census and verification toolkit"};
    app.require_subcommand(1);

    std::string prime_sel, method = "algorithm1", format = "json", out_path;
    unsigned threads = 0;

    CLI::App* enumerate = app.add_subcommand("enumerate", "build the superspecial census");
    enumerate->add_option("--p", prime_sel, "prime or range A..B")->required();
    enumerate->add_option("--method", method, "algorithm1 | brute | both")
        ->check(CLI::IsMember({"algorithm1", "brute", "both"}));
    enumerate->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--out", out_path, "output path (default stdout)");
    enumerate->add_option("--threads", threads, "worker threads (0 = auto)");

    std::string triple_text, poly_text, twist_text;
    int genus = 0;
    CLI::App* check = app.add_subcommand("check", "inspect a single curve");
    check->add_option("--p", prime_sel, "prime")->required();
    check->add_option("--triple", triple_text, "Rosenhain triple \"(l; m; n)\"");
    check->add_option("--poly", poly_text,
                      "comma-separated coefficients of f, highest degree first");
    check->add_option("--twist", twist_text, "leading constant c of y^2 = c*f(x)");
    check->add_option("--genus", genus, "genus (default from degree)");

    std::string theorems;
    uint64_t genus4_budget = 200000;
    CLI::App* verify = app.add_subcommand("verify", "run theorem checkers");
    verify->add_option("--p", prime_sel, "prime or range A..B")->required();
    verify->add_option("--theorems", theorems, "subset of A,B,p3,genus3,genus4,lemma32,lemma33")
        ->required();
    verify->add_option("--out", out_path, "report path (default stdout)");
    verify->add_option("--genus4-budget", genus4_budget, "sample budget for p > 7");
    verify->add_option("--threads", threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(prime_sel, method, format, out_path, threads);
        if (check->parsed()) {
            if (triple_text.empty() == poly_text.empty()) {
                std::cerr << "check needs exactly one of --triple or --poly\n";
                return 2;
            }
            std::vector<uint32_t> primes = parse_prime_selector(prime_sel);
            if (primes.size() != 1) {
                std::cerr << "check takes a single prime\n";
                return 2;
            }
            return cmd_check(primes[0], triple_text, poly_text, twist_text, genus);
        }
        if (verify->parsed())
            return cmd_verify(prime_sel, theorems, out_path, genus4_budget, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
