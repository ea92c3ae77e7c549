// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and thresholds are pinned in code.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "padic_root_oracle.hpp"
#include "quintic/case_filter.hpp"
#include "quintic/curve_points.hpp"
#include "quintic/expansions.hpp"
#include "quintic/fixtures.hpp"
#include "quintic/json_io.hpp"
#include "quintic/parallel.hpp"
#include "quintic/zero_bounds.hpp"

using namespace quintic;

namespace {

struct CheckFailure {
    std::string message;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw CheckFailure{message};
}

Padic random_unit(int p, std::mt19937_64& rng, int digits = Padic::kDefaultDigits) {
    BigInt u = 1 + static_cast<unsigned long>(rng() % (p - 1));
    BigInt scale = p;
    for (int i = 1; i < digits; ++i) {
        u += scale * static_cast<unsigned long>(rng() % p);
        scale *= p;
    }
    return Padic::from_unit(p, 0, u, digits);
}

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const CheckFailure& f) {
        ok = false;
        detail = f.message;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << " (" << title
         << "): " << detail << " [" << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min<unsigned>(hw == 0 ? 4 : hw, 8));
}

}  // namespace

int main() {
    // 1. Census count, single-threaded, < 10 s.
    criterion(1, "census count", [] {
        auto start = std::chrono::steady_clock::now();
        CandidateCensus census;
        std::size_t count = 0;
        census.for_each([&](const Factorization& f) {
            if (!f.is_tenth_power_free()) throw CheckFailure{"census member not reduced"};
            ++count;
        });
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(count == 225000, "count = " + std::to_string(count) + ", expected 225000");
        require(seconds < 10.0, "census enumeration exceeded 10 s");
        return "225000 members enumerated";
    });

    // 2. Candidate chain: |stage1| = 20 and stage2 exactly the eight values.
    criterion(2, "candidate chain", [] {
        auto chain = seven_point_candidates();
        require(chain.stage1.size() == 20,
                "stage1 size " + std::to_string(chain.stage1.size()));
        std::set<std::string> got;
        for (const auto& f : chain.stage2) got.insert(f.to_string());
        std::set<std::string> expected{"3^2*7^4",     "3^4",         "2^2*3^4",
                                       "2^2*3^4*7^4", "2^4*3^4*7^4", "2^6*3^2",
                                       "2^8*3^2",     "2^8*3^2*7^4"};
        require(got == expected, "stage2 set mismatch");
        return "20 -> 8 values, exact match";
    });

    // 3. Flagship curve A = 324, < 1 s.
    criterion(3, "flagship curve", [] {
        auto start = std::chrono::steady_clock::now();
        auto report = search_points(factorize(324), 100, 3);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(report.total_found == 7,
                "found " + std::to_string(report.total_found) + " points, expected 7");
        require(report.n_a_lower == 2, "n_A lower bound != 2");
        std::set<std::string> affine;
        for (const auto& pt : report.points)
            if (!pt.at_infinity) affine.insert("(" + pt.x.get_str() + "," + pt.y.get_str() + ")");
        std::set<std::string> expected{"(0,18)",  "(0,-18)", "(-3,9)",
                                       "(-3,-9)", "(6,90)",  "(6,-90)"};
        require(affine == expected, "point set mismatch");
        require(seconds < 1.0, "search exceeded 1 s");
        return "{infinity, (0,+-18), (-3,+-9), (6,+-90)}, n_A = 2";
    });

    // 4. Torsion uniqueness across the census, parallel, < 60 s.
    criterion(4, "torsion uniqueness", [] {
        auto start = std::chrono::steady_clock::now();
        CandidateCensus census;
        std::size_t n = census.size();
        std::vector<std::vector<std::string>> hits((n + 4095) / 4096);
        for_each_chunk(n, 4096, default_workers(), [&](std::size_t c, std::size_t lo,
                                                       std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                Factorization f = census.at(i);
                for (const auto& pt : rational_torsion_points(f))
                    if (pt.classification == PointClass::Torsion4A) {
                        hits[c].push_back(f.to_string());
                        break;
                    }
            }
        });
        std::vector<std::string> all;
        for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(all.size() == 1, "expected exactly one census value with a nontrivial "
                                 "torsion pair, got " + std::to_string(all.size()));
        require(all[0] == "2^8*5^5", "unexpected value " + all[0]);
        require(seconds < 60.0, "census torsion scan exceeded 60 s");
        return "only 2^8*5^5 has the rational pair (20, +-2000)";
    });

    // 5. Expansion fidelity at the stated (p, nu) grid, < 30 s.
    criterion(5, "expansion fidelity", [] {
        auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(20260809);
        const std::pair<int, int> grid[] = {{3, 2}, {3, 4}, {3, 5}, {3, 6},
                                            {3, 8}, {7, 2}, {7, 4}};
        for (auto [p, nu] : grid) {
            for (int trial = 0; trial < 3; ++trial) {
                Padic a = random_unit(p, rng);

                auto fast = expand_at_infinity(p, nu, a);
                auto oracle =
                    expand_at_infinity(p, nu, a, kDefaultExpansionOrder, Route::CurveEquation);
                require(fast.series.alpha_part.agrees_with(oracle.series.alpha_part, 13, 100) &&
                            fast.series.beta_part.agrees_with(oracle.series.beta_part, 13, 100),
                        "infinity routes disagree");
                require(fast.series.alpha_part.coeff(3).same_value(
                            Padic::from_rational(p, make_rational(1, 3))),
                        "alpha/3 coefficient mismatch");
                Padic pnu = Padic::pi_power(p, 10L * nu, 60);
                require(fast.series.beta_part.coeff(11).same_value(
                            Padic::from_rational(p, make_rational(5, 11)) * a * pnu),
                        "(5a/11) p^nu coefficient mismatch");

                if (nu % 2 == 0) {
                    Padic b = random_unit(p, rng);
                    Padic asq = b * b;
                    auto sq = expand_at_square_class(p, nu, b);
                    auto sq2 = expand_at_square_class(p, nu, b, kDefaultExpansionOrder,
                                                      Route::CurveEquation);
                    require(sq.series.alpha_part.agrees_with(sq2.series.alpha_part, 13, 100) &&
                                sq.series.beta_part.agrees_with(sq2.series.beta_part, 13, 100),
                            "square-class routes disagree");
                    Padic prho = Padic::pi_power(p, 10L * sq.rho, 60);
                    require(sq.series.alpha_part.coeff(6).same_value(
                                Padic::from_rational(p, make_rational(-1, 12)) *
                                asq.inverse() * prho),
                            "-(1/12a) p^rho coefficient mismatch");
                }
                if (nu == 5) {
                    Padic b = random_unit(p, rng);
                    Padic a5 = b * b * b * b * b;
                    auto w = expand_at_weierstrass(p, b);
                    auto w2 = expand_at_weierstrass(p, b, kDefaultExpansionOrder,
                                                    Route::CurveEquation);
                    require(w.series.alpha_part.agrees_with(w2.series.alpha_part, 13, 100) &&
                                w.series.beta_part.agrees_with(w2.series.beta_part, 13, 100),
                            "weierstrass routes disagree");
                    Padic pp = Padic::from_integer(p, p, 60);
                    require(w.series.alpha_part.coeff(3).same_value(
                                Padic::from_rational(p, make_rational(4, 15)) * pp *
                                a5.inverse()),
                            "(4 alpha) p / 15a coefficient mismatch");
                    require(w.series.beta_part.coeff(3).same_value(
                                Padic::from_rational(p, make_rational(-1, 5)) * b * pp * pp *
                                a5.inverse()),
                            "(-3 b beta p) p / 15a coefficient mismatch");
                }

                // binomial display checks: X and 1/Y chart factors
                Padic au = random_unit(p, rng);
                auto xbase = TruncatedSeries::one(p, 12) +
                             TruncatedSeries::monomial(p, 2, -au.inverse(), 12);
                auto xroot = series_binomial_root(xbase, make_rational(1, 5));
                require(xroot.coeff(2).same_value(
                            Padic::from_rational(p, make_rational(-1, 5)) * au.inverse()),
                        "1/(5a) coefficient mismatch");
                auto ybase = TruncatedSeries::one(p, 12) +
                             TruncatedSeries::monomial(p, 5, au.inverse(), 12);
                auto yroot = series_binomial_root(ybase, make_rational(-1, 2));
                require(yroot.coeff(10).same_value(
                            Padic::from_rational(p, make_rational(3, 8)) * au.inverse() *
                            au.inverse()),
                        "3/(8a^2) coefficient mismatch");
            }
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(seconds < 30.0, "expansion grid exceeded 30 s");
        return "7 (p, nu) pairs x 3 units: routes agree through t^13, displays exact";
    });

    // 6. Root-count of the v_3 = 0 class with the mod-9 witness.
    criterion(6, "root-count bound", [] {
        std::mt19937_64 rng(424243);
        for (int iter = 0; iter < 20; ++iter) {
            long A = 4 + 3 * static_cast<long>(rng() % 500);  // A = 1 mod 3, unit
            Padic alpha = random_unit(3, rng);
            auto expansion = expand_v3_zero_class(A);
            auto series = expansion.series.evaluate(alpha, Padic::one(3));

            auto bound = strassmann_bound(series, 10);
            require(bound.certified, "zero bound not certified");
            require(bound.max_zeros == 2, "expected exactly two zeros in 3 Z_3 (with t = 0)");

            // witness: substitute t = 3s, divide by 9, reduce mod 3; the
            // nonzero root must be s = alpha mod 3, i.e. t = 3 alpha mod 9.
            auto rescaled = series.substitute_scaled_variable(10).scale_pi(-20);
            auto residues = reduce_series_mod_p(rescaled);
            std::vector<long> quotient(residues.begin() + 1, residues.end());
            auto roots = polynomial_roots_mod_p(quotient, 3);
            long expected = alpha.residue_mod_p();
            int nonzero_roots = 0;
            for (const auto& [root, mult] : roots) {
                if (root == 0) continue;
                ++nonzero_roots;
                require(root == expected && mult == 1,
                        "nontrivial root is not t = 3 alpha mod 9");
            }
            require(nonzero_roots == 1, "expected a unique nontrivial residue root");
        }
        return "20 random units: exactly one nontrivial root, witness t = 3 alpha mod 9";
    });

    // 7. Mod-3 point sets.
    criterion(7, "mod-3 point sets", [] {
        for (long a : {4L, 7L, 22L}) {  // A = 1 mod 3
            auto pts = points_mod_p(factorize(a), 3);
            std::vector<FpPoint> expected{
                {true, 0, 0}, {false, 0, 1}, {false, 0, 2}, {false, 2, 0}};
            std::sort(expected.begin(), expected.end());
            require(pts == expected, "A = 1 mod 3 point set mismatch at A = " +
                                         std::to_string(a));
        }
        for (long a : {5L, 8L, 26L}) {  // A = -1 mod 3
            auto pts = points_mod_p(factorize(a), 3);
            std::vector<FpPoint> expected{
                {true, 0, 0}, {false, 2, 1}, {false, 2, 2}, {false, 1, 0}};
            std::sort(expected.begin(), expected.end());
            require(pts == expected, "A = -1 mod 3 point set mismatch at A = " +
                                         std::to_string(a));
        }
        return "both four-element sets reproduced exactly";
    });

    // 8. Mod-11 torsion lifting.
    criterion(8, "mod-11 lifting", [] {
        for (long a : {1L, 243L, 3125L, 759375L})
            require(all_points_lift_to_torsion(factorize(a), 11),
                    "lifting failed at A = " + std::to_string(a));
        auto chain = seven_point_candidates();
        for (const auto& f : chain.stage1) {
            long r = f.value_mod(11);
            bool congruence = r == 1 || r == 3 || r == 9;
            require(all_points_lift_to_torsion(f, 11) == congruence,
                    "lifting and congruence disagree at " + f.to_string());
        }
        return "fifth powers lift; congruence matches Hensel on all 20 candidates";
    });

    // 9. Table reproduction at bounds (10^4, 10).
    criterion(9, "table reproduction", [] {
        std::ostringstream out, err;
        int code = cli::run({"tables", "--num-bound", "10000", "--den-bound", "10",
                             "--workers", std::to_string(default_workers()), "--format",
                             "structured"},
                            out, err);
        require(code == 0, "tables command exited " + std::to_string(code) + ": " + err.str());
        auto j = Json::parse(out.str());
        require(j.at("violations").empty(), "fixture violations flagged");

        std::map<std::string, long> searched;
        for (const auto& row : j.at("candidates"))
            searched[row.at("a").get<std::string>()] = row.at("n_search").get<long>();
        require(searched.at("2^2*3^4") == 2, "2^2*3^4 search count != 2");
        require(searched.at("2^6*3^2") >= 1, "2^6*3^2 search found no pair");
        require(searched.at("2^8*3^2") == 0, "2^8*3^2 search found spurious points");
        require(searched.at("2^2*3^4*7^4") >= 1, "2^2*3^4*7^4 search found no pair");

        // the witnesses behind the two lower bounds
        auto r576 = search_points(factorize(576), 100, 3);
        bool has440 = false;
        for (const auto& pt : r576.points)
            if (!pt.at_infinity && pt.x == 4 && pt.y == 40) has440 = true;
        require(has440, "(4, 40) not found on A = 576");
        auto r777924 = search_points(factorize(777924), 100, 3);
        bool has42 = false;
        for (const auto& pt : r777924.points)
            if (!pt.at_infinity && pt.x == 42 && pt.y == 11466) has42 = true;
        require(has42, "(42, 11466) not found on A = 777924");
        return "candidate table reproduced at (10^4, 10); no violations";
    });

    // 10. Coverage of the case split.
    criterion(10, "case-split coverage", [] {
        CandidateCensus census;
        std::size_t n = census.size();
        std::vector<int> worst((n + 8191) / 8192, 0);
        for_each_chunk(n, 8192, default_workers(),
                       [&](std::size_t c, std::size_t lo, std::size_t hi) {
                           for (std::size_t i = lo; i < hi; ++i) {
                               int b = best_bound(census.at(i)).bound;  // throws if uncovered
                               worst[c] = std::max(worst[c], b);
                           }
                       });
        for (int w : worst) require(w <= 2, "bound above 2 in census");

        std::mt19937_64 rng(987654321);
        const std::vector<std::uint32_t>& pool = primes_up_to(1000);
        for (int iter = 0; iter < 100000; ++iter) {
            BigInt value = 1;
            std::vector<PrimePower> pps;
            std::set<std::uint64_t> used;
            while (true) {
                std::uint64_t p = pool[rng() % pool.size()];
                if (used.count(p)) break;
                int e = 1 + static_cast<int>(rng() % 9);
                BigInt next = value * pow_u64(p, static_cast<unsigned>(e));
                if (next > BigInt("1000000000000")) break;
                used.insert(p);
                pps.push_back({p, e});
                value = next;
                if (rng() % 3 == 0) break;
            }
            std::sort(pps.begin(), pps.end(),
                      [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
            Factorization f(1, std::move(pps));
            int b = best_bound(f).bound;  // IncompleteCover must never surface
            require(b >= 1 && b <= 2, "bound out of range");
        }
        return "best_bound applicable on all 225000 census members and 100000 random values";
    });

    // 11. Zero-bound soundness against the exhaustive oracle.
    criterion(11, "zero-bound soundness", [] {
        std::mt19937_64 rng(5550123);
        for (int p : {3, 7}) {
            int checked = 0;
            while (checked < 200) {
                std::size_t degree = 3 + rng() % 2;
                std::vector<long> coeffs(degree + 1);
                bool nonzero = false;
                for (auto& c : coeffs) {
                    c = static_cast<long>(rng() % 101) - 50;
                    nonzero |= c != 0;
                }
                if (!nonzero) continue;
                ++checked;
                auto series = TruncatedSeries::from_rationals(
                    p, std::vector<BigRational>(coeffs.begin(), coeffs.end()), coeffs.size());
                auto bound = strassmann_bound(series, 10);
                require(bound.certified, "polynomial bound not certified");
                int exact = padic_root_oracle::count_roots_in_p_zp(coeffs, p);
                require(bound.max_zeros >= exact, "certified bound undercounts");
            }
        }
        return "400 random polynomials: certified bound >= exhaustive count";
    });

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
