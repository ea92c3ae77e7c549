#include "quintic/case_filter.hpp"

#include <algorithm>
#include <array>

#include "quintic/curve_points.hpp"
#include "quintic/errors.hpp"
#include "quintic/expansions.hpp"
#include "quintic/zero_bounds.hpp"

namespace quintic {

namespace {

bool in(int v, std::initializer_list<int> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

void require_tenth_power_free(const Factorization& f) {
    if (!f.is_tenth_power_free())
        throw std::invalid_argument("filters expect a tenth-power-free value");
}

}  // namespace

std::vector<FilterVerdict> proposition_filter(const Factorization& f) {
    require_tenth_power_free(f);
    std::vector<FilterVerdict> verdicts;
    for (const auto& pp : f.factors()) {
        std::string at = " at p = " + std::to_string(pp.prime);
        if (pp.exponent == 5 && pp.prime >= 7)
            verdicts.push_back({1, "large-prime exponent-5 clause" + at});
        if (in(pp.exponent, {2, 4, 6, 8}) && pp.prime >= 11)
            verdicts.push_back({1, "large-prime even-exponent clause" + at});
        if (in(pp.exponent, {1, 3, 7, 9}) && pp.prime >= 17)
            verdicts.push_back({1, "large-prime odd-exponent clause" + at});
    }
    return verdicts;
}

std::vector<FilterVerdict> lemma_filters(const Factorization& f) {
    require_tenth_power_free(f);
    std::vector<FilterVerdict> verdicts;

    int v3 = f.exponent_of(3);
    if (v3 == 0) {
        long r = f.value_mod(3);
        if (r == 1)
            verdicts.push_back({1, "mod-3 clause (A = 1 mod 3)"});
        else if (r == 2)
            verdicts.push_back({2, "mod-3 clause (A = -1 mod 3)"});
    }

    for (const auto& pp : f.factors()) {
        std::string at = " at p = " + std::to_string(pp.prime);
        if (in(pp.exponent, {1, 3, 7, 9}) && pp.prime != 11 && pp.prime != 13)
            verdicts.push_back({1, "odd-exponent clause" + at});
        if (pp.exponent == 5 && pp.prime != 3 && pp.prime != 5)
            verdicts.push_back({1, "exponent-5 clause" + at});
        if (in(pp.exponent, {2, 4, 6, 8}) && !in(static_cast<int>(pp.prime), {2, 3, 7}))
            verdicts.push_back({1, "even-exponent clause" + at});
    }

    if (v3 == 5) verdicts.push_back({2, "exponent-5 clause at p = 3"});
    if (in(v3, {6, 8})) verdicts.push_back({1, "p = 3 even-exponent clause (v3 in {6,8})"});
    if (in(v3, {2, 4})) verdicts.push_back({2, "p = 3 even-exponent clause (v3 in {2,4})"});

    int v7 = f.exponent_of(7);
    if (in(v7, {2, 6, 8})) verdicts.push_back({1, "p = 7 even-exponent clause"});

    return verdicts;
}

FilterVerdict best_bound(const Factorization& f) {
    auto verdicts = proposition_filter(f);
    auto lemmas = lemma_filters(f);
    verdicts.insert(verdicts.end(), lemmas.begin(), lemmas.end());
    if (verdicts.empty())
        throw IncompleteCover("no elimination clause applies to " + f.to_string());
    return *std::min_element(verdicts.begin(), verdicts.end(),
                             [](const FilterVerdict& a, const FilterVerdict& b) {
                                 return a.bound < b.bound;
                             });
}

namespace {

constexpr std::array<int, 9> kV7Choices{0, 1, 2, 3, 4, 6, 7, 8, 9};
constexpr std::array<int, 5> kV11Choices{0, 1, 3, 7, 9};

}  // namespace

CandidateCensus::CandidateCensus(bool include_negative)
    : include_negative_(include_negative) {}

std::size_t CandidateCensus::size() const {
    std::size_t base = 10u * 10 * 10 * 9 * 5 * 5;
    return include_negative_ ? 2 * base : base;
}

Factorization CandidateCensus::at(std::size_t index) const {
    if (index >= size()) throw std::out_of_range("census index");
    std::size_t base = 10u * 10 * 10 * 9 * 5 * 5;
    int sign = 1;
    if (include_negative_ && index >= base) {
        sign = -1;
        index -= base;
    }
    int v13 = kV11Choices[index % 5];
    index /= 5;
    int v11 = kV11Choices[index % 5];
    index /= 5;
    int v7 = kV7Choices[index % 9];
    index /= 9;
    int v5 = static_cast<int>(index % 10);
    index /= 10;
    int v3 = static_cast<int>(index % 10);
    index /= 10;
    int v2 = static_cast<int>(index);

    std::vector<PrimePower> pps;
    if (v2) pps.push_back({2, v2});
    if (v3) pps.push_back({3, v3});
    if (v5) pps.push_back({5, v5});
    if (v7) pps.push_back({7, v7});
    if (v11) pps.push_back({11, v11});
    if (v13) pps.push_back({13, v13});
    return Factorization(sign, std::move(pps));
}

bool CandidateCensus::contains(const Factorization& f) const {
    if (f.sign() < 0 && !include_negative_) return false;
    for (const auto& pp : f.factors()) {
        switch (pp.prime) {
            case 2:
            case 3:
            case 5:
                if (pp.exponent > 9) return false;
                break;
            case 7:
                if (pp.exponent > 9 || pp.exponent == 5) return false;
                break;
            case 11:
            case 13:
                if (!in(pp.exponent, {1, 3, 7, 9})) return false;
                break;
            default:
                return false;
        }
    }
    return true;
}

SevenPointCandidates seven_point_candidates() {
    SevenPointCandidates result;
    for (int v2 : {0, 2, 4, 6, 8}) {
        for (int v3 : {2, 4}) {
            for (int v7 : {0, 4}) {
                std::vector<PrimePower> pps;
                if (v2) pps.push_back({2, v2});
                pps.push_back({3, v3});
                if (v7) pps.push_back({7, v7});
                result.stage1.push_back(Factorization(1, std::move(pps)));
            }
        }
    }
    auto by_value = [](const Factorization& a, const Factorization& b) {
        return a.value() < b.value();
    };
    std::sort(result.stage1.begin(), result.stage1.end(), by_value);

    for (const auto& f : result.stage1) {
        long r = f.value_mod(11);
        bool eliminated_by_residue = (r == 1 || r == 3 || r == 9);
        bool eliminated_by_lifting = all_points_lift_to_torsion(f, 11);
        if (eliminated_by_residue != eliminated_by_lifting)
            throw Error("mod-11 residue criterion and Hensel lifting disagree at " +
                        f.to_string());
        if (!eliminated_by_lifting) result.stage2.push_back(f);
    }
    return result;
}

SixPointReport six_point_candidates() {
    // Tenth-power-free fifth powers that survive the exponent-5 clauses:
    // support must lie in {3, 5}, exponents 0 or 5.
    SixPointReport report;
    for (int v3 : {0, 5}) {
        for (int v5 : {0, 5}) {
            std::vector<PrimePower> pps;
            if (v3) pps.push_back({3, v3});
            if (v5) pps.push_back({5, v5});
            Factorization f(1, std::move(pps));
            SixPointEntry entry;
            entry.value = f;
            entry.mod11 = f.value_mod(11);
            entry.lifts_to_torsion = all_points_lift_to_torsion(f, 11);
            entry.eliminated = entry.lifts_to_torsion;
            if (!entry.eliminated) report.survivors.push_back(f);
            report.entries.push_back(std::move(entry));
        }
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const SixPointEntry& a, const SixPointEntry& b) {
                  return a.value.value() < b.value.value();
              });
    return report;
}

ContributionBounds contribution_table_p3(std::pair<long, long> alpha_beta_residue, int nu) {
    if (!in(nu, {2, 4, 6, 8})) throw std::invalid_argument("nu must be even, in 2..8");
    long ap = ((alpha_beta_residue.first % 3) + 3) % 3;
    long be = ((alpha_beta_residue.second % 3) + 3) % 3;
    if (ap == 0 && be == 0)
        throw std::invalid_argument("(alpha' : beta) must be a point of P^1(F_3)");

    auto roots_with_multiplicity = [](const TruncatedSeries& series) {
        auto residues = reduce_series_mod_p(series);
        if (std::all_of(residues.begin(), residues.end(), [](long r) { return r == 0; }))
            throw ZeroReduction("series reduces to zero");
        if (residues[0] != 0) return 0;  // no zero of lambda/t at all
        std::vector<long> quotient(residues.begin() + 1, residues.end());
        if (std::all_of(quotient.begin(), quotient.end(), [](long r) { return r == 0; }))
            throw ZeroReduction("quotient reduces to zero");
        int total = 0;
        for (const auto& [root, mult] : polynomial_roots_mod_p(quotient, 3)) total += mult;
        return total;
    };

    Padic a0 = Padic::from_integer(3, ap);
    Padic b0 = Padic::from_integer(3, be);

    ContributionBounds bounds;

    // Residue class of infinity: nontrivial zeros pair up under t -> -t.
    auto inf = expand_at_infinity(3, nu, Padic::one(3), kDefaultExpansionOrder,
                                  Route::ClosedForm, true);
    bounds.at_infinity = roots_with_multiplicity(inf.series.evaluate(a0, b0)) / 2;

    // Residue classes of (0, +-b); the pair is counted once.  The residue
    // field sees a = 1 (a is a square unit).
    auto square = expand_at_square_class(3, nu, Padic::one(3), kDefaultExpansionOrder,
                                         Route::ClosedForm, true);
    try {
        bounds.at_square_class = roots_with_multiplicity(square.series.evaluate(a0, b0));
    } catch (const ZeroReduction&) {
        // Everything visible mod 3 vanishes (alpha' = 0 mod 3, nu in {6,8}):
        // the two dominant terms allow at most one extra solution.
        bounds.at_square_class = 1;
    }
    return bounds;
}

}  // namespace quintic
