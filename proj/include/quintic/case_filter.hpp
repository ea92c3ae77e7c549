#pragma once

#include <string>
#include <vector>

#include "quintic/arith.hpp"

namespace quintic {

/// Conclusion of one elimination clause: an upper bound on n_A that is
/// valid under the hypothesis r_A = 1, tagged with its source.
struct FilterVerdict {
    int bound = 0;
    std::string source;
    bool applicable = true;

    bool operator==(const FilterVerdict&) const = default;
};

/// The large-prime clauses: n_A <= 1 when (1) v_p(A) = 5 for some p >= 7,
/// (2) v_p(A) in {2,4,6,8} for some p >= 11, (3) v_p(A) in {1,3,7,9} for
/// some p >= 17.
std::vector<FilterVerdict> proposition_filter(const Factorization& f);

/// The small-prime clauses: the mod-3 bound for v_3 = 0, the odd-exponent
/// bound for p not in {11, 13}, the exponent-5 bounds, the even-exponent
/// bound for p not in {2, 3, 7}, and the p = 3 and p = 7 even-exponent
/// refinements.
std::vector<FilterVerdict> lemma_filters(const Factorization& f);

/// Minimum over every applicable clause.  The union of the clauses covers
/// every tenth-power-free value; IncompleteCover is thrown (and tested to
/// be unreachable) if none applies.
FilterVerdict best_bound(const Factorization& f);

/// Exponent-vector census of the curves surviving the large-prime clauses:
/// v2, v3, v5 in 0..9, v7 in 0..9 without 5, v11 and v13 in {0,1,3,7,9},
/// all other exponents zero.  Deterministically indexable, so sweeps can
/// be chunked across workers.
class CandidateCensus {
public:
    explicit CandidateCensus(bool include_negative = false);

    std::size_t size() const;
    Factorization at(std::size_t index) const;
    bool contains(const Factorization& f) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < size(); ++i) fn(at(i));
    }

private:
    bool include_negative_;
};

/// The candidates for seven rational points: stage 1 is the square values
/// with support in {2,3,7}, v7 in {0,4}, v3 in {2,4}, v2 in {0,2,4,6,8};
/// stage 2 removes those whose F_11-points all lift to torsion (checked
/// both by the residue criterion A mod 11 in {1,3,9} and by the Hensel
/// lifting test; the two must agree).
struct SevenPointCandidates {
    std::vector<Factorization> stage1;
    std::vector<Factorization> stage2;
};
SevenPointCandidates seven_point_candidates();

/// The candidates for six rational points: the tenth-power-free fifth
/// powers surviving the exponent-5 clauses, annotated with the mod-11
/// elimination.  The survivor list is empty: all four values are 1 mod 11.
struct SixPointEntry {
    Factorization value;
    long mod11 = 0;
    bool lifts_to_torsion = false;
    bool eliminated = false;
};
struct SixPointReport {
    std::vector<SixPointEntry> entries;
    std::vector<Factorization> survivors;
};
SixPointReport six_point_candidates();

/// Possible contributions to n_A at p = 3 from the residue classes of
/// infinity and of (0, +-b), for even nu, by the residue of
/// (alpha' : beta) in P^1(F_3).  Derived from the expansions, not a
/// lookup table.
struct ContributionBounds {
    int at_infinity = 0;
    int at_square_class = 0;

    bool operator==(const ContributionBounds&) const = default;
};
ContributionBounds contribution_table_p3(std::pair<long, long> alpha_beta_residue, int nu);

}  // namespace quintic
