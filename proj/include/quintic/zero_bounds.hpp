#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "quintic/series.hpp"

namespace quintic {

/// Outcome of a Strassmann/Newton-polygon zero count on a disc.
/// `certified` is set only when the tail bound strictly dominates the
/// minimal attained coefficient valuation over the disc; an uncertified
/// result is reported as inconclusive rather than silently unsound.
struct ZeroBoundResult {
    int max_zeros = 0;
    bool certified = false;
    std::optional<std::size_t> dominating_index;
    std::string notes;
};

/// Upper bound (with multiplicity, including t = 0 when the series
/// vanishes there) on the zeros of s in the disc v(t) >= disc tenths.
ZeroBoundResult strassmann_bound(const TruncatedSeries& s, long disc_valuation_tenths);

/// Residues of the known coefficients of a series that is integral on the
/// unit disc; validates that every known coefficient has a determined
/// residue and that the tail both reduces to zero and converges.
std::vector<long> reduce_series_mod_p(const TruncatedSeries& s);

/// Roots (residue, multiplicity) of a nonzero polynomial over F_p.
std::vector<std::pair<long, int>> polynomial_roots_mod_p(const std::vector<long>& poly,
                                                         long p);

/// Number of nonzero roots in F_p, with multiplicity, of the reduction of
/// s/t after specializing the linear-form coefficients at the given
/// (alpha, beta) residues.  Throws ZeroReduction when the whole reduction
/// vanishes (callers must rescale first).
int count_extra_solutions_mod_p(const LinearSeries& s,
                                std::pair<long, long> alpha_beta_residues);

/// Per-residue-class zero bound 1 + n + v(p, n) from the quoted table
/// {(3,0) -> 0, (3,1) -> 1, (3,2) -> 0}; values of v(p, n) outside the
/// table must be supplied by the caller or UnknownTableEntry is thrown.
int residue_class_bound(int vanishing_order, int p,
                        const std::map<std::pair<int, int>, int>* extension = nullptr);

}  // namespace quintic
