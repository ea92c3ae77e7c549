#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quintic/arith.hpp"

namespace quintic {

/// One curve with externally computed Mordell-Weil rank data.  Ranks are
/// never computed here; they are inputs with provenance.  n_a may be an
/// exact value or a lower bound (points exhibited, completeness open).
struct RankFixture {
    Factorization a;
    int rank = 0;
    std::optional<int> n_a;
    bool n_a_is_lower_bound = false;
    bool in_overview_table = false;    // the N(r)/B(r) records table
    bool in_candidate_table = false;   // the eight seven-point candidates
    std::string provenance;
};

/// Fixture records shipped with the library (same content as the
/// data/rank_fixtures.txt file; the test suite keeps the two in sync).
const std::vector<RankFixture>& builtin_rank_fixtures();

/// Canonical text form of the builtin fixtures.
std::string rank_fixture_text();

/// Parses the fixture format: one record per line,
///   A | rank | n_A | tables | provenance
/// with '#' comments, n_A one of "k", ">=k", "-", and tables a comma list
/// of "overview" / "candidates".
std::vector<RankFixture> parse_rank_fixtures(std::istream& in);
std::vector<RankFixture> load_rank_fixtures(const std::string& path);

}  // namespace quintic
