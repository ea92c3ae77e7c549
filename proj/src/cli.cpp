#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "quintic/case_filter.hpp"
#include "quintic/curve_points.hpp"
#include "quintic/errors.hpp"
#include "quintic/expansions.hpp"
#include "quintic/fixtures.hpp"
#include "quintic/json_io.hpp"
#include "quintic/zero_bounds.hpp"

namespace quintic::cli {

namespace {

bool structured_format(const std::string& format) { return format != "text"; }

Factorization parse_reduced(const std::string& text, std::ostream& out, bool quiet = false) {
    Factorization f = parse_factorization(text);
    auto [reduced, c] = tenth_power_free_reduce(f);
    if (c != 1 && !quiet)
        out << "note: " << f.to_string() << " reduced by the tenth power of " << c.get_str()
            << " to the isomorphic curve with A = " << reduced.to_string() << "\n";
    return reduced;
}

std::string point_text(const RationalPoint& pt) {
    if (pt.at_infinity) return "infinity";
    std::string cls;
    switch (pt.classification) {
        case PointClass::Infinity: cls = "infinity"; break;
        case PointClass::XZero: cls = "x = 0"; break;
        case PointClass::YZero: cls = "y = 0"; break;
        case PointClass::Torsion4A: cls = "torsion pair"; break;
        case PointClass::Nontrivial: cls = "nontrivial"; break;
    }
    return "(" + pt.x.get_str() + ", " + pt.y.get_str() + ")  [" + cls + "]";
}

const char* d_a_reason(int d) {
    switch (d) {
        case 4: return "A = 1";
        case 3: return "A is a square, A != 1";
        case 2: return "A is a fifth power, A != 1";
        default: return "A is neither a square nor a fifth power";
    }
}

// ----------------------------------------------------------------- search

int cmd_search(const std::string& a_text, long num_bound, long den_bound, int workers,
               const std::string& format, std::ostream& out) {
    Factorization a = parse_reduced(a_text, out, structured_format(format));
    SearchReport report = search_points(a, num_bound, den_bound, workers);
    if (structured_format(format)) {
        out << search_report_to_json(report).dump(2) << "\n";
        return 0;
    }
    out << "curve: y^2 = x^5 + A, A = " << report.a.value().get_str() << " = "
        << report.a.to_string() << "\n";
    out << "search bounds: |x| <= " << num_bound << ", denominator e <= " << den_bound
        << "\n";
    out << "points found (" << report.total_found << "):\n";
    for (const auto& pt : report.points) out << "  " << point_text(pt) << "\n";
    out << "d_A = " << report.d_a << ", n_A >= " << report.n_a_lower << ", #C(Q) >= "
        << report.d_a + 2 * report.n_a_lower << "\n";
    return 0;
}

// --------------------------------------------------------------- classify

int cmd_classify(const std::string& a_text, const std::string& format, std::ostream& out) {
    Factorization a = parse_reduced(a_text, out, structured_format(format));
    int d = trivial_point_count(a);
    auto torsion = rational_torsion_points(a);
    if (structured_format(format)) {
        Json points = Json::array();
        for (const auto& pt : torsion) points.push_back(point_to_json(pt));
        out << Json{{"schema", "quintic.classify/1"},
                    {"a", factorization_to_json(a)},
                    {"d_a", d},
                    {"d_a_reason", d_a_reason(d)},
                    {"torsion_points", points}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "A = " << a.value().get_str() << " = " << a.to_string() << "\n";
    out << "d_A = " << d << " (" << d_a_reason(d) << ")\n";
    out << "rational torsion points:\n";
    for (const auto& pt : torsion) out << "  " << point_text(pt) << "\n";
    return 0;
}

// ------------------------------------------------------------------ bound

int cmd_bound(const std::string& a_text, const std::string& format, std::ostream& out) {
    Factorization a = parse_reduced(a_text, out, structured_format(format));
    auto verdicts = proposition_filter(a);
    auto lemmas = lemma_filters(a);
    verdicts.insert(verdicts.end(), lemmas.begin(), lemmas.end());
    FilterVerdict best = best_bound(a);

    if (structured_format(format)) {
        Json list = Json::array();
        for (const auto& v : verdicts) list.push_back({{"bound", v.bound}, {"source", v.source}});
        out << Json{{"schema", "quintic.bound/1"},
                    {"a", factorization_to_json(a)},
                    {"hypothesis", "r_A = 1"},
                    {"verdicts", list},
                    {"best_bound", best.bound},
                    {"best_source", best.source}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "A = " << a.value().get_str() << " = " << a.to_string() << "\n";
    out << "conditional on the rank hypothesis r_A = 1:\n";
    for (const auto& v : verdicts)
        out << "  n_A <= " << v.bound << "  [" << v.source << "]\n";
    out << "best: n_A <= " << best.bound << "  [" << best.source << "]\n";
    return 0;
}

// ----------------------------------------------------------------- expand

struct ExpansionRequest {
    int p = 3;
    std::string cls = "infinity";
    int nu = -1;
    long a_lift = 1;
    long b_lift = 0;   // 0 = derive from a
    int order = static_cast<int>(kDefaultExpansionOrder);
    bool alpha_prime = false;
    int precision = Padic::kDefaultDigits;
};

ExpansionResult build_expansion(const ExpansionRequest& req, Route route) {
    if (req.cls == "infinity") {
        if (req.nu < 0) throw Error("--nu is required for the infinity class");
        Padic a = Padic::from_integer(req.p, req.a_lift, req.precision);
        return expand_at_infinity(req.p, req.nu, a, req.order, route, req.alpha_prime);
    }
    if (req.cls == "weierstrass") {
        if (req.p == 5) throw UnsupportedPrime("Weierstrass-class expansion excludes p = 5");
        Padic b;
        if (req.b_lift != 0) {
            b = Padic::from_integer(req.p, req.b_lift, req.precision);
        } else {
            auto root = hensel_nth_root(Padic::from_integer(req.p, req.a_lift, req.precision), 5);
            if (!root)
                throw Error("class not applicable: a = " + std::to_string(req.a_lift) +
                            " is not a fifth power in Z_" + std::to_string(req.p));
            b = *root;
        }
        return expand_at_weierstrass(req.p, b, req.order, route, req.alpha_prime);
    }
    if (req.cls == "square") {
        if (req.p == 2) throw UnsupportedPrime("square-class expansion excludes p = 2");
        if (req.nu < 0) throw Error("--nu is required for the square class");
        Padic b;
        if (req.b_lift != 0) {
            b = Padic::from_integer(req.p, req.b_lift, req.precision);
        } else {
            auto root = hensel_sqrt(Padic::from_integer(req.p, req.a_lift, req.precision));
            if (!root)
                throw Error("class not applicable: a = " + std::to_string(req.a_lift) +
                            " is not a square in Z_" + std::to_string(req.p));
            b = *root;
        }
        return expand_at_square_class(req.p, req.nu, b, req.order, route, req.alpha_prime);
    }
    if (req.cls == "v3zero") {
        if (req.p != 3) throw Error("class v3zero is specific to p = 3");
        return expand_v3_zero_class(BigInt(req.a_lift), req.order, route);
    }
    throw Error("unknown residue class: " + req.cls);
}

std::string normalization_line(const ExpansionResult& r) {
    std::ostringstream line;
    line << (r.sign < 0 ? "-" : "") << "(" << r.multiplier.to_string() << ") * lambda = ";
    if (r.prefactor_tenths != 0) line << "pi^" << r.prefactor_tenths << " * ";
    line << "series(t),  T = pi^" << r.uniformizer_scale_tenths << " * t";
    if (r.alpha_prime) line << ",  alpha = " << r.p << " * alpha'";
    return line.str();
}

int cmd_expand(const ExpansionRequest& req, const std::string& format, std::ostream& out) {
    ExpansionResult fast = build_expansion(req, Route::ClosedForm);
    ExpansionResult oracle = build_expansion(req, Route::CurveEquation);

    std::size_t shown = std::min(fast.series.order(), oracle.series.order());
    auto agree = [&](std::size_t i) {
        return fast.series.alpha_part.coeff(i).agrees_to_tenths(
                   oracle.series.alpha_part.coeff(i), 100) &&
               fast.series.beta_part.coeff(i).agrees_to_tenths(
                   oracle.series.beta_part.coeff(i), 100);
    };

    if (structured_format(format)) {
        Json coeffs = Json::array();
        for (std::size_t i = 0; i < shown; ++i)
            coeffs.push_back({{"index", i},
                              {"alpha", fast.series.alpha_part.coeff(i).to_string()},
                              {"beta", fast.series.beta_part.coeff(i).to_string()},
                              {"routes_agree", agree(i)}});
        out << Json{{"schema", "quintic.expansion/1"},
                    {"class", req.cls},
                    {"p", fast.p},
                    {"nu", fast.nu},
                    {"mu", fast.mu},
                    {"rho", fast.rho},
                    {"sign", fast.sign},
                    {"multiplier", fast.multiplier.to_string()},
                    {"prefactor_tenths", fast.prefactor_tenths},
                    {"uniformizer_scale_tenths", fast.uniformizer_scale_tenths},
                    {"alpha_prime", fast.alpha_prime},
                    {"coefficients", coeffs}}
                   .dump(2)
            << "\n";
        return 0;
    }

    out << "class " << req.cls << " at p = " << fast.p;
    if (req.cls != "v3zero") out << ", nu = " << fast.nu;
    if (fast.class_id.kind == ResidueClassKind::SquareRootClass && fast.nu > 0)
        out << " (n = " << fast.n << ", mu = " << fast.mu << ", rho = " << fast.rho << ")";
    out << "\n" << normalization_line(fast) << "\n";
    out << "coefficients of series(t), closed route; last column marks agreement with the\n"
           "independent curve-equation route:\n";
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& ca = fast.series.alpha_part.coeff(i);
        const auto& cb = fast.series.beta_part.coeff(i);
        if (ca.is_zero() && cb.is_zero() && i > 0) continue;
        out << "  t^" << std::left << std::setw(3) << i << " alpha: " << std::setw(34)
            << ca.to_string() << " beta: " << std::setw(34) << cb.to_string()
            << (agree(i) ? "  ok" : "  MISMATCH") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- zero-bound

int cmd_zero_bound(const ExpansionRequest& req, long alpha, long beta, long disc_tenths,
                   const std::string& format, std::ostream& out) {
    ExpansionResult expansion = build_expansion(req, Route::ClosedForm);
    auto series = expansion.series.evaluate(
        Padic::from_integer(req.p, alpha, req.precision),
        Padic::from_integer(req.p, beta, req.precision));
    ZeroBoundResult result = strassmann_bound(series, disc_tenths);

    int nontrivial = std::max(0, result.max_zeros - 1);
    if (structured_format(format)) {
        Json j{{"schema", "quintic.zero-bound/1"},
               {"class", req.cls},
               {"p", req.p},
               {"alpha", alpha},
               {"beta", beta},
               {"disc_valuation_tenths", disc_tenths},
               {"max_zeros", result.max_zeros},
               {"nontrivial_zeros", nontrivial},
               {"certified", result.certified},
               {"notes", result.notes}};
        if (result.dominating_index) j["dominating_index"] = *result.dominating_index;
        out << j.dump(2) << "\n";
    } else {
        out << "zeros of lambda on the disc v(t) >= " << disc_tenths << " tenths: at most "
            << result.max_zeros << " (including t = 0), nontrivial <= " << nontrivial << "\n";
        if (result.dominating_index)
            out << "dominating index: " << *result.dominating_index << "\n";
        out << "certified: " << (result.certified ? "yes" : "NO (inconclusive)") << "\n";
        out << "notes: " << result.notes << "\n";
    }
    return result.certified ? 0 : 4;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(bool include_negative, long limit, bool values,
                  const std::string& format, std::ostream& out) {
    CandidateCensus census(include_negative);
    if (structured_format(format)) {
        Json j{{"schema", "quintic.census/1"},
               {"count", census.size()},
               {"include_negative", include_negative}};
        if (values) {
            Json list = Json::array();
            for (std::size_t i = 0; i < census.size() && static_cast<long>(i) < limit; ++i)
                list.push_back(census.at(i).to_string());
            j["values"] = list;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "census of curves surviving the large-prime clauses: " << census.size() << "\n";
    out << "(v2, v3, v5 in 0..9; v7 in 0..9 without 5; v11, v13 in {0,1,3,7,9}"
        << (include_negative ? "; both signs" : "") << ")\n";
    if (values)
        for (std::size_t i = 0; i < census.size() && static_cast<long>(i) < limit; ++i)
            out << "  " << census.at(i).to_string() << "\n";
    return 0;
}

// ------------------------------------------------------------- candidates

int cmd_candidates(const std::string& format, std::ostream& out) {
    auto seven = seven_point_candidates();
    auto six = six_point_candidates();

    if (structured_format(format)) {
        Json stage1 = Json::array();
        for (const auto& f : seven.stage1) {
            long r = f.value_mod(11);
            stage1.push_back({{"a", f.to_string()},
                              {"mod11", r},
                              {"eliminated", r == 1 || r == 3 || r == 9}});
        }
        Json stage2 = Json::array();
        for (const auto& f : seven.stage2) stage2.push_back(f.to_string());
        Json six_entries = Json::array();
        for (const auto& e : six.entries)
            six_entries.push_back({{"a", e.value.to_string()},
                                   {"mod11", e.mod11},
                                   {"lifts_to_torsion", e.lifts_to_torsion},
                                   {"eliminated", e.eliminated}});
        Json survivors = Json::array();
        for (const auto& f : six.survivors) survivors.push_back(f.to_string());
        out << Json{{"schema", "quintic.candidates/1"},
                    {"seven_point", {{"stage1", stage1}, {"stage2", stage2}}},
                    {"six_point", {{"entries", six_entries}, {"survivors", survivors}}}}
                   .dump(2)
            << "\n";
        return 0;
    }

    out << "seven-point candidates (squares, support {2,3,7}, v7 in {0,4}, v3 in {2,4},\n"
           "v2 in {0,2,4,6,8}): "
        << seven.stage1.size() << " values\n";
    for (const auto& f : seven.stage1) {
        long r = f.value_mod(11);
        bool eliminated = r == 1 || r == 3 || r == 9;
        out << "  " << std::left << std::setw(14) << f.to_string() << " mod 11 = "
            << std::setw(2) << r
            << (eliminated ? "  eliminated (F_11 points all lift to torsion)" : "  kept")
            << "\n";
    }
    out << "after the mod-11 torsion-lifting filter: " << seven.stage2.size() << " values\n";
    for (const auto& f : seven.stage2) out << "  " << f.to_string() << "\n";

    out << "six-point candidates (tenth-power-free fifth powers surviving the exponent-5\n"
           "clauses):\n";
    for (const auto& e : six.entries)
        out << "  " << std::left << std::setw(8) << e.value.to_string() << " mod 11 = "
            << e.mod11 << (e.eliminated ? "  eliminated" : "  kept") << "\n";
    out << "survivors: " << (six.survivors.empty() ? "none" : "") << "\n";
    for (const auto& f : six.survivors) out << "  " << f.to_string() << "\n";
    return 0;
}

// ----------------------------------------------------------------- tables

struct OverviewRow {
    int rank;
    int n_max = -1;
    bool n_is_lower = false;
    std::string a_for_n;
    int b_max = -1;
    bool b_is_lower = false;
    std::string a_for_b;
};

struct CandidateRow {
    std::string a;
    int rank = 0;
    int n_fixture = 0;
    bool n_is_lower = false;
    long n_search = 0;
    std::string status;
};

struct TablesData {
    std::vector<OverviewRow> overview;
    std::vector<CandidateRow> candidates;
    std::vector<std::string> violations;
};

TablesData build_tables(const std::vector<RankFixture>& fixtures, long num_bound,
                        long den_bound, int workers) {
    TablesData data;

    std::map<std::string, long> found;
    for (const auto& fx : fixtures) {
        std::string key = fx.a.to_string();
        if (found.count(key)) continue;
        found[key] = search_points(fx.a, num_bound, den_bound, workers).n_a_lower;
    }

    std::map<int, OverviewRow> by_rank;
    for (const auto& fx : fixtures) {
        if (!fx.in_overview_table || !fx.n_a) continue;
        auto& row = by_rank.try_emplace(fx.rank, OverviewRow{fx.rank}).first->second;
        int n = *fx.n_a;
        int b = 2 * n + trivial_point_count(fx.a);
        if (n > row.n_max) {
            row.n_max = n;
            row.n_is_lower = fx.n_a_is_lower_bound;
            row.a_for_n = fx.a.to_string();
        }
        if (b > row.b_max) {
            row.b_max = b;
            row.b_is_lower = fx.n_a_is_lower_bound;
            row.a_for_b = fx.a.to_string();
        }
    }
    for (auto& [rank, row] : by_rank) data.overview.push_back(row);

    std::vector<const RankFixture*> candidate_rows;
    for (const auto& fx : fixtures)
        if (fx.in_candidate_table) candidate_rows.push_back(&fx);
    std::sort(candidate_rows.begin(), candidate_rows.end(),
              [](const RankFixture* a, const RankFixture* b) {
                  return a->a.value() < b->a.value();
              });

    for (const RankFixture* fx : candidate_rows) {
        CandidateRow row;
        row.a = fx->a.to_string();
        row.rank = fx->rank;
        row.n_fixture = fx->n_a.value_or(0);
        row.n_is_lower = fx->n_a_is_lower_bound;
        row.n_search = found.at(row.a);
        if (!fx->n_a) {
            row.status = "no fixture value";
        } else if (fx->n_a_is_lower_bound) {
            row.status = row.n_search >= *fx->n_a ? "confirmed" : "partial";
        } else if (row.n_search == *fx->n_a) {
            row.status = "confirmed";
        } else if (row.n_search < *fx->n_a) {
            row.status = "partial";
        } else {
            row.status = "VIOLATION";
            data.violations.push_back("A = " + row.a + ": search found " +
                                      std::to_string(row.n_search) +
                                      " pairs, fixture claims exactly " +
                                      std::to_string(*fx->n_a));
        }
        data.candidates.push_back(std::move(row));
    }

    // A search can never exceed an exact overview record either.
    for (const auto& fx : fixtures) {
        if (!fx.in_overview_table || !fx.n_a || fx.n_a_is_lower_bound) continue;
        long n = found.at(fx.a.to_string());
        if (n > *fx.n_a)
            data.violations.push_back("A = " + fx.a.to_string() + ": search found " +
                                      std::to_string(n) + " pairs, fixture claims exactly " +
                                      std::to_string(*fx.n_a));
    }
    return data;
}

int cmd_tables(const std::string& fixtures_path, long num_bound, long den_bound, int workers,
               const std::string& format, std::ostream& out) {
    std::vector<RankFixture> fixtures =
        fixtures_path.empty() ? builtin_rank_fixtures() : load_rank_fixtures(fixtures_path);
    TablesData data = build_tables(fixtures, num_bound, den_bound, workers);

    if (structured_format(format)) {
        Json overview = Json::array();
        for (const auto& row : data.overview)
            overview.push_back({{"rank", row.rank},
                                {"n_max", row.n_max},
                                {"n_is_lower_bound", row.n_is_lower},
                                {"a_for_n", row.a_for_n},
                                {"b_max", row.b_max},
                                {"b_is_lower_bound", row.b_is_lower},
                                {"a_for_b", row.a_for_b}});
        Json candidates = Json::array();
        for (const auto& row : data.candidates)
            candidates.push_back({{"a", row.a},
                                  {"rank", row.rank},
                                  {"n_fixture", row.n_fixture},
                                  {"n_is_lower_bound", row.n_is_lower},
                                  {"n_search", row.n_search},
                                  {"status", row.status}});
        out << Json{{"schema", "quintic.tables/1"},
                    {"numerator_bound", num_bound},
                    {"denominator_bound", den_bound},
                    {"overview", overview},
                    {"candidates", candidates},
                    {"violations", data.violations}}
                   .dump(2)
            << "\n";
    } else {
        out << "records by rank (ranks are fixture inputs; search bounds |x| <= " << num_bound
            << ", e <= " << den_bound << "):\n";
        out << "  r | N(r) | B(r) | A attaining N | A attaining B\n";
        for (const auto& row : data.overview) {
            out << "  " << row.rank << " | " << (row.n_is_lower ? ">=" : "") << row.n_max
                << " | " << (row.b_is_lower ? ">=" : "") << row.b_max << " | " << row.a_for_n
                << " | " << row.a_for_b << "\n";
        }
        out << "candidate curves:\n";
        out << "  A | rank | n_A fixture | n_A search | status\n";
        for (const auto& row : data.candidates)
            out << "  " << row.a << " | " << row.rank << " | "
                << (row.n_is_lower ? ">=" : "") << row.n_fixture << " | " << row.n_search
                << " | " << row.status << "\n";
        if (data.violations.empty()) {
            out << "violations: none\n";
        } else {
            out << "violations:\n";
            for (const auto& v : data.violations) out << "  " << v << "\n";
        }
    }
    return data.violations.empty() ? 0 : 3;
}

// -------------------------------------------------------- verify-fixtures

int cmd_verify_fixtures(const std::string& fixtures_path, std::ostream& out) {
    std::vector<RankFixture> fixtures =
        fixtures_path.empty() ? builtin_rank_fixtures() : load_rank_fixtures(fixtures_path);

    std::vector<std::string> problems;
    for (const auto& fx : fixtures) {
        if (fx.rank == 1 && fx.n_a && !fx.n_a_is_lower_bound) {
            int bound = best_bound(fx.a).bound;
            if (*fx.n_a > bound)
                problems.push_back("A = " + fx.a.to_string() + ": fixture n_A = " +
                                   std::to_string(*fx.n_a) +
                                   " exceeds the conditional bound " + std::to_string(bound));
        }
    }

    std::set<std::string> table_rows;
    for (const auto& fx : fixtures)
        if (fx.in_candidate_table) table_rows.insert(fx.a.to_string());
    std::set<std::string> survivors;
    for (const auto& f : seven_point_candidates().stage2) survivors.insert(f.to_string());
    if (table_rows != survivors)
        problems.push_back("candidate-table rows do not match the eight surviving values");

    if (problems.empty()) {
        out << "fixtures OK (" << fixtures.size() << " records)\n";
        return 0;
    }
    for (const auto& p : problems) out << "fixture violation: " << p << "\n";
    return 3;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rational points on the curves y^2 = x^5 + A via p-adic analytic bounds"};
    app.require_subcommand(1);

    std::string a_text;
    long num_bound = 100, den_bound = 3;
    int workers = 1;
    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured", "json-like-structured"}));
    };

    auto* search = app.add_subcommand("search", "search for rational points");
    search->add_option("A", a_text, "curve parameter (integer or factored, e.g. 2^2*3^4)")
        ->required();
    search->add_option("--num-bound", num_bound, "bound on |x| (default 100)");
    search->add_option("--den-bound", den_bound, "bound on the denominator e (default 3)");
    search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    add_format(search);

    auto* classify = app.add_subcommand("classify", "trivial points and torsion");
    classify->add_option("A", a_text, "curve parameter")->required();
    add_format(classify);

    auto* bound = app.add_subcommand("bound", "conditional bound on n_A (assuming rank 1)");
    bound->add_option("A", a_text, "curve parameter")->required();
    add_format(bound);

    ExpansionRequest req;
    long alpha = 1, beta = 1, disc_tenths = 10;
    auto add_expansion_options = [&](CLI::App* cmd) {
        cmd->add_option("--p", req.p, "prime")->required();
        cmd->add_option("--class", req.cls, "residue class")
            ->check(CLI::IsMember({"infinity", "weierstrass", "square", "v3zero"}))
            ->required();
        cmd->add_option("--nu", req.nu, "v_p(A) (infinity/square classes)");
        cmd->add_option("--a", req.a_lift, "unit part of A (or A itself for v3zero)");
        cmd->add_option("--b", req.b_lift, "root with b^5 = a or b^2 = a (derived when 0)");
        cmd->add_option("--order", req.order, "truncation order");
        cmd->add_option("--precision", req.precision, "working precision in p-adic digits");
        cmd->add_flag("--alpha-prime", req.alpha_prime,
                      "normalize the differential with alpha = p * alpha'");
    };

    auto* expand = app.add_subcommand("expand", "logarithm expansion on a residue class");
    add_expansion_options(expand);
    add_format(expand);

    auto* zero_bound = app.add_subcommand("zero-bound",
                                          "certified zero count for a specialized expansion");
    add_expansion_options(zero_bound);
    zero_bound->add_option("--alpha", alpha, "alpha value of the differential");
    zero_bound->add_option("--beta", beta, "beta value of the differential");
    zero_bound->add_option("--disc-tenths", disc_tenths,
                           "disc valuation in tenths (default 10 = p Z_p)");
    add_format(zero_bound);

    bool include_negative = false;
    bool list_values = false;
    long limit = 20;
    auto* enumerate = app.add_subcommand("enumerate", "census of surviving exponent vectors");
    enumerate->add_flag("--include-negative", include_negative, "include negative values");
    enumerate->add_flag("--values", list_values, "list leading census members");
    enumerate->add_option("--limit", limit, "how many members to list");
    add_format(enumerate);

    auto* candidates = app.add_subcommand("candidates", "seven- and six-point candidate chains");
    add_format(candidates);

    std::string fixtures_path;
    auto* tables = app.add_subcommand("tables", "reproduce the rank/point-count tables");
    tables->add_option("--fixtures", fixtures_path, "fixture file (builtin when omitted)");
    tables->add_option("--num-bound", num_bound, "bound on |x|");
    tables->add_option("--den-bound", den_bound, "bound on the denominator e");
    tables->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    add_format(tables);

    auto* verify = app.add_subcommand("verify-fixtures", "consistency checks on fixture data");
    verify->add_option("--fixtures", fixtures_path, "fixture file (builtin when omitted)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*search) return cmd_search(a_text, num_bound, den_bound, workers, format, out);
        if (*classify) return cmd_classify(a_text, format, out);
        if (*bound) return cmd_bound(a_text, format, out);
        if (*expand) return cmd_expand(req, format, out);
        if (*zero_bound) return cmd_zero_bound(req, alpha, beta, disc_tenths, format, out);
        if (*enumerate)
            return cmd_enumerate(include_negative, limit, list_values, format, out);
        if (*candidates) return cmd_candidates(format, out);
        if (*tables) return cmd_tables(fixtures_path, num_bound, den_bound, workers, format, out);
        if (*verify) return cmd_verify_fixtures(fixtures_path, out);
    } catch (const FixtureViolation& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace quintic::cli
