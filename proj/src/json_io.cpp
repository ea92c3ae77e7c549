#include "quintic/json_io.hpp"

#include "quintic/errors.hpp"

namespace quintic {

namespace {

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::Infinity: return "infinity";
        case PointClass::XZero: return "x-zero";
        case PointClass::YZero: return "y-zero";
        case PointClass::Torsion4A: return "torsion-pair";
        case PointClass::Nontrivial: return "nontrivial";
    }
    return "?";
}

}  // namespace

Json factorization_to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& pp : f.factors()) factors.push_back({pp.prime, pp.exponent});
    return Json{{"sign", f.sign()}, {"factors", factors}, {"value", f.value().get_str()}};
}

Factorization factorization_from_json(const Json& j) {
    std::vector<PrimePower> pps;
    for (const auto& entry : j.at("factors"))
        pps.push_back({entry.at(0).get<std::uint64_t>(), entry.at(1).get<int>()});
    Factorization f(j.at("sign").get<int>(), std::move(pps));
    if (j.contains("value") && f.value().get_str() != j.at("value").get<std::string>())
        throw Error("factorization value mismatch in document");
    return f;
}

Json point_to_json(const RationalPoint& pt) {
    if (pt.at_infinity) return Json{{"kind", "infinity"}};
    return Json{{"kind", "affine"},
                {"x", pt.x.get_str()},
                {"y", pt.y.get_str()},
                {"class", point_class_name(pt.classification)}};
}

RationalPoint point_from_json(const Json& j, const BigInt& A) {
    if (j.at("kind").get<std::string>() == "infinity") return RationalPoint::infinity();
    BigRational x(j.at("x").get<std::string>());
    BigRational y(j.at("y").get<std::string>());
    x.canonicalize();
    y.canonicalize();
    auto pt = RationalPoint::affine(x, y, A);
    if (point_class_name(pt.classification) != j.at("class").get<std::string>())
        throw Error("point classification mismatch in document");
    return pt;
}

Json search_report_to_json(const SearchReport& report) {
    Json points = Json::array();
    for (const auto& pt : report.points) points.push_back(point_to_json(pt));
    return Json{{"schema", "quintic.search-report/1"},
                {"a", factorization_to_json(report.a)},
                {"numerator_bound", report.numerator_bound},
                {"denominator_bound", report.denominator_bound},
                {"d_a", report.d_a},
                {"n_a_lower", report.n_a_lower},
                {"total_found", report.total_found},
                {"points", points}};
}

SearchReport search_report_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != "quintic.search-report/1")
        throw Error("unknown search report schema");
    SearchReport report;
    report.a = factorization_from_json(j.at("a"));
    report.numerator_bound = j.at("numerator_bound").get<long>();
    report.denominator_bound = j.at("denominator_bound").get<long>();
    report.d_a = j.at("d_a").get<int>();
    report.n_a_lower = j.at("n_a_lower").get<long>();
    report.total_found = j.at("total_found").get<long>();
    BigInt a_value = report.a.value();
    for (const auto& entry : j.at("points"))
        report.points.push_back(point_from_json(entry, a_value));
    return report;
}

}  // namespace quintic
