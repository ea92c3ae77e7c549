#include "quintic/zero_bounds.hpp"

#include <algorithm>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr long kInf = Padic::kInfTenths;
constexpr long kInfCap = Padic::kInfTenths / 2;

}  // namespace

ZeroBoundResult strassmann_bound(const TruncatedSeries& s, long disc_valuation_tenths) {
    const long d = disc_valuation_tenths;
    ZeroBoundResult result;

    // Minimal attained term valuation over the disc, over coefficients
    // whose valuation is exactly known.
    long attained = kInf;
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (!s.coeff(i).is_unit_form()) continue;
        attained = std::min(attained,
                            s.coeff(i).valuation_tenths() + d * static_cast<long>(i));
    }
    if (attained >= kInfCap) {
        result.certified = false;
        result.notes = "no coefficient is certified nonzero";
        return result;
    }

    // Any index whose possible term valuation reaches the attained minimum
    // can host the dominating Newton-polygon vertex.
    std::size_t top = 0;
    for (std::size_t i = 0; i < s.order(); ++i) {
        long lb = s.coeff(i).valuation_lower_bound_tenths();
        if (lb >= kInfCap) continue;
        if (lb + d * static_cast<long>(i) <= attained) top = i;
    }
    result.max_zeros = static_cast<int>(top);
    result.dominating_index = top;

    long tail_floor = tail_infimum(s.prime(), s.tail(), s.order(), d);
    result.certified = tail_floor > attained;

    std::ostringstream notes;
    notes << "min term valuation " << attained << " tenths at index " << top
          << "; tail floor ";
    if (tail_floor >= kInfCap)
        notes << "inf";
    else if (tail_floor <= -kInfCap)
        notes << "-inf";
    else
        notes << tail_floor;
    if (!result.certified) notes << " (tail dominance not excluded)";
    result.notes = notes.str();
    return result;
}

std::vector<long> reduce_series_mod_p(const TruncatedSeries& s) {
    const int p = s.prime();
    std::vector<long> residues;
    residues.reserve(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) {
        long lb = s.coeff(i).valuation_lower_bound_tenths();
        if (lb < 0)
            throw Error("coefficient " + std::to_string(i) +
                        " has negative valuation; rescale the series first");
        residues.push_back(s.coeff(i).residue_mod_p());
    }
    // The tail must reduce to zero and tend to zero for the mod-p root
    // count to bound the unit-disc zeros.
    long tail_floor = tail_infimum(p, s.tail(), s.order(), 0);
    bool tail_converges =
        s.tail().is_infinite() || s.tail().slope > 0;
    if (tail_floor < 1 || !tail_converges)
        throw TailUnbounded("tail is not certified to vanish mod p on the unit disc");
    return residues;
}

std::vector<std::pair<long, int>> polynomial_roots_mod_p(const std::vector<long>& poly,
                                                         long p) {
    std::vector<long> g;
    for (long c : poly) g.push_back(((c % p) + p) % p);
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.empty()) throw ZeroReduction("zero polynomial has no meaningful root count");

    std::vector<std::pair<long, int>> roots;
    for (long r = 0; r < p; ++r) {
        std::vector<long> cur = g;
        int mult = 0;
        while (cur.size() > 0) {
            long value = 0;
            for (std::size_t i = cur.size(); i-- > 0;) value = (value * r + cur[i]) % p;
            if (value != 0) break;
            // synthetic division by (t - r)
            std::vector<long> quo(cur.size() - 1, 0);
            long carry = 0;
            for (std::size_t i = cur.size(); i-- > 1;) {
                carry = (carry * r + cur[i]) % p;
                quo[i - 1] = carry;
            }
            cur = std::move(quo);
            ++mult;
        }
        if (mult > 0) roots.push_back({r, mult});
    }
    return roots;
}

int count_extra_solutions_mod_p(const LinearSeries& s,
                                std::pair<long, long> alpha_beta_residues) {
    const int p = s.prime();
    auto specialized = s.evaluate(Padic::from_integer(p, alpha_beta_residues.first),
                                  Padic::from_integer(p, alpha_beta_residues.second));
    auto residues = reduce_series_mod_p(specialized);
    bool all_zero = std::all_of(residues.begin(), residues.end(),
                                [](long r) { return r == 0; });
    if (all_zero) throw ZeroReduction("series reduces to zero mod p");
    if (residues[0] != 0)
        throw Error("series does not vanish at t = 0; cannot divide by t");

    std::vector<long> quotient(residues.begin() + 1, residues.end());
    int count = 0;
    for (const auto& [root, mult] : polynomial_roots_mod_p(quotient, p))
        if (root != 0) count += mult;
    return count;
}

int residue_class_bound(int vanishing_order, int p,
                        const std::map<std::pair<int, int>, int>* extension) {
    static const std::map<std::pair<int, int>, int> builtin{
        {{3, 0}, 0}, {{3, 1}, 1}, {{3, 2}, 0}};
    auto key = std::make_pair(p, vanishing_order);
    auto it = builtin.find(key);
    if (it != builtin.end()) return 1 + vanishing_order + it->second;
    if (extension) {
        auto ext = extension->find(key);
        if (ext != extension->end()) return 1 + vanishing_order + ext->second;
    }
    throw UnknownTableEntry("no v(p, n) value for p = " + std::to_string(p) +
                            ", n = " + std::to_string(vanishing_order));
}

}  // namespace quintic
