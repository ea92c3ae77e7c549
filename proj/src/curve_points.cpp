#include "quintic/curve_points.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "quintic/errors.hpp"
#include "quintic/parallel.hpp"

namespace quintic {

namespace {

// Quadratic-residue prefilter moduli: 64 and 63 = 9*7 and 65 = 5*13 kill
// most non-squares cheaply, 11 mops up.  Correctness never depends on the
// set; the exact square test runs on every survivor.
constexpr std::array<long, 4> kFilterModuli{64, 63, 65, 11};

struct SquareFilter {
    std::array<std::vector<bool>, 4> is_square;
    std::array<std::vector<long>, 4> fifth_power;

    SquareFilter() {
        for (std::size_t k = 0; k < kFilterModuli.size(); ++k) {
            long q = kFilterModuli[k];
            is_square[k].assign(static_cast<std::size_t>(q), false);
            for (long r = 0; r < q; ++r) is_square[k][static_cast<std::size_t>(r * r % q)] = true;
            fifth_power[k].resize(static_cast<std::size_t>(q));
            for (long r = 0; r < q; ++r) {
                long v = 1;
                for (int i = 0; i < 5; ++i) v = v * r % q;
                fifth_power[k][static_cast<std::size_t>(r)] = v;
            }
        }
    }
};

const SquareFilter& square_filter() {
    static const SquareFilter filter;
    return filter;
}

BigInt exact_sqrt_if_square(const BigInt& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return r;
    }
    return -1;
}

}  // namespace

RationalPoint RationalPoint::infinity() {
    RationalPoint pt;
    pt.at_infinity = true;
    pt.classification = PointClass::Infinity;
    return pt;
}

RationalPoint RationalPoint::affine(const BigRational& x, const BigRational& y,
                                    const BigInt& A) {
    BigRational lhs = y * y;
    BigRational rhs = x * x * x * x * x + BigRational(A);
    if (lhs != rhs) throw Error("point does not satisfy y^2 = x^5 + A");

    RationalPoint pt;
    pt.x = x;
    pt.y = y;
    if (x == 0)
        pt.classification = PointClass::XZero;
    else if (y == 0)
        pt.classification = PointClass::YZero;
    else if (x * x * x * x * x == BigRational(4 * A) && y * y == BigRational(5 * A))
        pt.classification = PointClass::Torsion4A;
    else
        pt.classification = PointClass::Nontrivial;
    return pt;
}

bool point_order_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.at_infinity != b.at_infinity) return a.at_infinity;
    if (a.at_infinity) return false;
    BigInt ha = std::max(BigInt(::abs(a.x.get_num())), BigInt(a.x.get_den()));
    BigInt hb = std::max(BigInt(::abs(b.x.get_num())), BigInt(b.x.get_den()));
    int c = mpz_cmp(ha.get_mpz_t(), hb.get_mpz_t());
    if (c != 0) return c < 0;
    int cx = mpq_cmp(a.x.get_mpq_t(), b.x.get_mpq_t());
    if (cx != 0) return cx < 0;
    return mpq_cmp(a.y.get_mpq_t(), b.y.get_mpq_t()) < 0;
}

SearchReport search_points(const Factorization& A, long numerator_bound,
                           long denominator_bound, int workers) {
    if (!A.is_tenth_power_free())
        throw std::invalid_argument("search expects a tenth-power-free A");
    if (numerator_bound < 1 || denominator_bound < 1)
        throw std::invalid_argument("bounds must be positive");

    const BigInt a_value = A.value();
    const auto& filter = square_filter();

    SearchReport report;
    report.a = A;
    report.numerator_bound = numerator_bound;
    report.denominator_bound = denominator_bound;

    std::vector<RationalPoint> found;
    found.push_back(RationalPoint::infinity());
    for (auto& pt : rational_torsion_points(A))
        if (!pt.at_infinity && pt.classification != PointClass::Torsion4A)
            found.push_back(pt);  // forced x = 0 / y = 0 points

    // Tasks: one m-block per chunk, e-major, fixed block size.
    struct Task {
        long e;
        long m_lo, m_hi;  // inclusive
    };
    constexpr long kBlock = 1 << 15;
    std::vector<Task> tasks;
    for (long e = 1; e <= denominator_bound; ++e) {
        long bound = numerator_bound * e * e;
        for (long lo = -bound; lo <= bound; lo += kBlock)
            tasks.push_back({e, lo, std::min(bound, lo + kBlock - 1)});
    }

    std::vector<std::vector<RationalPoint>> task_hits(tasks.size());
    for_each_chunk(tasks.size(), 1, workers, [&](std::size_t idx, std::size_t, std::size_t) {
        const Task& task = tasks[idx];
        const long e = task.e;
        BigInt e10 = pow_u64(static_cast<std::uint64_t>(e), 10);
        BigInt shift = a_value * e10;

        std::array<long, 4> shift_mod{};
        for (std::size_t k = 0; k < kFilterModuli.size(); ++k) {
            long q = kFilterModuli[k];
            shift_mod[k] = static_cast<long>(mpz_fdiv_ui(shift.get_mpz_t(),
                                                         static_cast<unsigned long>(q)));
        }

        for (long m = task.m_lo; m <= task.m_hi; ++m) {
            if (std::gcd(std::abs(m), e) != 1) continue;
            bool maybe = true;
            for (std::size_t k = 0; k < kFilterModuli.size() && maybe; ++k) {
                long q = kFilterModuli[k];
                long mres = ((m % q) + q) % q;
                long nres = (filter.fifth_power[k][static_cast<std::size_t>(mres)] +
                             shift_mod[k]) % q;
                maybe = filter.is_square[k][static_cast<std::size_t>(nres)];
            }
            if (!maybe) continue;

            BigInt m5;
            mpz_pow_ui(m5.get_mpz_t(), BigInt(m).get_mpz_t(), 5);
            BigInt val = m5 + shift;
            if (val < 0) continue;
            BigInt root = exact_sqrt_if_square(val);
            if (root < 0) continue;

            BigRational x = make_rational(m, BigInt(e) * e);
            if (root == 0) {
                task_hits[idx].push_back(RationalPoint::affine(x, BigRational(0), a_value));
                continue;
            }
            BigInt e5 = pow_u64(static_cast<std::uint64_t>(e), 5);
            BigRational y = make_rational(root, e5);
            task_hits[idx].push_back(RationalPoint::affine(x, y, a_value));
            task_hits[idx].push_back(RationalPoint::affine(x, -y, a_value));
        }
    });

    for (auto& hits : task_hits)
        for (auto& pt : hits) found.push_back(std::move(pt));

    std::sort(found.begin(), found.end(), point_order_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());

    report.points = std::move(found);
    for (const auto& pt : report.points) {
        switch (pt.classification) {
            case PointClass::Infinity:
            case PointClass::XZero:
            case PointClass::YZero:
                ++report.d_a;
                break;
            case PointClass::Torsion4A:
            case PointClass::Nontrivial:
                ++report.n_a_lower;
                break;
        }
    }
    if (report.n_a_lower % 2 != 0)
        throw Error("points with nonzero coordinates must come in (x, +-y) pairs");
    report.n_a_lower /= 2;
    report.total_found = static_cast<long>(report.points.size());
    return report;
}

std::vector<RationalPoint> rational_torsion_points(const Factorization& A) {
    if (!A.is_tenth_power_free())
        throw std::invalid_argument("expected a tenth-power-free A");
    const BigInt a_value = A.value();
    std::vector<RationalPoint> points;
    points.push_back(RationalPoint::infinity());

    if (auto c = perfect_power_root(a_value, 5))
        points.push_back(RationalPoint::affine(BigRational(-*c), BigRational(0), a_value));
    if (a_value > 0) {
        if (auto s = perfect_power_root(a_value, 2)) {
            points.push_back(RationalPoint::affine(BigRational(0), BigRational(*s), a_value));
            points.push_back(RationalPoint::affine(BigRational(0), BigRational(-*s), a_value));
        }
    }
    if (auto d = perfect_power_root(4 * a_value, 5)) {
        if (5 * a_value > 0) {
            if (auto e = perfect_power_root(5 * a_value, 2)) {
                points.push_back(
                    RationalPoint::affine(BigRational(*d), BigRational(*e), a_value));
                points.push_back(
                    RationalPoint::affine(BigRational(*d), BigRational(-*e), a_value));
            }
        }
    }
    std::sort(points.begin(), points.end(), point_order_less);
    return points;
}

std::vector<FpPoint> points_mod_p(const Factorization& A, int p) {
    if (p < 2) throw std::invalid_argument("p must be prime");
    long abar = A.value_mod(p);
    std::vector<FpPoint> points;
    points.push_back(FpPoint{true, 0, 0});
    for (long x = 0; x < p; ++x) {
        long x5 = 1;
        for (int i = 0; i < 5; ++i) x5 = x5 * x % p;
        long rhs = (x5 + abar) % p;
        for (long y = 0; y < p; ++y) {
            if (y * y % p == rhs) points.push_back(FpPoint{false, x, y});
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

bool all_points_lift_to_torsion(const Factorization& A, int p) {
    if (p == 2 || p == 5 || A.value_mod(p) == 0)
        throw BadReduction("requires p not dividing 10A");

    const BigInt a_value = A.value();
    long abar = A.value_mod(p);
    for (const auto& pt : points_mod_p(A, p)) {
        if (pt.at_infinity) continue;
        if (pt.y == 0) {
            // On-curve means x^5 = -A with x != 0 (p does not divide A), so
            // the root is simple and lifts to a y = 0 torsion point.
            continue;
        }
        if (pt.x == 0) {
            // y^2 = A with y != 0: Hensel square root of A.
            auto root = hensel_sqrt(Padic::from_integer(p, a_value));
            if (!root) return false;
            continue;
        }
        // Nonzero coordinates: must reduce the pair with x^5 = 4A, y^2 = 5A.
        long x5 = 1;
        for (int i = 0; i < 5; ++i) x5 = x5 * pt.x % p;
        long y2 = pt.y * pt.y % p;
        long four_a = (4 * abar) % p;
        long five_a = (5 * abar) % p;
        if (x5 != four_a || y2 != five_a) return false;
        if (!hensel_nth_root(Padic::from_integer(p, 4 * a_value), 5)) return false;
        if (!hensel_sqrt(Padic::from_integer(p, 5 * a_value))) return false;
    }
    return true;
}

}  // namespace quintic
