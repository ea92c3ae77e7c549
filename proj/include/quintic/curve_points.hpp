#pragma once

#include <compare>
#include <vector>

#include "quintic/arith.hpp"
#include "quintic/padic.hpp"

namespace quintic {

enum class PointClass { Infinity, XZero, YZero, Torsion4A, Nontrivial };

/// A rational point of y^2 = x^5 + A.  Affine coordinates are exact; the
/// denominators are forced into the shape x = m/e^2, y = q/e^5 by the
/// equation.  Torsion4A marks the special pair with x^5 = 4A, y^2 = 5A.
struct RationalPoint {
    bool at_infinity = false;
    BigRational x = 0;
    BigRational y = 0;
    PointClass classification = PointClass::Infinity;

    static RationalPoint infinity();
    /// Validates the equation exactly and classifies the point.
    static RationalPoint affine(const BigRational& x, const BigRational& y, const BigInt& A);

    bool operator==(const RationalPoint&) const = default;
};

/// Ordering used everywhere points are listed: infinity first, then by
/// naive height max(|num x|, den x), then x, then y.
bool point_order_less(const RationalPoint& a, const RationalPoint& b);

struct SearchReport {
    Factorization a;
    long numerator_bound = 0;
    long denominator_bound = 0;
    std::vector<RationalPoint> points;
    int d_a = 0;
    long n_a_lower = 0;
    long total_found = 0;

    bool operator==(const SearchReport&) const = default;
};

/// Exhaustive search for points x = m/e^2 with gcd(m, e) = 1,
/// |m| <= numerator_bound * e^2 and 1 <= e <= denominator_bound, testing
/// whether m^5 + A e^10 is a perfect square.  Candidates are prefiltered
/// by quadratic residues modulo a fixed set of small moduli; the filter
/// only discards certified non-squares, never a square.  The forced
/// trivial points (infinity, x = 0, y = 0) are always included.  Output
/// is deterministic and independent of the worker count.
SearchReport search_points(const Factorization& A, long numerator_bound,
                           long denominator_bound, int workers = 1);

/// The rational members of the torsion list: infinity always; (-c, 0) when
/// A = c^5; (0, +-s) when A = s^2; (d, +-e) when 4A = d^5 and 5A = e^2.
std::vector<RationalPoint> rational_torsion_points(const Factorization& A);

struct FpPoint {
    bool at_infinity = false;
    long x = 0;
    long y = 0;

    bool operator==(const FpPoint&) const = default;
    auto operator<=>(const FpPoint&) const = default;
};

/// All points of y^2 = x^5 + A over F_p, infinity included, sorted.
std::vector<FpPoint> points_mod_p(const Factorization& A, int p);

/// True when every point of C_A(F_p) is the reduction of a p-adic torsion
/// point, decided by Hensel liftability of the candidate torsion shapes
/// (via hensel_sqrt / hensel_nth_root).  Requires good reduction: p must
/// not divide 10A (else BadReduction).
bool all_points_lift_to_torsion(const Factorization& A, int p);

}  // namespace quintic
