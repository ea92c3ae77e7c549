#pragma once

#include <cstddef>
#include <vector>

#include "quintic/padic.hpp"

namespace quintic {

/// Valuation guarantee for the unknown coefficients of a truncated series:
/// every coefficient c_j with j >= tail order satisfies
///
///     v(c_j) >= constant + slope * j - (divisor_loss ? 10 * v_p(j) : 0)
///
/// in tenths.  The slope records substitutions T = pi^s t (which scale the
/// j-th coefficient by pi^{s j}); divisor_loss records the 1/(m+1) divisors
/// introduced by formal integration.
struct TailBound {
    long constant = Padic::kInfTenths;
    long slope = 0;
    bool divisor_loss = false;

    bool is_infinite() const { return constant >= Padic::kInfTenths / 2; }
};

/// Greatest lower bound, in tenths, of bound(j) + disc_tenths * j over all
/// tail indices j >= from_index.  Returns -kInfTenths when unbounded below.
long tail_infimum(int p, const TailBound& tail, std::size_t from_index, long disc_tenths);

/// Formal power series with finitely many known coefficients (indices
/// 0 .. order-1) over the tenth-valuation p-adics, plus a sound tail bound.
class TruncatedSeries {
public:
    TruncatedSeries() = default;  // empty placeholder, prime 0
    TruncatedSeries(int p, std::vector<Padic> coeffs, TailBound tail);

    static TruncatedSeries zero(int p, std::size_t order);
    static TruncatedSeries constant(int p, const Padic& c, std::size_t order);
    static TruncatedSeries monomial(int p, std::size_t index, const Padic& c,
                                    std::size_t order);
    static TruncatedSeries one(int p, std::size_t order) {
        return constant(p, Padic::one(p), order);
    }
    /// Polynomial with exact rational coefficients and an infinite tail.
    static TruncatedSeries from_rationals(int p, const std::vector<BigRational>& coeffs,
                                          std::size_t order,
                                          int digits = Padic::kDefaultDigits);

    int prime() const { return prime_; }
    std::size_t order() const { return coeffs_.size(); }
    const Padic& coeff(std::size_t i) const { return coeffs_[i]; }
    const TailBound& tail() const { return tail_; }

    /// Index of the first coefficient that is not an exact zero (order() if
    /// every known coefficient is exactly zero).
    std::size_t first_possible_index() const;
    long known_min_valuation() const;  // min lower bound over known coefficients
    bool all_known_zero() const;       // every known coefficient is a zero state

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    TruncatedSeries scale(const Padic& c) const;
    TruncatedSeries scale_pi(long k_tenths) const;
    TruncatedSeries shift_up(std::size_t k) const;  // multiply by t^k
    TruncatedSeries divide_by_t() const;            // requires exact-zero constant term
    TruncatedSeries derivative() const;
    TruncatedSeries integrate() const;  // constant of integration 0
    TruncatedSeries substitute_scaled_variable(long s_tenths) const;  // t -> pi^s t
    TruncatedSeries truncate_order(std::size_t new_order) const;
    TruncatedSeries with_tail(TailBound tail) const;

    /// Value at a point with v(t0) >= its tracked lower bound; the unknown
    /// tail enters as a zero-at-precision error term.
    Padic evaluate(const Padic& t0) const;

    bool agrees_with(const TruncatedSeries& other, std::size_t through_index,
                     long tenths) const;

private:
    int prime_ = 0;
    std::vector<Padic> coeffs_;
    TailBound tail_;
};

/// s^e for s = 1 + (positive-order terms), via the binomial series.  The
/// exponent denominator must be invertible mod p (else RamifiedExponent);
/// a non-one leading term raises NonUnitLeadingTerm.
TruncatedSeries series_binomial_root(const TruncatedSeries& s, const BigRational& e);

/// Multiplicative inverse of a series with unit leading coefficient, by
/// Newton iteration (independent of the binomial route).
TruncatedSeries series_inverse_newton(const TruncatedSeries& s);

/// Z with Z^k = s and Z(0) = leading_root, by Newton iteration; requires
/// gcd(k, p) = 1 and leading_root^k = s(0).
TruncatedSeries series_kth_root_newton(const TruncatedSeries& s, unsigned k,
                                       const Padic& leading_root);

/// Laurent-type solution X(T) = T^{leading_index} * fractional(T) of the
/// chart relations X^{-1} = T^2 (1 + a X^{-5}), Y^{-1} = T X^{-2}, computed
/// by fixed-point iteration (iteration budget = order, else NoConvergence).
struct InverseBranch {
    int leading_index;           // always -2
    TruncatedSeries fractional;  // X * T^2, a unit-leading ordinary series
};
InverseBranch solve_inverse_branch(const Padic& a, std::size_t order);

/// Series whose coefficients are (alpha, beta)-linear forms, stored as the
/// pair of scalar component series.
struct LinearSeries {
    TruncatedSeries alpha_part;
    TruncatedSeries beta_part;

    int prime() const { return alpha_part.prime(); }
    std::size_t order() const;
    LinearForm coefficient(std::size_t i) const;

    LinearSeries operator+(const LinearSeries& other) const;
    LinearSeries scale(const Padic& c) const;
    LinearSeries scale_pi(long k_tenths) const;
    LinearSeries integrate() const;
    LinearSeries substitute_scaled_variable(long s_tenths) const;
    LinearSeries truncate_order(std::size_t new_order) const;

    TruncatedSeries evaluate(const Padic& alpha, const Padic& beta) const;
};

/// Scalar series times linear-form series, componentwise.
LinearSeries operator*(const TruncatedSeries& s, const LinearSeries& l);

}  // namespace quintic
