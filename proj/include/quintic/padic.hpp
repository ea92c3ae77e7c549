#pragma once

#include <optional>
#include <string>

#include "quintic/arith.hpp"

namespace quintic {

// Valuations are tracked in tenths of the usual normalization, so that the
// totally ramified element pi with pi^10 = p has valuation 1 and p itself
// has valuation 10.  Every value handled here is pi^v * u with u a unit of
// Z_p, which is exactly the shape of everything the analysis manipulates in
// Q_p(pi); no general degree-10 extension arithmetic is needed.
//
// Three states are distinguished:
//   * exact zero (infinite precision),
//   * zero at precision: known to vanish modulo pi^a, nothing more,
//   * unit form: pi^v * u with u known modulo p^k.
// Operations that need a certified-nonzero input (inversion, valuation,
// residues) throw PrecisionExhausted when handed an inexact zero.
class Padic {
public:
    static constexpr int kDefaultDigits = 30;      // relative precision in p-adic digits
    static constexpr long kInfTenths = 1L << 40;   // "infinite" valuation / precision

    /// Default-constructed value: exact zero with no prime attached; any
    /// arithmetic against a real value will reject the prime mismatch.
    Padic() = default;

    static Padic zero(int p);
    static Padic zero_at_precision(int p, long abs_precision_tenths);
    static Padic from_integer(int p, const BigInt& n, int rel_digits = kDefaultDigits);
    static Padic from_rational(int p, const BigRational& q, int rel_digits = kDefaultDigits);
    static Padic from_unit(int p, long valuation_tenths, const BigInt& unit,
                           int rel_digits = kDefaultDigits);
    static Padic pi_power(int p, long k, int rel_digits = kDefaultDigits);
    static Padic one(int p, int rel_digits = kDefaultDigits) {
        return from_integer(p, 1, rel_digits);
    }

    int prime() const { return prime_; }
    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    bool is_zero() const { return kind_ != Kind::Unit; }  // exact or at-precision
    bool is_unit_form() const { return kind_ == Kind::Unit; }

    /// Valuation of a certified-nonzero value; kInfTenths for the exact zero.
    /// Throws PrecisionExhausted for a zero-at-precision value.
    long valuation_tenths() const;

    /// Sound lower bound on the valuation, defined for every state.
    long valuation_lower_bound_tenths() const;

    long abs_precision_tenths() const;
    const BigInt& unit() const;
    int unit_digits() const;  // unit is stored modulo p^unit_digits

    Padic operator-() const;
    Padic operator+(const Padic& other) const;
    Padic operator-(const Padic& other) const { return *this + (-other); }
    Padic operator*(const Padic& other) const;
    Padic inverse() const;
    Padic operator/(const Padic& other) const { return *this * other.inverse(); }

    Padic scale_pi(long k_tenths) const;  // multiply by pi^k
    Padic truncate(long abs_precision_tenths) const;

    /// Residue in F_p of a value of O_pi (valuation lower bound >= 0).
    long residue_mod_p() const;

    /// True when this and other cannot be distinguished at the shared
    /// precision (their difference is zero at precision or exact zero).
    bool same_value(const Padic& other) const;

    /// same_value, additionally requiring at least `tenths` of shared
    /// absolute precision relative to the common valuation.
    bool agrees_to_tenths(const Padic& other, long tenths) const;

    std::string to_string() const;

private:
    enum class Kind { ExactZero, ZeroAtPrecision, Unit };

    Padic(int p, Kind kind) : prime_(p), kind_(kind) {}
    static Padic make_unit(int p, long val, const BigInt& raw_unit, long abs_prec);
    void reduce_unit();

    int prime_ = 0;
    Kind kind_ = Kind::ExactZero;
    long val_tenths_ = kInfTenths;
    long aprec_tenths_ = kInfTenths;
    BigInt unit_ = 0;
};

/// Square root of a unit of Z_p, p odd, when its residue is a nonzero
/// square mod p.  The returned root reduces to the canonical square root
/// (the smaller of the two residues).  Empty result encodes "not a square".
std::optional<Padic> hensel_sqrt(const Padic& a);

/// k-th root of a unit of Z_p for gcd(k, p) = 1, when the residue of a is
/// a k-th power residue mod p; the root with the smallest residue is
/// returned.  Throws UnsupportedRamified when p divides k.
std::optional<Padic> hensel_nth_root(const Padic& a, unsigned k);

/// Coefficient of the differential family (alpha + beta x) dx / 2y, kept
/// symbolic: a value that is alpha * coeff_alpha + beta * coeff_beta.
struct LinearForm {
    Padic coeff_alpha;
    Padic coeff_beta;

    Padic evaluate(const Padic& alpha, const Padic& beta) const {
        return coeff_alpha * alpha + coeff_beta * beta;
    }
};

long sat_add_tenths(long a, long b);
long sat_min_tenths(long a, long b);

}  // namespace quintic
