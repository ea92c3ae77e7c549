#include "quintic/padic.hpp"

#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr long kInfCap = Padic::kInfTenths / 2;

BigInt prime_power(int p, long digits) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(digits));
    return m;
}

long ceil_div10(long t) { return (t + 9) / 10; }

BigInt mod_positive(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt mod_inverse(const BigInt& x, const BigInt& m) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
        throw DivisionByZero("no inverse modulo " + m.get_str());
    return r;
}

long remove_prime(BigInt& n, int p) {
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(),
                                        BigInt(p).get_mpz_t()));
}

void check_same_prime(const Padic& a, const Padic& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("p-adic operands with different primes");
}

}  // namespace

long sat_add_tenths(long a, long b) {
    if (a >= kInfCap || b >= kInfCap) return Padic::kInfTenths;
    return a + b;
}

long sat_min_tenths(long a, long b) { return a < b ? a : b; }

Padic Padic::zero(int p) { return Padic(p, Kind::ExactZero); }

Padic Padic::zero_at_precision(int p, long abs_precision_tenths) {
    Padic x(p, Kind::ZeroAtPrecision);
    x.aprec_tenths_ = abs_precision_tenths;
    return x;
}

Padic Padic::make_unit(int p, long val, const BigInt& raw_unit, long abs_prec) {
    if (abs_prec >= kInfCap) abs_prec = val + 10L * kDefaultDigits;
    if (val >= abs_prec) return zero_at_precision(p, abs_prec);
    long digits = ceil_div10(abs_prec - val);
    BigInt r = mod_positive(raw_unit, prime_power(p, digits));
    if (r == 0) return zero_at_precision(p, abs_prec);
    long w = remove_prime(r, p);
    val += 10 * w;
    if (val >= abs_prec) return zero_at_precision(p, abs_prec);
    Padic x(p, Kind::Unit);
    x.val_tenths_ = val;
    x.aprec_tenths_ = abs_prec;
    x.unit_ = mod_positive(r, prime_power(p, ceil_div10(abs_prec - val)));
    return x;
}

Padic Padic::from_integer(int p, const BigInt& n, int rel_digits) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    if (n == 0) return zero(p);
    BigInt u = n;
    long v = 10 * remove_prime(u, p);
    return make_unit(p, v, u, v + 10L * rel_digits);
}

Padic Padic::from_rational(int p, const BigRational& q, int rel_digits) {
    if (q == 0) return zero(p);
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    long v = 10 * (remove_prime(num, p) - remove_prime(den, p));
    BigInt m = prime_power(p, rel_digits);
    BigInt u = mod_positive(num, m) * mod_inverse(mod_positive(den, m), m);
    return make_unit(p, v, u, v + 10L * rel_digits);
}

Padic Padic::from_unit(int p, long valuation_tenths, const BigInt& unit, int rel_digits) {
    return make_unit(p, valuation_tenths, unit, valuation_tenths + 10L * rel_digits);
}

Padic Padic::pi_power(int p, long k, int rel_digits) {
    return make_unit(p, k, 1, k + 10L * rel_digits);
}

long Padic::valuation_tenths() const {
    switch (kind_) {
        case Kind::ExactZero: return kInfTenths;
        case Kind::ZeroAtPrecision:
            throw PrecisionExhausted("valuation of a value indistinguishable from zero");
        case Kind::Unit: return val_tenths_;
    }
    return kInfTenths;
}

long Padic::valuation_lower_bound_tenths() const {
    switch (kind_) {
        case Kind::ExactZero: return kInfTenths;
        case Kind::ZeroAtPrecision: return aprec_tenths_;
        case Kind::Unit: return val_tenths_;
    }
    return kInfTenths;
}

long Padic::abs_precision_tenths() const { return aprec_tenths_; }

const BigInt& Padic::unit() const {
    if (kind_ != Kind::Unit) throw PrecisionExhausted("no unit part available");
    return unit_;
}

int Padic::unit_digits() const {
    if (kind_ != Kind::Unit) return 0;
    return static_cast<int>(ceil_div10(aprec_tenths_ - val_tenths_));
}

Padic Padic::operator-() const {
    if (kind_ != Kind::Unit) return *this;
    Padic x = *this;
    x.unit_ = mod_positive(-unit_, prime_power(prime_, unit_digits()));
    return x;
}

Padic Padic::operator+(const Padic& other) const {
    check_same_prime(*this, other);
    if (kind_ == Kind::ExactZero) return other;
    if (other.kind_ == Kind::ExactZero) return *this;

    if (kind_ != Kind::Unit && other.kind_ != Kind::Unit)
        return zero_at_precision(prime_, sat_min_tenths(aprec_tenths_, other.aprec_tenths_));

    if (kind_ != Kind::Unit || other.kind_ != Kind::Unit) {
        const Padic& z = kind_ != Kind::Unit ? *this : other;
        const Padic& u = kind_ != Kind::Unit ? other : *this;
        if (u.val_tenths_ >= z.aprec_tenths_)
            return zero_at_precision(prime_, z.aprec_tenths_);
        return u.truncate(sat_min_tenths(u.aprec_tenths_, z.aprec_tenths_));
    }

    const Padic& x = val_tenths_ <= other.val_tenths_ ? *this : other;
    const Padic& y = val_tenths_ <= other.val_tenths_ ? other : *this;
    long aprec = sat_min_tenths(x.aprec_tenths_, y.aprec_tenths_);
    long shift = y.val_tenths_ - x.val_tenths_;
    if (shift >= aprec - x.val_tenths_) return x.truncate(aprec);
    if (shift % 10 != 0)
        throw IncompatibleRamification(
            "sum of valuations " + std::to_string(x.val_tenths_) + " and " +
            std::to_string(y.val_tenths_) + " tenths leaves the pi-power-times-unit form");
    BigInt raw = x.unit_ + prime_power(prime_, shift / 10) * y.unit_;
    return make_unit(prime_, x.val_tenths_, raw, aprec);
}

Padic Padic::operator*(const Padic& other) const {
    check_same_prime(*this, other);
    if (kind_ == Kind::ExactZero || other.kind_ == Kind::ExactZero) return zero(prime_);
    if (kind_ != Kind::Unit || other.kind_ != Kind::Unit)
        return zero_at_precision(prime_,
                                 sat_add_tenths(valuation_lower_bound_tenths(),
                                                other.valuation_lower_bound_tenths()));
    long val = val_tenths_ + other.val_tenths_;
    long aprec = sat_min_tenths(sat_add_tenths(aprec_tenths_, other.val_tenths_),
                                sat_add_tenths(other.aprec_tenths_, val_tenths_));
    return make_unit(prime_, val, unit_ * other.unit_, aprec);
}

Padic Padic::inverse() const {
    if (kind_ == Kind::ExactZero) throw DivisionByZero("inverse of exact zero");
    if (kind_ == Kind::ZeroAtPrecision)
        throw PrecisionExhausted("inverse of a value indistinguishable from zero");
    long digits = unit_digits();
    Padic x(prime_, Kind::Unit);
    x.val_tenths_ = -val_tenths_;
    x.aprec_tenths_ = aprec_tenths_ - 2 * val_tenths_;
    x.unit_ = mod_inverse(unit_, prime_power(prime_, digits));
    return x;
}

Padic Padic::scale_pi(long k_tenths) const {
    Padic x = *this;
    if (kind_ == Kind::ExactZero) return x;
    x.aprec_tenths_ = sat_add_tenths(aprec_tenths_, k_tenths);
    if (kind_ == Kind::Unit) x.val_tenths_ += k_tenths;
    return x;
}

Padic Padic::truncate(long abs_precision_tenths) const {
    if (kind_ == Kind::ExactZero) return *this;
    if (abs_precision_tenths >= aprec_tenths_) return *this;
    if (kind_ == Kind::ZeroAtPrecision)
        return zero_at_precision(prime_, abs_precision_tenths);
    return make_unit(prime_, val_tenths_, unit_, abs_precision_tenths);
}

long Padic::residue_mod_p() const {
    if (valuation_lower_bound_tenths() < 0)
        throw Error("residue of a value with negative valuation");
    if (kind_ == Kind::ExactZero) return 0;
    if (kind_ == Kind::ZeroAtPrecision) {
        if (aprec_tenths_ < 1)
            throw PrecisionExhausted("residue not determined at available precision");
        return 0;
    }
    if (val_tenths_ >= 1) return 0;
    return static_cast<long>(mpz_fdiv_ui(unit_.get_mpz_t(), static_cast<unsigned long>(prime_)));
}

bool Padic::same_value(const Padic& other) const {
    try {
        return (*this - other).is_zero();
    } catch (const IncompatibleRamification&) {
        return false;  // distinct pi-power classes are certainly different
    }
}

bool Padic::agrees_to_tenths(const Padic& other, long tenths) const {
    Padic diff = zero(prime_);
    try {
        diff = *this - other;
    } catch (const IncompatibleRamification&) {
        return false;
    }
    if (!diff.is_zero()) return false;
    if (is_zero() && other.is_zero()) return true;
    long ref = is_zero() ? other.val_tenths_ : val_tenths_;
    return diff.valuation_lower_bound_tenths() - ref >= tenths;
}

std::string Padic::to_string() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::ExactZero:
            out << "0";
            break;
        case Kind::ZeroAtPrecision:
            if (aprec_tenths_ % 10 == 0)
                out << "O(" << prime_ << "^" << aprec_tenths_ / 10 << ")";
            else
                out << "O(pi^" << aprec_tenths_ << ")";
            break;
        case Kind::Unit: {
            if (val_tenths_ == 0)
                out << unit_.get_str();
            else if (val_tenths_ % 10 == 0)
                out << prime_ << "^" << val_tenths_ / 10 << "*" << unit_.get_str();
            else
                out << "pi^" << val_tenths_ << "*" << unit_.get_str();
            if (aprec_tenths_ % 10 == 0)
                out << " + O(" << prime_ << "^" << aprec_tenths_ / 10 << ")";
            else
                out << " + O(pi^" << aprec_tenths_ << ")";
            break;
        }
    }
    return out.str();
}

namespace {

// Newton lift of a residue root of x^k = a with digit-doubling modulus;
// the derivative k x^{k-1} is a unit at the root since gcd(k, p) = 1.
BigInt newton_lift_power_root(int p, unsigned k, const BigInt& a, long root_mod_p,
                              long target_digits) {
    BigInt x(root_mod_p);
    long digits = 1;
    while (digits < target_digits) {
        digits = std::min(2 * digits, target_digits);
        BigInt m = prime_power(p, digits);
        BigInt xk, xk1;
        mpz_powm_ui(xk.get_mpz_t(), x.get_mpz_t(), k, m.get_mpz_t());
        mpz_powm_ui(xk1.get_mpz_t(), x.get_mpz_t(), k - 1, m.get_mpz_t());
        BigInt fx = mod_positive(xk - a, m);
        BigInt deriv = mod_positive(BigInt(static_cast<long>(k)) * xk1, m);
        x = mod_positive(x - fx * mod_inverse(deriv, m), m);
    }
    return x;
}

}  // namespace

std::optional<Padic> hensel_sqrt(const Padic& a) {
    int p = a.prime();
    if (p == 2) throw UnsupportedRamified("square roots at p = 2 are not supported");
    if (!a.is_unit_form() || a.valuation_tenths() != 0)
        throw std::invalid_argument("hensel_sqrt expects a unit of Z_p");

    long r = a.residue_mod_p();
    long root = -1;
    for (long s = 1; s < p; ++s) {
        if ((s * s) % p == r) {
            root = std::min(s, p - s);
            break;
        }
    }
    if (root < 0) return std::nullopt;

    long digits = a.unit_digits();
    BigInt x = newton_lift_power_root(p, 2, a.unit(), root, digits);
    return Padic::from_unit(p, 0, x, static_cast<int>(digits));
}

std::optional<Padic> hensel_nth_root(const Padic& a, unsigned k) {
    int p = a.prime();
    if (k == 0) throw std::invalid_argument("root exponent must be positive");
    if (k % static_cast<unsigned>(p) == 0)
        throw UnsupportedRamified("p divides the root exponent");
    if (!a.is_unit_form() || a.valuation_tenths() != 0)
        throw std::invalid_argument("hensel_nth_root expects a unit of Z_p");
    if (k == 1) return a;

    long r = a.residue_mod_p();
    long root = -1;
    for (long s = 1; s < p; ++s) {
        long sk = 1;
        for (unsigned i = 0; i < k; ++i) sk = (sk * s) % p;
        if (sk == r) {
            root = s;
            break;
        }
    }
    if (root < 0) return std::nullopt;

    long digits = a.unit_digits();
    BigInt x = newton_lift_power_root(p, k, a.unit(), root, digits);
    return Padic::from_unit(p, 0, x, static_cast<int>(digits));
}

}  // namespace quintic
