#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quintic {

using BigInt = mpz_class;

// Rational numbers are kept canonical: lowest terms, denominator >= 1.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Signed integer as sign * product of prime powers, primes strictly
/// increasing, every exponent >= 1.  The empty product is 1.
class Factorization {
public:
    Factorization() = default;
    Factorization(int sign, std::vector<PrimePower> factors);

    int sign() const { return sign_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    BigInt value() const;
    long value_mod(long m) const;  // value() reduced into [0, m)
    int exponent_of(std::uint64_t p) const;

    bool is_one() const { return sign_ == 1 && factors_.empty(); }
    bool is_tenth_power_free() const;
    bool is_square() const;       // sign +1 and all exponents even
    bool is_fifth_power() const;  // all exponents divisible by 5 (any sign)

    Factorization multiply(const Factorization& other) const;
    Factorization abs() const;

    std::string to_string() const;  // "2^2*3^4", "-3^5", "1"

    bool operator==(const Factorization&) const = default;

private:
    int sign_ = 1;
    std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// Trial-division factorization.  A cofactor surviving division by all
/// primes <= trial_bound is accepted only if it is provably prime
/// (cofactor <= trial_bound^2, or it passes a deterministic 64-bit
/// Miller-Rabin test); otherwise CompositeResidual is thrown.
Factorization factorize(const BigInt& n, std::uint64_t trial_bound = kDefaultTrialBound);

/// Strips the largest tenth power: returns (g, c) with input = c^10 * g
/// and g tenth-power-free.  Sign is preserved.
std::pair<Factorization, BigInt> tenth_power_free_reduce(const Factorization& f);

/// Exact integer k-th root, k >= 2, by binary search.  Returns r with
/// r^k = n when one exists (nonnegative r for even k), empty otherwise.
/// Throws NoRealRoot for even k and negative n.
std::optional<BigInt> perfect_power_root(const BigInt& n, unsigned k);

/// Number of trivial rational points on y^2 = x^5 + A:
/// 4 for A = 1, 3 for squares != 1, 2 for fifth powers != 1, else 1.
int trivial_point_count(const Factorization& f);

/// Accepts a plain integer literal ("324", "-7") or a factored string
/// ("2^2*3^4", "-3^5").  Bases of a factored string must be prime.
Factorization parse_factorization(const std::string& text,
                                  std::uint64_t trial_bound = kDefaultTrialBound);

bool is_prime_u64(std::uint64_t n);

/// Primes <= bound, cached between calls.
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t bound);

BigInt pow_u64(std::uint64_t base, unsigned exp);

}  // namespace quintic
