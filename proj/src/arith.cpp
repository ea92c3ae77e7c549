#include "quintic/arith.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "quintic/errors.hpp"

namespace quintic {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

Factorization::Factorization(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::uint64_t last = 1;
    for (const auto& pp : factors_) {
        if (pp.prime <= last) throw std::invalid_argument("primes must be strictly increasing");
        if (pp.exponent < 1) throw std::invalid_argument("exponents must be >= 1");
        last = pp.prime;
    }
}

BigInt Factorization::value() const {
    BigInt v = sign_;
    for (const auto& pp : factors_) v *= pow_u64(pp.prime, pp.exponent);
    return v;
}

long Factorization::value_mod(long m) const {
    if (m <= 1) throw std::invalid_argument("modulus must be >= 2");
    long v = 1;
    for (const auto& pp : factors_) {
        long base = static_cast<long>(pp.prime % static_cast<std::uint64_t>(m));
        for (int i = 0; i < pp.exponent; ++i) v = (v * base) % m;
    }
    v *= sign_;
    return ((v % m) + m) % m;
}

int Factorization::exponent_of(std::uint64_t p) const {
    for (const auto& pp : factors_)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

bool Factorization::is_tenth_power_free() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& pp) { return pp.exponent <= 9; });
}

bool Factorization::is_square() const {
    if (sign_ < 0) return false;
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& pp) { return pp.exponent % 2 == 0; });
}

bool Factorization::is_fifth_power() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& pp) { return pp.exponent % 5 == 0; });
}

Factorization Factorization::multiply(const Factorization& other) const {
    std::vector<PrimePower> merged;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->prime < b->prime)) {
            merged.push_back(*a++);
        } else if (a == factors_.end() || b->prime < a->prime) {
            merged.push_back(*b++);
        } else {
            merged.push_back({a->prime, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }
    return Factorization(sign_ * other.sign_, std::move(merged));
}

Factorization Factorization::abs() const { return Factorization(1, factors_); }

std::string Factorization::to_string() const {
    std::ostringstream out;
    if (sign_ < 0) out << '-';
    if (factors_.empty()) {
        out << '1';
        return out.str();
    }
    bool first = true;
    for (const auto& pp : factors_) {
        if (!first) out << '*';
        first = false;
        out << pp.prime;
        if (pp.exponent > 1) out << '^' << pp.exponent;
    }
    return out.str();
}

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t bound) {
    static std::mutex mutex;
    static std::uint32_t cached_bound = 0;
    static std::vector<std::uint32_t> cached;

    std::lock_guard<std::mutex> lock(mutex);
    if (bound <= cached_bound) return cached;

    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    cached.clear();
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        cached.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    cached_bound = bound;
    return cached;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

BigInt pow_u64(std::uint64_t base, unsigned exp) {
    BigInt b;
    mpz_set_ui(b.get_mpz_t(), base);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

namespace {

Factorization finish_factorization(int sign, std::vector<PrimePower> factors,
                                   const BigInt& residual, std::uint64_t trial_bound) {
    if (residual != 1) {
        BigInt bound_sq = BigInt(static_cast<unsigned long>(trial_bound));
        bound_sq *= bound_sq;
        bool proven_prime = residual <= bound_sq;
        if (!proven_prime && mpz_fits_ulong_p(residual.get_mpz_t()))
            proven_prime = is_prime_u64(mpz_get_ui(residual.get_mpz_t()));
        if (!proven_prime)
            throw CompositeResidual("cofactor " + residual.get_str() +
                                    " exceeds trial bound and is not proven prime");
        factors.push_back({mpz_get_ui(residual.get_mpz_t()), 1});
    }
    return Factorization(sign, std::move(factors));
}

Factorization factorize_u64(std::uint64_t n, int sign, std::uint64_t trial_bound) {
    std::vector<PrimePower> factors;
    const auto& primes = primes_up_to(static_cast<std::uint32_t>(
        std::min<std::uint64_t>(trial_bound, 1u << 26)));
    for (std::uint32_t p : primes) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.push_back({p, e});
        }
    }
    if (n > 1) {
        // Remaining cofactor has no factor <= min(sqrt, bound).
        if (n <= trial_bound || is_prime_u64(n)) {
            factors.push_back({n, 1});
        } else {
            throw CompositeResidual("cofactor " + std::to_string(n) +
                                    " exceeds trial bound and is not proven prime");
        }
    }
    return Factorization(sign, std::move(factors));
}

}  // namespace

Factorization factorize(const BigInt& n, std::uint64_t trial_bound) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    if (trial_bound < 2) throw std::invalid_argument("trial bound must be >= 2");

    int sign = mpz_sgn(n.get_mpz_t());
    BigInt m = ::abs(n);

    if (mpz_fits_ulong_p(m.get_mpz_t()))
        return factorize_u64(mpz_get_ui(m.get_mpz_t()), sign, trial_bound);

    std::vector<PrimePower> factors;
    const auto& primes = primes_up_to(static_cast<std::uint32_t>(
        std::min<std::uint64_t>(trial_bound, 1u << 26)));
    for (std::uint32_t p : primes) {
        if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            factors.push_back({p, e});
        }
        if (mpz_cmp_ui(m.get_mpz_t(), p) < 0) break;
    }
    return finish_factorization(sign, std::move(factors), m, trial_bound);
}

std::pair<Factorization, BigInt> tenth_power_free_reduce(const Factorization& f) {
    std::vector<PrimePower> reduced;
    BigInt c = 1;
    for (const auto& pp : f.factors()) {
        int keep = pp.exponent % 10;
        int strip = pp.exponent / 10;
        if (keep > 0) reduced.push_back({pp.prime, keep});
        if (strip > 0) c *= pow_u64(pp.prime, strip);
    }
    return {Factorization(f.sign(), std::move(reduced)), c};
}

std::optional<BigInt> perfect_power_root(const BigInt& n, unsigned k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (n < 0) {
        if (k % 2 == 0) throw NoRealRoot("even root of negative integer");
        auto r = perfect_power_root(-n, k);
        if (r) return -*r;
        return std::nullopt;
    }
    if (n == 0) return BigInt(0);

    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    BigInt lo = 0;
    BigInt hi = 1;
    hi <<= bits / k + 2;
    while (lo <= hi) {
        BigInt mid = (lo + hi) >> 1;
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), mid.get_mpz_t(), k);
        int cmp = mpz_cmp(power.get_mpz_t(), n.get_mpz_t());
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

int trivial_point_count(const Factorization& f) {
    if (!f.is_tenth_power_free())
        throw std::invalid_argument("trivial_point_count expects a tenth-power-free value");
    if (f.is_one()) return 4;
    if (f.is_square()) return 3;
    if (f.is_fifth_power()) return 2;
    return 1;
}

Factorization parse_factorization(const std::string& text, std::uint64_t trial_bound) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw Error("empty value");

    int sign = 1;
    std::size_t start = 0;
    if (s[0] == '+' || s[0] == '-') {
        if (s[0] == '-') sign = -1;
        start = 1;
        if (start == s.size()) throw Error("malformed value: " + text);
    }

    bool plain = std::all_of(s.begin() + start, s.end(),
                             [](unsigned char c) { return std::isdigit(c); });
    if (plain) {
        BigInt n(s);
        if (n == 0) throw Error("value must be nonzero");
        return factorize(n, trial_bound);
    }

    Factorization result(sign, {});
    std::size_t pos = start;
    while (pos < s.size()) {
        std::size_t end = s.find('*', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        std::size_t caret = term.find('^');
        std::string base_str = caret == std::string::npos ? term : term.substr(0, caret);
        std::string exp_str = caret == std::string::npos ? "1" : term.substr(caret + 1);
        if (base_str.empty() || exp_str.empty() ||
            !std::all_of(base_str.begin(), base_str.end(),
                         [](unsigned char c) { return std::isdigit(c); }) ||
            !std::all_of(exp_str.begin(), exp_str.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            throw Error("malformed factored value: " + text);
        std::uint64_t base = std::stoull(base_str);
        long exp = std::stol(exp_str);
        if (!is_prime_u64(base)) throw Error("base " + base_str + " is not prime");
        if (exp < 1 || exp > 1000) throw Error("exponent out of range: " + exp_str);
        result = result.multiply(Factorization(1, {{base, static_cast<int>(exp)}}));
        pos = end + 1;
    }
    return result;
}

}  // namespace quintic
