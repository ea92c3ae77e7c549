#include "quintic/series.hpp"

#include <algorithm>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr long kInf = Padic::kInfTenths;
constexpr long kInfCap = Padic::kInfTenths / 2;

long vp_of_index(std::size_t j, int p) {
    long w = 0;
    while (j > 0 && j % static_cast<std::size_t>(p) == 0) {
        j /= static_cast<std::size_t>(p);
        ++w;
    }
    return w;
}

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("series operands with different primes");
}

// A sound common tail for two bounds with identical slopes; an infinite
// bound is compatible with anything.
TailBound merge_tails(const TailBound& a, const TailBound& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    if (a.slope != b.slope)
        throw std::logic_error("cannot merge tail bounds with different slopes");
    return {sat_min_tenths(a.constant, b.constant), a.slope,
            a.divisor_loss || b.divisor_loss};
}

// Weakens `tail` so that it also bounds a known coefficient (valuation
// lower bound lb) being folded into the tail range at index i.
TailBound absorb_coefficient(TailBound tail, long lb, std::size_t i) {
    if (lb >= kInfCap) return tail;
    long needed = lb - tail.slope * static_cast<long>(i);
    if (tail.is_infinite()) return {needed, tail.slope, tail.divisor_loss};
    return {sat_min_tenths(tail.constant, needed), tail.slope, tail.divisor_loss};
}

}  // namespace

long tail_infimum(int p, const TailBound& tail, std::size_t from_index, long disc_tenths) {
    if (tail.is_infinite()) return kInf;
    long e = tail.slope + disc_tenths;
    long n = static_cast<long>(std::max<std::size_t>(from_index, 1));
    if (!tail.divisor_loss) {
        if (e > 0) return tail.constant + e * n;
        if (e == 0) return tail.constant;
        return -kInf;
    }
    if (e <= 0) return -kInf;

    // inf over j >= n of c + e j - 10 v_p(j) equals the min over w >= 0 of
    // c + e M_w - 10 w with M_w the first multiple of p^w at or above n.
    long best = kInf;
    long long pw = 1;
    for (long w = 0; w < 64; ++w) {
        long long mw = ((static_cast<long long>(n) + pw - 1) / pw) * pw;
        long long term = tail.constant + static_cast<long long>(e) * mw - 10 * w;
        if (term < best) best = static_cast<long>(term);
        bool grows = pw >= n && static_cast<long long>(p - 1) * pw * e > 10;
        if (grows && term > best) break;
        if (pw > (1LL << 50) / p) break;
        pw *= p;
    }
    return best;
}

TruncatedSeries::TruncatedSeries(int p, std::vector<Padic> coeffs, TailBound tail)
    : prime_(p), coeffs_(std::move(coeffs)), tail_(tail) {
    for (const auto& c : coeffs_)
        if (c.prime() != p) throw std::invalid_argument("coefficient prime mismatch");
}

TruncatedSeries TruncatedSeries::zero(int p, std::size_t order) {
    return TruncatedSeries(p, std::vector<Padic>(order, Padic::zero(p)), TailBound{});
}

TruncatedSeries TruncatedSeries::constant(int p, const Padic& c, std::size_t order) {
    auto s = zero(p, order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int p, std::size_t index, const Padic& c,
                                          std::size_t order) {
    auto s = zero(p, std::max(order, index + 1));
    s.coeffs_[index] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_rationals(int p, const std::vector<BigRational>& coeffs,
                                                std::size_t order, int digits) {
    std::vector<Padic> cs;
    cs.reserve(std::max(order, coeffs.size()));
    for (const auto& q : coeffs) cs.push_back(Padic::from_rational(p, q, digits));
    while (cs.size() < order) cs.push_back(Padic::zero(p));
    return TruncatedSeries(p, std::move(cs), TailBound{});
}

std::size_t TruncatedSeries::first_possible_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_exact_zero()) return i;
    return coeffs_.size();
}

long TruncatedSeries::known_min_valuation() const {
    long v = kInf;
    for (const auto& c : coeffs_) v = sat_min_tenths(v, c.valuation_lower_bound_tenths());
    return v;
}

bool TruncatedSeries::all_known_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Padic& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncate_order(std::size_t new_order) const {
    if (new_order >= order()) return *this;
    TailBound tail = tail_;
    for (std::size_t i = new_order; i < order(); ++i)
        tail = absorb_coefficient(tail, coeffs_[i].valuation_lower_bound_tenths(), i);
    return TruncatedSeries(prime_,
                           std::vector<Padic>(coeffs_.begin(),
                                              coeffs_.begin() + static_cast<long>(new_order)),
                           tail);
}

TruncatedSeries TruncatedSeries::with_tail(TailBound tail) const {
    return TruncatedSeries(prime_, coeffs_, tail);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    check_compatible(*this, other);
    std::size_t n = std::min(order(), other.order());
    TruncatedSeries a = truncate_order(n);
    TruncatedSeries b = other.truncate_order(n);
    std::vector<Padic> cs;
    cs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cs.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return TruncatedSeries(prime_, std::move(cs), merge_tails(a.tail_, b.tail_));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    return *this + other.scale(Padic::from_integer(prime_, -1, 60));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    check_compatible(*this, other);
    if (tail_.divisor_loss || other.tail_.divisor_loss)
        throw TailUnbounded("product of series with integration-divisor tails");
    if ((tail_.slope != 0 && !tail_.is_infinite()) ||
        (other.tail_.slope != 0 && !other.tail_.is_infinite()))
        throw std::logic_error("products are only supported before variable rescaling");

    std::size_t n1 = order(), n2 = other.order();
    std::size_t m1 = first_possible_index(), m2 = other.first_possible_index();
    std::size_t n = std::min(n1 + m2, n2 + m1);
    n = std::min(n, n1 + n2);
    if (n == 0) n = 1;

    std::vector<Padic> cs(n, Padic::zero(prime_));
    for (std::size_t i = 0; i < n1; ++i) {
        if (coeffs_[i].is_exact_zero()) continue;
        for (std::size_t j = 0; j < n2 && i + j < n; ++j) {
            if (other.coeffs_[j].is_exact_zero()) continue;
            cs[i + j] = cs[i + j] + coeffs_[i] * other.coeffs_[j];
        }
    }

    long lb_all_1 = sat_min_tenths(known_min_valuation(),
                                   tail_.is_infinite() ? kInf : tail_.constant);
    long lb_all_2 = sat_min_tenths(other.known_min_valuation(),
                                   other.tail_.is_infinite() ? kInf : other.tail_.constant);
    long tail_c = kInf;
    if (!tail_.is_infinite()) tail_c = sat_min_tenths(tail_c, sat_add_tenths(tail_.constant, lb_all_2));
    if (!other.tail_.is_infinite())
        tail_c = sat_min_tenths(tail_c, sat_add_tenths(other.tail_.constant, lb_all_1));
    for (std::size_t i = 0; i < n1; ++i) {
        long li = coeffs_[i].valuation_lower_bound_tenths();
        if (li >= kInfCap) continue;
        for (std::size_t j = 0; j < n2; ++j) {
            if (i + j < n) continue;
            long lj = other.coeffs_[j].valuation_lower_bound_tenths();
            tail_c = sat_min_tenths(tail_c, sat_add_tenths(li, lj));
        }
    }
    return TruncatedSeries(prime_, std::move(cs), TailBound{tail_c, 0, false});
}

TruncatedSeries TruncatedSeries::scale(const Padic& c) const {
    std::vector<Padic> cs;
    cs.reserve(order());
    for (const auto& x : coeffs_) cs.push_back(x * c);
    TailBound tail = tail_;
    if (!tail.is_infinite())
        tail.constant = sat_add_tenths(tail.constant, c.valuation_lower_bound_tenths());
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::scale_pi(long k_tenths) const {
    std::vector<Padic> cs;
    cs.reserve(order());
    for (const auto& x : coeffs_) cs.push_back(x.scale_pi(k_tenths));
    TailBound tail = tail_;
    if (!tail.is_infinite()) tail.constant = sat_add_tenths(tail.constant, k_tenths);
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::shift_up(std::size_t k) const {
    if (tail_.divisor_loss)
        throw std::logic_error("shift of a series with an integration-divisor tail");
    std::vector<Padic> cs(order() + k, Padic::zero(prime_));
    for (std::size_t i = 0; i < order(); ++i) cs[i + k] = coeffs_[i];
    TailBound tail = tail_;
    if (!tail.is_infinite()) tail.constant -= tail.slope * static_cast<long>(k);
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::divide_by_t() const {
    if (order() == 0) throw std::logic_error("cannot divide an empty series");
    if (!coeffs_[0].is_exact_zero())
        throw Error("divide_by_t requires an exactly vanishing constant term");
    if (tail_.divisor_loss)
        throw std::logic_error("divide_by_t on a series with an integration-divisor tail");
    std::vector<Padic> cs(coeffs_.begin() + 1, coeffs_.end());
    TailBound tail = tail_;
    if (!tail.is_infinite()) tail.constant += tail.slope;
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::size_t n = order() > 0 ? order() - 1 : 0;
    std::vector<Padic> cs;
    cs.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        cs.push_back(coeffs_[i] * Padic::from_integer(prime_, static_cast<long>(i), 60));
    TailBound tail = tail_;
    if (!tail.is_infinite()) {
        tail.constant += tail.slope;
        tail.divisor_loss = false;
    }
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::integrate() const {
    std::vector<Padic> cs(order() + 1, Padic::zero(prime_));
    for (std::size_t i = 0; i < order(); ++i)
        cs[i + 1] = coeffs_[i] / Padic::from_integer(prime_, static_cast<long>(i) + 1, 60);
    TailBound tail = tail_;
    if (!tail.is_infinite()) {
        if (tail.divisor_loss)
            throw TailUnbounded("integration of a series that already carries divisor losses");
        tail.constant -= tail.slope;
        tail.divisor_loss = true;
    }
    return TruncatedSeries(prime_, std::move(cs), tail);
}

TruncatedSeries TruncatedSeries::substitute_scaled_variable(long s_tenths) const {
    std::vector<Padic> cs;
    cs.reserve(order());
    for (std::size_t i = 0; i < order(); ++i)
        cs.push_back(coeffs_[i].scale_pi(s_tenths * static_cast<long>(i)));
    TailBound tail = tail_;
    if (!tail.is_infinite()) tail.slope += s_tenths;
    return TruncatedSeries(prime_, std::move(cs), tail);
}

Padic TruncatedSeries::evaluate(const Padic& t0) const {
    if (t0.prime() != prime_) throw std::invalid_argument("evaluation point prime mismatch");
    Padic acc = Padic::zero(prime_);
    Padic power = Padic::one(prime_, 2 * Padic::kDefaultDigits);
    for (std::size_t i = 0; i < order(); ++i) {
        if (i > 0) power = power * t0;
        if (!coeffs_[i].is_exact_zero()) acc = acc + coeffs_[i] * power;
    }
    long err = tail_infimum(prime_, tail_, order(), t0.valuation_lower_bound_tenths());
    if (err < kInfCap) {
        if (err <= -kInfCap)
            throw TailUnbounded("series tail does not converge at the evaluation point");
        acc = acc + Padic::zero_at_precision(prime_, err);
    }
    return acc;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other, std::size_t through_index,
                                  long tenths) const {
    if (other.prime() != prime_) return false;
    if (order() <= through_index || other.order() <= through_index) return false;
    for (std::size_t i = 0; i <= through_index; ++i)
        if (!coeffs_[i].agrees_to_tenths(other.coeff(i), tenths)) return false;
    return true;
}

namespace {

TruncatedSeries series_pow(const TruncatedSeries& s, unsigned k, std::size_t order_cap) {
    TruncatedSeries acc = TruncatedSeries::one(s.prime(), order_cap);
    for (unsigned i = 0; i < k; ++i) acc = (acc * s).truncate_order(order_cap);
    return acc;
}

}  // namespace

TruncatedSeries series_binomial_root(const TruncatedSeries& s, const BigRational& e) {
    int p = s.prime();
    if (mpz_divisible_ui_p(e.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw RamifiedExponent("exponent denominator divisible by p");
    if (s.order() == 0) throw NonUnitLeadingTerm("empty series");

    Padic lead = s.coeff(0);
    Padic delta = lead - Padic::one(p, 2 * Padic::kDefaultDigits);
    if (!delta.is_zero())
        throw NonUnitLeadingTerm("leading coefficient is not 1");

    std::size_t n = s.order();
    std::vector<Padic> ucs;
    ucs.push_back(Padic::zero(p));
    for (std::size_t i = 1; i < n; ++i) ucs.push_back(s.coeff(i));
    TruncatedSeries u(p, std::move(ucs), s.tail());
    if (u.tail().divisor_loss || (!u.tail().is_infinite() && u.tail().slope != 0))
        throw std::logic_error("binomial root before variable rescaling only");

    long w = sat_min_tenths(u.known_min_valuation(),
                            u.tail().is_infinite() ? kInf : u.tail().constant);
    if (w < 0) throw TailUnbounded("binomial root of a non-integral series");

    std::size_t m = std::max<std::size_t>(u.first_possible_index(), 1);
    TruncatedSeries result = TruncatedSeries::one(p, n);
    TruncatedSeries upow = TruncatedSeries::one(p, n);
    BigRational binom(1);
    std::size_t jmax = (n - 1) / m;
    for (std::size_t j = 1; j <= jmax; ++j) {
        upow = (upow * u).truncate_order(n);
        binom *= (e - BigRational(static_cast<long>(j) - 1)) / BigRational(static_cast<long>(j));
        result = result + upow.scale(Padic::from_rational(p, binom));
    }

    // Omitted binomial terms all have order >= n and integral coefficient
    // factors C(e, j) in Z_p, so they only weaken the tail constant.
    TailBound tail = result.tail();
    long omitted = w >= kInfCap ? kInf : static_cast<long>(jmax + 1) * w;
    tail.constant = sat_min_tenths(tail.is_infinite() ? kInf : tail.constant, omitted);
    result = result.with_tail(tail);

    if (!delta.is_exact_zero()) {
        // Leading term known to be 1 only at precision: cap every output
        // coefficient accordingly.
        std::vector<Padic> cs;
        Padic cap = Padic::zero_at_precision(p, delta.abs_precision_tenths());
        for (std::size_t i = 0; i < result.order(); ++i) cs.push_back(result.coeff(i) + cap);
        result = TruncatedSeries(p, std::move(cs), result.tail());
    }
    return result;
}

TruncatedSeries series_inverse_newton(const TruncatedSeries& s) {
    int p = s.prime();
    if (s.order() == 0 || !s.coeff(0).is_unit_form() || s.coeff(0).valuation_tenths() != 0)
        throw NonUnitLeadingTerm("inverse of a series without unit leading term");
    std::size_t n = s.order();
    TruncatedSeries v = TruncatedSeries::constant(p, s.coeff(0).inverse(), n);
    TruncatedSeries two = TruncatedSeries::constant(p, Padic::from_integer(p, 2, 60), n);
    std::size_t rounds = 2;
    for (std::size_t k = 1; k < n; k *= 2) ++rounds;
    for (std::size_t r = 0; r < rounds; ++r)
        v = (v * (two - (s * v).truncate_order(n))).truncate_order(n);
    TruncatedSeries residual = (s * v).truncate_order(n) - TruncatedSeries::one(p, n);
    if (!residual.all_known_zero())
        throw NoConvergence("series inverse did not stabilize");
    return v;
}

TruncatedSeries series_kth_root_newton(const TruncatedSeries& s, unsigned k,
                                       const Padic& leading_root) {
    int p = s.prime();
    if (k == 0 || k % static_cast<unsigned>(p) == 0)
        throw UnsupportedRamified("root exponent divisible by p");
    if (s.order() == 0 || !s.coeff(0).is_unit_form())
        throw NonUnitLeadingTerm("k-th root of a series without unit leading term");
    Padic check = leading_root;
    for (unsigned i = 1; i < k; ++i) check = check * leading_root;
    if (!check.same_value(s.coeff(0)))
        throw std::invalid_argument("leading_root^k does not match the series");

    std::size_t n = s.order();
    TruncatedSeries z = TruncatedSeries::constant(p, leading_root, n);
    Padic kval = Padic::from_integer(p, static_cast<long>(k), 60);
    std::size_t rounds = 2;
    for (std::size_t m = 1; m < n; m *= 2) ++rounds;
    for (std::size_t r = 0; r < rounds; ++r) {
        TruncatedSeries zk1 = series_pow(z, k - 1, n);
        TruncatedSeries zk = (zk1 * z).truncate_order(n);
        TruncatedSeries denom_inv = series_inverse_newton(zk1.scale(kval));
        z = z - ((zk - s) * denom_inv).truncate_order(n);
        z = z.truncate_order(n);
    }
    TruncatedSeries residual = series_pow(z, k, n) - s.truncate_order(n);
    if (!residual.all_known_zero())
        throw NoConvergence("series k-th root did not stabilize");
    return z;
}

InverseBranch solve_inverse_branch(const Padic& a, std::size_t order) {
    int p = a.prime();
    // W = X^{-1} satisfies W = T^2 (1 + a W^5); iterate from W = T^2.
    TruncatedSeries w = TruncatedSeries::monomial(p, 2, Padic::one(p, 2 * Padic::kDefaultDigits),
                                                  order + 2);
    bool stable = false;
    for (std::size_t iter = 0; iter < std::max<std::size_t>(order, 4); ++iter) {
        TruncatedSeries w5 = series_pow(w, 5, order);
        TruncatedSeries next =
            (TruncatedSeries::one(p, order) + w5.scale(a)).shift_up(2).truncate_order(order + 2);
        if (next.order() == w.order()) {
            stable = true;
            for (std::size_t i = 0; i < next.order() && stable; ++i)
                if (!next.coeff(i).same_value(w.coeff(i))) stable = false;
        }
        w = next;
        if (stable) break;
    }
    if (!stable) throw NoConvergence("chart inversion fixed point not reached");

    // W has exact zeros at indices 0 and 1, so W / T^2 is an ordinary
    // series with leading coefficient 1.
    TruncatedSeries v = w.divide_by_t().divide_by_t();
    return InverseBranch{-2, series_inverse_newton(v)};
}

std::size_t LinearSeries::order() const {
    return std::min(alpha_part.order(), beta_part.order());
}

LinearForm LinearSeries::coefficient(std::size_t i) const {
    return LinearForm{alpha_part.coeff(i), beta_part.coeff(i)};
}

LinearSeries LinearSeries::operator+(const LinearSeries& other) const {
    return {alpha_part + other.alpha_part, beta_part + other.beta_part};
}

LinearSeries LinearSeries::scale(const Padic& c) const {
    return {alpha_part.scale(c), beta_part.scale(c)};
}

LinearSeries LinearSeries::scale_pi(long k_tenths) const {
    return {alpha_part.scale_pi(k_tenths), beta_part.scale_pi(k_tenths)};
}

LinearSeries LinearSeries::integrate() const {
    return {alpha_part.integrate(), beta_part.integrate()};
}

LinearSeries LinearSeries::substitute_scaled_variable(long s_tenths) const {
    return {alpha_part.substitute_scaled_variable(s_tenths),
            beta_part.substitute_scaled_variable(s_tenths)};
}

LinearSeries LinearSeries::truncate_order(std::size_t new_order) const {
    return {alpha_part.truncate_order(new_order), beta_part.truncate_order(new_order)};
}

TruncatedSeries LinearSeries::evaluate(const Padic& alpha, const Padic& beta) const {
    return alpha_part.scale(alpha) + beta_part.scale(beta);
}

LinearSeries operator*(const TruncatedSeries& s, const LinearSeries& l) {
    return {s * l.alpha_part, s * l.beta_part};
}

}  // namespace quintic
