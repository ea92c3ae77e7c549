#include "quintic/expansions.hpp"

#include "quintic/errors.hpp"

namespace quintic {

namespace {

void require_unit(const Padic& a, const char* what) {
    if (!a.is_unit_form() || a.valuation_tenths() != 0)
        throw std::invalid_argument(std::string(what) + " must be a unit of Z_p");
}

Padic neg_one(int p) { return Padic::from_integer(p, -1, 2 * Padic::kDefaultDigits); }

// Substitute alpha = p * alpha' and, for the classes whose display is then
// divisible by p, rescale the whole series back to unit content.
ExpansionResult to_alpha_prime(ExpansionResult r) {
    if (r.class_id.kind == ResidueClassKind::Infinity) {
        r.series.alpha_part = r.series.alpha_part.scale_pi(10);
    } else {
        r.series.beta_part = r.series.beta_part.scale_pi(-10);
        r.multiplier = r.multiplier.scale_pi(-10);
    }
    r.alpha_prime = true;
    return r;
}

}  // namespace

ExpansionResult expand_at_infinity(int p, int nu, const Padic& a, std::size_t order,
                                   Route route, bool alpha_prime) {
    if (nu < 0 || nu > 9) throw std::invalid_argument("nu must be in 0..9");
    if ((p == 2 || p == 5) && nu % p == 0)
        throw UnsupportedPrime("class decomposition at infinity needs p not in {2,5} or p | nu false");
    if (a.prime() != p) throw std::invalid_argument("unit prime mismatch");
    require_unit(a, "a");

    ExpansionResult result;
    result.class_id = {ResidueClassKind::Infinity, std::nullopt};
    result.p = p;
    result.nu = nu;
    result.a = a;
    result.sign = -1;
    result.multiplier = Padic::one(p);
    result.prefactor_tenths = 2L * nu;
    result.uniformizer_scale_tenths = nu;

    if (route == Route::ClosedForm) {
        // Displayed through T^13 with tail O(T^21); coefficients in the
        // normalized t-variable carry p^nu on the T^11 and T^13 terms.
        std::size_t n = std::min<std::size_t>(order, 21);
        Padic pnu = Padic::pi_power(p, 10L * nu, 2 * Padic::kDefaultDigits);
        auto alpha = TruncatedSeries::zero(p, n);
        auto beta = TruncatedSeries::zero(p, n);
        alpha = alpha + TruncatedSeries::monomial(p, 3, Padic::from_rational(p, make_rational(1, 3)), n);
        beta = beta + TruncatedSeries::monomial(p, 1, Padic::one(p), n);
        if (n > 11)
            beta = beta + TruncatedSeries::monomial(
                              p, 11, Padic::from_rational(p, make_rational(5, 11)) * a * pnu, n);
        if (n > 13)
            alpha = alpha + TruncatedSeries::monomial(
                                p, 13, Padic::from_rational(p, make_rational(6, 13)) * a * pnu, n);
        result.series = {alpha.with_tail(TailBound{-3L * nu, nu, true}),
                         beta.with_tail(TailBound{-1L * nu, nu, true})};
        if (alpha_prime) return to_alpha_prime(result);
        return result;
    }

    // Independent derivation from the chart relations at infinity.
    InverseBranch branch = solve_inverse_branch(a, order);
    const TruncatedSeries& f = branch.fractional;  // X = T^{-2} f
    TruncatedSeries g = series_inverse_newton(f);
    TruncatedSeries h = f.scale(neg_one(p)).scale(Padic::from_integer(p, 2, 60)) +
                        f.derivative().shift_up(1);  // -2f + T f'
    Padic half = Padic::from_rational(p, make_rational(1, 2));
    TruncatedSeries core = ((h * g) * g).scale(half);
    TruncatedSeries dx2y = core.shift_up(2);          // dX/2Y = T^2 (h g^2 / 2)
    TruncatedSeries x_dx2y = (f * core);              // X dX/2Y, the T^{+-2} cancel

    LinearSeries omega{dx2y.scale_pi(-nu), x_dx2y.scale_pi(nu)};
    LinearSeries lambda = omega.integrate()
                              .substitute_scaled_variable(nu)
                              .scale_pi(-2L * nu)
                              .scale(neg_one(p))
                              .truncate_order(order);
    result.series = lambda;
    if (alpha_prime) return to_alpha_prime(result);
    return result;
}

ExpansionResult expand_at_weierstrass(int p, const Padic& b, std::size_t order,
                                      Route route, bool alpha_prime) {
    if (p == 5) throw UnsupportedPrime("Weierstrass-class expansion excludes p = 5");
    if (b.prime() != p) throw std::invalid_argument("root prime mismatch");
    require_unit(b, "b");
    Padic a = b * b * b * b * b;

    ExpansionResult result;
    result.class_id = {ResidueClassKind::WeierstrassClass, b};
    result.p = p;
    result.nu = 5;
    result.a = a;
    result.b = b;
    result.sign = 1;
    result.multiplier = Padic::from_integer(p, 5, 60) * a * b.inverse();  // 5a/b
    result.prefactor_tenths = 0;
    result.uniformizer_scale_tenths = 5;

    TruncatedSeries dx2y_scaled = TruncatedSeries::zero(p, order);   // (5a/b) dX/2Y
    TruncatedSeries xdx2y_scaled = TruncatedSeries::zero(p, order);  // (5a/b) X dX/2Y

    if (route == Route::ClosedForm) {
        auto base = TruncatedSeries::one(p, order) +
                    TruncatedSeries::monomial(p, 2, -a.inverse(), order);
        dx2y_scaled = series_binomial_root(base, make_rational(-4, 5));
        xdx2y_scaled = series_binomial_root(base, make_rational(-3, 5)).scale(-b);
    } else {
        // X^5 = T^2 - a, solved by Newton iteration from the residue root -b.
        std::vector<Padic> rel(order, Padic::zero(p));
        rel[0] = -a;
        rel[2] = Padic::one(p);
        auto x = series_kth_root_newton(TruncatedSeries(p, std::move(rel), TailBound{}), 5, -b);
        auto dx2y = x.derivative().divide_by_t().scale(
            Padic::from_rational(p, make_rational(1, 2)));  // dX/2Y with 2Y = 2T
        dx2y_scaled = dx2y.scale(result.multiplier);
        xdx2y_scaled = (x * dx2y).scale(result.multiplier).truncate_order(order);
    }

    LinearSeries omega{dx2y_scaled.scale_pi(-5), xdx2y_scaled.scale_pi(5)};
    result.series = omega.integrate().substitute_scaled_variable(5).truncate_order(order);
    if (alpha_prime) return to_alpha_prime(result);
    return result;
}

ExpansionResult expand_at_square_class(int p, int nu, const Padic& b, std::size_t order,
                                       Route route, bool alpha_prime) {
    if (p == 2) throw UnsupportedPrime("square-class expansion excludes p = 2");
    if (nu < 2 || nu > 8 || nu % 2 != 0)
        throw std::invalid_argument("nu must be even, in 2..8");
    if (b.prime() != p) throw std::invalid_argument("root prime mismatch");
    require_unit(b, "b");
    Padic a = b * b;

    int n = nu / 2;
    int mu = nu / 5 + 1;  // least m with 5m > nu
    int rho = 5 * mu - nu;

    ExpansionResult result;
    result.class_id = {ResidueClassKind::SquareRootClass, b};
    result.p = p;
    result.nu = nu;
    result.a = a;
    result.b = b;
    result.n = n;
    result.mu = mu;
    result.rho = rho;
    result.sign = 1;
    result.multiplier = Padic::from_integer(p, 2, 60) * b;  // 2b
    result.prefactor_tenths = 2L * (rho - n);
    result.uniformizer_scale_tenths = 2L * rho;

    // b / Y = (1 + a^{-1} T^5)^{-1/2}
    TruncatedSeries b_over_y = TruncatedSeries::one(p, order);
    auto base = TruncatedSeries::one(p, order) +
                TruncatedSeries::monomial(p, 5, a.inverse(), order);
    if (route == Route::ClosedForm) {
        b_over_y = series_binomial_root(base, make_rational(-1, 2));
    } else {
        auto y_over_b = series_kth_root_newton(base, 2, Padic::one(p, Padic::kDefaultDigits));
        b_over_y = series_inverse_newton(y_over_b);
    }

    // 2b omega = (alpha pi^{-nu} + beta pi^{nu} T) (b/Y) dT
    LinearSeries omega{b_over_y.scale_pi(-nu),
                       b_over_y.shift_up(1).truncate_order(order).scale_pi(nu)};
    result.series = omega.integrate()
                        .substitute_scaled_variable(2L * rho)
                        .scale_pi(-2L * (rho - n))
                        .truncate_order(order);
    if (alpha_prime) return to_alpha_prime(result);
    return result;
}

ExpansionResult expand_v3_zero_class(const BigInt& A, std::size_t order, Route route,
                                     std::optional<Padic> chosen_root) {
    const int p = 3;
    if (mpz_divisible_ui_p(A.get_mpz_t(), 3))
        throw std::invalid_argument("A must be a 3-adic unit");
    Padic A3 = Padic::from_integer(p, A);
    auto root = hensel_sqrt(A3);
    if (!root) throw NotASquare("A is not a square in Z_3 (A = -1 mod 3)");
    Padic a = *root;
    if (chosen_root) {
        if (!((*chosen_root * *chosen_root).same_value(A3)))
            throw NotASquare("chosen root does not square to A");
        a = *chosen_root;
    }

    ExpansionResult result;
    result.class_id = {ResidueClassKind::SquareRootClass, a};
    result.p = p;
    result.nu = 0;
    result.a = A3;
    result.b = a;
    result.sign = 1;
    result.multiplier = Padic::from_integer(p, 2, 60) * a;  // 2a
    result.prefactor_tenths = 0;
    result.uniformizer_scale_tenths = 0;

    // a / y = (1 + t^5 / A)^{-1/2}
    auto base = TruncatedSeries::one(p, order) +
                TruncatedSeries::monomial(p, 5, A3.inverse(), order);
    TruncatedSeries a_over_y = TruncatedSeries::one(p, order);
    if (route == Route::ClosedForm) {
        a_over_y = series_binomial_root(base, make_rational(-1, 2));
    } else {
        auto y_over_a = series_kth_root_newton(base, 2, Padic::one(p, Padic::kDefaultDigits));
        a_over_y = series_inverse_newton(y_over_a);
    }

    // 2a omega = (3 alpha + beta t) (a/y) dt
    LinearSeries omega{a_over_y.scale(Padic::from_integer(p, 3, 60)),
                       a_over_y.shift_up(1).truncate_order(order)};
    result.series = omega.integrate().truncate_order(order);
    return result;
}

std::vector<ResidueClass> residue_classes_for(int p, int nu, const Padic& a) {
    if (nu < 1 || nu > 9)
        throw std::invalid_argument("residue class decomposition expects 1 <= nu <= 9");
    require_unit(a, "a");
    std::vector<ResidueClass> classes;
    classes.push_back({ResidueClassKind::Infinity, std::nullopt});
    if (nu == 5) {
        if (auto b = hensel_nth_root(a, 5))
            classes.push_back({ResidueClassKind::WeierstrassClass, *b});
    }
    if (nu % 2 == 0) {
        if (auto b = hensel_sqrt(a))
            classes.push_back({ResidueClassKind::SquareRootClass, *b});
    }
    return classes;
}

}  // namespace quintic
