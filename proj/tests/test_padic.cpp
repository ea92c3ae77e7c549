#include "quintic/padic.hpp"

#include <random>

#include "doctest.h"
#include "quintic/errors.hpp"

using namespace quintic;

namespace {

Padic random_unit(int p, std::mt19937_64& rng, int digits = Padic::kDefaultDigits) {
    BigInt u = 1 + static_cast<unsigned long>(rng() % (p - 1));
    BigInt scale = p;
    for (int i = 1; i < digits; ++i) {
        u += scale * static_cast<unsigned long>(rng() % p);
        scale *= p;
    }
    return Padic::from_unit(p, 0, u, digits);
}

}  // namespace

TEST_CASE("basic arithmetic in tenth-valuation form") {
    // 3 + 6 = 9 = 3^2: one cancellation step.
    auto s = Padic::from_integer(3, 3) + Padic::from_integer(3, 6);
    CHECK(s.valuation_tenths() == 20);
    CHECK(s.unit() == 1);

    // pi * pi^9 = p.
    auto p10 = Padic::pi_power(3, 1) * Padic::pi_power(3, 9);
    CHECK(p10.valuation_tenths() == 10);
    CHECK(p10.unit() == 1);

    // inv(2) over Z_3 at default precision: (3^30 + 1) / 2.
    auto half = Padic::from_integer(3, 2).inverse();
    BigInt m = 1;
    for (int i = 0; i < 30; ++i) m *= 3;
    CHECK(half.unit() == (m + 1) / 2);
    CHECK((half * Padic::from_integer(3, 2)).same_value(Padic::one(3)));
}

TEST_CASE("zero states") {
    auto z = Padic::zero(7);
    CHECK(z.is_exact_zero());
    CHECK(z.valuation_tenths() == Padic::kInfTenths);

    auto a = Padic::from_integer(7, 5);
    auto cancel = a + (-a);
    CHECK(cancel.is_zero());
    CHECK_FALSE(cancel.is_exact_zero());
    CHECK(cancel.abs_precision_tenths() == 300);
    CHECK_THROWS_AS(cancel.valuation_tenths(), PrecisionExhausted);
    CHECK_THROWS_AS(cancel.inverse(), PrecisionExhausted);
    CHECK_THROWS_AS(z.inverse(), DivisionByZero);

    // Exact zero is absorbing and identity.
    CHECK((z * a).is_exact_zero());
    CHECK((z + a).same_value(a));
}

TEST_CASE("incompatible pi-classes cannot be added") {
    auto one = Padic::one(3);
    auto pi = Padic::pi_power(3, 1);
    CHECK_THROWS_AS(one + pi, IncompatibleRamification);
    CHECK_FALSE(one.same_value(pi));
    // Same class mod 10 is fine.
    auto x = Padic::pi_power(3, 3) + Padic::pi_power(3, 13);
    CHECK(x.valuation_tenths() == 3);
}

TEST_CASE("ring properties on random units") {
    std::mt19937_64 rng(99);
    for (int p : {3, 7, 11, 13}) {
        for (int iter = 0; iter < 1000; ++iter) {
            auto a = random_unit(p, rng);
            auto b = random_unit(p, rng);
            CHECK(((a * b) * b.inverse()).same_value(a));
            CHECK((a * b).valuation_tenths() ==
                  a.valuation_tenths() + b.valuation_tenths());
            auto api = a.scale_pi(static_cast<long>(rng() % 25));
            auto bpi = b.scale_pi(static_cast<long>(rng() % 25));
            CHECK((api * bpi).valuation_tenths() ==
                  api.valuation_tenths() + bpi.valuation_tenths());
        }
    }
}

TEST_CASE("hensel square roots") {
    auto two = hensel_sqrt(Padic::from_integer(11, 4));
    REQUIRE(two.has_value());
    CHECK(two->same_value(Padic::from_integer(11, 2)));

    CHECK_FALSE(hensel_sqrt(Padic::from_integer(3, 2)).has_value());

    // 5 * 800000 = 2000^2, so the square root exists over Z_11.
    auto root = hensel_sqrt(Padic::from_integer(11, BigInt(5) * 800000));
    REQUIRE(root.has_value());
    CHECK((*root * *root).same_value(Padic::from_integer(11, 4000000)));
    CHECK(root->residue_mod_p() == 2);  // canonical root: -2000 = 2 mod 11

    CHECK_THROWS_AS(hensel_sqrt(Padic::from_integer(2, 7)), UnsupportedRamified);
}

TEST_CASE("hensel square root round trip") {
    std::mt19937_64 rng(3);
    for (int p : {3, 7, 11, 13}) {
        for (int iter = 0; iter < 50; ++iter) {
            auto b = random_unit(p, rng);
            auto r = hensel_sqrt(b * b);
            REQUIRE(r.has_value());
            CHECK((*r * *r).same_value(b * b));
            CHECK((r->same_value(b) || r->same_value(-b)));
        }
    }
}

TEST_CASE("hensel nth roots") {
    auto r5 = hensel_nth_root(Padic::from_integer(3, 32), 5);
    REQUIRE(r5.has_value());
    CHECK(r5->same_value(Padic::from_integer(3, 2)));

    // Fifth powers mod 11 are only {1, 10}.
    CHECK_FALSE(hensel_nth_root(Padic::from_integer(11, 2), 5).has_value());

    auto r2 = hensel_nth_root(Padic::from_integer(7, 2), 2);
    REQUIRE(r2.has_value());
    long res = r2->residue_mod_p();
    CHECK((res == 3 || res == 4));
    CHECK((*r2 * *r2).same_value(Padic::from_integer(7, 2)));

    CHECK_THROWS_AS(hensel_nth_root(Padic::from_integer(3, 4), 3), UnsupportedRamified);

    std::mt19937_64 rng(5);
    for (int p : {3, 7, 11}) {
        for (int iter = 0; iter < 30; ++iter) {
            auto b = random_unit(p, rng);
            BigInt b5u = b.unit() * b.unit() % 1;  // placeholder to avoid unused warnings
            (void)b5u;
            auto pow5 = b * b * b * b * b;
            auto r = hensel_nth_root(pow5, 5);
            REQUIRE(r.has_value());
            auto rp = *r * *r * *r * *r * *r;
            CHECK(rp.same_value(pow5));
        }
    }
}

TEST_CASE("precision tracking") {
    auto a = Padic::from_integer(3, 5, 10);  // 10 digits
    auto b = Padic::from_integer(3, 7, 30);
    auto prod = a * b;
    CHECK(prod.abs_precision_tenths() == 100);

    auto c = Padic::from_rational(3, make_rational(1, 3));
    CHECK(c.valuation_tenths() == -10);
    CHECK(c.abs_precision_tenths() == -10 + 300);

    auto t = b.truncate(50);
    CHECK(t.abs_precision_tenths() == 50);
    CHECK(t.same_value(b));

    CHECK(a.agrees_to_tenths(b + (a - b), 90));
}

TEST_CASE("residues") {
    CHECK(Padic::from_integer(7, 5).residue_mod_p() == 5);
    CHECK(Padic::from_integer(7, 49).residue_mod_p() == 0);
    CHECK(Padic::pi_power(7, 3).residue_mod_p() == 0);
    CHECK_THROWS_AS(Padic::from_rational(7, make_rational(1, 7)).residue_mod_p(), Error);
}
