#include "quintic/arith.hpp"

#include <random>

#include "doctest.h"
#include "quintic/errors.hpp"

using namespace quintic;

TEST_CASE("factorize known values") {
    auto f = factorize(324);
    CHECK(f.sign() == 1);
    REQUIRE(f.factors().size() == 2);
    CHECK(f.factors()[0] == PrimePower{2, 2});
    CHECK(f.factors()[1] == PrimePower{3, 4});

    auto g = factorize(800000);
    CHECK(g.sign() == 1);
    REQUIRE(g.factors().size() == 2);
    CHECK(g.factors()[0] == PrimePower{2, 8});
    CHECK(g.factors()[1] == PrimePower{5, 5});
    CHECK(g.value() == 800000);

    auto unit = factorize(-1);
    CHECK(unit.sign() == -1);
    CHECK(unit.factors().empty());
    CHECK(unit.value() == -1);
}

TEST_CASE("factorize residual cofactors") {
    // Prime cofactor within trial_bound^2 is accepted.
    BigInt p1 = 1000003;  // prime just above the default bound
    auto f = factorize(p1 * 4, kDefaultTrialBound);
    CHECK(f.value() == p1 * 4);

    // Product of two primes above the bound cannot be split.
    BigInt p2 = 1000033;
    CHECK_THROWS_AS(factorize(p1 * p2 * p2, kDefaultTrialBound), CompositeResidual);
}

TEST_CASE("factorize round trip over the full small range") {
    for (long n = 1; n <= 1000000; ++n) {
        if (factorize(n).value() != n) {
            CAPTURE(n);
            REQUIRE(factorize(n).value() == n);
        }
        if (n % 4096 == 1) {  // sampled negative side; same code path apart from sign
            if (factorize(-n).value() != -n) {
                CAPTURE(n);
                REQUIRE(factorize(-n).value() == -n);
            }
        }
    }
}

TEST_CASE("tenth power free reduction") {
    auto [g1, c1] = tenth_power_free_reduce(factorize(BigInt(1024) * 3));  // 2^10 * 3
    CHECK(g1.value() == 3);
    CHECK(c1 == 2);

    auto [g2, c2] = tenth_power_free_reduce(factorize(324));
    CHECK(g2.value() == 324);
    CHECK(c2 == 1);

    auto [g3, c3] = tenth_power_free_reduce(factorize(BigInt(1) << 23));  // 2^23
    CHECK(g3.value() == 8);
    CHECK(c3 == 4);
}

TEST_CASE("tenth power free reduction properties") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> exp_dist(1, 25);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<PrimePower> left, right;
        for (std::size_t i = 0; i < 6; ++i) {
            int which = static_cast<int>(rng() % 3);
            if (which == 0) left.push_back({primes[i], exp_dist(rng)});
            if (which == 1) right.push_back({primes[i], exp_dist(rng)});
        }
        Factorization a(1, left), b(1, right);

        // Idempotence.
        auto [ra, ca] = tenth_power_free_reduce(a);
        auto [raa, caa] = tenth_power_free_reduce(ra);
        CHECK(raa == ra);
        CHECK(caa == 1);

        // Multiplicativity on coprime inputs.
        auto [rb, cb] = tenth_power_free_reduce(b);
        auto [rab, cab] = tenth_power_free_reduce(a.multiply(b));
        CHECK(rab == ra.multiply(rb));
        CHECK(cab == ca * cb);
    }
}

TEST_CASE("perfect power roots") {
    CHECK(perfect_power_root(324, 2) == BigInt(18));
    CHECK(perfect_power_root(243, 5) == BigInt(3));
    CHECK_FALSE(perfect_power_root(7, 2).has_value());
    CHECK(perfect_power_root(-243, 5) == BigInt(-3));
    CHECK_THROWS_AS(perfect_power_root(-4, 2), NoRealRoot);
}

TEST_CASE("perfect power root round trip") {
    std::mt19937_64 rng(7);
    for (unsigned k : {2u, 5u, 10u}) {
        for (int iter = 0; iter < 300; ++iter) {
            long r = static_cast<long>(rng() % 1000) + 1;
            if (k % 2 == 1 && rng() % 2) r = -r;
            BigInt n;
            mpz_pow_ui(n.get_mpz_t(), BigInt(r).get_mpz_t(), k);
            auto root = perfect_power_root(n, k);
            REQUIRE(root.has_value());
            CHECK(*root == (k % 2 == 0 ? std::abs(r) : r));
        }
    }
}

TEST_CASE("trivial point counts") {
    CHECK(trivial_point_count(factorize(1)) == 4);
    CHECK(trivial_point_count(factorize(324)) == 3);
    CHECK(trivial_point_count(factorize(243)) == 2);
    CHECK(trivial_point_count(factorize(7)) == 1);
    CHECK(trivial_point_count(factorize(-1)) == 2);    // (-1)^5
    CHECK(trivial_point_count(factorize(-243)) == 2);  // (-3)^5
    CHECK(trivial_point_count(factorize(-4)) == 1);    // negative squares do not exist
}

TEST_CASE("factored string parsing") {
    CHECK(parse_factorization("2^2*3^4") == factorize(324));
    CHECK(parse_factorization("324") == factorize(324));
    CHECK(parse_factorization("-3^5") == factorize(-243));
    CHECK(parse_factorization(" 2^8 * 5^5 ") == factorize(800000));
    CHECK(parse_factorization("7") == factorize(7));
    CHECK_THROWS(parse_factorization("4^2"));  // base not prime
    CHECK_THROWS(parse_factorization("0"));
    CHECK_THROWS(parse_factorization("2^"));
    CHECK(parse_factorization("3^2*2^2") == factorize(36));  // order normalized
}

TEST_CASE("factorization helpers") {
    auto f = factorize(324);
    CHECK(f.exponent_of(2) == 2);
    CHECK(f.exponent_of(3) == 4);
    CHECK(f.exponent_of(7) == 0);
    CHECK(f.is_square());
    CHECK_FALSE(f.is_fifth_power());
    CHECK(f.to_string() == "2^2*3^4");
    CHECK(factorize(-243).to_string() == "-3^5");
    CHECK(factorize(1).to_string() == "1");
    CHECK(f.value_mod(11) == 5);
    CHECK(factorize(243).value_mod(11) == 1);
    CHECK(factorize(-5).value_mod(3) == 1);
}

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000003ull * 1000033ull));
    CHECK(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
}
