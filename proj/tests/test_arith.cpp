#include "brauerk3/arith.hpp"
#include "brauerk3/error.hpp"

#include <doctest.h>

#include <random>

using namespace brauerk3;

TEST_CASE("modular helpers") {
    CHECK(arith::mulmod(0xFFFFFFFFFFFFFFC4ULL, 0xFFFFFFFFFFFFFFC4ULL, 0xFFFFFFFFFFFFFFC5ULL) == 1);
    CHECK(arith::powmod(3, 6, 7) == 1);
    CHECK(arith::invmod(3, 7) == 5);
    CHECK_THROWS_AS(arith::invmod(6, 9), Error);
    CHECK(arith::mod(Int(-1), 7) == 6);
}

TEST_CASE("primality agrees with a sieve") {
    const std::uint64_t limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    composite[0] = composite[1] = true;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint64_t n = 0; n <= limit; ++n) REQUIRE(arith::is_prime(n) == !composite[n]);
    CHECK(arith::is_prime(std::uint64_t{18446744073709551557ULL}));
    CHECK_FALSE(arith::is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to bases 2, 3, 5, 7
    auto primes = arith::primes_up_to(100);
    CHECK(primes.size() == 25);
    CHECK(primes.back() == 97);
}

TEST_CASE("factorization multiplies back") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int n = arith::to_int(rng() >> 1) * arith::to_int((rng() >> 40) + 1);
        auto f = arith::factor(n);
        Int prod = 1;
        for (const auto& [p, e] : f) {
            CHECK(arith::is_prime(p));
            prod *= arith::pow(p, e);
        }
        CHECK(prod == n);
    }
    auto f = arith::factor(Int(-360));
    CHECK(f == std::map<Int, unsigned>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("square roots and Legendre symbols") {
    for (std::uint64_t p : {3ULL, 7ULL, 13ULL, 97ULL, 1000003ULL}) {
        for (std::uint64_t a = 1; a < 50; ++a) {
            auto r = arith::sqrt_mod(a % p, p);
            int l = arith::legendre(arith::to_int(a), p);
            if (a % p == 0) continue;
            CHECK((l == 1) == r.has_value());
            if (r) CHECK(arith::mulmod(*r, *r, p) == a % p);
        }
    }
    CHECK(arith::legendre(Int(14), 7) == 0);
}

TEST_CASE("valuations, cubes and parsing") {
    CHECK(arith::valuation(Int(48), Int(2)) == 4);
    CHECK(arith::valuation(Rational(3, 8), Int(2)) == -3);
    CHECK_THROWS_AS(arith::valuation(Int(0), Int(2)), Error);
    CHECK(arith::is_integer_cube(Int(-1728)));
    CHECK_FALSE(arith::is_integer_cube(Int(12)));
    CHECK(arith::parse_rational("-6/4") == Rational(-3, 2));
    CHECK(arith::str(Rational(6, 4)) == "3/2");
    CHECK_THROWS(arith::parse_rational("1/0"));
    CHECK_THROWS(arith::parse_rational("x"));
    CHECK(arith::fits_u64(Int("18446744073709551615")));
    CHECK_FALSE(arith::fits_u64(Int("18446744073709551616")));
    CHECK_THROWS_AS(arith::to_u64(Int(-1)), Error);
}
