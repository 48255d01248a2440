#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qprat/arith.hpp"

using namespace qprat;

TEST_CASE("kronecker matches the Euler criterion at odd primes") {
    for (uint64_t p : oracles::eratosthenes(200)) {
        if (p == 2) continue;
        for (long long a = 0; a < 60; ++a) {
            uint64_t e = powmod(static_cast<uint64_t>(a % static_cast<long long>(p)), (p - 1) / 2, p);
            int expected = a % static_cast<long long>(p) == 0 ? 0 : (e == 1 ? 1 : -1);
            CHECK(kronecker(a, static_cast<long long>(p)) == expected);
        }
    }
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(5, 7) == -1);
    CHECK(kronecker(123456, 1) == 1);
    CHECK(kronecker(-7, 1) == 1);
    CHECK(kronecker(8, 13) == -1);
    CHECK_THROWS_AS(kronecker(3, 0), std::invalid_argument);
}

TEST_CASE("kronecker is completely multiplicative in the upper argument") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        long long a = static_cast<long long>(rng() % 2001) - 1000;
        long long b = static_cast<long long>(rng() % 2001) - 1000;
        long long n = 2 * static_cast<long long>(rng() % 500) + 1; // odd n > 0
        CHECK(kronecker(a, n) * kronecker(b, n) == kronecker(a * b, n));
    }
}

TEST_CASE("kronecker is completely multiplicative in the lower argument") {
    std::mt19937_64 rng(54321);
    for (int i = 0; i < 1000; ++i) {
        long long a = static_cast<long long>(rng() % 2001) - 1000;
        long long m = 1 + static_cast<long long>(rng() % 1000);
        long long n = 1 + static_cast<long long>(rng() % 1000);
        CHECK(kronecker(a, m) * kronecker(a, n) == kronecker(a, m * n));
    }
}

TEST_CASE("mod_pow examples") {
    CHECK(Residue(2, 7).pow(10).value == 2);
    CHECK(Residue(5, 11).pow(0).value == 1);
    CHECK(Residue(3, 10).pow(4).value == 1);
}

TEST_CASE("mod_inv examples and involution") {
    CHECK(Residue(3, 7).inv().value == 5);
    CHECK(Residue(1, 101).inv().value == 1);
    CHECK(Residue(7 % 5, 5).inv().value == 3); // p' = 3 for p = 7, d = 5

    std::mt19937_64 rng(99);
    for (uint64_t m : {101ull, 101ull * 101ull, 99ull, 1ull << 20}) {
        int done = 0;
        while (done < 500) {
            uint64_t a = rng() % m;
            if (std::gcd(a, m) != 1) continue;
            Residue r(a, m);
            CHECK(r.inv().inv() == r);
            CHECK(r.mul(r.inv()).value == 1);
            ++done;
        }
    }
    try {
        Residue(6, 9).inv();
        FAIL("expected NotInvertibleError");
    } catch (const NotInvertibleError& e) {
        CHECK(e.gcd == 3);
    }
}

TEST_CASE("factorize examples") {
    Factorization f = factorize(12);
    CHECK(f.factors == std::vector<std::pair<uint64_t, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(168).factors ==
          std::vector<std::pair<uint64_t, unsigned>>{{2, 3}, {3, 1}, {7, 1}});
}

TEST_CASE("factorize reconstructs n with prime factors up to 1e5") {
    for (uint64_t n = 1; n <= 100'000; ++n) {
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (auto [p, e] : f.factors) CHECK(oracles::trial_division_prime(p));
    }
}

TEST_CASE("factorize handles large semiprimes") {
    uint64_t p = 1'000'000'007, q = 998'244'353;
    Factorization f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<uint64_t, unsigned>{q, 1});
    CHECK(f.factors[1] == std::pair<uint64_t, unsigned>{p, 1});
}

TEST_CASE("divisors are sorted and complete") {
    auto divs = factorize(168).divisors_sorted();
    CHECK(divs == std::vector<uint64_t>{1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168});
}

TEST_CASE("multiplicative_order examples") {
    CHECK(multiplicative_order(Residue(2, 7), factorize(6)) == 3);
    CHECK(multiplicative_order(Residue(1, 97), factorize(96)) == 1);
    CHECK(multiplicative_order(Residue(3, 13), factorize(12)) == 3);
    CHECK_THROWS_AS(multiplicative_order(Residue(2, 7), factorize(5)), OrderBoundError);
}

TEST_CASE("multiplicative_order divides the bound") {
    std::mt19937_64 rng(7);
    for (uint64_t p : {101ull, 499ull, 65537ull}) {
        Factorization bound = factorize(p - 1);
        for (int i = 0; i < 50; ++i) {
            uint64_t a = 1 + rng() % (p - 1);
            uint64_t t = multiplicative_order(Residue(a, p), bound);
            CHECK((p - 1) % t == 0);
            CHECK(Residue(a, p).pow(t).value == 1);
        }
    }
}

TEST_CASE("primes_in_range examples") {
    CHECK(primes_in_range(2, 10) == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(primes_in_range(90, 100) == std::vector<uint64_t>{97});
    CHECK(primes_in_range(50, 20).empty());
}

TEST_CASE("segmented sieve matches trial division on [2, 1e5]") {
    CHECK(primes_in_range(2, 100'000) == oracles::eratosthenes(100'000));
}

TEST_CASE("pi(1e6) is 78498") {
    CHECK(primes_in_range(2, 999'999).size() == 78498);
}

TEST_CASE("sieve crosses segment boundaries cleanly") {
    // range wider than one segment, so fill_segment advances at least once
    uint64_t hi = (1u << 20) + 1000;
    CHECK(primes_in_range(2, hi) == oracles::eratosthenes(hi));

    uint64_t lo = 999'000;
    std::vector<uint64_t> expect;
    for (uint64_t n = lo; n <= lo + 2000; ++n)
        if (oracles::trial_division_prime(n)) expect.push_back(n);
    CHECK(primes_in_range(lo, lo + 2000) == expect);
}

TEST_CASE("is_prime on edge cases") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(4294967311ull)); // smallest prime > 2^32
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
}
