#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qprat/fibmod.hpp"
#include "qprat/williams.hpp"

using namespace qprat;

namespace {
std::vector<long long> fundamentals(long long max) {
    std::vector<long long> out;
    for (long long d = 2; d <= max; ++d)
        if (is_fundamental_discriminant(d)) out.push_back(d);
    return out;
}
} // namespace

TEST_CASE("beta examples for d=5, p=7") {
    // p' = 3: {3} = 3 gives (5/1) + (5/2) = 1 - 1
    CHECK(beta(5, 7, 1) == 0);
    CHECK(beta(5, 7, 2) == 0); // {6} = 1, empty sum
    CHECK(beta(5, 7, 3) == -1); // {9} = 4: 1 - 1 - 1
    CHECK(beta(5, 7, 4) == 1);
    CHECK(beta(5, 7, 5) == 0); // degenerate {p' i} = 0, empty sum
    CHECK_THROWS_AS(beta(21, 7, 1), NotInvertibleError); // gcd(p, d) > 1
}

TEST_CASE("beta_3(1) for d=29 sums nine character values to 3") {
    CHECK(beta(29, 3, 1) == 3);
}

TEST_CASE("beta depends only on i mod d") {
    for (auto [d, p] : {std::pair<long long, uint64_t>{5, 7}, {29, 3}, {40, 13}}) {
        for (long long i = 1; i <= d; ++i) {
            CHECK(beta(d, p, i) == beta(d, p, i + d));
            CHECK(beta(d, p, i) == beta(d, p, i + 7 * d));
        }
    }
}

TEST_CASE("alpha examples for d=5, p=7") {
    CHECK(alpha(5, 7, 1).value == 1); // k = 1 only
    CHECK(alpha(5, 7, 3).value == 5); // 1/3 = 5 mod 7
    CHECK(alpha(5, 7, 4).value == 0); // no k in 1..3 is 4 mod 5
    CHECK(alpha(5, 7, 2).value == 4); // 1/2 = 4 mod 7
}

TEST_CASE("williams_congruence hand-checked examples") {
    WilliamsReport r57 = williams_congruence(field_invariants(5), 7);
    CHECK(r57.lhs.value == 3); // F_8/7 = 21/7
    CHECK(r57.rhs.value == 3);
    CHECK(r57.criterion_sum.value == 2); // -5 mod 7
    CHECK(r57.p_inv.value == 3);

    WilliamsReport r813 = williams_congruence(field_invariants(8), 13);
    CHECK(r813.lhs.value == 0); // 13 is Fibonacci-Wieferich for d = 8
    CHECK(r813.rhs.value == 0);
    CHECK(r813.criterion_sum.value == 0);

    WilliamsReport r53 = williams_congruence(field_invariants(5), 3);
    CHECK(r53.lhs.value == 1); // F_4/3 = 3/3
    CHECK(r53.rhs.value == 1);
}

TEST_CASE("congruence holds across d <= 60, odd p <= 200") {
    // the full d <= 100, p <= 500 grid runs in the acceptance suite
    for (long long d : fundamentals(60)) {
        QuadraticField f = field_invariants(d);
        FibParams params = FibParams::from_field(f);
        for (uint64_t p : oracles::eratosthenes(200)) {
            if (p == 2 || params.disc_mod(p) == 0) continue;
            WilliamsReport rep = williams_congruence(f, p); // throws on violation
            CHECK(rep.lhs == rep.rhs);
            // sign factor is +-2, never 0 mod an odd prime
            if (rep.criterion_sum.value != 0) CHECK(rep.rhs.value != 0);
            if (rep.criterion_sum.value == 0) CHECK(rep.rhs.value == 0);
        }
    }
}

TEST_CASE("primes dividing the unit discriminant are refused") {
    CHECK_THROWS_AS(williams_congruence(field_invariants(28), 3), ExcludedPrimeError);
    CHECK_THROWS_AS(williams_congruence(field_invariants(73), 5), ExcludedPrimeError);
    CHECK_THROWS_AS(williams_criterion(field_invariants(5), 5), ExcludedPrimeError);
}

TEST_CASE("criterion equals the negation of Fibonacci-Wieferich") {
    for (long long d : fundamentals(100)) {
        QuadraticField f = field_invariants(d);
        FibParams params = FibParams::from_field(f);
        for (uint64_t p : oracles::eratosthenes(1000)) {
            if (p == 2 || params.disc_mod(p) == 0 || f.h % p == 0) continue;
            CHECK(williams_criterion(f, p) == !is_fibonacci_wieferich(f, p));
        }
    }
}

TEST_CASE("special criterion examples") {
    CHECK_FALSE(special_criterion(29, 3));
    CHECK(special_criterion(5, 3));
    CHECK_FALSE(special_criterion(77, 3));
    CHECK_FALSE(special_criterion(85, 3));
    CHECK_FALSE(special_criterion(53, 5));
    CHECK_THROWS_AS(special_criterion(5, 7), ConfigError);
}

TEST_CASE("special criterion agrees with the general one where defined") {
    for (long long d : fundamentals(120)) {
        QuadraticField f = field_invariants(d);
        for (uint64_t p : {3ull, 5ull}) {
            if (mpz_fdiv_ui(f.disc_unit_sq.get_mpz_t(), p) == 0) continue;
            CHECK(special_criterion(d, p) == williams_criterion(f, p));
        }
    }
}

TEST_CASE("report arrays recombine to the criterion sum") {
    WilliamsReport rep = williams_congruence(field_invariants(13), 11);
    REQUIRE(rep.beta.size() == 13);
    REQUIRE(rep.alpha.size() == 13);
    uint64_t sum = 0;
    for (size_t i = 0; i < 13; ++i) {
        uint64_t b = static_cast<uint64_t>(((rep.beta[i] % 11) + 11) % 11);
        sum = (sum + mulmod(b, rep.alpha[i].value, 11)) % 11;
        CHECK(rep.beta[i] == beta(13, 11, static_cast<long long>(i) + 1));
        CHECK(rep.alpha[i] == alpha(13, 11, static_cast<long long>(i) + 1));
    }
    CHECK(sum == rep.criterion_sum.value);
}
