#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qprat/fibmod.hpp"
#include "qprat/unitresidue.hpp"

using namespace qprat;

namespace {
std::vector<long long> fundamentals(long long max) {
    std::vector<long long> out;
    for (long long d = 2; d <= max; ++d)
        if (is_fundamental_discriminant(d)) out.push_back(d);
    return out;
}
} // namespace

TEST_CASE("residue_degree examples") {
    CHECK(residue_degree(5, 11) == 1);  // 4^2 = 16 = 5 mod 11
    CHECK(residue_degree(5, 7) == 2);
    CHECK_THROWS_AS(residue_degree(8, 2), ExcludedPrimeError);
    CHECK_THROWS_AS(residue_degree(21, 7), ExcludedPrimeError); // ramified
}

TEST_CASE("unit_pow examples") {
    QuadraticField f5 = field_invariants(5);
    RingElem id = unit_pow(f5, 0, 7);
    CHECK(id.u == 2);
    CHECK(id.v == 0);
    RingElem sq = unit_pow(f5, 2, 7); // eps^2 = eps + 1 = (3 + sqrt(5))/2
    CHECK(sq.u == 3);
    CHECK(sq.v == 1);
    // 13 is Wieferich for the d = 8 unit, so eps^168 is 1 even mod 169
    QuadraticField f8 = field_invariants(8);
    RingElem big = unit_pow(f8, 168, 13);
    CHECK(big.u == 2);
    CHECK(big.v == 0);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(555);
    for (long long d : {5ll, 8ll, 17ll, 73ll}) {
        uint64_t p = 101;
        uint64_t m = p * p;
        uint64_t d_mod = static_cast<uint64_t>(d) % m;
        auto rnd = [&] { return RingElem{rng() % m, rng() % m, m, d_mod}; };
        for (int i = 0; i < 500; ++i) {
            RingElem a = rnd(), b = rnd(), c = rnd();
            CHECK(a.mul(b) == b.mul(a));
            CHECK(a.mul(b.mul(c)) == a.mul(b).mul(c));
            // distributivity over componentwise addition
            RingElem sum{(b.u + c.u) % m, (b.v + c.v) % m, m, d_mod};
            RingElem lhs = a.mul(sum);
            RingElem rhs{(a.mul(b).u + a.mul(c).u) % m, (a.mul(b).v + a.mul(c).v) % m, m, d_mod};
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("conjugation is an automorphism and eps * conj(eps) is the norm") {
    std::mt19937_64 rng(77);
    for (long long d : fundamentals(100)) {
        QuadraticField f = field_invariants(d);
        for (uint64_t p : {7ull, 11ull, 101ull}) {
            if (f.d % static_cast<long long>(p) == 0) continue;
            uint64_t m = p * p;
            uint64_t d_mod = static_cast<uint64_t>(d) % m;
            for (int i = 0; i < 20; ++i) {
                RingElem a{rng() % m, rng() % m, m, d_mod};
                RingElem b{rng() % m, rng() % m, m, d_mod};
                CHECK(a.mul(b).conjugate() == a.conjugate().mul(b.conjugate()));
            }
            RingElem eps = unit_pow(f, 1, p);
            RingElem nrm = eps.mul(eps.conjugate());
            uint64_t expect = f.norm_b == 1 ? 1 : m - 1;
            CHECK(nrm.u == (2 * expect) % m);
            CHECK(nrm.v == 0);
            CHECK(eps.norm() == expect);
        }
    }
}

TEST_CASE("eps^(p^r - 1) is 1 mod p; inert case also kills eps^(2(p+1))") {
    for (long long d : fundamentals(100)) {
        QuadraticField f = field_invariants(d);
        for (uint64_t p : oracles::eratosthenes(1000)) {
            if (p == 2 || f.d % static_cast<long long>(p) == 0) continue;
            int r = residue_degree(d, p);
            uint64_t e = r == 1 ? p - 1 : p * p - 1;
            RingElem w = unit_pow(f, e, p);
            CHECK((w.u + p * p - 2) % p == 0);
            CHECK(w.v % p == 0);
            if (r == 2) {
                RingElem t = unit_pow(f, 2 * (p + 1), p);
                CHECK((t.u + p * p - 2) % p == 0);
                CHECK(t.v % p == 0);
            }
        }
    }
}

TEST_CASE("fermat_quotient examples") {
    CHECK(fermat_quotient(field_invariants(8), 13).value == 0);
    CHECK(fermat_quotient(field_invariants(5), 7).value != 0);
    CHECK(fermat_quotient(field_invariants(29), 3).value == 0);
}

TEST_CASE("is_wieferich_base_unit examples") {
    WieferichReport r1 = is_wieferich_base_unit(field_invariants(8), 13);
    CHECK(r1.is_wieferich);
    CHECK(r1.r == 2); // (8/13) = -1
    CHECK(r1.fermat_quotient.value == 0);
    CHECK(is_wieferich_base_unit(field_invariants(12), 103).is_wieferich);
    WieferichReport r3 = is_wieferich_base_unit(field_invariants(5), 13);
    CHECK_FALSE(r3.is_wieferich);
    CHECK(r3.fermat_quotient.value != 0);
}

TEST_CASE("unit-basis Wieferich agrees with Fibonacci-Wieferich off exclusions") {
    for (long long d : fundamentals(100)) {
        QuadraticField f = field_invariants(d);
        FibParams params = FibParams::from_field(f);
        for (uint64_t p : oracles::eratosthenes(1000)) {
            if (p < 5 || params.disc_mod(p) == 0 || f.h % p == 0 ||
                f.d % static_cast<long long>(p) == 0)
                continue;
            CHECK(is_wieferich_base_unit(f, p).is_wieferich == is_fibonacci_wieferich(f, p));
        }
    }
}
