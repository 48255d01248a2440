#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qprat/errors.hpp"

namespace qprat {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m); // throws NotInvertibleError
uint64_t isqrt_u64(uint64_t n);

/// A residue class value mod modulus. Moduli up to 2^62 are supported so
/// that p^2 fits for every scan prime p < 2^31; products go through 128-bit
/// intermediates.
struct Residue {
    uint64_t value = 0;
    uint64_t modulus = 2;

    Residue() = default;
    Residue(uint64_t v, uint64_t m) : value(v % m), modulus(m) {}

    Residue add(const Residue& o) const { return Residue((value + o.value) % modulus, modulus); }
    Residue sub(const Residue& o) const {
        return Residue((value + modulus - o.value) % modulus, modulus);
    }
    Residue mul(const Residue& o) const { return Residue(mulmod(value, o.value, modulus), modulus); }
    Residue pow(uint64_t e) const { return Residue(powmod(value, e, modulus), modulus); }
    Residue inv() const { return Residue(invmod(value, modulus), modulus); }

    bool operator==(const Residue& o) const = default;
};

/// Kronecker symbol (a/n), the full extension of the Legendre symbol to all
/// lower arguments n != 0. Completely multiplicative in n; zero when
/// gcd(a, n) > 1.
int kronecker(long long a, long long n);

/// Prime factorization with strictly increasing primes.
struct Factorization {
    std::vector<std::pair<uint64_t, unsigned>> factors;

    uint64_t value() const;
    std::vector<uint64_t> divisors_sorted() const;
    bool operator==(const Factorization& o) const = default;
};

bool is_prime(uint64_t n);

/// Trial division over a small-prime table, then Brent's cycle method with a
/// fixed seed for the cofactor.
Factorization factorize(uint64_t n);

/// Least t > 0 with a^t = 1, where the factored bound is a multiple of the
/// order. Throws OrderBoundError if a^bound != 1.
uint64_t multiplicative_order(const Residue& a, const Factorization& order_bound);

/// Segmented sieve stream over [lo, hi]; memory use is bounded by the segment
/// size regardless of the range width. Single consumer; scans create one
/// stream per worker over disjoint ranges.
class PrimeSieve {
  public:
    PrimeSieve(uint64_t lo, uint64_t hi);
    std::optional<uint64_t> next();

  private:
    void fill_segment();

    uint64_t lo_, hi_;
    uint64_t segment_base_;
    size_t cursor_ = 0;
    std::vector<uint32_t> base_primes_;
    std::vector<uint8_t> flags_;
    static constexpr uint64_t kSegmentSpan = 1u << 20;
};

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

} // namespace qprat
