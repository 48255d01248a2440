#pragma once

#include <cstdint>

#include "qprat/arith.hpp"
#include "qprat/quadfield.hpp"

namespace qprat {

/// Parameters of the recurrence F_{n+2} = a*F_{n+1} - b*F_n, F_0 = 0, F_1 = 1,
/// with a the unit trace and b = N(eps) in {+1, -1}; disc = a^2 - 4b > 0 is
/// the square of the unit difference.
struct FibParams {
    mpz_class a;
    int b = -1;
    mpz_class disc;

    FibParams(mpz_class a_, int b_) : a(std::move(a_)), b(b_), disc(a * a - 4 * b_) {
        if (b_ != 1 && b_ != -1) throw ConfigError("FibParams: b must be +1 or -1");
        if (disc <= 0) throw ConfigError("FibParams: a^2 - 4b must be positive");
    }
    static FibParams from_field(const QuadraticField& f) { return FibParams(f.trace_a, f.norm_b); }

    uint64_t a_mod(uint64_t m) const { return mpz_fdiv_ui(a.get_mpz_t(), m); }
    uint64_t disc_mod(uint64_t m) const { return mpz_fdiv_ui(disc.get_mpz_t(), m); }
};

struct FibPair {
    Residue f_n;
    Residue f_n1;
    uint64_t n = 0;
};

/// modulus, rank of apparition z (least F_z = 0), Wall period k (least t with
/// (F_t, F_{t+1}) = (0, 1)); z divides k.
struct PeriodRecord {
    uint64_t modulus = 0;
    uint64_t z = 0;
    uint64_t k = 0;
};

/// (F_n, F_{n+1}) mod m in O(log n) multiplications of the companion matrix.
FibPair fib_pair(const FibParams& params, uint64_t n, uint64_t m);

/// Same contract computed term by term; refuses n > 10^7. Independent of the
/// matrix path, used as the cross-check oracle and by the period fallback.
FibPair fib_iter(const FibParams& params, uint64_t n, uint64_t m);

/// Least z > 0 with F_z = 0 (mod p), found along the divisors of p - eps.
/// Requires p odd, p not dividing disc; eps = (d/p).
uint64_t rank_of_apparition(const FibParams& params, uint64_t p, int eps);

/// Wall period mod p via rank-then-order: k = z * lcm of the orders of
/// F_{z+1} and b^z / F_{z+1} mod p; verified against fib_pair(k).
PeriodRecord wall_period(const FibParams& params, uint64_t p, int eps);

/// k(p^2), always k_p or p*k_p, decided by one companion-matrix power mod p^2.
uint64_t wall_period_square(const FibParams& params, uint64_t p, uint64_t k_p);

/// Period of the sequence mod m by direct iteration; m <= 10^6.
uint64_t period_linear(const FibParams& params, uint64_t m);

/// F_{p - (d/p)} = 0 (mod p^2), the Wieferich-style test for the field's
/// sequence. Requires p odd with p not dividing d * disc (throws
/// ExcludedPrimeError naming the divisor otherwise).
bool is_fibonacci_wieferich(const QuadraticField& field, uint64_t p);

} // namespace qprat
