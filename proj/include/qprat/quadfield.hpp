#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "qprat/errors.hpp"

namespace qprat {

/// An element (u + v*sqrt(d))/2 of the maximal order of Q(sqrt(d)).
/// Membership requires u = v*d (mod 2); coordinates are exact integers of
/// arbitrary precision (unit coordinates grow exponentially in sqrt(d)).
struct QuadraticInteger {
    mpz_class u;
    mpz_class v;
    long long d = 0;

    mpz_class norm() const { return (u * u - mpz_class(static_cast<long>(d)) * v * v) / 4; }
    mpz_class trace() const { return u; }
    QuadraticInteger conjugate() const { return {u, -v, d}; }
};

/// Invariants of the real quadratic field Q(sqrt(d)) for a fundamental
/// discriminant d: fundamental unit, its trace and norm, the square of the
/// unit difference (eps - eps')^2 = d*v^2, and the class numbers.
struct QuadraticField {
    long long d = 0;
    QuadraticInteger unit;      // eps > 1, |N(eps)| = 1
    mpz_class trace_a;          // eps + eps'
    int norm_b = 0;             // N(eps), +1 or -1
    mpz_class disc_unit_sq;     // (eps - eps')^2 = d * v^2
    unsigned h_narrow = 0;      // cycles of reduced indefinite forms of discriminant d
    unsigned h = 0;             // h_narrow when norm_b = -1, h_narrow/2 otherwise
    unsigned cf_period = 0;     // continued-fraction period length (odd iff norm_b = -1)
};

/// True iff d > 1 and d = 1 (mod 4) squarefree, or d = 4m with m squarefree
/// and m = 2 or 3 (mod 4).
bool is_fundamental_discriminant(long long d);

/// Fundamental unit eps > 1 of the maximal order, by the continued-fraction
/// expansion of (b0 + sqrt(d))/2 with b0 the largest integer of the parity of
/// d not exceeding sqrt(d).
QuadraticInteger fundamental_unit(long long d);

/// Narrow class number: the number of cycles of reduced primitive indefinite
/// binary quadratic forms of discriminant d under the reduction-neighbor step.
unsigned class_number_narrow(long long d);

QuadraticField field_invariants(long long d);

} // namespace qprat
