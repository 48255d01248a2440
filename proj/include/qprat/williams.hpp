#pragma once

#include <cstdint>
#include <vector>

#include "qprat/arith.hpp"
#include "qprat/quadfield.hpp"

namespace qprat {

/// Both sides of the unit-coordinate congruence
///   h_d * F_{p-(d/p)} / p  =  -2 (d/p) N^{((d/p)-1)/2} / v * sum beta_p(i)/i  (mod p)
/// together with the character sums beta_p(i), the reciprocal sums
/// alpha_p(i), and the criterion sum  sum_{i=1..d} beta_p(i) alpha_p(i).
/// The 1/v factor (v the sqrt(d)-coordinate of the fundamental unit) is
/// required for the equality; it never affects the vanishing criterion since
/// p does not divide v here.
struct WilliamsReport {
    long long d = 0;
    uint64_t p = 0;
    Residue p_inv;                    // inverse of p mod d
    std::vector<long long> beta;      // beta[i-1] = beta_p(i), i = 1..d
    std::vector<Residue> alpha;       // alpha[i-1] = alpha_p(i) mod p
    Residue lhs;                      // h_d * F_{p-(d/p)}/p mod p
    Residue rhs;
    Residue criterion_sum;            // sum beta_p(i) alpha_p(i) mod p
};

/// beta_p(i) = sum_{j=1}^{{p' i} - 1} (d/j), with {.} the least nonnegative
/// residue mod d and the empty sum (including {p' i} in {0, 1}) equal to 0.
long long beta(long long d, uint64_t p, long long i);

/// alpha_p(i) = sum of 1/k mod p over 1 <= k <= (p-1)/2 with k = i (mod d).
Residue alpha(long long d, uint64_t p, long long i);

/// Evaluates both sides, asserts the congruence and the regrouping identity
///   sum_{i=1..d} beta_p(i) alpha_p(i) = sum_{i=1..(p-1)/2} beta_p(i)/i.
/// Requires p odd not dividing the unit discriminant d*v^2 (which also
/// guarantees the exact division of F_{p-(d/p)} by p).
WilliamsReport williams_congruence(const QuadraticField& field, uint64_t p);

/// p-rationality criterion: criterion_sum != 0 (mod p).
bool williams_criterion(const QuadraticField& field, uint64_t p);

/// The p = 3, 5 shortcuts: beta_3(1) != 0 (mod 3), respectively
/// beta_5(1) + 3 beta_5(2) != 0 (mod 5). Agrees with williams_criterion
/// wherever both are defined.
bool special_criterion(long long d, uint64_t p);

} // namespace qprat
