#pragma once

#include <cstdint>

#include "qprat/arith.hpp"
#include "qprat/quadfield.hpp"

namespace qprat {

/// The class of (u + v*sqrt(d))/2 in O_d / m O_d for odd m (2 must be
/// invertible). Multiplication is exact:
///   (u1,v1)*(u2,v2) = ((u1 u2 + v1 v2 d)/2, (u1 v2 + u2 v1)/2) mod m.
struct RingElem {
    uint64_t u = 0;
    uint64_t v = 0;
    uint64_t modulus = 0;
    uint64_t d_mod = 0;

    static RingElem one(uint64_t m, uint64_t d_mod) { return {2 % m, 0, m, d_mod}; }

    RingElem mul(const RingElem& o) const {
        uint64_t inv2 = (modulus + 1) / 2; // modulus odd
        uint64_t nu = (mulmod(u, o.u, modulus) + mulmod(mulmod(v, o.v, modulus), d_mod, modulus)) % modulus;
        uint64_t nv = (mulmod(u, o.v, modulus) + mulmod(o.u, v, modulus)) % modulus;
        return {mulmod(nu, inv2, modulus), mulmod(nv, inv2, modulus), modulus, d_mod};
    }

    RingElem pow(uint64_t e) const {
        RingElem r = one(modulus, d_mod);
        RingElem base = *this;
        while (e) {
            if (e & 1) r = r.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return r;
    }

    RingElem conjugate() const { return {u, (modulus - v) % modulus, modulus, d_mod}; }

    /// (u^2 - d v^2)/4 mod modulus
    uint64_t norm() const {
        uint64_t inv4 = mulmod((modulus + 1) / 2, (modulus + 1) / 2, modulus);
        uint64_t vvd = mulmod(mulmod(v, v, modulus), d_mod, modulus);
        uint64_t t = (mulmod(u, u, modulus) + modulus - vvd) % modulus;
        return mulmod(t, inv4, modulus);
    }

    bool is_one() const { return u == 2 % modulus && v == 0; }
    bool operator==(const RingElem& o) const = default;
};

/// 1 if p splits ((d/p) = 1), 2 if p is inert; ramified p (p | d) and p = 2
/// are rejected.
int residue_degree(long long d, uint64_t p);

/// eps^e in O_d / p^2 by square-and-multiply on the reduced coordinates.
RingElem unit_pow(const QuadraticField& field, uint64_t e, uint64_t p);

struct WieferichReport {
    uint64_t p = 0;
    int r = 0;                   // residue degree
    Residue fermat_quotient;     // scalar display of (eps^{p^r-1} - 1)/p mod p
    bool is_wieferich = false;   // the full quotient class vanishes
};

/// The quotient class w' = (eps^{p^r - 1} - 1)/p mod p collapses to the
/// reported scalar: the rational coordinate of w', or its sqrt(d) coordinate
/// when the rational part vanishes, so the scalar is zero exactly when the
/// class is. Asserts eps^{p^r-1} = 1 (mod p) first; failure of that is a bug,
/// never valid input.
Residue fermat_quotient(const QuadraticField& field, uint64_t p);

/// Wieferich-of-basis-eps test: eps^{p^r - 1} = 1 (mod p^2). Encodes the
/// p-adic regulator criterion without evaluating any logarithm.
WieferichReport is_wieferich_base_unit(const QuadraticField& field, uint64_t p);

} // namespace qprat
