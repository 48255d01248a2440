#include "qprat/unitresidue.hpp"

namespace qprat {

int residue_degree(long long d, uint64_t p) {
    if (p == 2) throw ExcludedPrimeError(p, 2, "2 (even prime)");
    int chi = kronecker(d, static_cast<long long>(p));
    if (chi == 0) throw ExcludedPrimeError(p, p, "the field discriminant d (ramified)");
    return chi == 1 ? 1 : 2;
}

RingElem unit_pow(const QuadraticField& field, uint64_t e, uint64_t p) {
    if (p == 2) throw ExcludedPrimeError(p, 2, "2 (even prime)");
    if (p >= (1ull << 31))
        throw ConfigError("unit_pow: primes must be below 2^31 so p^2 fits");
    uint64_t m = p * p;
    RingElem eps{mpz_fdiv_ui(field.unit.u.get_mpz_t(), m), mpz_fdiv_ui(field.unit.v.get_mpz_t(), m),
                 m, mpz_fdiv_ui(mpz_class(static_cast<long>(field.d)).get_mpz_t(), m)};
    return eps.pow(e);
}

namespace {

struct QuotientClass {
    uint64_t u, v; // coordinates of (eps^{p^r-1} - 1)/p mod p
    int r;
};

QuotientClass quotient_class(const QuadraticField& field, uint64_t p) {
    int r = residue_degree(field.d, p);
    uint64_t exponent = r == 1 ? p - 1 : p * p - 1;
    RingElem w = unit_pow(field, exponent, p);
    uint64_t m = p * p;
    uint64_t wu = (w.u + m - 2 % m) % m;
    uint64_t wv = w.v;
    if (wu % p != 0 || wv % p != 0)
        throw InconsistencyError("fermat_quotient: eps^{p^r-1} is not 1 mod p");
    return {(wu / p) % p, (wv / p) % p, r};
}

} // namespace

Residue fermat_quotient(const QuadraticField& field, uint64_t p) {
    QuotientClass q = quotient_class(field, p);
    uint64_t inv2 = (p + 1) / 2;
    uint64_t scalar = q.u != 0 ? mulmod(q.u, inv2, p) : mulmod(q.v, inv2, p);
    return Residue(scalar, p);
}

WieferichReport is_wieferich_base_unit(const QuadraticField& field, uint64_t p) {
    QuotientClass q = quotient_class(field, p);
    uint64_t inv2 = (p + 1) / 2;
    uint64_t scalar = q.u != 0 ? mulmod(q.u, inv2, p) : mulmod(q.v, inv2, p);
    WieferichReport rep;
    rep.p = p;
    rep.r = q.r;
    rep.fermat_quotient = Residue(scalar, p);
    rep.is_wieferich = (q.u == 0 && q.v == 0);
    return rep;
}

} // namespace qprat
