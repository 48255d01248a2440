#include "qprat/williams.hpp"

#include "qprat/fibmod.hpp"

namespace qprat {

long long beta(long long d, uint64_t p, long long i) {
    if (d < 2) throw ConfigError("beta: discriminant must be at least 2");
    uint64_t p_inv = invmod(p % static_cast<uint64_t>(d), static_cast<uint64_t>(d));
    long long t = static_cast<long long>(
        mulmod(p_inv, static_cast<uint64_t>(((i % d) + d) % d), static_cast<uint64_t>(d)));
    long long sum = 0;
    for (long long j = 1; j < t; ++j) sum += kronecker(d, j);
    return sum;
}

Residue alpha(long long d, uint64_t p, long long i) {
    uint64_t half = (p - 1) / 2;
    uint64_t sum = 0;
    uint64_t step = static_cast<uint64_t>(d);
    uint64_t start = static_cast<uint64_t>(((i % d) + d) % d);
    if (start == 0) start = step;
    for (uint64_t k = start; k <= half; k += step) sum = (sum + invmod(k, p)) % p;
    return Residue(sum, p);
}

namespace {

// inverses of 1..half mod p: linear-recurrence table when it fits,
// extended-euclid per element beyond that
class InverseRange {
  public:
    InverseRange(uint64_t half, uint64_t p) : p_(p) {
        if (half <= (1u << 22)) {
            table_.resize(half + 1);
            if (half >= 1) table_[1] = 1;
            for (uint64_t k = 2; k <= half; ++k)
                table_[k] = mulmod(p - p / k, table_[p % k], p);
        }
    }
    uint64_t operator()(uint64_t k) const { return table_.empty() ? invmod(k, p_) : table_[k]; }

  private:
    uint64_t p_;
    std::vector<uint64_t> table_;
};

} // namespace

WilliamsReport williams_congruence(const QuadraticField& field, uint64_t p) {
    if (p == 2) throw ExcludedPrimeError(p, 2, "2 (even prime)");
    if (p >= (1ull << 31))
        throw ConfigError("williams_congruence: primes must be below 2^31");
    FibParams params = FibParams::from_field(field);
    if (params.disc_mod(p) == 0)
        throw ExcludedPrimeError(p, p, "the unit discriminant (eps - eps')^2 = d*v^2");

    const long long d = field.d;
    const uint64_t ud = static_cast<uint64_t>(d);
    int eps = kronecker(d, static_cast<long long>(p));

    WilliamsReport rep;
    rep.d = d;
    rep.p = p;
    rep.p_inv = Residue(invmod(p % ud, ud), ud);

    uint64_t F = fib_pair(params, eps == 1 ? p - 1 : p + 1, p * p).f_n.value;
    if (F % p != 0)
        throw InconsistencyError("williams_congruence: F_{p-(d/p)} not divisible by p");
    rep.lhs = Residue(mulmod(field.h % p, (F / p) % p, p), p);

    // beta over one period via prefix sums of the quadratic character
    std::vector<long long> prefix(ud);
    prefix[0] = 0; // prefix[t] = sum_{j=1..t} (d/j)
    for (uint64_t t = 1; t < ud; ++t)
        prefix[t] = prefix[t - 1] + kronecker(d, static_cast<long long>(t));
    rep.beta.resize(ud);
    for (uint64_t i = 1; i <= ud; ++i) {
        uint64_t t = mulmod(rep.p_inv.value, i % ud, ud);
        rep.beta[i - 1] = t == 0 ? 0 : prefix[t - 1];
    }

    std::vector<uint64_t> beta_mod(ud);
    for (uint64_t i = 0; i < ud; ++i)
        beta_mod[i] = static_cast<uint64_t>(((rep.beta[i] % static_cast<long long>(p)) +
                                             static_cast<long long>(p)) %
                                            static_cast<long long>(p));

    uint64_t half = (p - 1) / 2;
    InverseRange inv(half, p);
    std::vector<uint64_t> alpha_acc(ud, 0);
    uint64_t direct = 0; // sum_{i<=half} beta_p(i) / i
    for (uint64_t k = 1; k <= half; ++k) {
        uint64_t idx = k % ud;
        if (idx == 0) idx = ud;
        uint64_t ik = inv(k);
        alpha_acc[idx - 1] = (alpha_acc[idx - 1] + ik) % p;
        direct = (direct + mulmod(beta_mod[idx - 1], ik, p)) % p;
    }
    rep.alpha.resize(ud);
    uint64_t grouped = 0;
    for (uint64_t i = 0; i < ud; ++i) {
        rep.alpha[i] = Residue(alpha_acc[i], p);
        grouped = (grouped + mulmod(beta_mod[i], alpha_acc[i], p)) % p;
    }
    if (grouped != direct)
        throw InconsistencyError("williams_congruence: regrouping identity failed");
    rep.criterion_sum = Residue(grouped, p);

    // -2 (d/p) N^{((d/p)-1)/2} is -2 for split p and 2N for inert p
    uint64_t sign = (eps == 1 || field.norm_b == -1) ? p - 2 : 2;
    uint64_t v_mod = mpz_fdiv_ui(field.unit.v.get_mpz_t(), p);
    rep.rhs = Residue(mulmod(mulmod(sign, grouped, p), invmod(v_mod, p), p), p);

    if (rep.lhs != rep.rhs)
        throw CongruenceViolationError(
            "williams_congruence: lhs " + std::to_string(rep.lhs.value) + " != rhs " +
            std::to_string(rep.rhs.value) + " mod " + std::to_string(p) + " at d=" +
            std::to_string(d));
    return rep;
}

bool williams_criterion(const QuadraticField& field, uint64_t p) {
    return williams_congruence(field, p).criterion_sum.value != 0;
}

bool special_criterion(long long d, uint64_t p) {
    if (p != 3 && p != 5) throw ConfigError("special_criterion: p must be 3 or 5");
    QuadraticField field = field_invariants(d);
    if (mpz_fdiv_ui(field.disc_unit_sq.get_mpz_t(), p) == 0)
        throw ExcludedPrimeError(p, p, "the unit discriminant (eps - eps')^2 = d*v^2");
    if (p == 3) return beta(d, 3, 1) % 3 != 0;
    return (beta(d, 5, 1) + 3 * beta(d, 5, 2)) % 5 != 0;
}

} // namespace qprat
