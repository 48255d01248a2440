#include "qprat/fibmod.hpp"

#include <numeric>

namespace qprat {

namespace {

// Montgomery arithmetic for odd moduli below 2^62.
struct Mont {
    uint64_t m, neg_inv, one, r2;

    explicit Mont(uint64_t mod) : m(mod) {
        uint64_t inv = mod; // Newton: inverse of m mod 2^64
        for (int i = 0; i < 5; ++i) inv *= 2 - mod * inv;
        neg_inv = ~inv + 1;
        one = (~0ull % mod) + 1; // 2^64 mod m
        if (one == mod) one = 0;
        r2 = mulmod(one, one, mod);
    }
    uint64_t redc(unsigned __int128 t) const {
        uint64_t q = static_cast<uint64_t>(t) * neg_inv;
        uint64_t r = static_cast<uint64_t>((t + static_cast<unsigned __int128>(q) * m) >> 64);
        return r >= m ? r - m : r;
    }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    uint64_t to(uint64_t a) const { return mul(a, r2); }
    uint64_t from(uint64_t a) const { return redc(a); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + m - b; }
};

// Fast doubling on the state (F_k, F_{k+1}), msb to lsb; with b^2 = 1,
//   F_{2k}   = F_k (2 F_{k+1} - a F_k)
//   F_{2k+1} = F_{k+1}^2 - b F_k^2
template <typename Ring>
std::pair<uint64_t, uint64_t> double_and_add(const Ring& ring, uint64_t a, uint64_t one,
                                             int b, uint64_t n) {
    uint64_t x = 0, y = one;
    if (n == 0) return {x, y};
    for (int i = 63 - __builtin_clzll(n); i >= 0; --i) {
        uint64_t ax = ring.mul(a, x);
        uint64_t t = ring.sub(ring.add(y, y), ax);
        uint64_t x2 = ring.mul(x, t);
        uint64_t xx = ring.mul(x, x);
        uint64_t yy = ring.mul(y, y);
        x = x2;
        y = b == 1 ? ring.sub(yy, xx) : ring.add(yy, xx);
        if ((n >> i) & 1) {
            uint64_t next = b == 1 ? ring.sub(ring.mul(a, y), x) : ring.add(ring.mul(a, y), x);
            x = y;
            y = next;
        }
    }
    return {x, y};
}

struct PlainRing {
    uint64_t m;
    uint64_t mul(uint64_t a, uint64_t b) const { return mulmod(a, b, m); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= m ? s - m : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + m - b; }
};

std::pair<uint64_t, uint64_t> fib_state(uint64_t a, int b, uint64_t n, uint64_t m) {
    if (m & 1) {
        Mont ring(m);
        auto [x, y] = double_and_add(ring, ring.to(a), ring.one, b, n);
        return {ring.from(x), ring.from(y)};
    }
    PlainRing ring{m};
    return double_and_add(ring, a % m, 1 % m, b, n);
}

} // namespace

FibPair fib_pair(const FibParams& params, uint64_t n, uint64_t m) {
    auto [x, y] = fib_state(params.a_mod(m), params.b, n, m);
    return {Residue(x, m), Residue(y, m), n};
}

FibPair fib_iter(const FibParams& params, uint64_t n, uint64_t m) {
    if (n > 10'000'000)
        throw ConfigError("fib_iter: index beyond the 10^7 linear-time cap");
    uint64_t a = params.a_mod(m);
    uint64_t neg_b = params.b == 1 ? m - 1 : 1 % m;
    uint64_t f = 0, g = 1 % m; // F_0, F_1
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t next = (mulmod(a, g, m) + mulmod(neg_b, f, m)) % m;
        f = g;
        g = next;
    }
    return {Residue(f, m), Residue(g, m), n};
}

namespace {

void require_prime_ok(const FibParams& params, uint64_t p) {
    if (p == 2) throw ExcludedPrimeError(p, 2, "2 (even prime)");
    if (params.disc_mod(p) == 0)
        throw ExcludedPrimeError(p, p, "the sequence discriminant a^2 - 4b");
}

} // namespace

uint64_t rank_of_apparition(const FibParams& params, uint64_t p, int eps) {
    require_prime_ok(params, p);
    uint64_t n = eps == 1 ? p - 1 : p + 1;
    for (uint64_t div : factorize(n).divisors_sorted()) {
        if (div == 1) continue;
        if (fib_pair(params, div, p).f_n.value == 0) return div;
    }
    throw InconsistencyError("rank_of_apparition: F_{p-(d/p)} not divisible by p");
}

PeriodRecord wall_period(const FibParams& params, uint64_t p, int eps) {
    uint64_t z = rank_of_apparition(params, p, eps);
    // After z steps the companion power is diag(c, b^z / c) with c = F_{z+1},
    // so k = z * lcm(ord(c), ord(b^z / c)).
    uint64_t c = fib_pair(params, z, p).f_n1.value;
    uint64_t bz = (params.b == -1 && z % 2 == 1) ? p - 1 : 1;
    uint64_t other = mulmod(bz, invmod(c, p), p);
    Factorization group = factorize(p - 1);
    uint64_t t = std::lcm(multiplicative_order(Residue(c, p), group),
                          multiplicative_order(Residue(other, p), group));
    uint64_t k = z * t;
    FibPair check = fib_pair(params, k, p);
    if (check.f_n.value != 0 || check.f_n1.value != 1 % p)
        throw InconsistencyError("wall_period: period candidate fails verification");
    return {p, z, k};
}

uint64_t wall_period_square(const FibParams& params, uint64_t p, uint64_t k_p) {
    // the companion power is the identity mod p^2 exactly when the state
    // pair returns to the seed (the leftover corner is forced by det = b^k)
    uint64_t m = p * p;
    FibPair pw = fib_pair(params, k_p, m);
    bool identity = pw.f_n.value == 0 && pw.f_n1.value == 1;
    return identity ? k_p : p * k_p;
}

uint64_t period_linear(const FibParams& params, uint64_t m) {
    if (m < 2) throw ConfigError("period_linear: modulus must be at least 2");
    if (m > 1'000'000) throw ConfigError("period_linear: modulus beyond the 10^6 cap");
    uint64_t a = params.a_mod(m);
    uint64_t neg_b = params.b == 1 ? m - 1 : 1 % m;
    uint64_t f = 0, g = 1 % m;
    uint64_t cap = 8 * m + 16; // k(m) <= 6m when |b| = 1
    for (uint64_t t = 1; t <= cap; ++t) {
        uint64_t next = (mulmod(a, g, m) + mulmod(neg_b, f, m)) % m;
        f = g;
        g = next;
        if (f == 0 && g == 1 % m) return t;
    }
    throw InconsistencyError("period_linear: no period found below the cap");
}

bool is_fibonacci_wieferich(const QuadraticField& field, uint64_t p) {
    if (p == 2) throw ExcludedPrimeError(p, 2, "2 (even prime)");
    if (p >= (1ull << 31))
        throw ConfigError("is_fibonacci_wieferich: primes must be below 2^31 so p^2 fits");
    if (static_cast<uint64_t>(field.d % static_cast<long long>(p)) == 0)
        throw ExcludedPrimeError(p, p, "the field discriminant d");
    FibParams params = FibParams::from_field(field);
    if (params.disc_mod(p) == 0)
        throw ExcludedPrimeError(p, p, "the unit discriminant (eps - eps')^2");
    int eps = kronecker(field.d, static_cast<long long>(p));
    uint64_t n = eps == 1 ? p - 1 : p + 1;
    return fib_pair(params, n, p * p).f_n.value == 0;
}

} // namespace qprat
