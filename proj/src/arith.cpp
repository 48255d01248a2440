#include "qprat/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace qprat {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    // extended euclid on signed accumulators; m < 2^63
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw NotInvertibleError(a % m, m, static_cast<uint64_t>(r));
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

int kronecker(long long a, long long n) {
    if (n == 0) throw std::invalid_argument("kronecker: lower argument must be nonzero");
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -1;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int twos = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++twos;
        }
        if (twos % 2 == 1) {
            long long am8 = ((a % 8) + 8) % 8;
            if (am8 == 3 || am8 == 5) sign = -sign;
        }
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

uint64_t Factorization::value() const {
    uint64_t v = 1;
    for (auto [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

std::vector<uint64_t> Factorization::divisors_sorted() const {
    std::vector<uint64_t> divs{1};
    for (auto [p, e] : factors) {
        size_t n = divs.size();
        uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < n; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // deterministic Miller-Rabin bases for n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> table = [] {
        constexpr uint32_t limit = 1'000'000;
        std::vector<uint8_t> sieve(limit + 1, 1);
        sieve[0] = sieve[1] = 0;
        for (uint32_t i = 2; static_cast<uint64_t>(i) * i <= limit; ++i)
            if (sieve[i])
                for (uint32_t j = i * i; j <= limit; j += i) sieve[j] = 0;
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= limit; ++i)
            if (sieve[i]) out.push_back(i);
        return out;
    }();
    return table;
}

uint64_t brent_rho(uint64_t n, uint64_t seed) {
    // Brent's improvement of Pollard's rho; fixed seed keeps runs reproducible.
    if (n % 2 == 0) return 2;
    uint64_t y = seed % n, c = 1 + seed % (n - 1), m = 128;
    uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = f(y);
        for (uint64_t k = 0; k < r && g == 1; k += m) {
            ys = y;
            for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = n;
    for (uint64_t seed = 2; d == n; ++seed) d = brent_rho(n, seed);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(uint64_t n) {
    Factorization f;
    if (n <= 1) return f;
    std::vector<uint64_t> primes;
    for (uint32_t p : small_primes()) {
        if (static_cast<uint64_t>(p) * p > n) break;
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

uint64_t multiplicative_order(const Residue& a, const Factorization& order_bound) {
    uint64_t bound = order_bound.value();
    if (a.pow(bound).value != 1 % a.modulus)
        throw OrderBoundError("multiplicative_order: element does not vanish at the supplied bound");
    uint64_t t = bound;
    for (auto [q, e] : order_bound.factors) {
        for (unsigned i = 0; i < e && t % q == 0; ++i) {
            if (a.pow(t / q).value == 1)
                t /= q;
            else
                break;
        }
    }
    return t;
}

PrimeSieve::PrimeSieve(uint64_t lo, uint64_t hi) : lo_(std::max<uint64_t>(lo, 2)), hi_(hi) {
    segment_base_ = lo_;
    if (lo_ <= hi_) {
        uint64_t root = isqrt_u64(hi_);
        std::vector<uint8_t> sieve(root + 1, 1);
        for (uint64_t i = 2; i * i <= root; ++i)
            if (sieve[i])
                for (uint64_t j = i * i; j <= root; j += i) sieve[j] = 0;
        for (uint64_t i = 2; i <= root; ++i)
            if (sieve[i]) base_primes_.push_back(static_cast<uint32_t>(i));
        fill_segment();
    }
}

void PrimeSieve::fill_segment() {
    uint64_t span = std::min(kSegmentSpan, hi_ - segment_base_ + 1);
    flags_.assign(span, 1);
    for (uint32_t p : base_primes_) {
        uint64_t p64 = p;
        uint64_t start = std::max(p64 * p64, (segment_base_ + p64 - 1) / p64 * p64);
        for (uint64_t j = start; j < segment_base_ + span; j += p64) flags_[j - segment_base_] = 0;
    }
    cursor_ = 0;
}

std::optional<uint64_t> PrimeSieve::next() {
    while (segment_base_ <= hi_ && lo_ <= hi_) {
        while (cursor_ < flags_.size()) {
            size_t i = cursor_++;
            if (flags_[i]) return segment_base_ + i;
        }
        if (segment_base_ + flags_.size() > hi_) break;
        segment_base_ += flags_.size();
        fill_segment();
    }
    return std::nullopt;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (lo > hi) return out;
    PrimeSieve sieve(lo, hi);
    while (auto p = sieve.next()) out.push_back(*p);
    return out;
}

} // namespace qprat
