#include "qprat/quadfield.hpp"

#include <array>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "qprat/arith.hpp"

namespace qprat {

bool is_fundamental_discriminant(long long d) {
    if (d <= 1) return false;
    auto squarefree = [](long long n) {
        for (auto [p, e] : factorize(static_cast<uint64_t>(n)).factors)
            if (e > 1) return false;
        return true;
    };
    if (d % 4 == 1) return squarefree(d);
    if (d % 4 == 0) {
        long long m = d / 4;
        return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
    }
    return false;
}

namespace {

struct CfUnit {
    mpz_class u, v;
    unsigned period;
};

// One loop around the purely periodic expansion of w = (b0 + sqrt(d))/2,
// b0 the largest integer <= sqrt(d) with b0 = d (mod 2). The lattice
// Z + Z*w is the maximal order, so the loop matrix's eigenvalue
// q_{l-1}*w + q_{l-2} is exactly the fundamental unit.
CfUnit cf_fundamental_unit(long long d) {
    if (!is_fundamental_discriminant(d))
        throw ConfigError("fundamental_unit: " + std::to_string(d) +
                          " is not a fundamental discriminant > 1");
    long long s = static_cast<long long>(isqrt_u64(static_cast<uint64_t>(d)));
    long long b0 = ((s - d) % 2 == 0) ? s : s - 1;
    long long P = b0, Q = 2;
    mpz_class q_prev = 1, q_cur = 0; // q_{-2}, q_{-1}
    unsigned ell = 0;
    do {
        long long a = (P + s) / Q;
        mpz_class q_next = static_cast<long>(a) * q_cur + q_prev;
        q_prev = q_cur;
        q_cur = q_next;
        ++ell;
        P = a * Q - P;
        Q = (d - P * P) / Q;
    } while (P != b0 || Q != 2);
    CfUnit r;
    r.v = q_cur;
    r.u = static_cast<long>(b0) * q_cur + 2 * q_prev;
    r.period = ell;
    return r;
}

} // namespace

QuadraticInteger fundamental_unit(long long d) {
    CfUnit r = cf_fundamental_unit(d);
    return {std::move(r.u), std::move(r.v), d};
}

namespace {

using Form = std::array<long long, 3>; // (a, b, c), b^2 - 4ac = d

// Reduction neighbor: (a, b, c) -> (c, r, (r^2 - d)/(4c)) with r = -b
// (mod 2|c|) in the interval (sqrt(d) - 2|c|, sqrt(d)).
Form rho_step(const Form& f, long long d, long long s) {
    long long c = f[2];
    long long two_ac = 2 * (c < 0 ? -c : c);
    long long r = s - ((s + f[1]) % two_ac + two_ac) % two_ac;
    return {c, r, (r * r - d) / (4 * c)};
}

std::vector<Form> reduced_forms(long long d, long long s) {
    std::vector<Form> forms;
    for (long long b = 1; b <= s; ++b) {
        if ((d - b) % 2 != 0) continue;
        long long m = (d - b * b) / 4;
        if (m <= 0) continue;
        for (auto g : factorize(static_cast<uint64_t>(m)).divisors_sorted()) {
            long long aa = static_cast<long long>(g);
            // reduced iff |sqrt(d) - 2|a|| < b, with sqrt(d) irrational
            if ((2 * aa - b) * (2 * aa - b) < d && (2 * aa + b) * (2 * aa + b) > d) {
                long long c = m / aa;
                long long gg = std::gcd(std::gcd(aa, b), c);
                if (gg == 1) {
                    forms.push_back({aa, b, -c});
                    forms.push_back({-aa, b, c});
                }
            }
        }
    }
    return forms;
}

} // namespace

unsigned class_number_narrow(long long d) {
    if (!is_fundamental_discriminant(d))
        throw ConfigError("class_number_narrow: " + std::to_string(d) +
                          " is not a fundamental discriminant > 1");
    long long s = static_cast<long long>(isqrt_u64(static_cast<uint64_t>(d)));
    std::vector<Form> forms = reduced_forms(d, s);
    std::map<Form, bool> visited;
    for (const Form& f : forms) visited[f] = false;
    unsigned cycles = 0;
    for (const Form& f : forms) {
        if (visited[f]) continue;
        ++cycles;
        Form g = f;
        while (!visited[g]) {
            visited[g] = true;
            g = rho_step(g, d, s);
            if (!visited.count(g))
                throw InconsistencyError("class_number_narrow: reduction left the reduced set");
        }
    }
    return cycles;
}

QuadraticField field_invariants(long long d) {
    CfUnit cf = cf_fundamental_unit(d);
    QuadraticField f;
    f.d = d;
    f.unit = {cf.u, cf.v, d};
    f.trace_a = cf.u;
    f.norm_b = (cf.period % 2 == 1) ? -1 : 1;
    f.disc_unit_sq = mpz_class(static_cast<long>(d)) * cf.v * cf.v;
    f.cf_period = cf.period;
    if (f.unit.norm() != f.norm_b)
        throw InconsistencyError("field_invariants: unit norm does not match period parity");
    if (mpz_class((f.unit.u - f.unit.v * static_cast<long>(d)) % 2) != 0)
        throw InconsistencyError("field_invariants: unit is not in the maximal order");
    f.h_narrow = class_number_narrow(d);
    if (f.norm_b == -1) {
        f.h = f.h_narrow;
    } else {
        if (f.h_narrow % 2 != 0)
            throw InconsistencyError("field_invariants: narrow class number must be even "
                                     "when the unit has norm +1");
        f.h = f.h_narrow / 2;
    }
    return f;
}

} // namespace qprat
