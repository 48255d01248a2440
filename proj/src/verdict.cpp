#include "qprat/verdict.hpp"

#include <algorithm>

#include "qprat/fibmod.hpp"
#include "qprat/unitresidue.hpp"
#include "qprat/williams.hpp"

namespace qprat {

std::string to_string(Exclusion e) {
    switch (e) {
        case Exclusion::PrimeIsTwo: return "prime-is-two";
        case Exclusion::DividesUnitDiscriminant: return "divides-unit-discriminant";
        case Exclusion::DividesClassNumber: return "divides-class-number";
        case Exclusion::SmallPrimeNote: return "small-prime";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PRational: return "p-rational";
        case Verdict::NotPRational: return "not-p-rational";
        case Verdict::Excluded: return "excluded";
    }
    return "?";
}

bool CriteriaReport::has(Exclusion e) const {
    return std::find(excluded.begin(), excluded.end(), e) != excluded.end();
}

std::vector<Exclusion> exclusions(const QuadraticField& field, uint64_t p) {
    std::vector<Exclusion> out;
    if (p == 2) out.push_back(Exclusion::PrimeIsTwo);
    if (p != 2) {
        if (mpz_fdiv_ui(field.disc_unit_sq.get_mpz_t(), p) == 0)
            out.push_back(Exclusion::DividesUnitDiscriminant);
        if (field.h % p == 0) out.push_back(Exclusion::DividesClassNumber);
        if (p == 3) out.push_back(Exclusion::SmallPrimeNote);
    }
    return out;
}

CriteriaReport decide(const QuadraticField& field, uint64_t p, Mode mode) {
    if (p >= (1ull << 31)) throw ConfigError("decide: primes must be below 2^31");
    CriteriaReport rep;
    rep.d = field.d;
    rep.p = p;
    rep.excluded = exclusions(field, p);

    bool ramified = p != 2 && field.d % static_cast<long long>(p) == 0;
    if (rep.has(Exclusion::PrimeIsTwo) || ramified || rep.has(Exclusion::DividesClassNumber)) {
        rep.verdict = Verdict::Excluded;
        return rep;
    }

    if (rep.has(Exclusion::DividesUnitDiscriminant)) {
        // p divides v only: the sequence-based criteria lose their hypothesis,
        // but the unit-basis test still decides p-rationality (it needs only
        // p coprime to d*h).
        rep.wieferich_unit = is_wieferich_base_unit(field, p).is_wieferich;
        rep.verdict = *rep.wieferich_unit ? Verdict::NotPRational : Verdict::PRational;
        return rep;
    }

    rep.fibonacci_wieferich = is_fibonacci_wieferich(field, p);
    if (mode == Mode::CrossValidate) {
        rep.wieferich_unit = is_wieferich_base_unit(field, p).is_wieferich;
        FibParams params = FibParams::from_field(field);
        int eps = kronecker(field.d, static_cast<long long>(p));
        PeriodRecord period = wall_period(params, p, eps);
        rep.period_equal = wall_period_square(params, p, period.k) == period.k;
        rep.williams_nonzero = williams_criterion(field, p);
        bool fw = *rep.fibonacci_wieferich;
        if (*rep.wieferich_unit != fw || *rep.period_equal != fw ||
            *rep.williams_nonzero != !fw)
            throw EquivalenceViolationError(rep);
    }
    rep.verdict = *rep.fibonacci_wieferich ? Verdict::NotPRational : Verdict::PRational;
    return rep;
}

SimultaneousVerdict simultaneous(const std::vector<QuadraticField>& fields, uint64_t p) {
    bool any_excluded = false;
    for (const QuadraticField& f : fields) {
        CriteriaReport rep = decide(f, p, Mode::Fast);
        if (rep.verdict == Verdict::NotPRational) return SimultaneousVerdict::NotAll;
        if (rep.verdict == Verdict::Excluded) any_excluded = true;
    }
    return any_excluded ? SimultaneousVerdict::Indeterminate : SimultaneousVerdict::AllPRational;
}

} // namespace qprat
