#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qprat/errors.hpp"
#include "qprat/quadfield.hpp"

namespace qprat {

/// Hypothesis failures for the criteria at a given (d, p).
/// DividesUnitDiscriminant subsumes p | d since (eps - eps')^2 = d*v^2;
/// when p divides only v (not d, not h) the unit-basis criterion is still
/// valid and decides the verdict, while the sequence-based criteria are
/// skipped. SmallPrimeNote marks p = 3, where the criteria are evaluated
/// anyway and cross-checked empirically.
enum class Exclusion {
    PrimeIsTwo,
    DividesUnitDiscriminant,
    DividesClassNumber,
    SmallPrimeNote,
};

std::string to_string(Exclusion e);

enum class Verdict { PRational, NotPRational, Excluded };

std::string to_string(Verdict v);

enum class Mode { Fast, CrossValidate };

/// Per-prime record of the criteria. All present criteria agree whenever the
/// verdict is not Excluded, with verdict PRational exactly when the present
/// Wieferich-style tests are negative.
struct CriteriaReport {
    long long d = 0;
    uint64_t p = 0;
    std::vector<Exclusion> excluded;
    std::optional<bool> fibonacci_wieferich; // F_{p-(d/p)} = 0 mod p^2
    std::optional<bool> wieferich_unit;      // eps^{p^r-1} = 1 mod p^2
    std::optional<bool> period_equal;        // k(p) = k(p^2)
    std::optional<bool> williams_nonzero;    // sum beta*alpha != 0 mod p
    Verdict verdict = Verdict::Excluded;

    bool has(Exclusion e) const;
    bool operator==(const CriteriaReport& o) const = default;
};

/// The CrossValidate mode found the provably equivalent criteria in
/// disagreement; carries the full report. This is the artifact's most
/// important failure signal.
struct EquivalenceViolationError : Error {
    CriteriaReport report;
    explicit EquivalenceViolationError(CriteriaReport rep)
        : Error("criteria disagree at d=" + std::to_string(rep.d) +
                ", p=" + std::to_string(rep.p)),
          report(std::move(rep)) {}
};

/// All applicable exclusions; an empty list means all four criteria are valid
/// and provably equivalent at (d, p).
std::vector<Exclusion> exclusions(const QuadraticField& field, uint64_t p);

/// Fast mode evaluates the cheapest valid Wieferich-style test; CrossValidate
/// evaluates every valid criterion and throws EquivalenceViolationError on
/// disagreement. Hard exclusions (p = 2, p | d, p | h_d) yield Excluded with
/// no criteria evaluated.
CriteriaReport decide(const QuadraticField& field, uint64_t p, Mode mode);

enum class SimultaneousVerdict { AllPRational, NotAll, Indeterminate };

/// Conjunction over the supplied fields: NotAll as soon as one field is not
/// p-rational; Indeterminate when no field fails but some are Excluded.
SimultaneousVerdict simultaneous(const std::vector<QuadraticField>& fields, uint64_t p);

} // namespace qprat
