#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qprat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested inverse of a residue that shares a factor with the modulus.
struct NotInvertibleError : Error {
    uint64_t gcd;
    NotInvertibleError(uint64_t value, uint64_t modulus, uint64_t g)
        : Error("residue " + std::to_string(value) + " mod " + std::to_string(modulus) +
                " is not invertible (gcd " + std::to_string(g) + ")"),
          gcd(g) {}
};

/// Supplied group-exponent bound does not annihilate the element.
struct OrderBoundError : Error {
    using Error::Error;
};

/// A prime excluded by the hypotheses of the operation; carries the offending divisor.
struct ExcludedPrimeError : Error {
    uint64_t divisor;
    ExcludedPrimeError(uint64_t p, uint64_t div, const std::string& what_of)
        : Error("prime " + std::to_string(p) + " divides " + what_of + " (divisor " +
                std::to_string(div) + ")"),
          divisor(div) {}
};

/// An internal identity that must hold by theory failed; always a bug signal.
struct InconsistencyError : Error {
    using Error::Error;
};

/// The two sides of the unit-coordinate congruence disagree.
struct CongruenceViolationError : Error {
    using Error::Error;
};

/// Invalid scan/CLI configuration, detected before any work starts.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace qprat
