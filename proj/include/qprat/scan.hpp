#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qprat/verdict.hpp"

namespace qprat {

struct ScanRecord {
    CriteriaReport report;
    uint64_t elapsed_ns = 0;
};

struct ScanOptions {
    Mode mode = Mode::Fast;
    unsigned jobs = 0; // 0: QPRAT_JOBS env var, else hardware concurrency
    bool force = false; // lift the CrossValidate prime cap
};

/// CrossValidate scans are capped here unless forced; exact period
/// computation factors p^2-1 per prime, which Fast mode never needs.
inline constexpr uint64_t kCrossValidateCap = 100'000;

struct ScanResult {
    long long d = 0;
    uint64_t lo = 0;
    uint64_t hi = 0;
    std::vector<ScanRecord> exceptional; // not-p-rational, ascending p
    std::vector<ScanRecord> excluded;    // excluded, ascending p; never dropped
    uint64_t primes_tested = 0;
    uint64_t elapsed_ns = 0;
};

/// Scan the primes of [lo, hi] (clamped to start at 3) over a fixed chunk
/// partition; workers claim chunks, results merge in chunk order, so output
/// is identical for any worker count. Every Fast-mode positive is re-checked
/// in CrossValidate mode before emission.
ScanResult scan(const QuadraticField& field, uint64_t lo, uint64_t hi,
                const ScanOptions& opt = {});

/// Scan [3, bound] for Q(sqrt(d)); rejects non-fundamental d before any work.
ScanResult scan(long long d, uint64_t bound, const ScanOptions& opt = {});

struct TableRow {
    long long d = 0;
    std::vector<uint64_t> primes;
};

/// One scan per fundamental discriminant <= d_max.
std::vector<TableRow> reproduce_table(long long d_max, uint64_t bound,
                                      const ScanOptions& opt = {});
std::string render_table(const std::vector<TableRow>& rows);

struct MultiRow {
    uint64_t p = 0;
    std::vector<long long> failing; // fields not p-rational at p
};

/// For each prime in [lo, hi], the subset of the supplied discriminants whose
/// field fails p-rationality; empty rows omitted.
std::vector<MultiRow> multi_scan(const std::vector<long long>& ds, uint64_t lo, uint64_t hi,
                                 const ScanOptions& opt = {});

// Emission. Timings are kept out of all three formats so scan output is
// byte-identical across worker counts.
std::string to_csv(const ScanResult& r);
ScanResult parse_csv(std::istream& in);
std::string to_json(const ScanResult& r);
std::string render_human(const ScanResult& r);
std::string report_to_json(const CriteriaReport& rep);
std::string render_report(const CriteriaReport& rep);

unsigned default_jobs();

} // namespace qprat
