#include "qprat/scan.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qprat/arith.hpp"

namespace qprat {

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kChunkSpan = 1u << 18;

struct ChunkOut {
    std::vector<ScanRecord> exceptional;
    std::vector<ScanRecord> excluded;
    uint64_t primes = 0;
};

ScanRecord timed_decide(const QuadraticField& field, uint64_t p, Mode mode) {
    auto t0 = Clock::now();
    CriteriaReport rep = decide(field, p, mode);
    if (mode == Mode::Fast && rep.verdict == Verdict::NotPRational) {
        // positives are rare; always confirm them with the full criteria set
        CriteriaReport confirmed = decide(field, p, Mode::CrossValidate);
        if (confirmed.verdict != rep.verdict) throw EquivalenceViolationError(confirmed);
        rep = confirmed;
    }
    auto t1 = Clock::now();
    return {rep, static_cast<uint64_t>(
                     std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count())};
}

} // namespace

unsigned default_jobs() {
    if (const char* env = std::getenv("QPRAT_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

ScanResult scan(const QuadraticField& field, uint64_t lo, uint64_t hi, const ScanOptions& opt) {
    lo = std::max<uint64_t>(lo, 3);
    ScanResult result;
    result.d = field.d;
    result.lo = lo;
    result.hi = hi;
    if (lo > hi) return result;
    if (opt.mode == Mode::CrossValidate && hi > kCrossValidateCap && !opt.force)
        throw ConfigError("cross-validate scans are capped at p <= " +
                          std::to_string(kCrossValidateCap) + "; pass force to lift");

    size_t nchunks = static_cast<size_t>((hi - lo) / kChunkSpan + 1);
    std::vector<ChunkOut> chunks(nchunks);
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    unsigned jobs = opt.jobs ? opt.jobs : default_jobs();
    jobs = static_cast<unsigned>(std::min<size_t>(jobs, nchunks));

    auto worker = [&] {
        try {
            while (!failed.load(std::memory_order_relaxed)) {
                size_t idx = next.fetch_add(1);
                if (idx >= nchunks) return;
                uint64_t clo = lo + idx * kChunkSpan;
                uint64_t chi = std::min(hi, clo + kChunkSpan - 1);
                ChunkOut& out = chunks[idx];
                PrimeSieve sieve(clo, chi);
                while (auto p = sieve.next()) {
                    ++out.primes;
                    ScanRecord rec = timed_decide(field, *p, opt.mode);
                    if (rec.report.verdict == Verdict::NotPRational)
                        out.exceptional.push_back(std::move(rec));
                    else if (rec.report.verdict == Verdict::Excluded)
                        out.excluded.push_back(std::move(rec));
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    auto t0 = Clock::now();
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    auto t1 = Clock::now();

    for (ChunkOut& c : chunks) {
        result.primes_tested += c.primes;
        for (auto& r : c.exceptional) result.exceptional.push_back(std::move(r));
        for (auto& r : c.excluded) result.excluded.push_back(std::move(r));
    }
    result.elapsed_ns = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return result;
}

ScanResult scan(long long d, uint64_t bound, const ScanOptions& opt) {
    if (!is_fundamental_discriminant(d))
        throw ConfigError("scan: " + std::to_string(d) + " is not a fundamental discriminant");
    QuadraticField field = field_invariants(d);
    return scan(field, 3, bound, opt);
}

std::vector<TableRow> reproduce_table(long long d_max, uint64_t bound, const ScanOptions& opt) {
    std::vector<TableRow> rows;
    for (long long d = 2; d <= d_max; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        ScanResult r = scan(d, bound, opt);
        TableRow row{d, {}};
        for (const ScanRecord& rec : r.exceptional) row.primes.push_back(rec.report.p);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "discriminant | exceptional primes\n";
    out << "-------------+-------------------\n";
    for (const TableRow& row : rows) {
        out << std::setw(12) << row.d << " | ";
        if (row.primes.empty()) {
            out << "(none)";
        } else {
            for (size_t i = 0; i < row.primes.size(); ++i)
                out << (i ? ", " : "") << row.primes[i];
        }
        out << "\n";
    }
    return out.str();
}

std::vector<MultiRow> multi_scan(const std::vector<long long>& ds, uint64_t lo, uint64_t hi,
                                 const ScanOptions& opt) {
    std::map<uint64_t, std::vector<long long>> by_prime;
    for (long long d : ds) {
        if (!is_fundamental_discriminant(d))
            throw ConfigError("multi_scan: " + std::to_string(d) +
                              " is not a fundamental discriminant");
        QuadraticField field = field_invariants(d);
        ScanResult r = scan(field, lo, hi, opt);
        for (const ScanRecord& rec : r.exceptional) by_prime[rec.report.p].push_back(d);
    }
    std::vector<MultiRow> rows;
    for (auto& [p, failing] : by_prime) rows.push_back({p, std::move(failing)});
    return rows;
}

namespace {

const char* kCsvHeader =
    "d,p,verdict,fibonacci_wieferich,wieferich_unit,period_equal,williams_nonzero,"
    "excluded_reasons";

std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "";
    return *b ? "true" : "false";
}

std::string reasons_str(const std::vector<Exclusion>& ex) {
    std::string s;
    for (size_t i = 0; i < ex.size(); ++i) {
        if (i) s += ';';
        s += to_string(ex[i]);
    }
    return s;
}

void csv_row(std::ostringstream& out, const CriteriaReport& rep) {
    out << rep.d << ',' << rep.p << ',' << to_string(rep.verdict) << ','
        << opt_bool(rep.fibonacci_wieferich) << ',' << opt_bool(rep.wieferich_unit) << ','
        << opt_bool(rep.period_equal) << ',' << opt_bool(rep.williams_nonzero) << ','
        << reasons_str(rep.excluded) << '\n';
}

std::optional<bool> parse_opt_bool(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return s == "true";
}

Exclusion parse_exclusion(const std::string& s) {
    if (s == "prime-is-two") return Exclusion::PrimeIsTwo;
    if (s == "divides-unit-discriminant") return Exclusion::DividesUnitDiscriminant;
    if (s == "divides-class-number") return Exclusion::DividesClassNumber;
    if (s == "small-prime") return Exclusion::SmallPrimeNote;
    throw ConfigError("unknown exclusion token: " + s);
}

Verdict parse_verdict(const std::string& s) {
    if (s == "p-rational") return Verdict::PRational;
    if (s == "not-p-rational") return Verdict::NotPRational;
    if (s == "excluded") return Verdict::Excluded;
    throw ConfigError("unknown verdict token: " + s);
}

nlohmann::json report_json(const CriteriaReport& rep) {
    auto opt = [](const std::optional<bool>& b) {
        return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
    };
    nlohmann::json ex = nlohmann::json::array();
    for (Exclusion e : rep.excluded) ex.push_back(to_string(e));
    return {{"d", rep.d},
            {"p", rep.p},
            {"verdict", to_string(rep.verdict)},
            {"fibonacci_wieferich", opt(rep.fibonacci_wieferich)},
            {"wieferich_unit", opt(rep.wieferich_unit)},
            {"period_equal", opt(rep.period_equal)},
            {"williams_nonzero", opt(rep.williams_nonzero)},
            {"excluded", ex}};
}

} // namespace

std::string to_csv(const ScanResult& r) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ScanRecord& rec : r.exceptional) csv_row(out, rec.report);
    for (const ScanRecord& rec : r.excluded) csv_row(out, rec.report);
    return out.str();
}

ScanResult parse_csv(std::istream& in) {
    ScanResult r;
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ConfigError("parse_csv: missing or unexpected header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                cols.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        cols.push_back(std::move(cur));
        if (cols.size() != 8) throw ConfigError("parse_csv: bad column count");
        CriteriaReport rep;
        rep.d = std::stoll(cols[0]);
        rep.p = std::stoull(cols[1]);
        rep.verdict = parse_verdict(cols[2]);
        rep.fibonacci_wieferich = parse_opt_bool(cols[3]);
        rep.wieferich_unit = parse_opt_bool(cols[4]);
        rep.period_equal = parse_opt_bool(cols[5]);
        rep.williams_nonzero = parse_opt_bool(cols[6]);
        std::string tok;
        for (char ch : cols[7]) {
            if (ch == ';') {
                rep.excluded.push_back(parse_exclusion(tok));
                tok.clear();
            } else {
                tok += ch;
            }
        }
        if (!tok.empty()) rep.excluded.push_back(parse_exclusion(tok));
        ScanRecord rec{std::move(rep), 0};
        if (rec.report.verdict == Verdict::Excluded)
            r.excluded.push_back(std::move(rec));
        else
            r.exceptional.push_back(std::move(rec));
    }
    return r;
}

std::string to_json(const ScanResult& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["range"] = {r.lo, r.hi};
    j["exceptional"] = nlohmann::json::array();
    for (const ScanRecord& rec : r.exceptional) j["exceptional"].push_back(report_json(rec.report));
    j["excluded"] = nlohmann::json::array();
    for (const ScanRecord& rec : r.excluded) j["excluded"].push_back(report_json(rec.report));
    return j.dump(2) + "\n";
}

std::string render_human(const ScanResult& r) {
    std::ostringstream out;
    out << "d=" << r.d << " primes in [" << r.lo << ", " << r.hi << "]\n";
    out << "exceptional (not-p-rational):";
    if (r.exceptional.empty()) out << " (none)";
    for (const ScanRecord& rec : r.exceptional) out << ' ' << rec.report.p;
    out << '\n';
    if (!r.excluded.empty()) {
        out << "excluded:";
        for (const ScanRecord& rec : r.excluded)
            out << ' ' << rec.report.p << " [" << reasons_str(rec.report.excluded) << ']';
        out << '\n';
    }
    return out.str();
}

std::string report_to_json(const CriteriaReport& rep) { return report_json(rep).dump(2) + "\n"; }

std::string render_report(const CriteriaReport& rep) {
    std::ostringstream out;
    out << "d=" << rep.d << " p=" << rep.p << " verdict=" << to_string(rep.verdict) << '\n';
    auto line = [&](const char* name, const std::optional<bool>& b) {
        out << "  " << name << ": " << (b ? (*b ? "true" : "false") : "-") << '\n';
    };
    line("fibonacci_wieferich", rep.fibonacci_wieferich);
    line("wieferich_unit", rep.wieferich_unit);
    line("period_equal (k(p)=k(p^2))", rep.period_equal);
    line("williams_nonzero", rep.williams_nonzero);
    if (!rep.excluded.empty()) out << "  exclusions: " << reasons_str(rep.excluded) << '\n';
    return out.str();
}

} // namespace qprat
