#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qprat/fibmod.hpp"
#include "qprat/scan.hpp"
#include "qprat/unitresidue.hpp"
#include "qprat/williams.hpp"

using namespace qprat;

namespace {

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        if (!out) throw ConfigError("cannot open output file: " + path);
        out << text;
    }
}

std::string field_json(const QuadraticField& f) {
    std::ostringstream out;
    out << "{\n"
        << "  \"d\": " << f.d << ",\n"
        << "  \"unit_u\": \"" << f.unit.u.get_str() << "\",\n"
        << "  \"unit_v\": \"" << f.unit.v.get_str() << "\",\n"
        << "  \"trace\": \"" << f.trace_a.get_str() << "\",\n"
        << "  \"norm\": " << f.norm_b << ",\n"
        << "  \"unit_disc_sq\": \"" << f.disc_unit_sq.get_str() << "\",\n"
        << "  \"h_narrow\": " << f.h_narrow << ",\n"
        << "  \"h\": " << f.h << ",\n"
        << "  \"cf_period\": " << f.cf_period << "\n"
        << "}\n";
    return out.str();
}

std::string field_pretty(const QuadraticField& f) {
    std::ostringstream out;
    out << "Q(sqrt(" << f.d << "))\n"
        << "  fundamental unit: (" << f.unit.u.get_str() << " + " << f.unit.v.get_str()
        << "*sqrt(" << f.d << "))/2\n"
        << "  trace: " << f.trace_a.get_str() << "\n"
        << "  norm:  " << f.norm_b << "\n"
        << "  (eps - eps')^2 = " << f.disc_unit_sq.get_str() << "\n"
        << "  narrow class number: " << f.h_narrow << "\n"
        << "  class number:        " << f.h << "\n";
    return out.str();
}

QuadraticField make_field(long long d) {
    if (!is_fundamental_discriminant(d))
        throw ConfigError(std::to_string(d) + " is not a fundamental discriminant > 1");
    return field_invariants(d);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-rationality of real quadratic fields via generalized Fibonacci sequences"};
    app.require_subcommand(1);

    long long d = 0;
    uint64_t p = 0, bound = 1'000'000, m = 0, from = 0, to = 0;
    long long dmax = 100;
    unsigned jobs = 0;
    bool cross_validate = false, force = false, json = false;
    std::string format = "human", out_path;
    std::vector<long long> discs;

    auto* c_field = app.add_subcommand("field", "invariants of Q(sqrt(d))");
    c_field->add_option("-d", d, "fundamental discriminant")->required();
    c_field->add_flag("--json", json, "JSON output");

    auto* c_check = app.add_subcommand("check", "decide p-rationality for one (d, p)");
    c_check->add_option("-d", d)->required();
    c_check->add_option("-p", p)->required();
    c_check->add_flag("--cross-validate", cross_validate, "evaluate all four criteria");
    c_check->add_flag("--json", json);

    auto* c_scan = app.add_subcommand("scan", "exceptional primes for one discriminant");
    c_scan->add_option("-d", d)->required();
    c_scan->add_option("--bound", bound, "scan primes in [3, bound]")->required();
    c_scan->add_option("--jobs", jobs, "worker count (default: QPRAT_JOBS or all cores)");
    c_scan->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));
    c_scan->add_option("--out", out_path, "write output to a file");
    c_scan->add_flag("--cross-validate", cross_validate);
    c_scan->add_flag("--force", force, "lift the cross-validate prime cap");

    auto* c_table = app.add_subcommand("table", "exceptional primes for all d <= dmax");
    c_table->add_option("--dmax", dmax)->required();
    c_table->add_option("--bound", bound)->required();
    c_table->add_option("--jobs", jobs);

    auto* c_period = app.add_subcommand("period", "period of the d-sequence mod m");
    c_period->add_option("-d", d)->required();
    c_period->add_option("-m", m, "modulus (<= 10^6 unless prime)")->required();

    auto* c_williams = app.add_subcommand("williams", "character/reciprocal sum report");
    c_williams->add_option("-d", d)->required();
    c_williams->add_option("-p", p)->required();

    auto* c_multi = app.add_subcommand("multi", "primes failing any of several fields");
    c_multi->add_option("--discriminants", discs, "fundamental discriminants")
        ->required()
        ->delimiter(',');
    c_multi->add_option("--from", from)->required();
    c_multi->add_option("--to", to)->required();
    c_multi->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        ScanOptions opt;
        opt.mode = cross_validate ? Mode::CrossValidate : Mode::Fast;
        opt.jobs = jobs;
        opt.force = force;

        if (c_field->parsed()) {
            QuadraticField f = make_field(d);
            std::cout << (json ? field_json(f) : field_pretty(f));
        } else if (c_check->parsed()) {
            QuadraticField f = make_field(d);
            if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
            CriteriaReport rep = decide(f, p, opt.mode);
            std::cout << (json ? report_to_json(rep) : render_report(rep));
        } else if (c_scan->parsed()) {
            ScanResult r = scan(d, bound, opt);
            std::string text = format == "csv"    ? to_csv(r)
                               : format == "json" ? to_json(r)
                                                  : render_human(r);
            write_output(text, out_path);
            std::cerr << "scanned " << r.primes_tested << " primes in "
                      << r.elapsed_ns / 1'000'000 << " ms\n";
        } else if (c_table->parsed()) {
            std::cout << render_table(reproduce_table(dmax, bound, opt));
        } else if (c_period->parsed()) {
            QuadraticField f = make_field(d);
            FibParams params = FibParams::from_field(f);
            uint64_t root = isqrt_u64(m);
            if (is_prime(m) && m > 2 && params.disc_mod(m) != 0) {
                int eps = kronecker(f.d, static_cast<long long>(m));
                PeriodRecord rec = wall_period(params, m, eps);
                std::cout << "k(" << m << ") = " << rec.k << "  (rank z = " << rec.z << ")\n";
            } else if (root * root == m && root > 2 && is_prime(root) &&
                       params.disc_mod(root) != 0) {
                int eps = kronecker(f.d, static_cast<long long>(root));
                uint64_t kp = wall_period(params, root, eps).k;
                std::cout << "k(" << m << ") = " << wall_period_square(params, root, kp) << "\n";
            } else {
                std::cout << "k(" << m << ") = " << period_linear(params, m) << "\n";
            }
        } else if (c_williams->parsed()) {
            QuadraticField f = make_field(d);
            if (!is_prime(p) || p == 2) throw ConfigError("p must be an odd prime");
            WilliamsReport rep = williams_congruence(f, p);
            std::ostringstream out;
            out << "d=" << rep.d << " p=" << rep.p << "\n"
                << "  p' (inverse of p mod d): " << rep.p_inv.value << "\n"
                << "  lhs  h*F_{p-(d/p)}/p: " << rep.lhs.value << "\n"
                << "  rhs: " << rep.rhs.value << "\n"
                << "  criterion sum: " << rep.criterion_sum.value
                << (rep.criterion_sum.value ? "  (p-rational)" : "  (not p-rational)") << "\n";
            out << "  beta:";
            for (long long b : rep.beta) out << ' ' << b;
            out << "\n  alpha:";
            for (const Residue& a : rep.alpha) out << ' ' << a.value;
            out << "\n";
            std::cout << out.str();
        } else if (c_multi->parsed()) {
            for (const MultiRow& row : multi_scan(discs, from, to, opt)) {
                std::cout << row.p << ':';
                for (long long dd : row.failing) std::cout << ' ' << dd;
                std::cout << '\n';
            }
        }
    } catch (const EquivalenceViolationError& e) {
        std::cerr << "equivalence violation: " << e.what() << "\n"
                  << render_report(e.report);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
