#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "report.hpp"
#include "zeta2k/bernoulli.hpp"
#include "zeta2k/fourier.hpp"
#include "zeta2k/identities.hpp"
#include "zeta2k/parseval.hpp"
#include "zeta2k/zeta.hpp"

namespace {

using zeta2k::cli::ReportRow;
using zeta2k::cli::RunReport;

constexpr const char* kVersion = "zeta2k 1.0.0";

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ReportRow check_row(const zeta2k::IdentityCheckResult& c) {
    return {c.name, c.params, c.lhs.to_string(), c.rhs.to_string(), "", c.pass ? 1 : 0};
}

ReportRow check_row(const zeta2k::SeriesIdentityResult& c) {
    return {c.name, c.params, c.lhs, c.rhs, "", c.pass ? 1 : 0};
}

ReportRow parseval_row(const zeta2k::ParsevalReport& p) {
    return {"parseval-bracketing",
            "k=" + std::to_string(p.k) + ";terms=" + std::to_string(p.terms),
            fmt_double(p.partial_sum),
            fmt_double(p.target),
            fmt_double(p.tail_bound),
            p.pass ? 1 : 0};
}

// generic text table; commands with a friendlier phrasing print their own
// lines and skip this
void print_rows_text(const RunReport& rep) {
    for (const auto& r : rep.rows) {
        if (r.pass >= 0) {
            std::cout << (r.pass == 1 ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.params.empty()) std::cout << " " << r.params;
            if (r.pass == 0) std::cout << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
            std::cout << "\n";
        } else {
            std::cout << r.name;
            if (!r.params.empty()) std::cout << " " << r.params;
            std::cout << " = " << r.value << "\n";
        }
    }
    std::cout << "passed " << rep.passed() << ", failed " << rep.failed() << " ("
              << rep.duration_ms << " ms)\n";
}

void emit(const RunReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << zeta2k::cli::render_json(rep);
    } else if (format == "csv") {
        std::cout << zeta2k::cli::render_csv(rep);
    } else {
        print_rows_text(rep);
    }
}

int finish(RunReport& rep, const std::string& format,
           std::chrono::steady_clock::time_point start, bool custom_text_done = false) {
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (!(custom_text_done && format == "text")) emit(rep, format);
    return rep.failed() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of zeta(2k) = rational * pi^{2k} and the identities behind it"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    long long max_n = 10;
    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "print B_0..B_max as exact rationals");
    cmd_bernoulli->add_option("--max", max_n, "largest index")
        ->check(CLI::Range(0LL, 4000LL))
        ->capture_default_str();

    unsigned zk = 1;
    int zdigits = 15;
    std::string zmode = "exact";
    auto* cmd_zeta = app.add_subcommand("zeta", "zeta(2k) as an exact multiple of pi^{2k}");
    cmd_zeta->add_option("--k", zk, "half the argument: reports zeta(2k)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_zeta->add_option("--digits", zdigits, "decimal digits for --mode decimal/both")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    cmd_zeta->add_option("--mode", zmode, "exact, decimal, or both (both adds the cross-check)")
        ->check(CLI::IsMember({"exact", "decimal", "both"}))
        ->capture_default_str();

    unsigned fk = 1;
    unsigned long fn = 1;
    int fdigits = 15;
    auto* cmd_fourier = app.add_subcommand("fourier", "exact Fourier coefficients of x^k");
    cmd_fourier->add_option("--k", fk, "power of x")->required()->check(CLI::PositiveNumber);
    cmd_fourier->add_option("--n", fn, "coefficient index")->required()->check(CLI::PositiveNumber);
    cmd_fourier->add_option("--digits", fdigits, "decimal digits for the numeric rendering")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();

    unsigned pk = 1;
    unsigned long pterms = 100000;
    auto* cmd_parseval = app.add_subcommand("parseval", "partial-sum bracketing of the mean-square identity");
    cmd_parseval->add_option("--k", pk, "power of x")->required()->check(CLI::PositiveNumber);
    cmd_parseval->add_option("--terms", pterms, "number of spectral terms")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    unsigned kmax = 10;
    unsigned long vterms = 100000;
    std::vector<std::string> which = {"all"};
    bool perturb = false;
    auto* cmd_verify = app.add_subcommand("verify", "run verification sweeps and report pass/fail");
    cmd_verify->add_option("--kmax", kmax, "sweep bound")->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--which", which, "comma-separated subset of identities,zeta,fourier,parseval,all")
        ->delimiter(',')
        ->check(CLI::IsMember({"identities", "zeta", "fourier", "parseval", "all"}));
    cmd_verify->add_option("--terms", vterms, "spectral terms for the parseval sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_verify->add_flag("--perturb-bernoulli", perturb,
                         "fault injection: offset B_4 before running (the sweep must then fail)");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.version = kVersion;

    try {
        if (app.got_subcommand(cmd_bernoulli)) {
            rep.command = "bernoulli";
            for (long long n = 0; n <= max_n; ++n) {
                auto b = zeta2k::bernoulli_number(static_cast<std::size_t>(n));
                rep.rows.push_back({"bernoulli-number", "n=" + std::to_string(n), "", "",
                                    b.to_string(), -1});
            }
            if (format == "text") {
                for (long long n = 0; n <= max_n; ++n) {
                    std::cout << "B_" << n << " = " << rep.rows[static_cast<std::size_t>(n)].value
                              << "\n";
                }
            }
            return finish(rep, format, start, true);
        }

        if (app.got_subcommand(cmd_zeta)) {
            rep.command = "zeta";
            const std::string arg = std::to_string(2 * zk);
            auto closed = zeta2k::zeta_closed_form(zk);
            std::string exact_text = closed.q.to_string() + " * pi^" + arg;
            if (zmode == "exact" || zmode == "both") {
                rep.rows.push_back(
                    {"zeta-closed-form", "k=" + std::to_string(zk), "", "", exact_text, -1});
            }
            if (zmode == "decimal" || zmode == "both") {
                auto dec = zeta2k::zeta_decimal(zk, zdigits);
                rep.rows.push_back({"zeta-decimal",
                                    "k=" + std::to_string(zk) + ";digits=" + std::to_string(zdigits),
                                    "", "", dec.text, -1});
            }
            if (zmode == "both") rep.rows.push_back(check_row(zeta2k::zeta_cross_check(zk)));
            if (format == "text") {
                for (const auto& r : rep.rows) {
                    if (r.name == "zeta-closed-form") {
                        std::cout << "zeta(" << arg << ") = " << r.value << "\n";
                    } else if (r.name == "zeta-decimal") {
                        std::cout << "zeta(" << arg << ") = " << r.value << " (error <= 1e-"
                                  << zdigits << ")\n";
                    } else {
                        std::cout << "inductive == closed-form: " << (r.pass == 1 ? "PASS" : "FAIL")
                                  << "\n";
                    }
                }
            }
            return finish(rep, format, start, true);
        }

        if (app.got_subcommand(cmd_fourier)) {
            rep.command = "fourier";
            auto pair = zeta2k::fourier_recurrence(fk, fn);
            std::string params = "k=" + std::to_string(fk) + ";n=" + std::to_string(fn);
            std::string cos_text = pair.cosine_value().to_string();
            std::string sin_text = pair.sine_value().to_string();
            auto cos_dec = pi_series_render(pair.cosine_value(), fdigits);
            auto sin_dec = pi_series_render(pair.sine_value(), fdigits);
            std::string dparams = params + ";digits=" + std::to_string(fdigits);
            rep.rows.push_back({"fourier-cosine", params, "", "", cos_text, -1});
            rep.rows.push_back({"fourier-sine", params, "", "", sin_text, -1});
            rep.rows.push_back({"fourier-cosine-decimal", dparams, "", "", cos_dec.text, -1});
            rep.rows.push_back({"fourier-sine-decimal", dparams, "", "", sin_dec.text, -1});
            if (format == "text") {
                std::cout << "recurrence path: " << (fk % 2 == 0 ? "cosine (even k)" : "sine (odd k)")
                          << "\n";
                std::cout << "a = " << cos_text << "\n";
                std::cout << "b = " << sin_text << "\n";
                std::cout << "a ~ " << cos_dec.text << "\n";
                std::cout << "b ~ " << sin_dec.text << "\n";
            }
            return finish(rep, format, start, true);
        }

        if (app.got_subcommand(cmd_parseval)) {
            rep.command = "parseval";
            auto p = zeta2k::parseval_report(pk, pterms);
            rep.rows.push_back(parseval_row(p));
            if (format == "text") {
                std::cout << "k = " << p.k << ", terms = " << p.terms << "\n"
                          << "partial sum = " << fmt_double(p.partial_sum) << "\n"
                          << "target      = " << fmt_double(p.target) << "\n"
                          << "gap         = " << fmt_double(p.gap) << "\n"
                          << "tail bound  = " << fmt_double(p.tail_bound) << "\n"
                          << (p.pass ? "PASS" : "FAIL") << "\n";
            }
            return finish(rep, format, start, true);
        }

        rep.command = "verify";
        if (perturb) {
            zeta2k::BernoulliTable::set_perturbation(
                4, zeta2k::Rational(zeta2k::BigInt(1), zeta2k::BigInt(1000003)));
        }
        bool all = false;
        for (const auto& w : which) {
            if (w == "all") all = true;
        }
        auto wants = [&](const char* name) {
            if (all) return true;
            for (const auto& w : which) {
                if (w == name) return true;
            }
            return false;
        };
        if (wants("identities")) {
            for (auto& c : zeta2k::run_all_identity_checks(kmax)) rep.rows.push_back(check_row(c));
        }
        if (wants("zeta")) {
            for (unsigned k = 1; k <= kmax; ++k) {
                rep.rows.push_back(check_row(zeta2k::zeta_cross_check(k)));
            }
        }
        if (wants("fourier")) {
            for (unsigned k = 1; k <= kmax; ++k) {
                for (unsigned long n : {1UL, 2UL}) {
                    rep.rows.push_back(check_row(zeta2k::fourier_consistency(k, n)));
                }
            }
        }
        if (wants("parseval")) {
            for (unsigned k = 1; k <= std::min(kmax, 12u); ++k) {
                rep.rows.push_back(parseval_row(zeta2k::parseval_report(k, vterms)));
            }
        }
        if (perturb) zeta2k::BernoulliTable::clear_perturbation();
        return finish(rep, format, start);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
