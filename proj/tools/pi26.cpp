// Command-line front end: prints the reference table, polynomial and
// continued-fraction fits, difference series, analytic estimates, the
// conjectured range, figure datasets, and runs the verification suite.
//
// Exit codes: 0 success, 1 verification failures, 2 configuration/IO errors.
#include <pi26/analytic.hpp>
#include <pi26/pipeline.hpp>
#include <pi26/polynomial.hpp>
#include <pi26/prime_table.hpp>
#include <pi26/thiele.hpp>
#include <pi26/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace pi26;

struct RunConfig {
    std::string table_path;
    unsigned digits = 60;  // working precision, decimal digits
    std::uint64_t oracle_limit = 100000000ULL;
    std::string format = "human";
    std::string out_dir = ".";
};

PrimeCountTable load_table(const RunConfig& config) {
    return config.table_path.empty() ? PrimeCountTable::builtin()
                                     : PrimeCountTable::load(config.table_path);
}

// RFC-4180 field: quoted when it contains a comma, quote, or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (const char ch : s) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

int cmd_table(const RunConfig& config) {
    const PrimeCountTable table = load_table(config);
    if (config.format == "csv") {
        std::cout << "n,pi\n";
        for (int n = 1; n <= PrimeCountTable::max_exponent; ++n) {
            std::cout << n << ',' << table.entry(n).str() << '\n';
        }
    } else if (config.format == "json") {
        for (int n = 1; n <= PrimeCountTable::max_exponent; ++n) {
            std::cout << json{{"n", n}, {"pi", table.entry(n).str()}}.dump() << '\n';
        }
    } else {
        std::cout << " n  pi(10^n)\n";
        for (int n = 1; n <= PrimeCountTable::max_exponent; ++n) {
            std::printf("%2d  %s\n", n, table.entry(n).str().c_str());
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& config) {
    VerifyConfig vc;
    vc.table_path = config.table_path;
    vc.oracle_limit = config.oracle_limit;
    vc.precision_digits = config.digits;
    const std::vector<CheckRecord> records = run_verify(vc);

    if (config.format == "csv") {
        std::cout << "group,name,expected,actual,pass\n";
        for (const auto& r : records) {
            std::cout << csv_field(r.group) << ',' << csv_field(r.name) << ','
                      << csv_field(r.expected) << ',' << csv_field(r.actual) << ','
                      << (r.pass ? "true" : "false") << '\n';
        }
    } else if (config.format == "json") {
        for (const auto& r : records) {
            std::cout << json{{"group", r.group},
                              {"name", r.name},
                              {"expected", r.expected},
                              {"actual", r.actual},
                              {"pass", r.pass}}
                             .dump()
                      << '\n';
        }
    } else {
        std::size_t i = 0;
        std::size_t total_failed = 0;
        while (i < records.size()) {
            const std::string& group = records[i].group;
            std::size_t count = 0;
            std::size_t failed = 0;
            std::vector<const CheckRecord*> failures;
            for (; i < records.size() && records[i].group == group; ++i) {
                ++count;
                if (!records[i].pass) {
                    ++failed;
                    failures.push_back(&records[i]);
                }
            }
            total_failed += failed;
            std::cout << group << ": " << count << " checks, " << failed
                      << " failed\n";
            for (const CheckRecord* r : failures) {
                std::cout << "  FAIL " << r->name << ": expected " << r->expected
                          << ", got " << r->actual << '\n';
            }
        }
        if (total_failed == 0) {
            std::cout << "overall: PASS (" << records.size() << " checks)\n";
        } else {
            std::cout << "overall: FAIL (" << total_failed << " of "
                      << records.size() << " checks failed)\n";
        }
    }
    return all_pass(records) ? 0 : 1;
}

std::string poly_human(const RationalPolynomial& p) {
    std::string out = "P_" + std::to_string(p.fit_n) + "(x) = ";
    bool first = true;
    for (int power = p.degree(); power >= 0; --power) {
        const BigRat& c = p.coeffs[static_cast<std::size_t>(power)];
        if (c == 0) {
            continue;
        }
        const BigRat a = abs(c);
        const std::string coeff = to_fraction(a);
        const bool fraction = coeff.find('/') != std::string::npos;
        std::string body;
        if (power == 0) {
            body = fraction ? "(" + coeff + ")" : coeff;
        } else {
            const std::string xs =
                power == 1 ? "x" : "x^" + std::to_string(power);
            body = a == 1 ? xs : (fraction ? "(" + coeff + ")" : coeff) + xs;
        }
        if (first) {
            out += (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    if (first) {
        out += "0";
    }
    return out;
}

int cmd_poly(const RunConfig& config, int n) {
    const RationalPolynomial p = fit_polynomial(load_table(config), n);
    if (config.format == "csv") {
        std::cout << "power,coefficient\n";
        for (int power = p.degree(); power >= 0; --power) {
            std::cout << power << ','
                      << csv_field(to_fraction(p.coeffs[static_cast<std::size_t>(power)]))
                      << '\n';
        }
    } else if (config.format == "json") {
        json terms = json::array();
        for (int power = p.degree(); power >= 0; --power) {
            terms.push_back(json{
                {"power", power},
                {"value", to_fraction(p.coeffs[static_cast<std::size_t>(power)])}});
        }
        std::cout << json{{"n", n}, {"coefficients", terms}}.dump() << '\n';
    } else {
        std::cout << poly_human(p) << '\n';
    }
    return 0;
}

int cmd_phi(const RunConfig& config, int n, int display_digits) {
    const auto [cs, K] = fit_phi(load_table(config), n).folded();
    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        rows.emplace_back("c" + std::to_string(i + 1), to_plain(cs[i], display_digits));
    }
    rows.emplace_back("K", to_plain(K, display_digits));
    if (config.format == "csv") {
        std::cout << "name,value\n";
        for (const auto& [name, value] : rows) {
            std::cout << name << ',' << value << '\n';
        }
    } else if (config.format == "json") {
        for (const auto& [name, value] : rows) {
            std::cout << json{{"name", name}, {"value", value}}.dump() << '\n';
        }
    } else {
        for (const auto& [name, value] : rows) {
            std::printf("%-4s %s\n", name.c_str(), value.c_str());
        }
    }
    return 0;
}

int cmd_delta(const RunConfig& config, bool prime) {
    const DeltaSeries series = compute_delta_series(load_table(config));
    const auto& values = prime ? series.delta_prime : series.delta;
    const std::string column = prime ? "delta_prime" : "delta";
    if (config.format == "csv") {
        std::cout << "m," << column << '\n';
        for (const auto& [m, v] : values) {
            std::cout << m << ',' << to_sci(v, 6) << '\n';
        }
    } else if (config.format == "json") {
        for (const auto& [m, v] : values) {
            std::cout << json{{"m", m}, {"value", to_sci(v, 6)}}.dump() << '\n';
        }
    } else {
        std::cout << " m  " << column << '\n';
        for (const auto& [m, v] : values) {
            std::printf("%2d  %s\n", m, to_sci(v, 6).c_str());
        }
    }
    return 0;
}

int cmd_conjecture(const RunConfig& config, const std::string& psi_low,
                   const std::string& psi_high, const std::string& form_name) {
    const OffsetForm form =
        form_name == "exact" ? OffsetForm::exact : OffsetForm::first_order;
    const ConjectureResult r = make_conjecture(
        load_table(config), parse_decimal(psi_low), parse_decimal(psi_high), form);
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"center", r.center.str()},
        {"psi_abs_at_25", to_sci(r.psi_abs, 6)},
        {"psi_low", psi_low},
        {"psi_high", psi_high},
        {"offset_form", form_name},
        {"offset_low", r.offset_low.str()},
        {"offset_high", r.offset_high.str()},
        {"symmetric_low", r.symmetric_low.str()},
        {"symmetric_high", r.symmetric_high.str()},
        {"onesided_low", r.onesided_low.str()},
        {"onesided_high", r.onesided_high.str()},
    };
    if (config.format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [key, value] : rows) {
            std::cout << key << ',' << csv_field(value) << '\n';
        }
    } else if (config.format == "json") {
        json obj;
        for (const auto& [key, value] : rows) {
            obj[key] = value;
        }
        std::cout << obj.dump() << '\n';
    } else {
        std::cout << "center           " << r.center.str() << '\n'
                  << "fitted residual  " << to_sci(r.psi_abs, 6)
                  << "  (|trend fit at 25|)\n"
                  << "bounds           [" << psi_low << ", " << psi_high << "]  ("
                  << form_name << " offsets)\n"
                  << "offset low       " << r.offset_low.str() << '\n'
                  << "offset high      " << r.offset_high.str() << '\n'
                  << "symmetric range  [" << r.symmetric_low.str() << ", "
                  << r.symmetric_high.str() << "]\n"
                  << "one-sided range  [" << r.onesided_low.str() << ", "
                  << r.onesided_high.str() << "]\n";
    }
    return 0;
}

int cmd_approx(const RunConfig& config, int n, const std::string& which,
               unsigned j_max) {
    const PrimeCountTable table = load_table(config);
    std::vector<std::pair<std::string, Estimator>> selected;
    const std::vector<std::pair<std::string, Estimator>> all = {
        {"pnt", Estimator::pnt},
        {"li", Estimator::li_est},
        {"r", Estimator::r_est},
        {"refined", Estimator::refined},
    };
    for (const auto& entry : all) {
        if (which == "all" || which == entry.first) {
            selected.push_back(entry);
        }
    }
    struct Row {
        std::string name;
        std::string rounded;
        std::string reldiff;
    };
    std::vector<Row> rows;
    for (const auto& [name, est] : selected) {
        Row row;
        row.name = name;
        row.rounded = rounded_estimate(est, n, j_max).str();
        row.reldiff = n <= PrimeCountTable::max_exponent
                          ? to_sci(delta_double_prime(table, n, est, j_max), 6)
                          : "-";
        rows.push_back(std::move(row));
    }
    if (config.format == "csv") {
        std::cout << "n,estimator,rounded,reldiff\n";
        for (const auto& row : rows) {
            std::cout << n << ',' << row.name << ',' << row.rounded << ','
                      << row.reldiff << '\n';
        }
    } else if (config.format == "json") {
        for (const auto& row : rows) {
            std::cout << json{{"n", n},
                              {"estimator", row.name},
                              {"rounded", row.rounded},
                              {"reldiff", row.reldiff}}
                             .dump()
                      << '\n';
        }
    } else {
        std::cout << "estimator  Round(f(10^" << n << "))  reldiff\n";
        for (const auto& row : rows) {
            std::printf("%-9s  %s  %s\n", row.name.c_str(), row.rounded.c_str(),
                        row.reldiff.c_str());
        }
    }
    return 0;
}

int cmd_figures(const RunConfig& config) {
    const DeltaSeries series = compute_delta_series(load_table(config));
    std::filesystem::create_directories(config.out_dir);
    const std::string path1 = config.out_dir + "/fig2_1.csv";
    const std::string path2 = config.out_dir + "/fig2_2.csv";
    {
        std::ofstream out(path1);
        if (!out) {
            throw load_error("cannot write " + path1);
        }
        out << "m,delta\n";
        for (const auto& [m, v] : series.delta) {
            out << m << ',' << to_sci(v, static_cast<int>(config.digits)) << '\n';
        }
    }
    {
        std::ofstream out(path2);
        if (!out) {
            throw load_error("cannot write " + path2);
        }
        out << "m,abs_delta_prime\n";
        for (const auto& [m, v] : series.delta_prime) {
            out << m << ',' << to_sci(abs(v), static_cast<int>(config.digits)) << '\n';
        }
    }
    std::cout << path1 << '\n' << path2 << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpolation-driven prime-count extrapolation toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--table", config.table_path,
                   "Path to a pi(10^n) table overriding the bundled one");
    app.add_option("--digits", config.digits, "Working precision, decimal digits")
        ->check(CLI::Range(30u, 1000000u))
        ->capture_default_str();
    app.add_option("--oracle-limit", config.oracle_limit,
                   "Largest x the sieve oracle will count to")
        ->check(CLI::Range(std::uint64_t(100), std::uint64_t(1) << 62))
        ->capture_default_str();
    app.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"human", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", config.out_dir, "Output directory for figure files")
        ->capture_default_str();

    CLI::App* table_cmd =
        app.add_subcommand("table", "Print the bundled pi(10^n) table");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run every check group against the golden files");

    int poly_n = 0;
    CLI::App* poly_cmd =
        app.add_subcommand("poly", "Exact interpolating polynomial coefficients");
    poly_cmd->add_option("--n", poly_n, "Number of nodes (fits x = 1..n)")
        ->required()
        ->check(CLI::Range(1, 25));

    int phi_n = 25;
    int phi_digits = 50;
    CLI::App* phi_cmd = app.add_subcommand(
        "phi", "Folded continued-fraction coefficients of the corrective fit");
    phi_cmd->add_option("--n", phi_n, "Last node exponent of the fit")
        ->check(CLI::Range(4, 25))
        ->capture_default_str();
    phi_cmd->add_option("--digits", phi_digits, "Display digits")
        ->check(CLI::Range(1, 200))
        ->capture_default_str();

    CLI::App* delta_cmd =
        app.add_subcommand("delta", "First-order relative differences");
    CLI::App* delta_prime_cmd =
        app.add_subcommand("delta-prime", "Corrected relative differences");

    std::string psi_low = "7e-9";
    std::string psi_high = "7.1e-9";
    std::string offset_form = "first-order";
    CLI::App* conjecture_cmd =
        app.add_subcommand("conjecture", "Conjectured pi(10^26) range");
    conjecture_cmd->add_option("--psi-low", psi_low, "Lower residual bound")
        ->capture_default_str();
    conjecture_cmd->add_option("--psi-high", psi_high, "Upper residual bound")
        ->capture_default_str();
    conjecture_cmd
        ->add_option("--offset-form", offset_form, "Offset formula")
        ->check(CLI::IsMember({"first-order", "exact"}))
        ->capture_default_str();

    int approx_n = 26;
    std::string approx_which = "all";
    unsigned approx_jmax = 1000;
    CLI::App* approx_cmd =
        app.add_subcommand("approx", "Analytic prime-count estimates");
    approx_cmd->add_option("--n", approx_n, "Exponent of 10")
        ->check(CLI::Range(1, 40))
        ->capture_default_str();
    approx_cmd->add_option("--which", approx_which, "Estimator")
        ->check(CLI::IsMember({"pnt", "li", "r", "refined", "all"}))
        ->capture_default_str();
    approx_cmd->add_option("--jmax", approx_jmax, "Moebius sum truncation")
        ->check(CLI::Range(1u, 10000000u))
        ->capture_default_str();

    CLI::App* figures_cmd =
        app.add_subcommand("figures", "Write figure datasets as CSV");

    for (CLI::App* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const PrecisionGuard guard(config.digits);
        if (table_cmd->parsed()) {
            return cmd_table(config);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(config);
        }
        if (poly_cmd->parsed()) {
            return cmd_poly(config, poly_n);
        }
        if (phi_cmd->parsed()) {
            return cmd_phi(config, phi_n, phi_digits);
        }
        if (delta_cmd->parsed()) {
            return cmd_delta(config, false);
        }
        if (delta_prime_cmd->parsed()) {
            return cmd_delta(config, true);
        }
        if (conjecture_cmd->parsed()) {
            return cmd_conjecture(config, psi_low, psi_high, offset_form);
        }
        if (approx_cmd->parsed()) {
            return cmd_approx(config, approx_n, approx_which, approx_jmax);
        }
        if (figures_cmd->parsed()) {
            return cmd_figures(config);
        }
    } catch (const pi26::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
