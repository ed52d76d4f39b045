#include <pi26/verify.hpp>

#include <pi26/analytic.hpp>
#include <pi26/pipeline.hpp>
#include <pi26/polynomial.hpp>
#include <pi26/thiele.hpp>

#include <fstream>
#include <map>

namespace pi26 {

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw load_error("cannot open " + path);
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

namespace {

// Significant digits in a printed decimal (zeros after the first nonzero
// digit count, the exponent part does not).
int printed_sig(const std::string& text) {
    std::string mant = text;
    const std::size_t epos = mant.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = mant.substr(0, epos);
    }
    int count = 0;
    bool seen_nonzero = false;
    for (const char ch : mant) {
        if (ch < '0' || ch > '9') {
            continue;
        }
        if (ch != '0') {
            seen_nonzero = true;
        }
        if (seen_nonzero) {
            ++count;
        }
    }
    return count == 0 ? 1 : count;
}

void check_sieve(const PrimeCountTable& table, const VerifyConfig& config,
                 std::vector<CheckRecord>& out) {
    int max_n = 0;
    std::uint64_t power = 1;
    while (max_n < 8 && power <= config.oracle_limit / 10) {
        power *= 10;
        ++max_n;
    }
    for (const TableCheck& c : verify_table(table, max_n, config.oracle_limit)) {
        out.push_back({"sieve", "n=" + std::to_string(c.n), c.expected.str(),
                       c.actual.str(), c.pass});
    }
}

void check_polynomials(const PrimeCountTable& table, const std::string& golden_dir,
                     std::vector<CheckRecord>& out) {
    // golden rows: n, power, coefficient (descending powers within each n)
    std::map<int, std::map<int, BigRat>> golden;
    for (const auto& row : read_tsv(golden_dir + "/polynomial_coefficients.tsv")) {
        golden[std::stoi(row.at(0))][std::stoi(row.at(1))] = parse_decimal(row.at(2));
    }
    for (int n = 2; n <= 25; ++n) {
        const RationalPolynomial poly = fit_polynomial(table, n);
        const auto& want = golden.at(n);
        const std::string claim = std::to_string(n) + " exact coefficients";
        std::string detail = claim;
        bool pass = want.size() == poly.coeffs.size();
        if (!pass) {
            detail = "coefficient count " + std::to_string(poly.coeffs.size()) +
                     " != " + std::to_string(want.size());
        }
        for (int power = n - 1; pass && power >= 0; --power) {
            const auto it = want.find(power);
            if (it == want.end() || poly.coeffs.at(power) != it->second) {
                pass = false;
                detail = "x^" + std::to_string(power) + ": " +
                         to_fraction(poly.coeffs.at(power));
            }
        }
        out.push_back({"polynomials", "P_" + std::to_string(n), claim, detail, pass});
    }
}

void check_reconstruction(const PrimeCountTable& table, std::vector<CheckRecord>& out) {
    for (int n = 1; n <= 24; ++n) {
        for (int x = 1; x <= n; ++x) {
            const BigInt expected = table.entry(x + 1);
            const BigInt actual = reconstruct(table, x, n);
            out.push_back({"reconstruction",
                           "x=" + std::to_string(x) + " n=" + std::to_string(n),
                           expected.str(), actual.str(), actual == expected});
        }
    }
}

// Window comparison against a printed decimal: pass iff
// |mine - printed| <= 2 * 10^(last printed digit's place).
CheckRecord printed_window(const std::string& group, const std::string& name,
                           const BigRat& mine, const std::string& printed) {
    const BigRat target = parse_decimal(printed);
    const BigRat tol = 2 * printed_ulp(printed);
    return {group, name, printed, to_plain(mine, printed_sig(printed)),
            abs(mine - target) <= tol};
}

void check_corrective_fit(const PrimeCountTable& table, const std::string& golden_dir,
                     std::vector<CheckRecord>& out) {
    const auto rows = read_tsv(golden_dir + "/phi25_coefficients.tsv");
    const auto [cs, K] = fit_phi(table, 25).folded();
    out.push_back({"corrective-fit", "c1-exact", "61/84", to_fraction(cs.at(0)),
                   cs.at(0) == BigRat(61) / 84});
    for (const auto& row : rows) {
        const std::string& name = row.at(0);
        BigRat mine;
        if (name == "K") {
            mine = K;
        } else {
            const std::size_t i = std::stoul(name.substr(1)) - 1;
            mine = cs.at(i);
        }
        out.push_back(printed_window("corrective-fit", name, mine, row.at(1)));
    }
}

void check_delta_prime(const PrimeCountTable& table, const std::string& golden_dir,
                  std::vector<CheckRecord>& out) {
    for (const auto& row : read_tsv(golden_dir + "/delta_prime_values.tsv")) {
        const int m = std::stoi(row.at(0));
        const std::string actual = to_sci(compute_delta_prime(table, m - 1), 6);
        out.push_back({"delta-prime", "delta_prime_" + std::to_string(m), row.at(1), actual,
                       parse_decimal(actual) == parse_decimal(row.at(1))});
    }
}

void check_residual_trend(const PrimeCountTable& table, const std::string& golden_dir,
                     std::vector<CheckRecord>& out) {
    const ThieleInterpolant psi = fit_psi(table);
    const auto [cs, K] = psi.folded();
    for (const auto& row : read_tsv(golden_dir + "/psi_coefficients.tsv")) {
        const std::string& name = row.at(0);
        const std::string& printed = row.at(1);
        if (name == "psi26") {
            const std::string actual = to_sci(abs(psi.eval(BigRat(25))), 6);
            out.push_back({"residual-trend", "psi26-magnitude", printed, actual,
                           parse_decimal(actual) == parse_decimal(printed)});
            continue;
        }
        BigRat mine;
        if (name == "M") {
            mine = K;
        } else {
            mine = cs.at(std::stoul(name.substr(1)) - 1);
        }
        // +-2 units in the 45th significant digit of the printed value.
        const BigRat target = parse_decimal(printed);
        const BigRat tol = 2 * pow10(floor_log10(abs(target)) - 44);
        out.push_back({"residual-trend", name, printed, to_plain(mine, printed_sig(printed)),
                       abs(mine - target) <= tol});
    }
}

void check_extrapolation(const PrimeCountTable& table,
                         const std::map<std::string, std::string>& pinned,
                         std::vector<CheckRecord>& out) {
    const std::pair<int, std::string> cases[] = {{25, "center"},
                                                 {24, "center_previous"}};
    for (const auto& [n, key] : cases) {
        const std::string actual = extrapolate_corrected(table, n).str();
        const std::string& expected = pinned.at(key);
        out.push_back(
            {"extrapolation", "n=" + std::to_string(n), expected, actual,
             actual == expected});
    }
}

void check_conjecture(const PrimeCountTable& table,
                      const std::map<std::string, std::string>& pinned,
                      std::vector<CheckRecord>& out) {
    const ConjectureResult r = make_conjecture(table, parse_decimal("7e-9"),
                                               parse_decimal("7.1e-9"));
    const std::pair<std::string, const BigInt*> cases[] = {
        {"offset_high", &r.offset_high},       {"offset_low", &r.offset_low},
        {"symmetric_low", &r.symmetric_low},   {"symmetric_high", &r.symmetric_high},
        {"onesided_low", &r.onesided_low},     {"onesided_high", &r.onesided_high},
    };
    for (const auto& [key, value] : cases) {
        const std::string actual = value->str();
        const std::string& expected = pinned.at(key);
        out.push_back({"conjecture", key, expected, actual, actual == expected});
    }
}

Estimator parse_estimator(const std::string& name) {
    if (name == "pnt") return Estimator::pnt;
    if (name == "li") return Estimator::li_est;
    if (name == "r") return Estimator::r_est;
    throw load_error("unknown estimator tag " + name);
}

void check_analytic(const PrimeCountTable& table, const VerifyConfig& config,
                  const std::string& golden_dir, std::vector<CheckRecord>& out) {
    std::vector<int> exponents;
    for (const auto& row : read_tsv(golden_dir + "/analytic_values.tsv")) {
        const int n = std::stoi(row.at(0));
        const Estimator which = parse_estimator(row.at(1));
        const std::string label = row.at(1) + "_" + row.at(0);
        const std::string actual = rounded_estimate(which, n, config.j_max).str();
        out.push_back({"analytic", label, row.at(2), actual, actual == row.at(2)});
        if (row.at(3) != "-") {
            const std::string dd =
                to_sci(delta_double_prime(table, n, which, config.j_max), 6);
            out.push_back({"analytic", label + "_reldiff", row.at(3), dd,
                           parse_decimal(dd) == parse_decimal(row.at(3))});
        }
        if (exponents.empty() || exponents.back() != n) {
            exponents.push_back(n);
        }
    }
    // The arctan refinement must round to the same integer as the plain sum.
    for (const int n : exponents) {
        const std::string base = rounded_estimate(Estimator::r_est, n, config.j_max).str();
        const std::string refined =
            rounded_estimate(Estimator::refined, n, config.j_max).str();
        out.push_back({"analytic", "refined_" + std::to_string(n), base, refined,
                       refined == base});
    }
}

void check_range_membership(const PrimeCountTable& table, const VerifyConfig& config,
                            std::vector<CheckRecord>& out) {
    const ConjectureResult r = make_conjecture(table, parse_decimal("7e-9"),
                                               parse_decimal("7.1e-9"));
    const std::string range =
        "[" + r.onesided_low.str() + ", " + r.onesided_high.str() + "]";
    const std::pair<std::string, Estimator> cases[] = {{"Li(10^26)", Estimator::li_est},
                                                       {"R(10^26)", Estimator::r_est}};
    for (const auto& [name, which] : cases) {
        const BigInt value = rounded_estimate(which, 26, config.j_max);
        out.push_back({"range-membership", name, range, value.str(),
                       r.onesided_low <= value && value <= r.onesided_high});
    }
}

}  // namespace

std::vector<CheckRecord> run_verify(const VerifyConfig& config) {
    const PrecisionGuard guard(config.precision_digits);
    const std::string data_dir =
        config.data_dir.empty() ? default_data_dir() : config.data_dir;
    const std::string golden_dir = data_dir + "/golden";
    const PrimeCountTable table = config.table_path.empty()
                                      ? PrimeCountTable::builtin(config.data_dir)
                                      : PrimeCountTable::load(config.table_path);

    std::map<std::string, std::string> pinned;
    for (const auto& row : read_tsv(golden_dir + "/conjecture_values.tsv")) {
        pinned[row.at(0)] = row.at(1);
    }

    std::vector<CheckRecord> out;
    check_sieve(table, config, out);
    check_polynomials(table, golden_dir, out);
    check_reconstruction(table, out);
    check_corrective_fit(table, golden_dir, out);
    check_delta_prime(table, golden_dir, out);
    check_residual_trend(table, golden_dir, out);
    check_extrapolation(table, pinned, out);
    check_conjecture(table, pinned, out);
    check_analytic(table, config, golden_dir, out);
    check_range_membership(table, config, out);
    return out;
}

bool all_pass(const std::vector<CheckRecord>& records) {
    for (const auto& r : records) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace pi26
