#include <pi26/numbers.hpp>

#include <mpfr.h>

#include <regex>
#include <utility>

namespace pi26 {

namespace {

std::string fraction_text(const BigRat& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace

breakdown_error::breakdown_error(std::size_t level_, const BigRat& node_)
    : error("inverted-difference breakdown at level " + std::to_string(level_) +
            ", node " + fraction_text(node_)),
      level(level_),
      node(node_) {}

pole_error::pole_error(const BigRat& at_)
    : error("interpolant pole at x = " + fraction_text(at_)), at(at_) {}

PrecisionGuard::PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

BigInt round_half_away(const BigRat& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);  // canonical: den > 0
    const bool negative = num < 0;
    BigInt mag = abs(num);
    BigInt quo = mag / den;
    BigInt rem = mag % den;
    if (rem * 2 >= den) {
        ++quo;
    }
    return negative ? BigInt(-quo) : quo;
}

BigInt round_half_away(const HighPrecisionReal& x) {
    // Rounding is certified only when the whole interval
    // [value - bound, value + bound] rounds to one integer.
    Real lo = x.value - x.error_bound;
    Real hi = x.value + x.error_bound;
    Real rlo(0), rhi(0);
    rlo.precision(x.value.precision());
    rhi.precision(x.value.precision());
    mpfr_round(rlo.backend().data(), lo.backend().data());
    mpfr_round(rhi.backend().data(), hi.backend().data());
    if (mpfr_cmp(rlo.backend().data(), rhi.backend().data()) != 0) {
        throw precision_error(
            "rounding not certified: the error bound spans an integer boundary; "
            "recompute at higher precision");
    }
    BigInt result;
    mpfr_get_z(result.backend().data(), rlo.backend().data(), MPFR_RNDN);
    return result;
}

BigRat pow10(long e) {
    if (e >= 0) {
        return BigRat(pow(BigInt(10), static_cast<unsigned>(e)));
    }
    return BigRat(1) / BigRat(pow(BigInt(10), static_cast<unsigned>(-e)));
}

int floor_log10(const BigRat& q) {
    if (q <= 0) {
        throw domain_error("floor_log10 requires a positive value");
    }
    long e = static_cast<long>(numerator(q).str().size()) -
             static_cast<long>(denominator(q).str().size());
    while (q >= pow10(e + 1)) {
        ++e;
    }
    while (q < pow10(e)) {
        --e;
    }
    return static_cast<int>(e);
}

namespace {

struct SigParts {
    int sign = 0;
    std::string digits;  // exactly `sig` digits
    int exp10 = 0;       // leading digit is worth 10^exp10
};

SigParts to_sig(const BigRat& q, int sig) {
    if (sig < 1) {
        throw domain_error("significant digit count must be positive");
    }
    SigParts parts;
    if (q == 0) {
        return parts;
    }
    parts.sign = q < 0 ? -1 : 1;
    BigRat a = abs(q);
    int e = floor_log10(a);
    BigInt m = round_half_away(a * pow10(sig - 1 - e));
    if (m >= pow(BigInt(10), static_cast<unsigned>(sig))) {
        m /= 10;  // rounding carried into a new leading digit
        ++e;
    }
    parts.digits = m.str();
    parts.exp10 = e;
    return parts;
}

}  // namespace

std::string to_sci(const BigRat& q, int sig) {
    SigParts p = to_sig(q, sig);
    if (p.sign == 0) {
        return "0";
    }
    std::string out = p.sign < 0 ? "-" : "";
    out += p.digits[0];
    if (p.digits.size() > 1) {
        out += '.';
        out += p.digits.substr(1);
    }
    out += 'e';
    out += std::to_string(p.exp10);
    return out;
}

std::string to_plain(const BigRat& q, int sig) {
    SigParts p = to_sig(q, sig);
    if (p.sign == 0) {
        return "0";
    }
    const int e = p.exp10;
    if (e < -8 || e >= sig + 8) {
        return to_sci(q, sig);
    }
    std::string out = p.sign < 0 ? "-" : "";
    if (e < 0) {
        out += "0.";
        out += std::string(static_cast<std::size_t>(-e - 1), '0');
        out += p.digits;
    } else if (e + 1 >= static_cast<int>(p.digits.size())) {
        out += p.digits;
        out += std::string(static_cast<std::size_t>(e + 1) - p.digits.size(), '0');
    } else {
        out += p.digits.substr(0, static_cast<std::size_t>(e + 1));
        out += '.';
        out += p.digits.substr(static_cast<std::size_t>(e + 1));
    }
    return out;
}

std::string to_fraction(const BigRat& q) { return fraction_text(q); }

BigRat parse_decimal(const std::string& text) {
    static const std::regex decimal_re(
        R"(^\s*([+-]?)(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?\s*$)");
    static const std::regex fraction_re(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, fraction_re)) {
        BigInt num(m[1].str());
        BigInt den(m[2].str());
        if (den == 0) {
            throw load_error("zero denominator in '" + text + "'");
        }
        return BigRat(num) / BigRat(den);
    }
    if (!std::regex_match(text, m, decimal_re)) {
        throw load_error("not a decimal literal: '" + text + "'");
    }
    const std::string int_part = m[2].str();
    const std::string frac_part = m[3].matched ? m[3].str() : "";
    const long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
    // strip leading zeros: the gmp string constructor reads "0..." as octal
    std::string digit_text = int_part + frac_part;
    const std::size_t nonzero = digit_text.find_first_not_of('0');
    digit_text = nonzero == std::string::npos ? "0" : digit_text.substr(nonzero);
    BigInt digits(digit_text);
    BigRat value = BigRat(digits) * pow10(exp10 - static_cast<long>(frac_part.size()));
    return m[1].str() == "-" ? BigRat(-value) : value;
}

BigRat printed_ulp(const std::string& text) {
    static const std::regex decimal_re(
        R"(^\s*([+-]?)(\d+)(?:\.(\d+))?(?:[eE]([+-]?\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, decimal_re)) {
        throw load_error("not a decimal literal: '" + text + "'");
    }
    const long frac_len = m[3].matched ? static_cast<long>(m[3].str().size()) : 0;
    const long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
    return pow10(exp10 - frac_len);
}

Real euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pi_constant() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

}  // namespace pi26
