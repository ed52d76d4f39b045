// Arbitrary-precision number aliases, exact decimal formatting/parsing, and the
// rounding rule shared by every module: Round(x) = nearest integer, ties away
// from zero.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pi26 {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using BigRat = mp::number<mp::gmp_rational, mp::et_off>;
// Variable-precision MPFR float; precision is set globally via PrecisionGuard.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data file problems (missing/malformed/inconsistent input).
struct load_error : error {
    using error::error;
};

// Parameter outside an operation's documented domain.
struct domain_error : error {
    using error::error;
};

// Inverted-difference recurrence hit a zero denominator mid-column.
struct breakdown_error : error {
    breakdown_error(std::size_t level_, const BigRat& node_);
    std::size_t level;
    BigRat node;
};

// Evaluation of a rational interpolant at one of its poles.
struct pole_error : error {
    explicit pole_error(const BigRat& at_);
    BigRat at;
};

// A rounding was requested closer to the boundary than the certified error
// bound allows; recompute at higher precision.
struct precision_error : error {
    using error::error;
};

// Affine-tail fold undefined (innermost coefficient zero or too few levels).
struct fold_error : error {
    using error::error;
};

// Sets the default decimal precision for newly constructed Real values and
// restores the previous one on scope exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// A float paired with a certified absolute error bound on its value.
struct HighPrecisionReal {
    Real value;
    Real error_bound;
};

// Nearest integer, exact ties away from zero. Exact rational arithmetic.
BigInt round_half_away(const BigRat& q);

// Same rule on a bounded float. Throws precision_error when the distance from
// value to the nearest integer does not exceed the error bound.
BigInt round_half_away(const HighPrecisionReal& x);

// Largest e with 10^e <= q. Requires q > 0.
int floor_log10(const BigRat& q);

// 10^e as an exact rational (e may be negative).
BigRat pow10(long e);

// Scientific rendering with exactly `sig` mantissa digits, correctly rounded
// half away from zero: "-3.64154e-7", "1.03750e-14". Returns "0" for zero.
std::string to_sci(const BigRat& q, int sig);

// Plain positional rendering with `sig` significant digits: "0.726190...",
// "-12.7373...", "13267560.42...". Falls back to to_sci when the leading digit
// sits more than a few places from the decimal point.
std::string to_plain(const BigRat& q, int sig);

// "num/den" in lowest terms ("num" alone when den == 1).
std::string to_fraction(const BigRat& q);

// Parse "[+-]ddd[.ddd][e[+-]dd]" or "num/den" into an exact rational.
BigRat parse_decimal(const std::string& text);

// One unit in the last printed digit of a decimal literal: "0.123" -> 1e-3,
// "3.64154e-7" -> 1e-12.
BigRat printed_ulp(const std::string& text);

// Euler-Mascheroni constant and pi at the current default precision.
Real euler_gamma();
Real pi_constant();

}  // namespace pi26
