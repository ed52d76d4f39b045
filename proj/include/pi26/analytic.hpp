// Arbitrary-precision analytic estimates of pi(x): x/log x, the logarithmic
// integral, the truncated Moebius/li sum R(x), and its arctan refinement.
// Every value carries a certified absolute error bound; integer rounding is
// guarded by that bound.
#pragma once

#include <pi26/numbers.hpp>
#include <pi26/prime_table.hpp>

#include <cstdint>

namespace pi26 {

// Principal-value li(x) for x > 1 via the series
//   gamma + ln ln x + sum_{k>=1} (ln x)^k / (k * k!)
// (all terms positive for x > 1, so no cancellation). Computed at the current
// default precision; the bound covers truncation plus accumulated roundoff.
HighPrecisionReal li(const Real& x);

// Li(x) = li(x) - li(2).
HighPrecisionReal Li_offset(const Real& x);

// Moebius function via a smallest-prime-factor sieve, cached and extended on
// demand.
int mobius(std::uint32_t j);

// R(x) = sum_{j=1..j_max} mu(j)/j * li(x^{1/j}), x^{1/j} as exp(ln x / j).
// Summed in ascending j for reproducibility.
HighPrecisionReal riemann_R(const Real& x, unsigned j_max = 1000);

// R(x) - 1/ln x + (1/pi) * arctan(pi / ln x).
HighPrecisionReal riemann_refined(const Real& x, unsigned j_max = 1000);

// Round(10^n / (n ln 10)) at a guarded precision.
BigInt pnt_estimate(int n);

// 10^n as a Real at the current precision (exact while 10^n fits the mantissa).
Real pow10_real(int n);

enum class Estimator { pnt, li_est, r_est, refined };

// Round(f(10^n)) for the selected estimator at the current precision.
BigInt rounded_estimate(Estimator which, int n, unsigned j_max = 1000);

// delta''_n = (pi(10^n) - Round(f(10^n))) / pi(10^n), exact once rounded.
// Defined only for n <= 25 (no exact pi beyond the table).
BigRat delta_double_prime(const PrimeCountTable& table, int n, Estimator which,
                          unsigned j_max = 1000);

}  // namespace pi26
