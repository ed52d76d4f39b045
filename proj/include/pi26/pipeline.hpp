// The six-step extrapolation pipeline: relative differences delta, the
// corrective fit Phi, reconstruction, corrected extrapolation, second-order
// differences delta', the residual-trend fit psi, and the conjectured range.
#pragma once

#include <pi26/numbers.hpp>
#include <pi26/polynomial.hpp>
#include <pi26/prime_table.hpp>
#include <pi26/thiele.hpp>

#include <map>

namespace pi26 {

// delta_{n+1} = (pi(10^{n+1}) - P_n(n+1)) / pi(10^{n+1}), n in 2..24.
// Always in (0,1) and strictly decreasing over the table.
BigRat compute_delta(const PrimeCountTable& table, int n);

// delta'_{n+1} = (pi(10^{n+1}) - corrected extrapolation) / pi(10^{n+1}),
// n in 4..24. Signed; displayed at 6 significant digits.
BigRat compute_delta_prime(const PrimeCountTable& table, int n);

struct DeltaSeries {
    std::map<int, BigRat> delta;        // m -> delta_m, m = 3..25
    std::map<int, BigRat> delta_prime;  // m -> delta'_m, m = 5..25
};
DeltaSeries compute_delta_series(const PrimeCountTable& table);

// Thiele fit over (m, delta_m), m = 3..k. Requires k in 4..25.
ThieleInterpolant fit_phi(const PrimeCountTable& table, int k);

// Round(P_x(x+1) / (1 - Phi_j(x+1))) with j = max(n, x, 3) + 1, so the fit
// always covers node x+1 (and n <= 3 borrows Phi_4 and up, never less).
// x, n in 1..24. Exact for every x >= 2 because x+1 is then a Phi_j node.
BigInt reconstruct(const PrimeCountTable& table, int x, int n);

// Round(P_n(n+1) / (1 - Phi_n(n+1))): the fit is evaluated one step past its
// last node. n in 4..25; n = 25 is the conjectured center.
BigInt extrapolate_corrected(const PrimeCountTable& table, int n);

// Signed 5-point Thiele fit over (n, delta'_{n+1}), n = 20..24. The absolute
// value is applied to evaluations only, never to the fitted data.
ThieleInterpolant fit_psi(const PrimeCountTable& table);

enum class OffsetForm {
    first_order,  // Round(center * bound); reproduces the reference integers
    exact,        // Round(center * bound / (1 - bound))
};

struct ConjectureResult {
    BigInt center;
    BigRat psi_abs;  // |psi fit at 25|, exact rational
    BigInt offset_low, offset_high;
    BigInt symmetric_low, symmetric_high;  // center -+ offset_high
    BigInt onesided_low, onesided_high;    // center + offset_low/high
    OffsetForm form = OffsetForm::first_order;
};

// Range integers from a given center and bounds 0 <= psi_low <= psi_high < 1.
ConjectureResult conjecture_range(const BigInt& center, const BigRat& psi_low,
                                  const BigRat& psi_high,
                                  OffsetForm form = OffsetForm::first_order);

// Full pipeline: center from extrapolate_corrected(25), psi_abs from the
// signed fit, ranges from the supplied bounds.
ConjectureResult make_conjecture(const PrimeCountTable& table, const BigRat& psi_low,
                                 const BigRat& psi_high,
                                 OffsetForm form = OffsetForm::first_order);

}  // namespace pi26
