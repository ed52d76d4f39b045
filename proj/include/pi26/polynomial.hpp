// Exact-rational polynomial interpolation over (x, pi(10^x)), x = 1..n, with
// monomial coefficients and exact integer extrapolation one step ahead.
#pragma once

#include <pi26/numbers.hpp>
#include <pi26/prime_table.hpp>

#include <vector>

namespace pi26 {

struct RationalPolynomial {
    int fit_n = 0;               // interpolates x = 1..fit_n
    std::vector<BigRat> coeffs;  // coeffs[i] multiplies x^i; size fit_n

    int degree() const { return fit_n - 1; }
    BigRat eval(const BigRat& x) const;  // Horner, exact
};

// Unique degree-(n-1) interpolant through (x, pi(10^x)), x = 1..n. Built from
// Newton divided differences expanded by exact convolution; no linear solve.
// n = 1 yields the constant polynomial pi(10).
RationalPolynomial fit_polynomial(const PrimeCountTable& table, int n);

// P_n(n+1) as an exact integer via the forward-difference identity
// P_n(n+1) = sum_k C(n,k) * Delta^k y_1. Independent of fit_polynomial/eval;
// the two routes agreeing is a tested invariant. n in 1..25.
BigInt extrapolate_next(const PrimeCountTable& table, int n);

}  // namespace pi26
