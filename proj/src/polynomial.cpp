#include <pi26/polynomial.hpp>

namespace pi26 {

BigRat RationalPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalPolynomial fit_polynomial(const PrimeCountTable& table, int n) {
    if (n < 1 || n > PrimeCountTable::max_exponent) {
        throw domain_error("fit_polynomial: n must be in 1..25");
    }
    // Newton divided differences in place: after pass k, dd[i] holds
    // f[x_1..x_{i+1}] for i <= k.
    std::vector<BigRat> dd;
    dd.reserve(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        dd.emplace_back(table.entry(x));
    }
    for (int k = 1; k < n; ++k) {
        for (int i = n - 1; i >= k; --i) {
            // consecutive integer nodes 1..n: x_{i+1} - x_{i+1-k} = k
            dd[i] = (dd[i] - dd[i - 1]) / BigRat(k);
        }
    }
    // Expand sum_k dd[k] * prod_{j<k}(x - x_j) to the monomial basis by exact
    // convolution with each (x - x_j) factor.
    RationalPolynomial poly;
    poly.fit_n = n;
    poly.coeffs.assign(static_cast<std::size_t>(n), BigRat(0));
    std::vector<BigRat> basis{BigRat(1)};
    for (int k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < basis.size(); ++p) {
            poly.coeffs[p] += dd[static_cast<std::size_t>(k)] * basis[p];
        }
        if (k < n - 1) {
            const BigRat node(k + 1);  // x_{k+1} = k+1
            std::vector<BigRat> next(basis.size() + 1, BigRat(0));
            for (std::size_t p = 0; p < basis.size(); ++p) {
                next[p + 1] += basis[p];
                next[p] -= node * basis[p];
            }
            basis = std::move(next);
        }
    }
    return poly;
}

BigInt extrapolate_next(const PrimeCountTable& table, int n) {
    if (n < 1 || n > PrimeCountTable::max_exponent) {
        throw domain_error("extrapolate_next: n must be in 1..25");
    }
    // P_n(n+1) = sum_{k=0}^{n-1} C(n,k) * Delta^k y_1, all integer arithmetic.
    std::vector<BigInt> diffs;
    diffs.reserve(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
        diffs.push_back(table.entry(x));
    }
    BigInt total(0);
    BigInt binom(1);  // C(n,0)
    for (int k = 0; k < n; ++k) {
        total += binom * diffs[0];
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        diffs.pop_back();
        binom = binom * (n - k) / (k + 1);  // C(n,k+1), exact division
    }
    return total;
}

}  // namespace pi26
