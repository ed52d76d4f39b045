#include <pi26/pipeline.hpp>

#include <algorithm>

namespace pi26 {

BigRat compute_delta(const PrimeCountTable& table, int n) {
    if (n < 2 || n > 24) {
        throw domain_error("compute_delta: n must be in 2..24");
    }
    const BigInt& next = table.entry(n + 1);
    return BigRat(next - extrapolate_next(table, n)) / BigRat(next);
}

ThieleInterpolant fit_phi(const PrimeCountTable& table, int k) {
    if (k < 4 || k > 25) {
        throw domain_error("fit_phi: k must be in 4..25 (at least two nodes)");
    }
    std::vector<std::pair<BigRat, BigRat>> points;
    points.reserve(static_cast<std::size_t>(k - 2));
    for (int m = 3; m <= k; ++m) {
        points.emplace_back(BigRat(m), compute_delta(table, m - 1));
    }
    return fit_thiele(points);
}

BigInt reconstruct(const PrimeCountTable& table, int x, int n) {
    if (x < 1 || x > 24 || n < 1 || n > 24) {
        throw domain_error("reconstruct: x and n must be in 1..24");
    }
    const int j = std::max({n, x, 3}) + 1;
    const ThieleInterpolant phi = fit_phi(table, j);
    const BigRat denom = BigRat(1) - phi.eval(BigRat(x + 1));
    if (denom == 0) {
        throw pole_error(BigRat(x + 1));
    }
    return round_half_away(BigRat(extrapolate_next(table, x)) / denom);
}

BigInt extrapolate_corrected(const PrimeCountTable& table, int n) {
    if (n < 4 || n > 25) {
        throw domain_error("extrapolate_corrected: n must be in 4..25");
    }
    const ThieleInterpolant phi = fit_phi(table, n);
    const BigRat denom = BigRat(1) - phi.eval(BigRat(n + 1));
    if (denom == 0) {
        throw pole_error(BigRat(n + 1));
    }
    return round_half_away(BigRat(extrapolate_next(table, n)) / denom);
}

BigRat compute_delta_prime(const PrimeCountTable& table, int n) {
    if (n < 4 || n > 24) {
        throw domain_error("compute_delta_prime: n must be in 4..24");
    }
    const BigInt& next = table.entry(n + 1);
    return BigRat(next - extrapolate_corrected(table, n)) / BigRat(next);
}

DeltaSeries compute_delta_series(const PrimeCountTable& table) {
    DeltaSeries s;
    for (int n = 2; n <= 24; ++n) {
        s.delta.emplace(n + 1, compute_delta(table, n));
    }
    for (int n = 4; n <= 24; ++n) {
        s.delta_prime.emplace(n + 1, compute_delta_prime(table, n));
    }
    return s;
}

ThieleInterpolant fit_psi(const PrimeCountTable& table) {
    std::vector<std::pair<BigRat, BigRat>> points;
    points.reserve(5);
    for (int n = 20; n <= 24; ++n) {
        points.emplace_back(BigRat(n), compute_delta_prime(table, n));
    }
    return fit_thiele(points);
}

ConjectureResult conjecture_range(const BigInt& center, const BigRat& psi_low,
                                  const BigRat& psi_high, OffsetForm form) {
    if (psi_low < 0 || psi_high < psi_low || psi_high >= 1) {
        throw domain_error("conjecture_range needs 0 <= psi_low <= psi_high < 1");
    }
    const auto offset = [&](const BigRat& bound) {
        BigRat scaled = BigRat(center) * bound;
        if (form == OffsetForm::exact) {
            scaled /= BigRat(1) - bound;
        }
        return round_half_away(scaled);
    };
    ConjectureResult r;
    r.center = center;
    r.form = form;
    r.offset_low = offset(psi_low);
    r.offset_high = offset(psi_high);
    r.symmetric_low = center - r.offset_high;
    r.symmetric_high = center + r.offset_high;
    r.onesided_low = center + r.offset_low;
    r.onesided_high = center + r.offset_high;
    return r;
}

ConjectureResult make_conjecture(const PrimeCountTable& table, const BigRat& psi_low,
                                 const BigRat& psi_high, OffsetForm form) {
    ConjectureResult r =
        conjecture_range(extrapolate_corrected(table, 25), psi_low, psi_high, form);
    r.psi_abs = abs(fit_psi(table).eval(BigRat(25)));
    return r;
}

}  // namespace pi26
