#include <pi26/analytic.hpp>

#include <cstddef>
#include <vector>

namespace pi26 {

namespace {

// 10^(1-digits) is about ten units in the last place at the working precision;
// bounds below are padded with it per arithmetic step.
Real coarse_ulp() {
    return pow(Real(10), 1 - static_cast<int>(Real::default_precision()));
}

}  // namespace

HighPrecisionReal li(const Real& x) {
    if (x <= 1) {
        throw domain_error("li(x) is only computed for x > 1");
    }
    const Real t = log(x);
    const Real tiny = pow(Real(10), -static_cast<int>(Real::default_precision() + 8));
    Real acc = euler_gamma() + log(t);
    Real u(1);  // t^k / k!
    Real term(0);
    unsigned long k = 0;
    while (true) {
        ++k;
        if (k > 100000) {
            throw error("li series exceeded term cap");
        }
        u *= t;
        u /= k;
        term = u / k;
        acc += term;
        // Past k = 2t successive terms at least halve, so the tail after term_k
        // is below 2 * term_k.
        if (Real(k) > 2 * t && term <= tiny * (abs(acc) + 1)) {
            break;
        }
    }
    HighPrecisionReal out;
    out.value = acc;
    out.error_bound = 2 * term + Real(k + 16) * (abs(acc) + 1) * coarse_ulp();
    return out;
}

HighPrecisionReal Li_offset(const Real& x) {
    HighPrecisionReal a = li(x);
    HighPrecisionReal b = li(Real(2));
    a.value -= b.value;
    a.error_bound += b.error_bound;
    return a;
}

namespace {

// mu(j) for j < g_mu.size(), via the smallest-prime-factor recurrence
// mu(i) = 0 when spf(i)^2 | i, else -mu(i / spf(i)). Rebuilt at double the
// size whenever a larger argument arrives. Not thread safe.
std::vector<signed char> g_mu;

void extend_mu(std::uint32_t need) {
    std::size_t n = g_mu.size() < 1024 ? 1024 : g_mu.size();
    while (n <= need) {
        n *= 2;
    }
    std::vector<std::uint32_t> spf(n, 0);
    for (std::size_t i = 2; i < n; ++i) {
        if (spf[i] == 0) {
            for (std::size_t m = i; m < n; m += i) {
                if (spf[m] == 0) {
                    spf[m] = static_cast<std::uint32_t>(i);
                }
            }
        }
    }
    std::vector<signed char> mu(n, 0);
    if (n > 1) {
        mu[1] = 1;
    }
    for (std::size_t i = 2; i < n; ++i) {
        const std::size_t q = i / spf[i];
        mu[i] = (q % spf[i] == 0) ? 0 : static_cast<signed char>(-mu[q]);
    }
    g_mu = std::move(mu);
}

}  // namespace

int mobius(std::uint32_t j) {
    if (j == 0) {
        throw domain_error("mobius(0) is undefined");
    }
    if (j >= g_mu.size()) {
        extend_mu(j);
    }
    return g_mu[j];
}

HighPrecisionReal riemann_R(const Real& x, unsigned j_max) {
    if (x <= 1) {
        throw domain_error("R(x) is only computed for x > 1");
    }
    if (j_max < 1) {
        throw domain_error("R(x) needs j_max >= 1");
    }
    const Real t = log(x);
    Real acc(0);
    Real bound(0);
    for (unsigned j = 1; j <= j_max; ++j) {
        const int mu = mobius(j);
        if (mu == 0) {
            continue;
        }
        const HighPrecisionReal lij = li(exp(t / j));
        acc += Real(mu) * lij.value / j;
        bound += lij.error_bound / j;
    }
    HighPrecisionReal out;
    out.value = acc;
    out.error_bound = bound + Real(j_max + 10) * (abs(acc) + 1) * coarse_ulp();
    return out;
}

HighPrecisionReal riemann_refined(const Real& x, unsigned j_max) {
    HighPrecisionReal r = riemann_R(x, j_max);
    const Real t = log(x);
    const Real pi_v = pi_constant();
    r.value += atan(pi_v / t) / pi_v - 1 / t;
    r.error_bound += Real(16) * (abs(r.value) + 1) * coarse_ulp();
    return r;
}

Real pow10_real(int n) {
    return pow(Real(10), n);
}

BigInt pnt_estimate(int n) {
    if (n < 1 || n > 40) {
        throw domain_error("pnt_estimate: n must be in 1..40");
    }
    HighPrecisionReal v;
    v.value = pow10_real(n) / (n * log(Real(10)));
    v.error_bound = Real(8) * (abs(v.value) + 1) * coarse_ulp();
    return round_half_away(v);
}

BigInt rounded_estimate(Estimator which, int n, unsigned j_max) {
    if (n < 1 || n > 40) {
        throw domain_error("rounded_estimate: n must be in 1..40");
    }
    if (which == Estimator::pnt) {
        return pnt_estimate(n);
    }
    const Real x = pow10_real(n);
    HighPrecisionReal v;
    switch (which) {
        case Estimator::li_est:
            v = Li_offset(x);
            break;
        case Estimator::r_est:
            v = riemann_R(x, j_max);
            break;
        case Estimator::refined:
            v = riemann_refined(x, j_max);
            break;
        default:
            throw domain_error("rounded_estimate: unknown estimator");
    }
    return round_half_away(v);
}

BigRat delta_double_prime(const PrimeCountTable& table, int n, Estimator which,
                          unsigned j_max) {
    if (n < 1 || n > PrimeCountTable::max_exponent) {
        throw domain_error("delta_double_prime: exact pi(10^n) is only tabulated for n in 1..25");
    }
    const BigInt rounded = rounded_estimate(which, n, j_max);
    const BigInt& exact = table.entry(n);
    return BigRat(exact - rounded) / BigRat(exact);
}

}  // namespace pi26
