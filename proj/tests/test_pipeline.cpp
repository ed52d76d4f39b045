#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pi26/pipeline.hpp>
#include <pi26/verify.hpp>

#include <string>

using namespace pi26;

TEST_CASE("first-order relative differences start at 61/84 and shrink") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK(compute_delta(table, 2) == BigRat(61) / 84);
    CHECK(compute_delta(table, 3) == BigRat(796) / 1229);
    BigRat previous(1);
    for (int n = 2; n <= 24; ++n) {
        const BigRat d = compute_delta(table, n);
        CHECK(d > 0);
        CHECK(d < previous);
        previous = d;
    }
    CHECK_THROWS_AS(compute_delta(table, 1), domain_error);
    CHECK_THROWS_AS(compute_delta(table, 25), domain_error);
}

TEST_CASE("corrective fits agree on their shared prefix") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const ThieleInterpolant full = fit_phi(table, 25);
    REQUIRE(full.levels.size() == 23);
    for (int k = 4; k <= 24; ++k) {
        const ThieleInterpolant partial = fit_phi(table, k);
        REQUIRE(partial.levels.size() == static_cast<std::size_t>(k - 2));
        for (std::size_t i = 0; i < partial.levels.size(); ++i) {
            CHECK(partial.levels[i] == full.levels[i]);
        }
    }
    CHECK_THROWS_AS(fit_phi(table, 3), domain_error);
    CHECK_THROWS_AS(fit_phi(table, 26), domain_error);
}

TEST_CASE("corrective fit interpolates every relative difference") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const ThieleInterpolant full = fit_phi(table, 25);
    for (int m = 3; m <= 25; ++m) {
        CHECK(full.eval(BigRat(m)) == compute_delta(table, m - 1));
    }
}

TEST_CASE("reconstruction recovers the table exactly from two nodes up") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK(reconstruct(table, 3, 24) == 1229);
    CHECK(reconstruct(table, 24, 24) == table.entry(25));
    CHECK(reconstruct(table, 5, 3) == 78498);
    CHECK(reconstruct(table, 2, 2) == 168);
    for (int x = 2; x <= 10; ++x) {
        CHECK(reconstruct(table, x, x) == table.entry(x + 1));
    }
}

TEST_CASE("reconstruction at x = 1 is approximate only") {
    // 1 - Phi_4(2) recovers about a fifth of the constant extrapolation P_1(2) = 4;
    // the rounded quotient lands at 20, not at pi(10^2) = 25.
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK(reconstruct(table, 1, 1) == 20);
}

TEST_CASE("reconstruction rejects out-of-range arguments") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK_THROWS_AS(reconstruct(table, 0, 5), domain_error);
    CHECK_THROWS_AS(reconstruct(table, 5, 0), domain_error);
    CHECK_THROWS_AS(reconstruct(table, 25, 25), domain_error);
    CHECK_THROWS_AS(reconstruct(table, 1, 25), domain_error);
}

TEST_CASE("corrected extrapolation reproduces the pinned integers") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    CHECK(extrapolate_corrected(table, 25) == BigInt("1699246738822618041025224"));
    CHECK(extrapolate_corrected(table, 24) == BigInt("176846307027334692763889"));
    CHECK_THROWS_AS(extrapolate_corrected(table, 3), domain_error);
    CHECK_THROWS_AS(extrapolate_corrected(table, 26), domain_error);
}

TEST_CASE("corrected relative differences match the golden 6-digit values") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const auto rows = read_tsv(default_data_dir() + "/golden/delta_prime_values.tsv");
    REQUIRE(rows.size() == 21);
    for (const auto& row : rows) {
        const int m = std::stoi(row.at(0));
        const std::string rendered = to_sci(compute_delta_prime(table, m - 1), 6);
        CHECK(parse_decimal(rendered) == parse_decimal(row.at(1)));
    }
    CHECK_THROWS_AS(compute_delta_prime(table, 3), domain_error);
    CHECK_THROWS_AS(compute_delta_prime(table, 25), domain_error);
}

TEST_CASE("delta series covers both difference families") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const DeltaSeries s = compute_delta_series(table);
    REQUIRE(s.delta.size() == 23);
    REQUIRE(s.delta_prime.size() == 21);
    CHECK(s.delta.at(3) == compute_delta(table, 2));
    CHECK(s.delta.at(25) == compute_delta(table, 24));
    CHECK(s.delta_prime.at(5) == compute_delta_prime(table, 4));
    CHECK(s.delta_prime.at(25) == compute_delta_prime(table, 24));
}

TEST_CASE("residual-trend fit passes through its five signed points") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const ThieleInterpolant psi = fit_psi(table);
    REQUIRE(psi.nodes.size() == 5);
    REQUIRE(psi.levels.size() == 5);
    for (int n = 20; n <= 24; ++n) {
        CHECK(psi.eval(BigRat(n)) == compute_delta_prime(table, n));
    }
    CHECK(to_sci(abs(psi.eval(BigRat(25))), 6) == "3.59768e-8");
}

TEST_CASE("conjectured range reproduces the pinned bounds") {
    const PrimeCountTable table = PrimeCountTable::builtin();
    const ConjectureResult r =
        make_conjecture(table, parse_decimal("7e-9"), parse_decimal("7.1e-9"));
    CHECK(r.center == BigInt("1699246738822618041025224"));
    CHECK(r.offset_low == BigInt("11894727171758326"));
    CHECK(r.offset_high == BigInt("12064651845640588"));
    CHECK(r.symmetric_low == BigInt("1699246726757966195384636"));
    CHECK(r.symmetric_high == BigInt("1699246750887269886665812"));
    CHECK(r.onesided_low == BigInt("1699246750717345212783550"));
    CHECK(r.onesided_high == BigInt("1699246750887269886665812"));
    CHECK(to_sci(r.psi_abs, 6) == "3.59768e-8");
}

TEST_CASE("offset forms differ by the second-order term") {
    const BigInt center("1699246738822618041025224");
    const ConjectureResult first = conjecture_range(center, parse_decimal("7e-9"),
                                                    parse_decimal("7.1e-9"),
                                                    OffsetForm::first_order);
    const ConjectureResult exact = conjecture_range(center, parse_decimal("7e-9"),
                                                    parse_decimal("7.1e-9"),
                                                    OffsetForm::exact);
    CHECK(first.offset_high == BigInt("12064651845640588"));
    CHECK(first.offset_low == BigInt("11894727171758326"));
    CHECK(exact.offset_high == BigInt("12064651931299617"));
    CHECK(exact.offset_low == BigInt("11894727255021417"));
    CHECK(exact.offset_high > first.offset_high);
}

TEST_CASE("range arithmetic edge cases") {
    const BigInt center("1000");
    const ConjectureResult degenerate =
        conjecture_range(center, BigRat(0), BigRat(0));
    CHECK(degenerate.symmetric_low == 1000);
    CHECK(degenerate.symmetric_high == 1000);
    CHECK(degenerate.onesided_low == 1000);
    CHECK(degenerate.onesided_high == 1000);

    const ConjectureResult wide =
        conjecture_range(center, BigRat(0), BigRat(1) / 2);
    CHECK(wide.offset_high == 500);
    CHECK(wide.symmetric_low == 500);
    CHECK(wide.symmetric_high == 1500);

    CHECK_THROWS_AS(conjecture_range(center, BigRat(-1) / 10, BigRat(1) / 10),
                    domain_error);
    CHECK_THROWS_AS(conjecture_range(center, BigRat(1) / 2, BigRat(1) / 4),
                    domain_error);
    CHECK_THROWS_AS(conjecture_range(center, BigRat(0), BigRat(1)), domain_error);
}
