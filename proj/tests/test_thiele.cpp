#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pi26/thiele.hpp>

#include <vector>

using namespace pi26;

namespace {

std::vector<std::pair<BigRat, BigRat>> pts(
    std::initializer_list<std::pair<int, BigRat>> raw) {
    std::vector<std::pair<BigRat, BigRat>> out;
    for (const auto& [x, y] : raw) {
        out.emplace_back(BigRat(x), y);
    }
    return out;
}

}  // namespace

TEST_CASE("affine data terminates the fraction early and extrapolates") {
    const ThieleInterpolant t =
        fit_thiele(pts({{0, BigRat(1)}, {1, BigRat(2)}, {2, BigRat(3)}}));
    REQUIRE(t.nodes.size() == 3);
    // the second inverted-difference column is constant, so only two levels
    REQUIRE(t.levels.size() == 2);
    CHECK(t.levels[0] == 1);
    CHECK(t.levels[1] == 1);
    CHECK(t.eval(BigRat(0)) == 1);
    CHECK(t.eval(BigRat(2)) == 3);
    CHECK(t.eval(BigRat(4)) == 5);
}

TEST_CASE("two-point fit folds to c1 + K*x") {
    const ThieleInterpolant t = fit_thiele(pts({{0, BigRat(1)}, {1, BigRat(2)}}));
    const auto [cs, K] = t.folded();
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == 1);
    CHECK(K == 1);
    CHECK(ThieleInterpolant::eval_folded(cs, K, t.nodes, BigRat(4)) == 5);
}

TEST_CASE("zero denominator mid-column is a breakdown naming level and node") {
    try {
        fit_thiele(pts({{0, BigRat(0)}, {1, BigRat(1)}, {2, BigRat(0)}}));
        FAIL("expected breakdown_error");
    } catch (const breakdown_error& e) {
        CHECK(e.level == 1);
        CHECK(e.node == 2);
    }
}

TEST_CASE("a genuine rational function round-trips with a detectable pole") {
    // fit of (0,1),(1,3),(2,2) is f(x) = 1 + 2x/(3x - 2), pole at x = 2/3
    const ThieleInterpolant t =
        fit_thiele(pts({{0, BigRat(1)}, {1, BigRat(3)}, {2, BigRat(2)}}));
    CHECK(t.eval(BigRat(0)) == 1);
    CHECK(t.eval(BigRat(1)) == 3);
    CHECK(t.eval(BigRat(2)) == 2);
    CHECK(t.eval(BigRat(4)) == BigRat(1) + BigRat(8) / 10);
    CHECK_THROWS_AS(t.eval(BigRat(2) / 3), pole_error);
    try {
        t.eval(BigRat(2) / 3);
    } catch (const pole_error& e) {
        CHECK(e.at == BigRat(2) / 3);
    }
}

TEST_CASE("folded evaluation equals direct evaluation away from poles") {
    const ThieleInterpolant t =
        fit_thiele(pts({{0, BigRat(1)}, {1, BigRat(3)}, {2, BigRat(2)}}));
    const auto [cs, K] = t.folded();
    REQUIRE(cs.size() == 2);
    for (const int num : {-7, -1, 0, 1, 2, 5, 9}) {
        const BigRat x = BigRat(num) / 4;
        CHECK(ThieleInterpolant::eval_folded(cs, K, t.nodes, x) == t.eval(x));
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(fit_thiele({}), domain_error);
    CHECK_THROWS_AS(fit_thiele(pts({{1, BigRat(5)}})), domain_error);
    CHECK_THROWS_AS(fit_thiele(pts({{1, BigRat(5)}, {1, BigRat(6)}})), domain_error);
}

TEST_CASE("folding requires a usable affine tail") {
    ThieleInterpolant t;
    t.nodes = {BigRat(0), BigRat(1)};
    t.levels = {BigRat(5)};
    CHECK_THROWS_AS(t.folded(), fold_error);
    t.levels = {BigRat(1), BigRat(0)};
    CHECK_THROWS_AS(t.folded(), fold_error);
}
