#include <catch2/catch_amalgamated.hpp>

#include "slopecalc/laurent.hpp"

using namespace slopecalc;

namespace {
LaurentPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms) p = p + LaurentPolynomial::monomial(c, e);
    return p;
}
}  // namespace

TEST_CASE("arithmetic keeps the term map free of zeros") {
    const auto a = poly({{0, 1}, {1, -1}});
    const auto b = poly({{1, 1}});
    CHECK((a + b) == LaurentPolynomial(1));
    CHECK((a - a).is_zero());
    CHECK((a * b) == poly({{1, 1}, {2, -1}}));
    CHECK((-a) == poly({{0, -1}, {1, 1}}));
}

TEST_CASE("negative exponents are first-class") {
    const auto p = poly({{-2, 3}, {0, 1}});
    CHECK(p.min_exponent() == -2);
    CHECK(p.max_exponent() == 0);
    CHECK(p.span() == 2);
    CHECK((p * poly({{2, 1}})) == poly({{0, 3}, {2, 1}}));
}

TEST_CASE("evaluate_at_unit handles both units") {
    const auto p = poly({{-1, 2}, {0, -3}, {2, 1}});
    CHECK(p.evaluate_at_unit(1) == 0);
    CHECK(p.evaluate_at_unit(-1) == -4);
}

TEST_CASE("divide_exact performs exact Laurent division") {
    const auto dividend = poly({{0, -1}, {3, -1}});       // -(1 + t^3)
    const auto divisor = poly({{0, 1}, {1, 1}});          // 1 + t
    CHECK(dividend.divide_exact(divisor) == poly({{0, -1}, {1, 1}, {2, -1}}));

    const auto shifted = poly({{-2, 1}, {-1, 1}});        // t^-2 (1 + t)
    CHECK(poly({{-2, 1}, {0, -1}}).divide_exact(shifted) == poly({{0, 1}, {1, -1}}));

    CHECK_THROWS_AS(poly({{0, 1}, {1, 1}}).divide_exact(poly({{0, 2}})), internal_error);
    CHECK_THROWS_AS(poly({{0, 1}}).divide_exact(poly({{0, 1}, {1, 1}})), internal_error);
    CHECK(LaurentPolynomial().divide_exact(divisor).is_zero());
}

TEST_CASE("round-trip: (a*b)/b == a") {
    const auto a = poly({{-1, 2}, {0, -5}, {3, 7}});
    const auto b = poly({{-2, 3}, {0, 1}, {1, -4}});
    CHECK((a * b).divide_exact(b) == a);
    CHECK((a * b).divide_exact(a) == b);
}

TEST_CASE("normalization shifts to exponent zero with positive lead") {
    CHECK(poly({{-3, -1}, {-2, 1}, {-1, -1}}).normalized() == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(poly({{2, 5}}).normalized() == LaurentPolynomial(5));
    CHECK(LaurentPolynomial().normalized().is_zero());
}

TEST_CASE("text form matches the ascending-exponent notation") {
    CHECK(poly({{0, 1}, {1, -3}, {2, 1}}).to_string() == "1-3t+t^2");
    CHECK(poly({{0, 1}, {1, -1}, {2, 1}}).to_string() == "1-t+t^2");
    CHECK(LaurentPolynomial(1).to_string() == "1");
    CHECK(LaurentPolynomial().to_string() == "0");
    CHECK(poly({{-1, 1}, {1, 2}}).to_string() == "t^-1+2t");
    CHECK(poly({{1, -1}}).to_string() == "-t");
}
