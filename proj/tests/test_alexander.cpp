#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "oracle/seifert_matrix.hpp"
#include "slopecalc/burau.hpp"
#include "slopecalc/genus.hpp"

using namespace slopecalc;

namespace {

std::vector<long long> coefficients(const LaurentPolynomial& p) {
    std::vector<long long> out(static_cast<std::size_t>(p.span()) + 1, 0);
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
    return out;
}

// All words of the given length over generators 1..n-1 with both signs.
void for_each_word(int strands, int length, const std::function<void(const BraidWord&)>& fn) {
    std::vector<int> alphabet;
    for (int i = 1; i < strands; ++i) {
        alphabet.push_back(i);
        alphabet.push_back(-i);
    }
    std::vector<int> word(static_cast<std::size_t>(length), 0);
    const auto total = static_cast<long long>(std::pow(alphabet.size(), length));
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int pos = 0; pos < length; ++pos) {
            word[static_cast<std::size_t>(pos)] = alphabet[rest % alphabet.size()];
            rest /= static_cast<long long>(alphabet.size());
        }
        fn(BraidWord{strands, word});
    }
}

}  // namespace

TEST_CASE("Alexander polynomial of the standard small knots") {
    const auto trefoil = alexander_polynomial(BraidWord{2, {1, 1, 1}});
    CHECK(trefoil.to_string() == "1-t+t^2");

    const auto fig8 = alexander_polynomial(BraidWord{3, {1, -2, 1, -2}});
    CHECK(fig8.to_string() == "1-3t+t^2");

    CHECK(alexander_polynomial(BraidWord{1, {}}) == LaurentPolynomial(1));
    CHECK(alexander_polynomial(BraidWord{2, {1}}) == LaurentPolynomial(1));
    CHECK(alexander_polynomial(BraidWord{2, {-1, -1, -1}}).to_string() == "1-t+t^2");

    const auto cinquefoil = alexander_polynomial(BraidWord{2, {1, 1, 1, 1, 1}});
    CHECK(cinquefoil.to_string() == "1-t+t^2-t^3+t^4");

    CHECK_THROWS_AS(alexander_polynomial(BraidWord{2, {1, 1}}), hypothesis_error);
}

TEST_CASE("Seifert-matrix oracle reproduces the same small knots") {
    CHECK(oracle::alexander_coefficients(BraidWord{2, {1, 1, 1}}) ==
          std::vector<long long>{1, -1, 1});
    CHECK(oracle::alexander_coefficients(BraidWord{3, {1, -2, 1, -2}}) ==
          std::vector<long long>{1, -3, 1});
    CHECK(oracle::alexander_coefficients(BraidWord{2, {1}}) == std::vector<long long>{1});
    CHECK(oracle::alexander_coefficients(BraidWord{2, {1, -1, 1}}) == std::vector<long long>{1});
    CHECK(oracle::alexander_coefficients(BraidWord{2, {1, 1, 1, 1, 1}}) ==
          std::vector<long long>{1, -1, 1, -1, 1});
}

TEST_CASE("Burau route agrees with the Seifert oracle on short words") {
    long long checked = 0;
    for (int strands = 1; strands <= 3; ++strands)
        for (int length = 0; length <= 6; ++length)
            for_each_word(strands, length, [&](const BraidWord& b) {
                if (!closure_is_knot(b)) return;
                ++checked;
                CHECK(coefficients(alexander_polynomial(b)) == oracle::alexander_coefficients(b));
            });
    CHECK(checked > 1000);
}

TEST_CASE("palindrome symmetry, even span and unit determinant") {
    std::mt19937 rng(987123);
    std::uniform_int_distribution<int> strands_dist(2, 4);
    std::uniform_int_distribution<int> len_dist(1, 10);
    int found = 0;
    while (found < 300) {
        const int n = strands_dist(rng);
        BraidWord b{n, {}};
        const int len = len_dist(rng);
        std::uniform_int_distribution<int> gen(1, n - 1);
        for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (rng() % 2 ? 1 : -1));
        if (!closure_is_knot(b)) continue;
        ++found;
        const LaurentPolynomial delta = alexander_polynomial(b);
        CHECK(std::llabs(delta.evaluate_at_unit(1)) == 1);
        CHECK(delta.span() % 2 == 0);
        const auto coeffs = coefficients(delta);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            CHECK(coeffs[i] == coeffs[coeffs.size() - 1 - i]);
        CHECK(seifert_genus_upper(b) >= delta.span() / 2);
    }
}

TEST_CASE("torus knots have exact genus (p-1)(q-1)/2") {
    for (int p = 2; p <= 4; ++p)
        for (int q = 2; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const GenusEstimate g = knot_genus(torus_braid(p, q));
            CHECK(g.exact);
            CHECK(g.lower == static_cast<long long>(p - 1) * (q - 1) / 2);
        }
}

TEST_CASE("knot_genus certification routes") {
    const GenusEstimate trefoil = knot_genus(BraidWord{2, {1, 1, 1}});
    CHECK(trefoil == GenusEstimate{1, 1, true, GenusMethod::HomogeneousBraid});

    const GenusEstimate fig8 = knot_genus(BraidWord{3, {1, -2, 1, -2}});
    CHECK(fig8.exact);
    CHECK(fig8.lower == 1);
    CHECK(fig8.upper == 1);

    const GenusEstimate unknot = knot_genus(BraidWord{1, {}});
    CHECK(unknot == GenusEstimate{0, 0, true, GenusMethod::HomogeneousBraid});

    // an unknot diagram with a mixed-sign generator: neither certification
    // route applies, so the estimate stays an honest interval
    const BraidWord nonhom{3, {1, -1, 1, 2}};
    REQUIRE(closure_is_knot(nonhom));
    CHECK_FALSE(is_homogeneous(nonhom));
    const GenusEstimate estimate = knot_genus(nonhom);
    CHECK(estimate == GenusEstimate{0, 1, false, GenusMethod::AlexanderSpan});
    CHECK(is_nontrivial_knot(nonhom) == TriState::Unknown);
}

TEST_CASE("nontriviality verdicts") {
    CHECK(is_nontrivial_knot(BraidWord{2, {1, 1, 1}}) == TriState::Nontrivial);
    CHECK(is_nontrivial_knot(BraidWord{1, {}}) == TriState::Trivial);
    CHECK(is_nontrivial_knot(BraidWord{2, {1}}) == TriState::Trivial);
    CHECK(is_nontrivial_knot(BraidWord{3, {1, -2, 1, -2}}) == TriState::Nontrivial);
    CHECK_THROWS_AS(is_nontrivial_knot(BraidWord{2, {1, 1}}), hypothesis_error);
}
