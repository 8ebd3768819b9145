#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "slopecalc/mapping_class.hpp"

using namespace slopecalc;

namespace {

MappingClass random_sl2(std::mt19937& rng, int word_length = 8) {
    const MappingClass s = plumbing_twist();           // [[0,-1],[1,0]]
    const MappingClass t = MappingClass{1, 1, 0, 1};   // [[1,1],[0,1]]
    const MappingClass t_inv = inverse(t);
    MappingClass m = identity_mapping_class();
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < word_length; ++i) {
        switch (pick(rng)) {
            case 0: m = compose(m, s); break;
            case 1: m = compose(m, t); break;
            default: m = compose(m, t_inv); break;
        }
    }
    return m;
}

Slope random_slope(std::mt19937& rng) {
    std::uniform_int_distribution<Int> coord(-9, 9);
    while (true) {
        const Int x = coord(rng);
        const Int y = coord(rng);
        if (x == 0 && y == 0) continue;
        return make_slope(x, y);
    }
}

}  // namespace

TEST_CASE("slope canonicalization") {
    CHECK(make_slope(2, 4) == Slope{1, 2});
    CHECK(make_slope(-3, 6) == Slope{1, -2});
    CHECK(make_slope(0, -5) == Slope{0, 1});
    CHECK(make_slope(-7, 0) == Slope{1, 0});
    CHECK_THROWS_AS(make_slope(0, 0), parse_error);

    CHECK(parse_slope("3/-6") == Slope{1, -2});
    CHECK(parse_slope("3 -6") == Slope{1, -2});
    CHECK_THROWS_AS(parse_slope("1/"), parse_error);
    CHECK_THROWS_AS(parse_slope("x y"), parse_error);
}

TEST_CASE("mapping class construction guards the determinant") {
    CHECK_THROWS_AS(make_mapping_class(1, 1, 1, 1), parse_error);
    CHECK(parse_mapping_class("0 -1 1 0") == plumbing_twist());
    CHECK_THROWS_AS(parse_mapping_class("1 0 0"), parse_error);
}

TEST_CASE("composition examples") {
    const MappingClass s = plumbing_twist();
    CHECK(compose(identity_mapping_class(), s) == s);
    CHECK(compose(s, s) == (MappingClass{-1, 0, 0, -1}));
    CHECK(compose(MappingClass{1, 1, 0, 1}, MappingClass{1, 0, 1, 1}) ==
          (MappingClass{2, 1, 1, 1}));
}

TEST_CASE("action on slopes") {
    CHECK(act_on_slope(plumbing_twist(), Slope{1, 0}) == Slope{0, 1});
    CHECK(act_on_slope(identity_mapping_class(), Slope{3, 5}) == Slope{3, 5});
    CHECK(act_on_slope(MappingClass{1, 1, 0, 1}, Slope{0, 1}) == Slope{1, 1});
}

TEST_CASE("intersection form") {
    const HomologyClass xi{Rational(1), Rational(0)};
    const HomologyClass eta{Rational(0), Rational(1)};
    CHECK(intersection_form(xi, eta) == Rational(1));
    CHECK(intersection_form(eta, eta) == Rational(0));
    CHECK(intersection_form(HomologyClass{Rational(2), Rational(1)},
                            HomologyClass{Rational(1), Rational(1)}) == Rational(1));
}

TEST_CASE("Dehn twist matrices") {
    CHECK(dehn_twist(Slope{1, 0}) == (MappingClass{1, 1, 0, 1}));
    CHECK(dehn_twist(Slope{0, 1}) == (MappingClass{1, 0, -1, 1}));
    const Slope c = make_slope(2, 3);
    CHECK(act_on_slope(dehn_twist(c), c) == c);
    CHECK(dehn_twist(c).p * dehn_twist(c).s - dehn_twist(c).q * dehn_twist(c).r == 1);
}

TEST_CASE("torsion orders") {
    CHECK(torsion_order(identity_mapping_class()) == 1);
    CHECK(torsion_order(plumbing_twist()) == 4);
    CHECK(torsion_order(MappingClass{-1, 0, 0, -1}) == 2);
    CHECK(torsion_order(MappingClass{0, -1, 1, -1}) == 3);
    CHECK(torsion_order(MappingClass{0, 1, -1, 1}) == 6);
    CHECK_FALSE(torsion_order(MappingClass{1, 1, 0, 1}).has_value());
}

TEST_CASE("xi-fixing and plumbing predicates") {
    CHECK(fixes_xi_up_to_sign(MappingClass{1, 5, 0, 1}));
    CHECK(fixes_xi_up_to_sign(MappingClass{-1, 3, 0, -1}));
    CHECK_FALSE(fixes_xi_up_to_sign(plumbing_twist()));

    CHECK(is_plumbing(plumbing_twist()));
    CHECK_FALSE(is_plumbing(identity_mapping_class()));
    CHECK_FALSE(is_plumbing(MappingClass{0, 1, -1, 0}));
}

TEST_CASE("randomized algebra properties") {
    std::mt19937 rng(555001);
    for (int trial = 0; trial < 500; ++trial) {
        const MappingClass a = random_sl2(rng);
        const MappingClass b = random_sl2(rng);
        const Slope c = random_slope(rng);

        CHECK(a.p * a.s - a.q * a.r == 1);
        CHECK(compose(a, b).p * compose(a, b).s - compose(a, b).q * compose(a, b).r == 1);

        // group action
        CHECK(act_on_slope(compose(a, b), c) == act_on_slope(a, act_on_slope(b, c)));

        // symplectic invariance of the intersection form
        std::uniform_int_distribution<Int> coord(-9, 9);
        const HomologyClass alpha{Rational(coord(rng)), Rational(coord(rng))};
        const HomologyClass beta{Rational(coord(rng)), Rational(coord(rng))};
        CHECK(intersection_form(apply(a, alpha), apply(a, beta)) ==
              intersection_form(alpha, beta));

        // naturality of Dehn twists
        CHECK(dehn_twist(act_on_slope(a, c)) ==
              compose(a, compose(dehn_twist(c), inverse(a))));

        // inverses
        CHECK(compose(a, inverse(a)) == identity_mapping_class());
    }
}

TEST_CASE("torsion orders over random elements stay in {1,2,3,4,6}") {
    std::mt19937 rng(918273);
    const std::set<int> allowed{1, 2, 3, 4, 6};
    for (int trial = 0; trial < 500; ++trial) {
        const MappingClass m = random_sl2(rng, 1 + static_cast<int>(rng() % 10));
        const auto order = torsion_order(m);
        if (!order) continue;
        CHECK(allowed.contains(*order));
        MappingClass power = identity_mapping_class();
        for (int i = 0; i < *order; ++i) power = compose(power, m);
        CHECK(power == identity_mapping_class());
    }
}

TEST_CASE("primitive slope enumeration is canonical and ordered") {
    const auto slopes = primitive_slopes_up_to(1);
    CHECK(slopes == std::vector<Slope>{Slope{0, 1}, Slope{1, -1}, Slope{1, 0}, Slope{1, 1}});
    CHECK_THROWS_WITH(primitive_slopes_up_to(0), "N >= 1 required");

    const auto big = primitive_slopes_up_to(12);
    std::set<Slope> unique(big.begin(), big.end());
    CHECK(unique.size() == big.size());
    for (const Slope& s : big) {
        CHECK(std::gcd(std::llabs(s.x), std::llabs(s.y)) == 1);
        CHECK((s.x > 0 || (s.x == 0 && s.y == 1)));
    }
}
