#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "slopecalc/serialize.hpp"
#include "slopecalc/svg.hpp"

using namespace slopecalc;

namespace {

SatelliteSpec plumbing_spec() {
    return SatelliteSpec::make(BraidTorusSpec::from_braid(torus_braid(2, 3)), plumbing_twist(),
                               BraidTorusSpec::from_braid(torus_braid(2, 3)));
}

}  // namespace

TEST_CASE("rational text form round-trips") {
    CHECK(to_string(Rational(2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(parse_rational("2") == Rational(2));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
}

TEST_CASE("slope report JSON round-trips exactly") {
    const SatelliteSpec spec = plumbing_spec();
    for (const Slope& s : primitive_slopes_up_to(4)) {
        const SlopeReport report = slope_report(spec, s);
        const json j = to_json(report);
        CHECK(slope_report_from_json(j) == report);
    }

    const SatelliteSpec skew = SatelliteSpec::make(
        BraidTorusSpec::from_braid(torus_braid(2, 3)), make_mapping_class(1, 0, 1, 1),
        BraidTorusSpec::from_braid(torus_braid(2, 3)));
    for (const Slope& s : primitive_slopes_up_to(3)) {
        const SlopeReport report = slope_report(skew, s);
        CHECK(slope_report_from_json(to_json(report)) == report);
    }
}

TEST_CASE("slope report JSON schema fields") {
    const SlopeReport report = slope_report(plumbing_spec(), Slope{1, 1});
    const json j = to_json(report);
    CHECK(j.at("slope") == json::array({1, 1}));
    CHECK(j.at("norm").at("value") == "2");
    CHECK(j.at("norm").at("kind") == "exact");
    CHECK(j.at("singular_genus").at("exact") == 2);
    CHECK(j.at("genus_upper") == 2);
}

TEST_CASE("verdict JSON round-trips") {
    const SatelliteSpec spec = plumbing_spec();
    const ExtendabilityVerdict v = finiteness_from_norm(spec);
    CHECK(verdict_from_json(to_json(v)) == v);

    std::map<Slope, Rational> values;
    for (const Slope& s : primitive_slopes_up_to(2))
        values[s] = plumbing_norm(spec, to_homology(s)).value;
    const ExtendabilityVerdict k = index_lower_bound(values);
    CHECK(verdict_from_json(to_json(k)) == k);
    CHECK(to_json(k).at("k") == 3);
}

TEST_CASE("JSON dumps are deterministic") {
    const SlopeReport report = slope_report(plumbing_spec(), Slope{2, 1});
    CHECK(dump_json(to_json(report)) == dump_json(to_json(report)));
    // keys are emitted sorted
    const std::string text = dump_json(to_json(report));
    CHECK(text.find("\"genus_upper\"") < text.find("\"norm\""));
    CHECK(text.find("\"norm\"") < text.find("\"singular_genus\""));
}

TEST_CASE("unit ball SVG contains the rhombus data") {
    const UnitBallResult ball = unit_ball_polygon(plumbing_spec());
    std::ostringstream out;
    write_unit_ball_svg(ball, out);
    const std::string svg = out.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path d=\"M ") != std::string::npos);
    CHECK(svg.find("Z\"") != std::string::npos);
    CHECK(svg.find("(1, 0)") != std::string::npos);
    CHECK(svg.find("(0, -1)") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);

    std::ostringstream again;
    write_unit_ball_svg(ball, again);
    CHECK(svg == again.str());
}

TEST_CASE("degenerate balls refuse to render") {
    const SatelliteSpec flat = SatelliteSpec::make(
        BraidTorusSpec::from_braid(torus_braid(2, 3)), identity_mapping_class(),
        BraidTorusSpec::from_braid(torus_braid(2, 3)));
    const UnitBallResult ball = unit_ball_polygon(flat);
    std::ostringstream out;
    CHECK_THROWS_AS(write_unit_ball_svg(ball, out), hypothesis_error);
}

TEST_CASE("unknotted torus facts serialize") {
    const json j = to_json(unknotted_torus_facts());
    CHECK(j.at("extendable_subgroup_index") == 3);
    CHECK(j.at("stable_extendable_subgroup") == "all_of_mod_t2");
    CHECK(j.at("citations").at("stable") == "Section 6.2");
}
