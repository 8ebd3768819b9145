// slope-calc: batch calculator for slope invariants of braid-satellite
// knotted tori.
//
// Exit codes: 0 success, 1 violated mathematical hypothesis (the message
// names the citation tag of the violated criterion), 2 parse/usage errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slopecalc/braid.hpp"
#include "slopecalc/burau.hpp"
#include "slopecalc/extendability.hpp"
#include "slopecalc/genus.hpp"
#include "slopecalc/mapping_class.hpp"
#include "slopecalc/satellite.hpp"
#include "slopecalc/serialize.hpp"
#include "slopecalc/svg.hpp"
#include "slopecalc/word_oracle.hpp"

namespace sc = slopecalc;

namespace {

struct BraidInput {
    std::string word;
    std::string word_file;
    int strands = 0;

    sc::BraidWord parse(const std::string& what) const {
        if (!word_file.empty()) {
            std::ifstream in(word_file);
            if (!in) throw sc::parse_error("cannot open " + what + " file '" + word_file + "'");
            std::string header;
            std::getline(in, header);
            if (header.rfind("strands=", 0) != 0)
                throw sc::parse_error("braid file must start with a 'strands=N' header line");
            int n = 0;
            try {
                n = std::stoi(header.substr(8));
            } catch (const std::exception&) {
                throw sc::parse_error("invalid strand count in header '" + header + "'");
            }
            std::stringstream rest;
            rest << in.rdbuf();
            return sc::parse_braid(rest.str(), n);
        }
        if (strands < 1)
            throw sc::parse_error("missing strand count for the " + what + " braid");
        return sc::parse_braid(word, strands);
    }
};

sc::SatelliteSpec build_satellite(const BraidInput& companion, const BraidInput& pattern,
                                  const std::string& twist_text,
                                  std::optional<long long> companion_genus,
                                  std::optional<long long> pattern_genus) {
    auto companion_spec = sc::BraidTorusSpec::from_braid(companion.parse("companion"), companion_genus);
    auto pattern_spec = sc::BraidTorusSpec::from_braid(pattern.parse("pattern"), pattern_genus);
    sc::require_nontrivial(companion_spec, "companion");
    sc::require_nontrivial(pattern_spec, "pattern");
    return sc::SatelliteSpec::make(std::move(companion_spec), sc::parse_mapping_class(twist_text),
                                   std::move(pattern_spec));
}

std::string csv_field(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string report_csv(const std::vector<sc::SlopeReport>& reports,
                       const std::optional<sc::ExtendabilityVerdict>& verdict) {
    std::string out =
        "slope_x,slope_y,norm_value,norm_kind,singular_lower,singular_upper,singular_exact,"
        "genus_upper\n";
    for (const sc::SlopeReport& r : reports) {
        out += std::to_string(r.slope.x) + "," + std::to_string(r.slope.y) + ",";
        out += (r.norm ? sc::to_string(r.norm->value) : std::string()) + ",";
        out += (r.norm ? sc::to_string(r.norm->kind) : std::string()) + ",";
        out += csv_field(r.genus.singular_lower) + "," + csv_field(r.genus.singular_upper) + "," +
               csv_field(r.genus.singular_exact) + "," + csv_field(r.genus.genus_upper) + "\n";
    }
    if (verdict)
        out += "index_lower_bound," + std::to_string(*verdict->index_bound) + ",,,,,,\n";
    return out;
}

std::string report_text(const std::vector<sc::SlopeReport>& reports,
                        const std::optional<sc::ExtendabilityVerdict>& verdict) {
    std::string out = "slope      norm        g*_lower  g*_upper  g*_exact  genus_upper\n";
    for (const sc::SlopeReport& r : reports) {
        char line[160];
        const std::string slope = std::to_string(r.slope.x) + "/" + std::to_string(r.slope.y);
        const std::string norm =
            r.norm ? sc::to_string(r.norm->value) + (r.norm->kind == sc::NormKind::Exact ? "" : "+")
                   : std::string("-");
        std::snprintf(line, sizeof(line), "%-10s %-11s %-9s %-9s %-9s %s\n", slope.c_str(),
                      norm.c_str(),
                      (r.genus.singular_lower ? std::to_string(*r.genus.singular_lower) : "-").c_str(),
                      (r.genus.singular_upper ? std::to_string(*r.genus.singular_upper) : "-").c_str(),
                      (r.genus.singular_exact ? std::to_string(*r.genus.singular_exact) : "-").c_str(),
                      (r.genus.genus_upper ? std::to_string(*r.genus.genus_upper) : "-").c_str());
        out += line;
    }
    if (verdict)
        out += "index of the stable extendable subgroup >= " +
               std::to_string(*verdict->index_bound) + " (" + verdict->justification.citation +
               ")\n";
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw sc::parse_error("cannot open output file '" + output_path + "'");
        out << text;
    }
}

std::vector<sc::Slope> collect_slopes(const std::vector<std::string>& slope_texts,
                                      std::optional<long long> slope_range) {
    std::vector<sc::Slope> slopes;
    for (const std::string& s : slope_texts) slopes.push_back(sc::parse_slope(s));
    if (slope_range) {
        if (*slope_range < 1) throw sc::parse_error("N >= 1 required");
        for (const sc::Slope& s : sc::primitive_slopes_up_to(*slope_range)) slopes.push_back(s);
    }
    if (slopes.empty()) throw sc::parse_error("no slopes given; use --slope or --slope-range");
    return slopes;
}

long long node_limit_from_env(std::optional<long long> flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("SLOPE_CALC_NODE_LIMIT")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw sc::parse_error("invalid SLOPE_CALC_NODE_LIMIT value");
        }
    }
    return sc::kDefaultNodeLimit;
}

// "x y X Y" letter words: distinct lowercase letters become generators
// 1, 2, ... in order of first appearance; uppercase means inverse.
sc::GroupWord parse_letter_word(const std::string& text, std::vector<char>& alphabet) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() != 1 || !std::isalpha(static_cast<unsigned char>(token[0])))
            throw sc::parse_error("invalid word token '" + token + "'");
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
        int index = 0;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == lower) index = static_cast<int>(i) + 1;
        if (index == 0) {
            alphabet.push_back(lower);
            index = static_cast<int>(alphabet.size());
        }
        letters.push_back(std::isupper(static_cast<unsigned char>(token[0])) ? -index : index);
    }
    const int rank = std::max<int>(1, static_cast<int>(alphabet.size()));
    return sc::reduce(rank, letters);
}

std::string letters_for(const sc::GroupWord& w, const std::vector<char>& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        const int letter = w.letters[i];
        char c = alphabet[static_cast<std::size_t>(std::abs(letter)) - 1];
        if (letter < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out += c;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact slope invariants of braid-satellite knotted tori"};
    app.require_subcommand(1);

    // --- braid ---------------------------------------------------------
    BraidInput braid_in;
    auto* braid_cmd = app.add_subcommand("braid", "classical invariants of a braid closure");
    braid_cmd->add_option("--word", braid_in.word, "braid word, e.g. \"1 -2 1 -2\"");
    braid_cmd->add_option("--word-file", braid_in.word_file,
                          "file with a strands=N header line followed by the word");
    braid_cmd->add_option("--strands", braid_in.strands, "strand count");

    // --- torus-norm ----------------------------------------------------
    BraidInput torus_in;
    std::vector<std::string> torus_slopes;
    std::optional<long long> torus_range;
    std::optional<long long> torus_genus;
    std::string torus_format = "json";
    auto* torus_cmd = app.add_subcommand("torus-norm", "seminorm of a standard braid torus");
    torus_cmd->add_option("--word", torus_in.word, "braid word");
    torus_cmd->add_option("--word-file", torus_in.word_file, "braid word file");
    torus_cmd->add_option("--strands", torus_in.strands, "strand count");
    torus_cmd->add_option("--slope", torus_slopes, "slope \"x/y\" or \"x y\" (repeatable)");
    torus_cmd->add_option("--slope-range", torus_range, "all primitive slopes with max(|x|,|y|) <= N");
    torus_cmd->add_option("--genus", torus_genus, "override the computed genus");
    torus_cmd->add_option("--format", torus_format, "json|csv|text")->default_val("json");

    // --- satellite -----------------------------------------------------
    BraidInput companion_in, pattern_in;
    std::vector<std::string> sat_slopes;
    std::optional<long long> sat_range;
    std::optional<long long> companion_genus, pattern_genus;
    std::string twist_text = "0 -1 1 0";
    std::string sat_format = "json";
    std::string sat_output;
    auto* sat_cmd = app.add_subcommand("satellite", "slope report of a braid satellite");
    sat_cmd->add_option("--companion", companion_in.word, "companion braid word");
    sat_cmd->add_option("--strands", companion_in.strands, "companion strand count");
    sat_cmd->add_option("--pattern", pattern_in.word, "pattern braid word");
    sat_cmd->add_option("--pattern-strands", pattern_in.strands, "pattern strand count");
    sat_cmd->add_option("--twist", twist_text, "twist matrix \"p q r s\"")->default_val("0 -1 1 0");
    sat_cmd->add_option("--slope", sat_slopes, "slope (repeatable)");
    sat_cmd->add_option("--slope-range", sat_range, "slope table up to N");
    sat_cmd->add_option("--companion-genus", companion_genus, "override companion genus");
    sat_cmd->add_option("--pattern-genus", pattern_genus, "override pattern genus");
    sat_cmd->add_option("--format", sat_format, "json|csv|text")->default_val("json");
    sat_cmd->add_option("--output", sat_output, "write to a file instead of stdout");

    // --- unit-ball -----------------------------------------------------
    BraidInput ball_companion, ball_pattern;
    std::optional<long long> ball_companion_genus, ball_pattern_genus;
    std::string ball_twist = "0 -1 1 0";
    std::string ball_format = "svg";
    std::string ball_output;
    auto* ball_cmd = app.add_subcommand("unit-ball", "seminorm unit-ball polygon");
    ball_cmd->add_option("--companion", ball_companion.word, "companion braid word");
    ball_cmd->add_option("--strands", ball_companion.strands, "companion strand count");
    ball_cmd->add_option("--pattern", ball_pattern.word, "pattern braid word");
    ball_cmd->add_option("--pattern-strands", ball_pattern.strands, "pattern strand count");
    ball_cmd->add_option("--twist", ball_twist, "twist matrix \"p q r s\"")->default_val("0 -1 1 0");
    ball_cmd->add_option("--companion-genus", ball_companion_genus, "override companion genus");
    ball_cmd->add_option("--pattern-genus", ball_pattern_genus, "override pattern genus");
    ball_cmd->add_option("--format", ball_format, "svg|json")->default_val("svg");
    ball_cmd->add_option("--output", ball_output, "write to a file instead of stdout");

    // --- extendability ---------------------------------------------------
    BraidInput ext_companion, ext_pattern;
    std::optional<long long> ext_companion_genus, ext_pattern_genus;
    std::string ext_twist = "0 -1 1 0";
    long long ext_range = 3;
    std::string ext_invariant = "norm";
    std::string ext_format = "json";
    bool ext_unknotted = false;
    auto* ext_cmd = app.add_subcommand("extendability", "finiteness and index criteria");
    ext_cmd->add_option("--companion", ext_companion.word, "companion braid word");
    ext_cmd->add_option("--strands", ext_companion.strands, "companion strand count");
    ext_cmd->add_option("--pattern", ext_pattern.word, "pattern braid word");
    ext_cmd->add_option("--pattern-strands", ext_pattern.strands, "pattern strand count");
    ext_cmd->add_option("--twist", ext_twist, "twist matrix \"p q r s\"")->default_val("0 -1 1 0");
    ext_cmd->add_option("--companion-genus", ext_companion_genus, "override companion genus");
    ext_cmd->add_option("--pattern-genus", ext_pattern_genus, "override pattern genus");
    ext_cmd->add_option("--slope-range", ext_range, "value-set range N")->default_val(3);
    ext_cmd->add_option("--invariant", ext_invariant, "norm|singular-genus")->default_val("norm");
    ext_cmd->add_option("--format", ext_format, "json|text")->default_val("json");
    ext_cmd->add_flag("--unknotted-torus", ext_unknotted, "report the unknotted-torus facts");
    std::string dehn_slope;
    std::optional<long long> dehn_genus;
    ext_cmd->add_option("--dehn-twist-slope", dehn_slope,
                        "slope of a Dehn twist to test for stable extendability");
    ext_cmd->add_option("--singular-genus", dehn_genus,
                        "certified singular genus of that slope (supplied by the caller)");

    // --- cl --------------------------------------------------------------
    std::string cl_word;
    int cl_kmax = 2;
    int cl_lenmax = 3;
    std::optional<long long> cl_nodes;
    auto* cl_cmd = app.add_subcommand("cl", "commutator-length upper bound in a free group");
    cl_cmd->add_option("--word", cl_word, "word in letters, uppercase = inverse, e.g. \"x y X Y\"")
        ->required();
    cl_cmd->add_option("--k-max", cl_kmax, "largest number of commutators tried")->default_val(2);
    cl_cmd->add_option("--len-max", cl_lenmax, "largest factor word length")->default_val(3);
    cl_cmd->add_option("--node-limit", cl_nodes, "search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (braid_cmd->parsed()) {
        const sc::BraidWord b = braid_in.parse("input");
        sc::require_knot_closure(b);
        sc::json j;
        j["alexander"] = sc::alexander_polynomial(b).to_string();
        j["genus"] = sc::to_json(sc::knot_genus(b));
        const sc::TriState state = sc::is_nontrivial_knot(b);
        if (state == sc::TriState::Unknown)
            j["nontrivial"] = nullptr;
        else
            j["nontrivial"] = state == sc::TriState::Nontrivial;
        std::cout << sc::dump_json(j);
        return 0;
    }

    if (torus_cmd->parsed()) {
        const auto spec = sc::BraidTorusSpec::from_braid(torus_in.parse("input"), torus_genus);
        const std::vector<sc::Slope> slopes = collect_slopes(torus_slopes, torus_range);
        std::map<sc::Slope, sc::Rational> values;
        sc::json rows = sc::json::array();
        for (const sc::Slope& s : slopes) {
            const sc::SeminormValue v = sc::braid_torus_norm(spec, sc::to_homology(s));
            values[s] = v.value;
            sc::json row;
            row["slope"] = sc::json::array({s.x, s.y});
            row["norm"] = sc::to_json(v);
            rows.push_back(row);
        }
        sc::json j;
        j["genus"] = sc::to_json(spec.genus);
        j["slopes"] = rows;
        if (torus_range) j["index_lower_bound"] = sc::to_json(sc::index_lower_bound(values));
        std::cout << sc::dump_json(j);
        return 0;
    }

    if (sat_cmd->parsed()) {
        const sc::SatelliteSpec spec = build_satellite(companion_in, pattern_in, twist_text,
                                                       companion_genus, pattern_genus);
        const std::vector<sc::Slope> slopes = collect_slopes(sat_slopes, sat_range);
        std::vector<sc::SlopeReport> reports;
        std::map<sc::Slope, sc::Rational> norm_values;
        for (const sc::Slope& s : slopes) {
            reports.push_back(sc::slope_report(spec, s));
            if (reports.back().norm) norm_values[s] = reports.back().norm->value;
        }
        std::optional<sc::ExtendabilityVerdict> verdict;
        if (sat_range && !norm_values.empty()) verdict = sc::index_lower_bound(norm_values);

        if (sat_format == "json") {
            sc::json j;
            if (!sat_range && reports.size() == 1) {
                j = sc::to_json(reports.front());
            } else {
                sc::json rows = sc::json::array();
                for (const sc::SlopeReport& r : reports) rows.push_back(sc::to_json(r));
                j["slopes"] = rows;
                if (verdict) j["index_lower_bound"] = sc::to_json(*verdict);
            }
            emit(sc::dump_json(j), sat_output);
        } else if (sat_format == "csv") {
            emit(report_csv(reports, verdict), sat_output);
        } else if (sat_format == "text") {
            emit(report_text(reports, verdict), sat_output);
        } else {
            throw sc::parse_error("unknown format '" + sat_format + "'");
        }
        return 0;
    }

    if (ball_cmd->parsed()) {
        const sc::SatelliteSpec spec = build_satellite(ball_companion, ball_pattern, ball_twist,
                                                       ball_companion_genus, ball_pattern_genus);
        const sc::UnitBallResult ball = sc::unit_ball_polygon(spec);
        if (ball_format == "json") {
            emit(sc::dump_json(sc::to_json(ball)), ball_output);
        } else if (ball_format == "svg") {
            std::ostringstream out;
            sc::write_unit_ball_svg(ball, out);
            emit(out.str(), ball_output);
        } else {
            throw sc::parse_error("unknown format '" + ball_format + "'");
        }
        return 0;
    }

    if (ext_cmd->parsed()) {
        if (ext_unknotted) {
            std::cout << sc::dump_json(sc::to_json(sc::unknotted_torus_facts()));
            return 0;
        }
        if (!dehn_slope.empty() || dehn_genus) {
            if (dehn_slope.empty() || !dehn_genus)
                throw sc::parse_error(
                    "--dehn-twist-slope and --singular-genus must be given together");
            const sc::ExtendabilityVerdict v =
                sc::dehn_twist_stably_extendable(sc::parse_slope(dehn_slope), *dehn_genus);
            std::cout << sc::dump_json(sc::to_json(v));
            return 0;
        }
        const sc::SatelliteSpec spec = build_satellite(ext_companion, ext_pattern, ext_twist,
                                                       ext_companion_genus, ext_pattern_genus);
        if (ext_range < 1) throw sc::parse_error("N >= 1 required");
        const sc::ExtendabilityVerdict from_twist = sc::finiteness_from_twist(spec);
        std::optional<sc::ExtendabilityVerdict> from_norm;
        if (sc::is_plumbing(spec.twist)) from_norm = sc::finiteness_from_norm(spec);

        std::optional<sc::ExtendabilityVerdict> index_verdict;
        if (ext_invariant == "norm") {
            std::map<sc::Slope, sc::Rational> values;
            for (const sc::Slope& s : sc::primitive_slopes_up_to(ext_range)) {
                const sc::SlopeReport r = sc::slope_report(spec, s);
                if (r.norm) values[s] = r.norm->value;
            }
            if (!values.empty()) index_verdict = sc::index_lower_bound(values);
        } else if (ext_invariant == "singular-genus") {
            std::map<sc::Slope, long long> values;
            for (const sc::Slope& s : sc::primitive_slopes_up_to(ext_range)) {
                const sc::SlopeReport r = sc::slope_report(spec, s);
                if (r.genus.singular_exact) values[s] = *r.genus.singular_exact;
            }
            if (!values.empty()) index_verdict = sc::index_lower_bound(values);
        } else {
            throw sc::parse_error("unknown invariant '" + ext_invariant + "'");
        }

        if (ext_format == "json") {
            sc::json j;
            j["finiteness_from_twist"] = sc::to_json(from_twist);
            if (from_norm) j["finiteness_from_norm"] = sc::to_json(*from_norm);
            if (index_verdict) j["index_lower_bound"] = sc::to_json(*index_verdict);
            std::cout << sc::dump_json(j);
        } else if (ext_format == "text") {
            const auto render = [](const sc::ExtendabilityVerdict& v) {
                std::string line = std::string(sc::to_string(v.subject)) + ": " +
                                   sc::to_string(v.conclusion);
                if (v.index_bound) line += " " + std::to_string(*v.index_bound);
                line += "  [" + v.justification.citation + "; " + v.justification.detail + "]";
                return line;
            };
            std::cout << "from twist      " << render(from_twist) << "\n";
            if (from_norm) std::cout << "from norm       " << render(*from_norm) << "\n";
            if (index_verdict) std::cout << "from value set  " << render(*index_verdict) << "\n";
        } else {
            throw sc::parse_error("unknown format '" + ext_format + "'");
        }
        return 0;
    }

    if (cl_cmd->parsed()) {
        std::vector<char> alphabet;
        const sc::GroupWord w = parse_letter_word(cl_word, alphabet);
        if (alphabet.empty()) alphabet.push_back('x');
        const auto witness =
            sc::cl_upper_bound_witness(w, cl_kmax, cl_lenmax, node_limit_from_env(cl_nodes));
        sc::json j;
        j["word"] = sc::to_json(w);
        if (witness) {
            j["cl_upper_bound"] = witness->k;
            sc::json pairs = sc::json::array();
            for (const auto& [a, b] : witness->pairs)
                pairs.push_back(sc::json{{"a", letters_for(a, alphabet)},
                                         {"b", letters_for(b, alphabet)}});
            j["witness"] = pairs;
        } else {
            j["cl_upper_bound"] = nullptr;
        }
        std::cout << sc::dump_json(j);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sc::hypothesis_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const sc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sc::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
