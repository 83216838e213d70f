#include <doctest.h>

#include "lyzval/json_io.hpp"

using namespace lyzval;
using S = Rat;

TEST_CASE("polytope parsing accepts integers and rational strings") {
    Polytope<S> p = parse_polytope_text<S>(
        R"({"dim": 2, "vertices": [[0, 0], ["1/2", "1/3"], [1, 0]]})");
    CHECK(p.ambient_dim() == 2);
    CHECK(p.vertices().size() == 3);
    CHECK(p.contains(Vec<S>{S(1) / 2, S(1) / 3}));
}

TEST_CASE("exact mode rejects float literals, float mode accepts them") {
    const std::string text = R"({"dim": 2, "vertices": [[0.5, 0.25], [1, 0], [0, 1]]})";
    CHECK_THROWS_AS(parse_polytope_text<S>(text), ParseError);
    Polytope<double> p = parse_polytope_text<double>(text);
    CHECK(p.vertices().size() == 3);
}

TEST_CASE("malformed polytope documents raise parse errors") {
    CHECK_THROWS_AS(parse_polytope_text<S>("{ not json"), ParseError);
    CHECK_THROWS_AS(parse_polytope_text<S>(R"([1, 2, 3])"), ParseError);
    CHECK_THROWS_AS(parse_polytope_text<S>(R"({"vertices": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_text<S>(R"({"dim": 0, "vertices": [[]]})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_text<S>(R"({"dim": 2, "vertices": []})"), ParseError);
    CHECK_THROWS_AS(parse_polytope_text<S>(R"({"dim": 2, "vertices": [["1/0", "2"]]})"),
                    ParseError);
}

TEST_CASE("ragged vertex rows name the offending row") {
    try {
        parse_polytope_text<S>(R"({"dim": 3, "vertices": [[0, 0, 0], [1, 2]]})");
        FAIL("expected DimensionMismatch");
    } catch (const DimensionMismatch& e) {
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
}

TEST_CASE("polytope serialization round-trips the normalized form") {
    Polytope<S> p = parse_polytope_text<S>(
        R"({"dim": 2, "vertices": [[1, 1], [0, 0], [1, 0], [0, 1], [0, 0]]})");
    json j = polytope_to_json(p);
    CHECK(j.dump() ==
          R"({"dim":2,"vertices":[["0","0"],["0","1"],["1","0"],["1","1"]]})");
    CHECK(parse_polytope<S>(j) == p);
}

TEST_CASE("float mode serializes plain numbers") {
    Polytope<double> p = parse_polytope_text<double>(R"({"dim": 2, "vertices": [[0.5, 0], [1, 1]]})");
    json j = polytope_to_json(p);
    CHECK(j["vertices"][0][0].is_number());
    CHECK(parse_polytope<double>(j) == p);
}

TEST_CASE("valuation specs parse by family tag") {
    auto two = parse_valuation_spec<S>(parse_json_text(R"({"family": "theorem2", "c": 2, "xi": "1/3"})"));
    CHECK(family_name(two) == std::string("theorem2"));
    CHECK(std::get<Theorem2Params<S>>(two).c == S(2));
    CHECK(std::get<Theorem2Params<S>>(two).xi.coefficient() == S(1) / 3);

    auto four = parse_valuation_spec<S>(
        parse_json_text(R"({"family": "theorem4", "zeta1": 1, "zeta2": "-2"})"));
    CHECK(std::get<Theorem4Params<S>>(four).zeta2.coefficient() == S(-2));

    auto five = parse_valuation_spec<S>(parse_json_text(
        R"({"family": "theorem5", "c1": 1, "c2": -1, "xi1": 2, "xi2": "1/2"})"));
    CHECK(std::get<Theorem5Params<S>>(five).c2 == S(-1));
}

TEST_CASE("valuation spec errors") {
    CHECK_THROWS_AS(parse_valuation_spec<S>(parse_json_text(R"({"family": "theorem3"})")),
                    ParseError);
    CHECK_THROWS_AS(parse_valuation_spec<S>(parse_json_text(R"({"c": 1, "xi": 1})")), ParseError);
    CHECK_THROWS_AS(parse_valuation_spec<S>(parse_json_text(R"({"family": "theorem2", "c": 1})")),
                    ParseError);
    CHECK_THROWS_AS(
        parse_valuation_spec<S>(parse_json_text(R"({"family": "theorem2", "c": 0.5, "xi": 1})")),
        ParseError);
}

TEST_CASE("check reports serialize with a fixed field order") {
    harness::CheckReport r;
    r.check = "cut-additivity";
    r.dim = 3;
    r.seed = 2026;
    r.trials = 5;
    CHECK(report_to_json(r).dump() ==
          R"({"check":"cut-additivity","dim":3,"seed":2026,"trials":5,"status":"pass",)"
          R"("failures_total":0,"failures":[]})");

    r.failures_total = 2;
    r.failures.push_back({4, "left != right"});
    json j = report_to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["failures"][0]["trial"] == 4);
    CHECK(j["failures"][0]["detail"] == "left != right");
}

TEST_CASE("matrices serialize as arrays of rational strings in exact mode") {
    Mat<S> m(2);
    m.at(0, 0) = S(1) / 2;
    m.at(1, 1) = S(-3);
    CHECK(matrix_to_json(m).dump() == R"([["1/2","0"],["0","-3"]])");
}
