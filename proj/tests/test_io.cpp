#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/io.hpp"

#include <string>

using namespace equidiv;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_measures(parse_json(text, "measures"));
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("measures round trip through JSON") {
    std::mt19937_64 rng(1);
    const auto measures = oracle::random_measures(rng, 4);
    const auto back = parse_measures(parse_json(dump(measures_to_json(measures)), "measures"));
    REQUIRE(back.size() == measures.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].breakpoints() == measures[i].breakpoints());
        CHECK(back[i].densities() == measures[i].densities());
    }
}

TEST_CASE("measure errors name the offending measure") {
    const std::string ok = R"({"breakpoints": ["0", "1"], "densities": ["1"]})";
    CHECK(message_of("[" + ok + ", " + R"({"breakpoints": ["0", "1"], "densities": ["2"]})" + "]")
              .find("measure 1") != std::string::npos);
    CHECK(message_of("[" + ok + ", " + R"({"breakpoints": ["0", "1/2", "1"], "densities": ["1"]})" + "]")
              .find("measure 1") != std::string::npos);
    CHECK(message_of(R"([{"breakpoints": ["0", "x"], "densities": ["1"]}])").find("measure 0") !=
          std::string::npos);
    CHECK_FALSE(message_of("[]").empty());
    CHECK_THROWS_AS(parse_json("{", "measures"), InputError);
}

TEST_CASE("division results round trip") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const DivisionOutcome outcome = compose_division(uniform, 2, ratio(1, 10));
    const ResultRecord r = parse_result(parse_json(dump(division_to_json(outcome)), "result"));
    CHECK(r.scheme.cuts == outcome.scheme.cuts);
    CHECK(r.scheme.assignment == outcome.scheme.assignment);
    CHECK(r.values == outcome.values);
    CHECK(r.epsilon == ratio(1, 10));
    CHECK(r.max_deviation == outcome.certificate.max_deviation);
}

TEST_CASE("groups and complexes") {
    const Group z3 = parse_group(parse_json(R"({"kind": "cyclic", "order": 3})", "group"));
    CHECK(z3 == Group::cyclic(3));
    const Group v4 = parse_group(parse_json(R"({"kind": "elementary_abelian", "p": 2, "r": 2})", "group"));
    CHECK(v4 == Group::elementary_abelian(2, 2));
    CHECK(parse_group(group_to_json(v4)) == v4);
    CHECK_THROWS_AS(parse_group(parse_json(R"({"kind": "dihedral", "order": 6})", "group")), InputError);

    const ComplexInput input = parse_complex_input(parse_json(
        R"({"group": {"kind": "cyclic", "order": 2}, "N": 1, "depth": 0, "labels": [[0, 1], [1, 2], [0, 1], [1, 2]]})",
        "complex"));
    CHECK(input.n == 2);
    CHECK(input.labels[1] == CrossLabel{1, 2});
    CHECK_THROWS_AS(parse_complex_input(parse_json(
                        R"({"group": {"kind": "cyclic", "order": 2}, "N": 1, "depth": 0, "labels": [[2, 1]]})",
                        "complex")),
                    InputError);
}

TEST_CASE("colorful instances") {
    const ColorfulInstance inst = parse_instance(parse_json(R"({"d": 1, "m": 2, "columns": [[["-1"], ["1"]], [["1"], ["-1"]]]})", "instance"));
    CHECK(inst.columns[1][0] == RationalVector{Rational(1)});
    CHECK_THROWS_AS(parse_instance(parse_json(R"({"d": 1, "m": 2, "columns": [[["1"], ["2"]], [["1"], ["-1"]]]})", "instance")),
                    InputError);
}
