#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/measures.hpp"

using namespace equidiv;

TEST_CASE("cdf of piecewise densities") {
    CHECK(Measure::uniform().cdf(ratio(1, 2)) == ratio(1, 2));
    const Measure m({Rational(0), ratio(1, 4), Rational(1)}, {Rational(2), ratio(2, 3)});
    CHECK(m.cdf(ratio(1, 4)) == ratio(1, 2));
    CHECK(m.cdf(Rational(1)) == 1);
    CHECK(m.cdf(ratio(1, 8)) == ratio(1, 4));
    CHECK(m.max_density() == 2);
    CHECK_THROWS_AS(m.cdf(Rational(2)), InputError);
}

TEST_CASE("invalid measures are rejected") {
    CHECK_THROWS_AS(Measure({Rational(0), Rational(1)}, {Rational(2)}), InputError);
    CHECK_THROWS_AS(Measure({Rational(0), ratio(1, 2), Rational(1)}, {Rational(3), Rational(-1)}), InputError);
    CHECK_THROWS_AS(Measure({Rational(0), ratio(1, 2), ratio(1, 2), Rational(1)}, {Rational(1), Rational(1), Rational(1)}),
                    InputError);
    CHECK_THROWS_AS(Measure({ratio(1, 4), Rational(1)}, {ratio(4, 3)}), InputError);
}

TEST_CASE("bead measures") {
    const auto ab = beads_to_measures(parse_beads("ab"));
    REQUIRE(ab.size() == 2);
    CHECK(ab[0].breakpoints() == std::vector<Rational>{Rational(0), ratio(1, 2), Rational(1)});
    CHECK(ab[0].densities() == std::vector<Rational>{Rational(2), Rational(0)});
    CHECK(ab[1].densities() == std::vector<Rational>{Rational(0), Rational(2)});

    const BeadString beads = parse_beads("abcab");
    const auto measures = beads_to_measures(beads);
    for (int s = 0; s < beads.length(); ++s) {
        const int c = beads.colors[s];
        CHECK(oracle::integrate(measures[c], ratio(s, 5), ratio(s + 1, 5)) == ratio(1, beads.counts()[c]));
    }
    CHECK_THROWS_AS(parse_beads("ac"), InputError);
    CHECK_THROWS_AS(parse_beads("aB"), InputError);
    CHECK_THROWS_AS(parse_beads(""), InputError);
}

TEST_CASE("cdf agrees with piecewise integration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Measure m = oracle::random_measure(rng, 5);
        const Rational x = ratio(trial % 37, 36);
        CHECK(m.cdf(x) == oracle::integrate(m, Rational(0), x));
    }
}

TEST_CASE("restriction collapses gaps and renormalizes") {
    const Measure m({Rational(0), ratio(1, 2), Rational(1)}, {ratio(1, 2), ratio(3, 2)});
    const std::vector<Interval> pieces{{Rational(0), ratio(1, 4)}, {ratio(3, 4), Rational(1)}};
    const Measure r = restrict_to_pieces(m, pieces);
    // Masses 1/8 and 3/8 on two halves of the collapsed line.
    CHECK(r.cdf(ratio(1, 2)) == ratio(1, 4));
    CHECK(uncollapse(pieces, ratio(1, 2)) == ratio(1, 4));
    CHECK(uncollapse(pieces, ratio(3, 4)) == ratio(7, 8));
    CHECK(mass_of_union(m, pieces) == ratio(1, 2));
    CHECK_THROWS_AS(restrict_to_pieces(m, {{ratio(1, 4), ratio(1, 4)}}), InputError);
}
