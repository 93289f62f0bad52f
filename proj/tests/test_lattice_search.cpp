#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/lattice_search.hpp"

using namespace equidiv;

namespace {

void check_same(const LatticeScan& a, const LatticeScan& b) {
    CHECK(a.found() == b.found());
    CHECK(a.key == b.key);
    CHECK(a.exact_vertex.has_value() == b.exact_vertex.has_value());
    if (a.exact_vertex && b.exact_vertex) CHECK(*a.exact_vertex == *b.exact_vertex);
    CHECK(a.face.has_value() == b.face.has_value());
    if (a.face && b.face) {
        CHECK(a.face->vertices == b.face->vertices);
        CHECK(a.face->labels == b.face->labels);
        CHECK(a.face->i0 == b.face->i0);
    }
}

}  // namespace

TEST_CASE("band pruning is only enabled where it is sound") {
    CHECK(band_pruning_is_sound(2));
    CHECK(band_pruning_is_sound(3));
    CHECK_FALSE(band_pruning_is_sound(5));
}

TEST_CASE("max step mass equals the slow lattice scan") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Measure mu = oracle::random_measure(rng, 5);
        for (std::int64_t m : {1, 2, 6, 15, 40}) {
            CHECK(max_step_mass(mu, m) == lattice_fineness_bound({mu}, 1, m));
        }
    }
}

TEST_CASE("resolution choice meets the fineness target") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const ResolutionChoice c = choose_resolution(uniform, 1, ratio(1, 10), 8);
    CHECK(c.bound < ratio(1, 10));
    CHECK(c.bound == lattice_fineness_bound(uniform, 1, c.resolution));
    CHECK(c.resolution == 12);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto measures = oracle::random_measures(rng, 1 + trial % 3);
        const int N = static_cast<int>(measures.size()) * 2;
        const ResolutionChoice d = choose_resolution(measures, N, ratio(1, 50), 8);
        CHECK(d.bound < ratio(1, 50));
        CHECK(d.bound == lattice_fineness_bound(measures, N, d.resolution));
        CHECK(static_cast<int>(split_factors(d.resolution).size()) == d.levels);
    }
    CHECK_THROWS_AS(choose_resolution(uniform, 1, ratio(1, 100), 1), CapExceeded);
}

TEST_CASE("parallel kernel matches the serial reference scan") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 3;
        const int n = 1 + (trial / 2) % 2;
        const auto measures = oracle::random_measures(rng, n, 3);
        const int N = n * (p - 1);
        const std::int64_t m = std::vector<std::int64_t>{2, 3, 4, 5, 6, 10}[trial % 6];
        const KuhnRefinement refinement(Group::cyclic(p), N, m);
        const LatticeScan reference = scan_lattice_reference(refinement, measures, p, true);
        CHECK(reference.found());
        check_same(reference, scan_lattice_reference(refinement, measures, p, false));
        for (bool orbit : {true, false}) {
            for (bool value : {true, false}) {
                for (int workers : {1, 3}) {
                    ScanOptions options;
                    options.orbit_pruning = orbit;
                    options.value_pruning = value;
                    options.workers = workers;
                    check_same(reference, scan_lattice(refinement, measures, p, ratio(1, 10), options));
                }
            }
        }
    }
}

TEST_CASE("five parts scan without the band prune") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const KuhnRefinement refinement(Group::cyclic(5), 4, 5);
    const LatticeScan reference = scan_lattice_reference(refinement, uniform, 5, true);
    check_same(reference, scan_lattice(refinement, uniform, 5, ratio(1, 50)));
}

TEST_CASE("kernel labels agree with direct labeling of the found face") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 3;
        const auto measures = oracle::random_measures(rng, 2, 3);
        const KuhnRefinement refinement(Group::cyclic(p), 2 * (p - 1), 6);
        const LatticeScan scan = scan_lattice(refinement, measures, p, ratio(1, 10));
        REQUIRE(scan.found());
        if (scan.exact_vertex) {
            CHECK(label_vertex(*scan.exact_vertex, measures, p).exact);
            continue;
        }
        const FoundFace& face = *scan.face;
        REQUIRE(static_cast<int>(face.vertices.size()) == p);
        for (int r = 0; r < p; ++r) {
            const LabelOutcome out = label_vertex(face.vertices[r], measures, p);
            CHECK_FALSE(out.exact);
            CHECK(out.label == face.labels[r]);
            CHECK(out.label == CrossLabel{r, face.i0});
        }
    }
}

TEST_CASE("prime division examples") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const PrimeDivision half = epsilon_divide(uniform, 2, ratio(1, 20));
    for (int j = 0; j < 2; ++j) {
        CHECK(half.values.at(0, j) > ratio(9, 20));
        CHECK(half.values.at(0, j) < ratio(11, 20));
    }

    std::mt19937_64 rng(31);
    const auto measures = oracle::random_measures(rng, 2);
    const PrimeDivision three = epsilon_divide(measures, 3, ratio(1, 10));
    CHECK(three.scheme.cuts.size() == 4);
    CHECK(oracle::within(three.scheme, measures, ratio(1, 10)));
    if (three.report.simplex) {
        const FaceAudit audit = audit_face(*three.report.simplex, measures, 3, ratio(1, 10));
        CHECK(audit.all());
    }

    CHECK_THROWS_AS(epsilon_divide(uniform, 4, ratio(1, 10)), InputError);
    CHECK_THROWS_AS(epsilon_divide(uniform, 2, Rational(0)), InputError);
}

TEST_CASE("division is independent of the worker count") {
    std::mt19937_64 rng(8);
    const auto measures = oracle::random_measures(rng, 2);
    DivideOptions serial;
    DivideOptions parallel;
    parallel.workers = 4;
    const PrimeDivision a = epsilon_divide(measures, 3, ratio(1, 12), serial);
    const PrimeDivision b = epsilon_divide(measures, 3, ratio(1, 12), parallel);
    CHECK(a.scheme.cuts == b.scheme.cuts);
    CHECK(a.scheme.assignment == b.scheme.assignment);
    CHECK(a.values == b.values);
}
