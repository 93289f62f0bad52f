#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/tucker_search.hpp"

using namespace equidiv;

namespace {

Labeling from_labels(const std::vector<CrossLabel>& labels) {
    return [labels](int v) { return LabelOutcome{false, labels[v]}; };
}

std::vector<int> phi_of(const std::vector<CrossLabel>& labels, int k) {
    std::vector<int> phi;
    for (const auto& l : labels) phi.push_back((l.row - 1) * k + l.g);
    return phi;
}

void check_same(const SearchResult& a, const SearchResult& b) {
    CHECK(a.kind == b.kind);
    CHECK(a.exact_vertex == b.exact_vertex);
    CHECK(a.simplex == b.simplex);
    CHECK(a.i0 == b.i0);
}

}  // namespace

TEST_CASE("fully labeled edge in the natural square") {
    const GComplex c = build_join_complex(Group::cyclic(2), 1);
    // Vertex (g, j) carries its own element as label.
    std::vector<CrossLabel> labels;
    for (int v = 0; v < c.vertex_count(); ++v) labels.push_back({v % 2, 1});
    const SearchResult r = find_fully_labeled(c, from_labels(labels), 1);
    REQUIRE(r.kind == SearchResult::Kind::FoundSimplex);
    CHECK(r.simplex == std::vector<int>{0, 3});
    CHECK(r.i0 == 1);
}

TEST_CASE("exact vertices end the search") {
    const GComplex c = build_join_complex(Group::cyclic(3), 2);
    // Every vertex of slot 1 is exact.
    const Labeling middle_exact = [](int v) {
        return v / 3 == 1 ? LabelOutcome{true, {}} : LabelOutcome{false, CrossLabel{v % 3, 1}};
    };
    const SearchResult r = find_fully_labeled(c, middle_exact, 1);
    CHECK(r.kind == SearchResult::Kind::ExactVertex);
    CHECK(r.exact_vertex == 3);
    check_same(r, find_fully_labeled_reference(c, middle_exact, 1));
}

TEST_CASE("non-equivariant labelings are rejected") {
    const GComplex c = build_join_complex(Group::cyclic(2), 1);
    const Labeling constant = [](int) { return LabelOutcome{false, CrossLabel{0, 1}}; };
    SearchOptions all;
    all.spot_checks = 0;
    CHECK_THROWS_AS(find_fully_labeled(c, constant, 1, all), InputError);
    CHECK(equivariance_violation(c, constant, 0) >= 0);
}

TEST_CASE("orbit pruning and threads do not change the result") {
    std::mt19937_64 rng(404);
    const std::vector<std::pair<Group, int>> shapes{
        {Group::cyclic(2), 2}, {Group::cyclic(3), 2}, {Group::cyclic(4), 1},
        {Group::elementary_abelian(2, 2), 1}, {Group::cyclic(5), 1}};
    for (const auto& [group, N] : shapes) {
        for (int depth = 0; depth <= 1; ++depth) {
            GComplex c = build_join_complex(group, N);
            for (int d = 0; d < depth; ++d) c = barycentric_subdivide(c);
            for (int trial = 0; trial < 20; ++trial) {
                const int n = 1 + trial % 2;
                const Labeling labeling = from_labels(oracle::random_equivariant_labels(rng, c, n));
                const SearchResult reference = find_fully_labeled_reference(c, labeling, n);
                for (bool orbit : {true, false}) {
                    for (int workers : {1, 4}) {
                        SearchOptions options;
                        options.orbit_pruning = orbit;
                        options.workers = workers;
                        check_same(reference, find_fully_labeled(c, labeling, n, options));
                    }
                }
            }
        }
    }
}

TEST_CASE("prime orders always have a fully labeled simplex") {
    std::mt19937_64 rng(7);
    for (int p : {2, 3}) {
        for (int n = 1; n <= 2; ++n) {
            GComplex c = barycentric_subdivide(build_join_complex(Group::cyclic(p), n * (p - 1)));
            for (int trial = 0; trial < 10; ++trial) {
                const auto labels = oracle::random_equivariant_labels(rng, c, n);
                const SearchResult r = find_fully_labeled(c, from_labels(labels), n);
                REQUIRE(r.kind == SearchResult::Kind::FoundSimplex);
                for (int g = 0; g < p; ++g) CHECK(labels[r.simplex[g]] == CrossLabel{g, r.i0});
            }
        }
    }
}

TEST_CASE("six elements may have no fully labeled simplex") {
    std::mt19937_64 rng(6);
    const GComplex c = build_join_complex(Group::cyclic(6), 5);
    const auto labels = oracle::random_equivariant_labels(rng, c, 1);
    const SearchResult r = find_fully_labeled(c, from_labels(labels), 1);
    if (r.kind == SearchResult::Kind::FoundSimplex) {
        for (int g = 0; g < 6; ++g) CHECK(labels[r.simplex[g]].g == g);
    }
}

TEST_CASE("edge audit and refinement") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const GComplex natural = build_join_complex(Group::cyclic(2), 1);
    CHECK(audit_edges(natural, uniform, 2).worst == 1);
    CHECK(refine_until_fine(natural, uniform, Rational(3), 2).depth == 0);
    const GComplex fine = refine_until_fine(natural, uniform, ratio(1, 4), 2);
    CHECK(fine.depth >= 1);
    CHECK(audit_edges(fine, uniform, 2).worst < ratio(1, 4));
    CHECK_THROWS_AS(refine_until_fine(natural, uniform, ratio(1, 1000), 2, 2), CapExceeded);
}

TEST_CASE("edge audit agrees with direct integration") {
    std::mt19937_64 rng(17);
    const auto measures = oracle::random_measures(rng, 1);
    const GComplex c = barycentric_subdivide(build_join_complex(Group::cyclic(2), 1));
    Rational worst = 0;
    for (const auto& [v, w] : complex_edges(c)) {
        const auto a = oracle::reintegrate(decode(c.coords[v], 2), measures);
        const auto b = oracle::reintegrate(decode(c.coords[w], 2), measures);
        for (int j = 0; j < 2; ++j) worst = std::max(worst, Rational(abs(a[0][j] - b[0][j])));
    }
    CHECK(audit_edges(c, measures, 2).worst == worst);
}

TEST_CASE("tucker triples on the crosspolytope") {
    std::mt19937_64 rng(55);
    for (int p : {2, 3}) {
        const Group g = Group::cyclic(p);
        GComplex c = barycentric_subdivide(build_join_complex(g, p - 1));
        const GPolytope cross = crosspolytope(g, 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto labels = oracle::random_equivariant_labels(rng, c, 1);
            const TuckerTriple t = verify_tucker_triple(c, phi_of(labels, p), cross);
            REQUIRE(t.found);
            std::vector<RationalVector> points;
            for (int v : t.simplex) points.push_back(cross.vertices[phi_of(labels, p)[v]]);
            CHECK(witness_is_valid(points, ConvexWitness{true, t.coefficients}));
        }
        std::vector<int> constant(c.vertex_count(), 0);
        CHECK_THROWS_AS(verify_tucker_triple(c, constant, cross), InputError);
    }
}
