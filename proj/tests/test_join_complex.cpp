#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/join_complex.hpp"

#include <map>
#include <set>

using namespace equidiv;

namespace {

/// Distinct numbers of facets containing a ridge. A ridge of E_N G extends by
/// any of the k elements in its missing slot; ridges inside a subdivided
/// natural simplex have exactly two sides.
std::set<int> ridge_degrees(const GComplex& complex) {
    std::map<std::vector<int>, int> ridges;
    for (const auto& facet : complex.facets) {
        for (std::size_t drop = 0; drop < facet.size(); ++drop) {
            std::vector<int> ridge;
            for (std::size_t a = 0; a < facet.size(); ++a) {
                if (a != drop) ridge.push_back(facet[a]);
            }
            ++ridges[ridge];
        }
    }
    std::set<int> out;
    for (const auto& [ridge, count] : ridges) out.insert(count);
    return out;
}

}  // namespace

TEST_CASE("join points canonicalize zero slots") {
    const Group z3 = Group::cyclic(3);
    const JoinPoint p = make_join_point(z3, {ratio(1, 2), Rational(0), ratio(1, 2)}, {2, 1, 1});
    CHECK(p.elements == std::vector<Element>{2, 0, 1});
    CHECK_THROWS_AS(make_join_point(z3, {ratio(1, 2), ratio(1, 3)}, {0, 0}), InputError);
    CHECK_THROWS_AS(make_join_point(z3, {Rational(2), Rational(-1)}, {0, 0}), InputError);
    CHECK_THROWS_AS(make_join_point(z3, {Rational(1)}, {3}), InputError);
}

TEST_CASE("natural triangulation of E_1 Z_2 is a 4-cycle") {
    const GComplex c = build_join_complex(Group::cyclic(2), 1);
    CHECK(c.vertex_count() == 4);
    CHECK(c.facet_count() == 4);
    CHECK(complex_edges(c).size() == 4);
    CHECK(ridge_degrees(c) == std::set<int>{2});
}

TEST_CASE("join complex sizes and free action") {
    for (const Group& g : {Group::cyclic(2), Group::cyclic(3), Group::elementary_abelian(2, 2)}) {
        for (int N = 0; N <= 3; ++N) {
            const GComplex c = build_join_complex(g, N);
            const int k = g.order();
            CHECK(c.vertex_count() == k * (N + 1));
            std::size_t facets = 1;
            for (int j = 0; j <= N; ++j) facets *= k;
            CHECK(c.facet_count() == facets);
            for (Element h = 1; h < k; ++h) {
                for (int v = 0; v < c.vertex_count(); ++v) CHECK(c.act(h, v) != v);
            }
            if (N >= 1) CHECK(ridge_degrees(c) == std::set<int>{k});
        }
    }
}

TEST_CASE("barycentric subdivision multiplies facets by (N+1)!") {
    const GComplex base = build_join_complex(Group::cyclic(3), 2);
    const GComplex once = barycentric_subdivide(base);
    CHECK(once.facet_count() == base.facet_count() * 6);
    CHECK(once.depth == 1);
    CHECK(ridge_degrees(once) == std::set<int>{2, 3});
    // Faces of E_2 Z_3: 3 slots choose a nonempty subset, one element per slot.
    CHECK(once.vertex_count() == 3 * 3 + 3 * 9 + 27);
    for (std::size_t f = 0; f < once.facet_count(); ++f) {
        const auto& parent = base.facets[once.parent_facet[f]];
        std::vector<Element> elements(3);
        for (int v : parent) elements[v / 3] = v % 3;
        for (int v : once.facets[f]) CHECK(point_in_natural_simplex(once.coords[v], elements));
    }
}

TEST_CASE("subdivision coordinates are equivariant") {
    const GComplex c = barycentric_subdivide(barycentric_subdivide(build_join_complex(Group::cyclic(4), 1)));
    for (Element g = 0; g < 4; ++g) {
        for (int v = 0; v < c.vertex_count(); ++v) {
            CHECK(c.coords[c.act(g, v)] == act_point(c.group, g, c.coords[v]));
        }
    }
    std::set<std::vector<int>> facets(c.facets.begin(), c.facets.end());
    for (Element g = 0; g < 4; ++g) {
        for (const auto& f : c.facets) CHECK(facets.count(c.act_on_set(g, f)) == 1);
    }
}
