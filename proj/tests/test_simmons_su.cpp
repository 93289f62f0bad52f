#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/error.hpp"
#include "equidiv/simmons_su.hpp"

using namespace equidiv;

namespace {

SPoint random_spoint(std::mt19937_64& rng, int k, int slots) {
    std::vector<Rational> t(slots);
    std::vector<int> j(slots);
    std::vector<int> parts(slots);
    int total = 0;
    for (int s = 0; s < slots; ++s) total += parts[s] = std::uniform_int_distribution<int>(0, 3)(rng);
    if (total == 0) parts[0] = total = 1;
    for (int s = 0; s < slots; ++s) {
        t[s] = ratio(parts[s], total);
        j[s] = std::uniform_int_distribution<int>(1, k)(rng);
    }
    return make_spoint(k, t, j);
}

std::vector<RootLabel> root_labels(const std::vector<CrossLabel>& labels, const std::vector<Element>& enumeration) {
    std::vector<RootLabel> out;
    for (const auto& l : labels) {
        const auto it = std::find(enumeration.begin(), enumeration.end(), l.g);
        out.emplace_back(static_cast<int>(it - enumeration.begin()) + 1, l.row);
    }
    return out;
}

}  // namespace

TEST_CASE("single-slot points map to group vertices") {
    const Group z2 = Group::cyclic(2);
    const auto e = default_enumeration(z2);
    const JoinPoint p = to_join_point(make_spoint(2, {Rational(1)}, {1}), z2, e);
    CHECK(p == join_vertex(1, 0, 0));
    CHECK(make_spoint(3, {Rational(0), Rational(1)}, {1, 2}).j == std::vector<int>{3, 2});
    CHECK_THROWS_AS(make_spoint(2, {ratio(1, 2)}, {1}), InputError);
}

TEST_CASE("round trip and equivariance of the coordinate change") {
    std::mt19937_64 rng(88);
    const std::vector<Group> groups{Group::cyclic(3), Group::cyclic(4), Group::elementary_abelian(2, 2)};
    for (const Group& group : groups) {
        std::vector<Element> enumeration = default_enumeration(group);
        std::shuffle(enumeration.begin() + 1, enumeration.end(), rng);
        for (int trial = 0; trial < 50; ++trial) {
            const SPoint s = random_spoint(rng, group.order(), 3);
            const JoinPoint p = to_join_point(s, group, enumeration);
            CHECK(from_join_point(p, group, enumeration) == s);
            const Element g = static_cast<Element>(trial % group.order());
            CHECK(to_join_point(act_spoint(group, enumeration, g, s), group, enumeration) == act_point(group, g, p));
        }
    }
}

TEST_CASE("enumerations must list each element once") {
    const Group z3 = Group::cyclic(3);
    CHECK_THROWS_AS(validate_enumeration(z3, {0, 1}), InputError);
    CHECK_THROWS_AS(validate_enumeration(z3, {0, 1, 1}), InputError);
    CHECK_NOTHROW(validate_enumeration(z3, {2, 0, 1}));
}

TEST_CASE("conjecture instances") {
    std::mt19937_64 rng(9);
    const std::vector<std::pair<Group, bool>> cases{
        {Group::cyclic(2), true}, {Group::cyclic(3), true}, {Group::elementary_abelian(2, 2), true},
        {Group::cyclic(6), false}};
    for (const auto& [group, guaranteed] : cases) {
        const int k = group.order();
        const int N = k - 1;
        const GComplex c = k <= 4 ? barycentric_subdivide(build_join_complex(group, N)) : build_join_complex(group, N);
        const auto enumeration = default_enumeration(group);
        for (int trial = 0; trial < 5; ++trial) {
            const auto labels = oracle::random_equivariant_labels(rng, c, 1);
            const ConjectureOutcome out = check_conjecture_instance(c, root_labels(labels, enumeration), 1, enumeration);
            if (guaranteed) CHECK(out.found);
            if (!out.found) continue;
            REQUIRE(static_cast<int>(out.vertices.size()) == k);
            for (int j = 0; j < k; ++j) CHECK(labels[out.vertices[j]] == CrossLabel{enumeration[j], out.m});
        }
    }
}

TEST_CASE("conjecture instances reject non-equivariant labels") {
    const GComplex c = build_join_complex(Group::cyclic(2), 1);
    const std::vector<RootLabel> constant(c.vertex_count(), RootLabel{1, 1});
    CHECK_THROWS_AS(check_conjecture_instance(c, constant, 1, default_enumeration(c.group)), InputError);
}
