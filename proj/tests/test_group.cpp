#include <doctest.h>

#include "equidiv/error.hpp"
#include "equidiv/group.hpp"

using namespace equidiv;

TEST_CASE("cyclic group arithmetic") {
    const Group z3 = Group::cyclic(3);
    CHECK(z3.order() == 3);
    CHECK(z3.multiply(1, 2) == 0);
    CHECK(z3.inverse(1) == 2);
    const Group z6 = Group::cyclic(6);
    CHECK(z6.multiply(4, 5) == 3);
    CHECK_THROWS_AS(Group::cyclic(1), InputError);
    CHECK_THROWS_AS(z3.multiply(3, 0), InputError);
}

TEST_CASE("elementary abelian digits add without carry") {
    const Group v4 = Group::elementary_abelian(2, 2);
    CHECK(v4.order() == 4);
    CHECK(v4.multiply(1, 3) == 2);
    for (Element g = 0; g < 4; ++g) CHECK(v4.multiply(g, g) == 0);
    const Group z3sq = Group::elementary_abelian(3, 2);
    CHECK(z3sq.multiply(5, 7) == 0);  // (2,1) + (1,2)
    CHECK(z3sq.coordinates(5) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(Group::elementary_abelian(4, 1), InputError);
    CHECK_THROWS_AS(Group::elementary_abelian(2, 0), InputError);
}

TEST_CASE("group axioms hold on every table") {
    for (const Group& g : {Group::cyclic(2), Group::cyclic(5), Group::cyclic(6), Group::elementary_abelian(2, 3),
                           Group::elementary_abelian(3, 2)}) {
        const int k = g.order();
        for (Element a = 0; a < k; ++a) {
            CHECK(g.multiply(0, a) == a);
            CHECK(g.multiply(a, g.inverse(a)) == 0);
            for (Element b = 0; b < k; ++b) {
                for (Element c = 0; c < k; ++c) {
                    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
                }
            }
        }
    }
}
