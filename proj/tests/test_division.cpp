#include <doctest.h>

#include "oracles.hpp"

#include "equidiv/division.hpp"
#include "equidiv/error.hpp"

using namespace equidiv;

namespace {

ValuesTable row(std::vector<Rational> values) {
    ValuesTable t;
    t.n = 1;
    t.k = static_cast<int>(values.size());
    t.entries = std::move(values);
    return t;
}

std::vector<std::vector<int>> all_sign_vectors(int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(p, -1);
    while (true) {
        out.push_back(v);
        int a = p - 1;
        while (a >= 0 && v[a] == 1) v[a--] = -1;
        if (a < 0) break;
        ++v[a];
    }
    return out;
}

}  // namespace

TEST_CASE("decode turns weights into prefix-sum cuts") {
    const Group z2 = Group::cyclic(2);
    const PartitionScheme s = decode(make_join_point(z2, {ratio(1, 2), ratio(1, 2)}, {0, 1}), 2);
    CHECK(s.cuts == std::vector<Rational>{ratio(1, 2)});
    CHECK(s.family(0) == std::vector<Interval>{{Rational(0), ratio(1, 2)}});
    CHECK(s.family(1) == std::vector<Interval>{{ratio(1, 2), Rational(1)}});

    const Group z3 = Group::cyclic(3);
    const PartitionScheme t = decode(make_join_point(z3, {ratio(1, 3), ratio(1, 3), ratio(1, 3)}, {0, 1, 2}), 3);
    CHECK(t.cuts == std::vector<Rational>{ratio(1, 3), ratio(2, 3)});

    const PartitionScheme v = decode(join_vertex(3, 2, 1), 3);
    for (const auto& x : v.cuts) CHECK((x == 0 || x == 1));
    CHECK(v.family(2) == std::vector<Interval>{{Rational(0), Rational(1)}});
}

TEST_CASE("values tables") {
    const Group z2 = Group::cyclic(2);
    const PartitionScheme half = decode(make_join_point(z2, {ratio(1, 2), ratio(1, 2)}, {0, 1}), 2);
    CHECK(values_table(half, {Measure::uniform()}).entries == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});

    std::mt19937_64 rng(3);
    const auto measures = oracle::random_measures(rng, 3);
    const PartitionScheme all0 = decode(join_vertex(4, 0, 2), 2);
    const ValuesTable t = values_table(all0, measures);
    for (int i = 0; i < 3; ++i) {
        CHECK(t.at(i, 0) == 1);
        CHECK(t.at(i, 1) == 0);
    }

    const auto abab = beads_to_measures(parse_beads("abab"));
    const ValuesTable u = values_table(half, abab);
    CHECK(u.entries == std::vector<Rational>(4, ratio(1, 2)));
}

TEST_CASE("values agree with independent integration and rows sum to one") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Group g = trial % 3 == 0 ? Group::cyclic(4) : Group::cyclic(2 + trial % 2);
        const int n = 1 + trial % 3;
        const auto measures = oracle::random_measures(rng, n);
        const JoinPoint p = oracle::random_join_point(rng, g, n * (g.order() - 1) + 1);
        const PartitionScheme s = decode(p, g.order());
        const ValuesTable t = values_table(s, measures);
        const auto expected = oracle::reintegrate(s, measures);
        for (int i = 0; i < n; ++i) {
            Rational sum = 0;
            for (int j = 0; j < g.order(); ++j) {
                CHECK(t.at(i, j) == expected[i][j]);
                sum += t.at(i, j);
            }
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("defect matrix") {
    CHECK(defect_from_values(row({ratio(1, 2), ratio(1, 2)})).is_zero());
    CHECK(defect_from_values(row({ratio(2, 5), ratio(3, 5)})).entries() ==
          std::vector<Rational>{ratio(-1, 5), ratio(1, 5)});
    CHECK(defect_from_values(row({ratio(1, 5), ratio(3, 10), ratio(1, 2)})).entries() ==
          std::vector<Rational>{ratio(-3, 10), ratio(1, 10), ratio(1, 5)});

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Group g = Group::cyclic(3);
        const auto measures = oracle::random_measures(rng, 2);
        const ValuesTable t = values_table(decode(oracle::random_join_point(rng, g, 5), 3), measures);
        const ZeroSumMatrix d = defect_from_values(t);
        for (int i = 0; i < 2; ++i) {
            // Telescoping reconstruction from column 0.
            Rational value = t.at(i, 0);
            for (int j = 1; j < 3; ++j) {
                value += d.at(i, j);
                CHECK(value == t.at(i, j));
            }
        }
        bool constant = true;
        for (const auto& v : t.entries) constant = constant && v == ratio(1, 3);
        CHECK(d.is_zero() == constant);
    }
}

TEST_CASE("distress labels of the worked examples") {
    CHECK(label_from_values(row({ratio(1, 3), ratio(1, 3), ratio(1, 3)})).exact);
    const LabelOutcome three = label_from_values(row({ratio(1, 5), ratio(3, 10), ratio(1, 2)}));
    CHECK_FALSE(three.exact);
    CHECK(three.label == CrossLabel{2, 1});
    const LabelOutcome two = label_from_values(row({ratio(2, 5), ratio(3, 5)}));
    CHECK(two.label == CrossLabel{1, 1});
}

TEST_CASE("lambda_2 is the first measure attaining the global minimum") {
    ValuesTable t;
    t.n = 3;
    t.k = 2;
    t.entries = {ratio(1, 2), ratio(1, 2), ratio(3, 10), ratio(7, 10), ratio(7, 10), ratio(3, 10)};
    CHECK(label_from_values(t).label.row == 2);
}

TEST_CASE("smallest rotation is unique for non-constant sign vectors of prime length") {
    for (int p : {2, 3, 5}) {
        for (const auto& v : all_sign_vectors(p)) {
            const bool constant = std::all_of(v.begin(), v.end(), [&](int s) { return s == v[0]; });
            if (constant) continue;
            const int best = smallest_rotation(v);
            int ties = 0;
            for (int start = 0; start < p; ++start) {
                bool equal = true;
                for (int t = 0; t < p; ++t) equal = equal && v[(start + t) % p] == v[(best + t) % p];
                ties += equal;
            }
            CHECK(ties == 1);
        }
    }
}

TEST_CASE("for two and three parts the label points at a largest part") {
    // Exhaustive over value rows with entries 0..4; only comparisons matter.
    for (int p : {2, 3}) {
        std::vector<int> digits(p, 0);
        while (true) {
            std::vector<Rational> values;
            for (int d : digits) values.emplace_back(d);
            const LabelOutcome out = label_from_values(row(values));
            if (!out.exact) {
                const int largest = *std::max_element(digits.begin(), digits.end());
                CHECK(digits[out.label.g] == largest);
            }
            int a = p - 1;
            while (a >= 0 && digits[a] == 4) digits[a--] = 0;
            if (a < 0) break;
            ++digits[a];
        }
    }
    // With five parts some row gets a label below its maximum.
    bool counterexample = false;
    std::vector<int> digits(5, 0);
    while (!counterexample) {
        std::vector<Rational> values;
        for (int d : digits) values.emplace_back(d);
        const LabelOutcome out = label_from_values(row(values));
        if (!out.exact) counterexample = digits[out.label.g] < *std::max_element(digits.begin(), digits.end());
        int a = 4;
        while (a >= 0 && digits[a] == 4) digits[a--] = 0;
        if (a < 0) break;
        ++digits[a];
    }
    CHECK(counterexample);
}

TEST_CASE("labeling and values are equivariant") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = std::vector<int>{2, 3, 5}[trial % 3];
        const Group g = Group::cyclic(p);
        const auto measures = oracle::random_measures(rng, 1 + trial % 2);
        const int n = static_cast<int>(measures.size());
        const JoinPoint v = oracle::random_join_point(rng, g, n * (p - 1) + 1);
        const Element h = static_cast<Element>(trial % p);
        const JoinPoint w = act_point(g, h, v);
        const LabelOutcome a = label_vertex(v, measures, p);
        const LabelOutcome b = label_vertex(w, measures, p);
        CHECK(a.exact == b.exact);
        if (!a.exact) CHECK(b.label == CrossLabel{g.mul(h, a.label.g), a.label.row});
        const ValuesTable x = values_table(decode(v, p), measures);
        const ValuesTable y = values_table(decode(w, p), measures);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < p; ++j) CHECK(y.at(i, g.mul(h, j)) == x.at(i, j));
        }
    }
}

TEST_CASE("labeling preconditions") {
    const auto measures = std::vector<Measure>{Measure::uniform()};
    CHECK_THROWS_AS(label_vertex(join_vertex(4, 0, 0), measures, 4), InputError);
    CHECK_THROWS_AS(label_vertex(join_vertex(2, 0, 0), measures, 3), InputError);
}

TEST_CASE("scheme validation and effective cuts") {
    PartitionScheme s{2, {ratio(1, 3), ratio(1, 3), ratio(2, 3)}, {0, 1, 1, 0}};
    CHECK_NOTHROW(validate_scheme(s));
    CHECK(s.effective_cut_count() == 2);
    s.cuts = {ratio(2, 3), ratio(1, 3), ratio(2, 3)};
    CHECK_THROWS_AS(validate_scheme(s), InputError);
    PartitionScheme bad{2, {ratio(1, 2)}, {0, 2}};
    CHECK_THROWS_AS(validate_scheme(bad), InputError);
}

TEST_CASE("bead rounding") {
    CHECK_THROWS_AS(check_divisible(parse_beads("ab"), 2), InputError);

    const BeadString abab = parse_beads("abab");
    const auto split = round_to_beads(PartitionScheme{2, {ratio(1, 2)}, {0, 1}}, abab, 2);
    REQUIRE(split.has_value());
    CHECK(split->cut_count() == 1);
    CHECK(split->shares == std::vector<std::vector<int>>{{1, 1}, {1, 1}});

    // Cuts just past bead boundaries round back onto them.
    const BeadString aabb = parse_beads("aabb");
    const auto near = round_to_beads(PartitionScheme{2, {ratio(26, 100), ratio(74, 100)}, {0, 1, 0}}, aabb, 2);
    REQUIRE(near.has_value());
    CHECK(near->boundaries == std::vector<int>{1, 3});

    // 3/8 and 5/8 of four beads sit on half-bead ties; the nearest rounding fails
    // and one of the floor/ceil alternatives succeeds.
    const auto tie = round_to_beads(PartitionScheme{2, {ratio(3, 8), ratio(5, 8)}, {0, 1, 0}}, aabb, 2);
    REQUIRE(tie.has_value());
    CHECK(tie->shares == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
}

TEST_CASE("necklace pipeline on small strings") {
    const NecklaceSplit aabb = split_necklace(parse_beads("aabb"), 2);
    CHECK(aabb.cut_count() <= 2);
    CHECK(aabb.shares == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
    const NecklaceSplit abab = split_necklace(parse_beads("abab"), 2);
    CHECK(abab.cut_count() == 1);
    const NecklaceSplit three = split_necklace(parse_beads("aaabbbcccaaabbbccc"), 3);
    CHECK(three.cut_count() <= 6);
    CHECK(evaluate_split(parse_beads("aaabbbcccaaabbbccc"), 3, three.boundaries, three.assignment).has_value());
}

TEST_CASE("composite division") {
    const std::vector<Measure> uniform{Measure::uniform()};
    const DivisionOutcome four = compose_division(uniform, 4, ratio(1, 10));
    CHECK(oracle::within(four.scheme, uniform, ratio(1, 10)));
    CHECK(four.scheme.cuts.size() == 3);

    std::mt19937_64 rng(66);
    const auto measures = oracle::random_measures(rng, 1);
    const DivisionOutcome six = compose_division(measures, 6, ratio(1, 10));
    CHECK(oracle::within(six.scheme, measures, ratio(1, 10)));
    CHECK(six.scheme.cuts.size() == 5);
    CHECK(six.scheme.effective_cut_count() <= 5);

    const DivisionOutcome two = compose_division(measures, 2, ratio(1, 20));
    CHECK(oracle::within(two.scheme, measures, ratio(1, 20)));
    CHECK_THROWS_AS(compose_division(measures, 1, ratio(1, 10)), InputError);
    CHECK_THROWS_AS(compose_division(measures, 4, Rational(0)), InputError);
}
