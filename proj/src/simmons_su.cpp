#include "equidiv/simmons_su.hpp"

#include "equidiv/error.hpp"

#include <algorithm>

namespace equidiv {

SPoint make_spoint(int k, std::vector<Rational> t, std::vector<int> j) {
    if (k < 2) throw InputError("k must be at least 2");
    if (t.size() != j.size() || t.empty()) throw InputError("weights and exponents must have the same nonzero length");
    Rational total = 0;
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (t[s] < 0) throw InputError("weight " + std::to_string(s) + " is negative");
        if (j[s] < 1 || j[s] > k) throw InputError("exponent " + std::to_string(s) + " is outside 1..k");
        if (t[s] == 0) j[s] = k;
        total += t[s];
    }
    if (total != 1) throw InputError("weights must sum to one");
    return SPoint{k, std::move(t), std::move(j)};
}

std::vector<Element> default_enumeration(const Group& group) {
    std::vector<Element> out(group.order());
    for (int g = 0; g < group.order(); ++g) out[g] = g;
    return out;
}

void validate_enumeration(const Group& group, const std::vector<Element>& enumeration) {
    if (static_cast<int>(enumeration.size()) != group.order()) {
        throw InputError("enumeration has " + std::to_string(enumeration.size()) + " entries for a group of order " +
                         std::to_string(group.order()));
    }
    std::vector<bool> seen(group.order(), false);
    for (Element g : enumeration) {
        if (!group.valid(g) || seen[g]) throw InputError("enumeration must list every element exactly once");
        seen[g] = true;
    }
}

namespace {

int exponent_of(const std::vector<Element>& enumeration, Element g) {
    const auto it = std::find(enumeration.begin(), enumeration.end(), g);
    return static_cast<int>(it - enumeration.begin()) + 1;
}

}  // namespace

JoinPoint to_join_point(const SPoint& s, const Group& group, const std::vector<Element>& enumeration) {
    validate_enumeration(group, enumeration);
    if (s.k != group.order()) throw InputError("point and group disagree on k");
    std::vector<Element> elements;
    for (int j : s.j) elements.push_back(enumeration[j - 1]);
    return make_join_point(group, s.t, std::move(elements));
}

SPoint from_join_point(const JoinPoint& point, const Group& group, const std::vector<Element>& enumeration) {
    validate_enumeration(group, enumeration);
    std::vector<int> j;
    for (Element g : point.elements) j.push_back(exponent_of(enumeration, g));
    return make_spoint(group.order(), point.weights, std::move(j));
}

int act_exponent(const Group& group, const std::vector<Element>& enumeration, Element g, int j) {
    return exponent_of(enumeration, group.multiply(g, enumeration[j - 1]));
}

SPoint act_spoint(const Group& group, const std::vector<Element>& enumeration, Element g, const SPoint& s) {
    std::vector<int> j;
    for (std::size_t slot = 0; slot < s.j.size(); ++slot) {
        j.push_back(s.t[slot] == 0 ? s.k : act_exponent(group, enumeration, g, s.j[slot]));
    }
    return make_spoint(s.k, s.t, std::move(j));
}

ConjectureOutcome check_conjecture_instance(const GComplex& complex, const std::vector<RootLabel>& labels, int n,
                                            const std::vector<Element>& enumeration, const SearchOptions& options) {
    const Group& group = complex.group;
    validate_enumeration(group, enumeration);
    if (static_cast<int>(labels.size()) != complex.vertex_count()) throw InputError("one label per vertex is required");
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const auto [j, m] = labels[v];
        if (j < 1 || j > group.order() || m < 1 || m > n) {
            throw InputError("label of vertex " + std::to_string(v) + " is out of range");
        }
    }
    const Labeling labeling = [&](int v) {
        return LabelOutcome{false, CrossLabel{enumeration[labels[v].first - 1], labels[v].second}};
    };
    SearchOptions strict = options;
    strict.spot_checks = 0;
    const SearchResult result = find_fully_labeled(complex, labeling, n, strict);

    ConjectureOutcome out;
    if (result.kind == SearchResult::Kind::FoundSimplex) {
        out.found = true;
        out.m = result.i0;
        for (Element g : enumeration) out.vertices.push_back(result.simplex[g]);
    }
    return out;
}

}  // namespace equidiv
