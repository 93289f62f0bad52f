#pragma once

#include "equidiv/join_complex.hpp"
#include "equidiv/tucker_search.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace equidiv {

/// (t_0 w^{j_0}, ..., t_n w^{j_n}) with w a primitive k-th root of unity;
/// exponents run over 1..k and zero slots carry j = k.
struct SPoint {
    int k = 2;
    std::vector<Rational> t;
    std::vector<int> j;
    bool operator==(const SPoint&) const = default;
};

/// Validates and canonicalizes. Throws InputError.
SPoint make_spoint(int k, std::vector<Rational> t, std::vector<int> j);

/// g_1..g_k as element ids; identity order by default.
std::vector<Element> default_enumeration(const Group& group);

/// Throws InputError unless `enumeration` lists every element once.
void validate_enumeration(const Group& group, const std::vector<Element>& enumeration);

JoinPoint to_join_point(const SPoint& s, const Group& group, const std::vector<Element>& enumeration);
SPoint from_join_point(const JoinPoint& point, const Group& group, const std::vector<Element>& enumeration);

/// Exponent j' with g_{j'} = g g_j.
int act_exponent(const Group& group, const std::vector<Element>& enumeration, Element g, int j);
SPoint act_spoint(const Group& group, const std::vector<Element>& enumeration, Element g, const SPoint& s);

/// Label w^j m of a vertex: j in 1..k, m in 1..n.
using RootLabel = std::pair<int, int>;

struct ConjectureOutcome {
    bool found = false;
    /// Vertices carrying w^1 m, ..., w^k m in order.
    std::vector<int> vertices;
    int m = 0;
};

/// Translates root labels to group labels through the enumeration and
/// searches for k adjacent vertices labeled {w^j m : 1 <= j <= k}.
/// NotFound is data. Throws InputError for non-equivariant labels.
ConjectureOutcome check_conjecture_instance(const GComplex& complex, const std::vector<RootLabel>& labels, int n,
                                            const std::vector<Element>& enumeration, const SearchOptions& options = {});

}  // namespace equidiv
