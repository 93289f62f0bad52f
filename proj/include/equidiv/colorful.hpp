#pragma once

#include "equidiv/crosspolytope.hpp"

#include <cstdint>
#include <vector>

namespace equidiv {

/// columns[nu][row]: d+1 columns of m rational vectors in dimension d, the
/// origin in the convex hull of every column.
struct ColorfulInstance {
    int d = 1;
    int m = 1;
    std::vector<std::vector<RationalVector>> columns;
};

/// Throws InputError on shape errors or when a column misses the origin.
void validate_instance(const ColorfulInstance& instance);

struct ColorfulSelection {
    /// alpha[nu] = chosen row (0-based) of column nu.
    std::vector<int> alpha;
    ConvexWitness witness;
    std::uint64_t nodes = 0;
};

/// Depth-first search over transversals in lexicographic order; the first
/// transversal whose hull contains the origin is returned.
ColorfulSelection colorful_caratheodory(const ColorfulInstance& instance);

}  // namespace equidiv
