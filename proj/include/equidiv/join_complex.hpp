#pragma once

#include "equidiv/group.hpp"
#include "equidiv/rational.hpp"

#include <cstddef>
#include <vector>

namespace equidiv {

/// Point of the join G * ... * G (N+1 factors): slot j carries weight t_j
/// and group element g_j. Canonical form puts the identity on zero-weight
/// slots, so equality of points is equality of representations.
struct JoinPoint {
    std::vector<Rational> weights;
    std::vector<Element> elements;

    std::size_t slots() const { return weights.size(); }
    bool operator==(const JoinPoint& other) const = default;
};

/// Validates weights (nonnegative, summing to one) and element ids, then
/// canonicalizes. Throws InputError.
JoinPoint make_join_point(const Group& group, std::vector<Rational> weights, std::vector<Element> elements);

/// The vertex (g, j) of the natural triangulation: all weight on slot j.
JoinPoint join_vertex(int slots, Element g, int j);

/// Diagonal action: every slot's element is multiplied on the left by g.
JoinPoint act_point(const Group& group, Element g, const JoinPoint& point);

/// Simplicial complex with a free simplicial G-action whose vertices carry
/// exact coordinates in the join. Facets are stored as ascending vertex ids.
struct GComplex {
    Group group;
    int N = 0;
    int depth = 0;
    std::vector<JoinPoint> coords;
    std::vector<std::vector<int>> facets;
    /// action[g][v] is the vertex id of g.v.
    std::vector<std::vector<int>> action;
    /// For subdivided complexes: index of the parent facet containing facet f.
    std::vector<int> parent_facet;

    int vertex_count() const { return static_cast<int>(coords.size()); }
    std::size_t facet_count() const { return facets.size(); }
    int act(Element g, int v) const { return action[g][v]; }
    std::vector<int> act_on_set(Element g, const std::vector<int>& vertices) const;
};

/// E_N G with its natural triangulation. Vertex (g, j) has id j*k + g and
/// facets are all choices of one element per slot.
GComplex build_join_complex(const Group& group, int N);

/// Standard barycentric subdivision with the induced action.
GComplex barycentric_subdivide(const GComplex& complex);

/// Unique edges (v < w) of the complex, in ascending order.
std::vector<std::pair<int, int>> complex_edges(const GComplex& complex);

/// True when every weight of `point` is supported on the slots/elements of
/// the natural simplex whose vertices are `facet_elements` (one per slot).
bool point_in_natural_simplex(const JoinPoint& point, const std::vector<Element>& facet_elements);

}  // namespace equidiv
