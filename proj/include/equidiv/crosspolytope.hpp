#pragma once

#include "equidiv/group.hpp"
#include "equidiv/rational.hpp"

#include <optional>
#include <vector>

namespace equidiv {

using RationalVector = std::vector<Rational>;

/// n x k rational matrix with zero row sums; columns are group element ids
/// and G acts by permuting columns.
class ZeroSumMatrix {
public:
    /// Throws InputError unless every row sums to exactly zero.
    ZeroSumMatrix(int rows, int cols, std::vector<Rational> entries);
    static ZeroSumMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return entries_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return entries_; }
    bool is_zero() const;

    /// Column c moves to column g.c.
    ZeroSumMatrix act(const Group& group, Element g) const;
    ZeroSumMatrix operator+(const ZeroSumMatrix& other) const;
    bool operator==(const ZeroSumMatrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

/// Vertex (g, i) of the generalized crosspolytope; `row` is 1-based.
struct CrossLabel {
    Element g = 0;
    int row = 1;
    auto operator<=>(const CrossLabel&) const = default;
};

/// The matrix with row i equal to e_g - (1/k) sum_h e_h and zeros elsewhere.
ZeroSumMatrix vertex_vector(Element g, int row, int n, const Group& group);

/// Smallest row i such that (h, i) is in `labels` for every h in G.
std::optional<int> fiber_complete(const std::vector<CrossLabel>& labels, const Group& group, int n);

struct ConvexWitness {
    bool contains = false;
    /// One coefficient per input point; nonzero only on the support.
    std::vector<Rational> coefficients;
};

/// Decides 0 in conv(points) exactly. On success the coefficients are
/// nonnegative, sum to one, reproduce the zero vector and are supported on
/// at most d+1 affinely independent points.
ConvexWitness conv_contains_zero(const std::vector<RationalVector>& points, int d);

/// Checks a witness against the points in exact arithmetic.
bool witness_is_valid(const std::vector<RationalVector>& points, const ConvexWitness& witness);

/// G-invariant polytope given by its vertex vectors and the action as a
/// permutation of vertex ids.
struct GPolytope {
    std::vector<RationalVector> vertices;
    std::vector<std::vector<int>> action;

    int dimension() const { return vertices.empty() ? 0 : static_cast<int>(vertices.front().size()); }
};

/// Checks that the action is a homomorphism into vertex permutations and
/// that the vertex barycenter is the origin (which puts 0 in the interior
/// whenever V^G = 0). Throws InputError.
void validate_polytope(const GPolytope& polytope, const Group& group);

/// The generalized crosspolytope: vertex (g, i) has id (i-1)*k + g and
/// coordinates vertex_vector(g, i) flattened row-major.
GPolytope crosspolytope(const Group& group, int n);

}  // namespace equidiv
