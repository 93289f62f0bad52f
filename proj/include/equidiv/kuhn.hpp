#pragma once

#include "equidiv/group.hpp"
#include "equidiv/join_complex.hpp"
#include "equidiv/measures.hpp"

#include <cstdint>
#include <vector>

namespace equidiv {

/// Simplex of the Kuhn (Freudenthal) triangulation of the cut cube, at some
/// resolution M. Cut coordinates are integers y in [0, M]; the simplex is
/// { base + z : 1 >= z[perm[0]] >= ... >= z[perm[N-1]] >= 0 }.
struct KuhnCell {
    std::vector<int> base;
    std::vector<int> perm;
};

/// One child of the canonical order simplex split by an integer factor.
struct ChildTemplate {
    std::vector<int> offset;  // nonincreasing, entries in [0, q)
    std::vector<int> order;   // fractional-part order
};

/// All q^N Kuhn simplices of factor q inside the canonical order simplex.
std::vector<ChildTemplate> child_templates(int dimension, int q);

/// The natural join simplex as a single cell at resolution one: cuts are
/// nondecreasing, so z[N-1] >= ... >= z[0].
KuhnCell root_cell(int dimension);

KuhnCell child_cell(const KuhnCell& parent, int q, const ChildTemplate& tmpl);

/// Vertex a of the cell (a = 0..N): base plus e_perm[0] + ... + e_perm[a-1].
std::vector<int> cell_vertex(const KuhnCell& cell, int a);

/// G-invariant uniform refinement of E_N G: every natural join simplex is cut
/// into resolution^N Kuhn simplices of the cut coordinates x_j = t_0+...+t_j.
/// Facets are indexed by (natural simplex, cell) and never stored.
class KuhnRefinement {
public:
    KuhnRefinement(Group group, int N, std::int64_t resolution);

    const Group& group() const { return group_; }
    int N() const { return N_; }
    std::int64_t resolution() const { return resolution_; }

    std::int64_t natural_simplex_count() const;
    /// Element assignment (g_0..g_N) of natural simplex `index` (g_0 most significant).
    std::vector<Element> natural_simplex(std::int64_t index) const;
    /// Orbit representatives under the diagonal action: g_0 = identity.
    bool is_orbit_representative(std::int64_t index) const;

    /// Join point of lattice cut vector y within the natural simplex `elements`.
    JoinPoint point(const std::vector<int>& cuts, const std::vector<Element>& elements) const;

    /// Canonical comparison key (a_0, g_0, ..., a_N, g_N) with a_j the slot
    /// weights in lattice units and the identity on zero slots.
    std::vector<int> vertex_key(const std::vector<int>& cuts, const std::vector<Element>& elements) const;

    /// Explicit complex, vertex ids ordered by vertex_key. Small inputs only.
    GComplex materialize() const;

private:
    Group group_;
    int N_;
    std::int64_t resolution_;
};

/// Prime factors of a {2,3,5}-smooth resolution in splitting order (largest
/// factors first, so the last levels split least).
std::vector<int> split_factors(std::int64_t resolution);

/// Upper bound on |mu_i(F_j(v)) - mu_i(F_j(w))| over all edges (v,w) of the
/// lattice refinement at this resolution: ceil(N/2) times the largest mass
/// of one lattice step, maximized over measures.
Rational lattice_fineness_bound(const std::vector<Measure>& measures, int N, std::int64_t resolution);

}  // namespace equidiv
