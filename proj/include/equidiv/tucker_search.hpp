#pragma once

#include "equidiv/crosspolytope.hpp"
#include "equidiv/division.hpp"
#include "equidiv/join_complex.hpp"
#include "equidiv/measures.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace equidiv {

/// Vertex labeling of a complex; must be safe to call concurrently.
using Labeling = std::function<LabelOutcome(int vertex)>;

struct SearchResult {
    enum class Kind { ExactVertex, FoundSimplex, NotFound };
    Kind kind = Kind::NotFound;
    int exact_vertex = -1;
    /// simplex[r] carries label (element r, i0).
    std::vector<int> simplex;
    int i0 = 0;
    std::uint64_t facets_scanned = 0;
};

struct SearchOptions {
    bool orbit_pruning = true;
    int workers = 1;
    /// Vertices sampled for the equivariance check (all of them when <= 0).
    int spot_checks = 64;
};

/// Scans facets (one per orbit when pruning) for an Exact vertex or a face
/// labeled by a full fiber {(g, i) : g in G}. The smallest Exact vertex id
/// wins; otherwise the face with the lexicographically smallest sorted ids.
/// Orbit pruning compares translates, so both modes return the same answer.
/// Throws InputError when the sampled equivariance check fails.
SearchResult find_fully_labeled(const GComplex& complex, const Labeling& labeling, int n,
                                const SearchOptions& options = {});

/// Serial, every facet, no pruning and no memo.
SearchResult find_fully_labeled_reference(const GComplex& complex, const Labeling& labeling, int n);

/// Checks labeling(g.v) == g.labeling(v); returns the first offending vertex or -1.
int equivariance_violation(const GComplex& complex, const Labeling& labeling, int spot_checks);

/// Largest |mu_i(F_j(v)) - mu_i(F_j(w))| over the edges of the complex, with the edge.
struct EdgeAudit {
    Rational worst;
    int v = -1;
    int w = -1;
};
EdgeAudit audit_edges(const GComplex& complex, const std::vector<Measure>& measures, int p);

/// Barycentric subdivision until every edge moves every value by less than
/// eps/(p-1)^2. Throws CapExceeded naming the worst edge at depth `cap`.
GComplex refine_until_fine(const GComplex& complex, const std::vector<Measure>& measures, const Rational& epsilon,
                           int p, int cap = 8);

struct TuckerTriple {
    bool found = false;
    /// Vertices of the simplex whose images carry the witness, in id order.
    std::vector<int> simplex;
    std::vector<Rational> coefficients;
};

/// Searches the facets of `complex` for one whose image under phi contains
/// the origin, reporting the face spanned by the witness support. Throws
/// InputError unless phi(g.v) = g.phi(v).
TuckerTriple verify_tucker_triple(const GComplex& complex, const std::vector<int>& phi, const GPolytope& polytope);

}  // namespace equidiv
