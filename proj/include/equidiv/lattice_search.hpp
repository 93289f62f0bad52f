#pragma once

#include "equidiv/division.hpp"
#include "equidiv/kuhn.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace equidiv {

/// A fully labeled (p-1)-face: vertices[r] carries label (element r, i0).
struct FoundFace {
    std::vector<JoinPoint> vertices;
    std::vector<CrossLabel> labels;
    int i0 = 1;
};

/// Raw outcome of a scan of the lattice refinement.
struct LatticeScan {
    std::optional<JoinPoint> exact_vertex;
    std::optional<FoundFace> face;
    /// Vertex key of the exact vertex, or the flattened sorted keys of the face.
    std::vector<int> key;
    std::uint64_t facets_scanned = 0;
    std::uint64_t cells_visited = 0;
    std::uint64_t cells_pruned = 0;
    bool found() const { return exact_vertex.has_value() || face.has_value(); }
};

struct ScanOptions {
    bool orbit_pruning = true;
    bool value_pruning = true;
    int workers = 1;
    std::uint64_t facet_budget = 400'000'000ULL;
};

/// For p in {2,3} the label element of a non-exact vertex is always an argmax
/// part of its lambda_2 row, which makes the band pruning sound.
bool band_pruning_is_sound(int p);

/// Branch-and-bound scan (OpenMP over disjoint cell ranges) of the lattice
/// refinement for the distress labeling of `measures`. `delta` is the edge
/// fineness the refinement is known to satisfy. Facets are ordered by natural
/// simplex, then depth-first through the split hierarchy; the first facet
/// holding an Exact vertex or a fully labeled face decides the result (an
/// Exact vertex wins inside that facet, smallest keys break remaining ties).
/// Independent of worker count.
LatticeScan scan_lattice(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
                         const Rational& delta, const ScanOptions& options = {});

/// Serial reference in the same facet order: rational labels via
/// label_vertex, no pruning. Small resolutions only.
LatticeScan scan_lattice_reference(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
                                   bool orbit_pruning = true);

struct ResolutionChoice {
    std::int64_t resolution = 1;
    int levels = 0;
    Rational bound;
};

/// Smallest {2,3,5}-smooth resolution with at most `cap` prime splitting
/// levels whose fineness certificate is strictly below delta. Throws
/// CapExceeded (naming the best bound reachable) otherwise.
ResolutionChoice choose_resolution(const std::vector<Measure>& measures, int N, const Rational& delta, int cap);

/// Exact largest mass of a lattice step [y/m, (y+1)/m].
Rational max_step_mass(const Measure& measure, std::int64_t resolution);

struct DivisionReport {
    std::int64_t resolution = 1;
    int levels = 0;
    Rational fineness_bound;
    std::uint64_t facets_scanned = 0;
    std::uint64_t cells_visited = 0;
    std::uint64_t cells_pruned = 0;
    bool exact = false;
    std::optional<FoundFace> simplex;
    JoinPoint designated;
};

struct PrimeDivision {
    PartitionScheme scheme;
    ValuesTable values;
    DivisionReport report;
};

/// eps-division into p parts (p prime) with n(p-1) cuts: lattice refinement
/// fine enough for eps/(p-1)^2, distress labeling, fully labeled face search.
/// The returned scheme is re-integrated and checked against eps.
PrimeDivision epsilon_divide(const std::vector<Measure>& measures, int p, const Rational& epsilon,
                             const DivideOptions& options = {});

/// Exact audit of a fully labeled face against the bounds of the
/// approximation argument.
struct FaceAudit {
    bool labels_match = false;      // label_vertex(v_r) == ([r], i0)
    bool fine_edges = false;        // (1) |x^i_rj - x^i_r'j| < eps/(p-1)^2
    bool unit_rows = false;         // (2) every row sums to 1
    bool i0_attains_minimum = false;  // (3) m(v_r) = min_j x^{i0}_rj
    bool literal_diagonal_minimum = false;  // m(v_r) = x^{i0}_{r,[r]}
    bool lower_bound = false;       // x^{i0}_rj > 1/p - eps/(p-1)
    bool upper_bound = false;       // x^i_rj < 1/p + eps
    std::vector<ValuesTable> values;
    bool all() const {
        return labels_match && fine_edges && unit_rows && i0_attains_minimum && lower_bound && upper_bound;
    }
};

FaceAudit audit_face(const FoundFace& face, const std::vector<Measure>& measures, int p, const Rational& epsilon);

}  // namespace equidiv
