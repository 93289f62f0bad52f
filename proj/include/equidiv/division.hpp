#pragma once

#include "equidiv/crosspolytope.hpp"
#include "equidiv/join_complex.hpp"
#include "equidiv/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equidiv {

/// Cuts x_0 <= ... <= x_{N-1} of [0,1] and the part (group element id) of
/// each of the N+1 resulting intervals [x_{j-1}, x_j], x_{-1} = 0, x_N = 1.
struct PartitionScheme {
    int k = 2;
    std::vector<Rational> cuts;
    std::vector<Element> assignment;

    Interval interval(std::size_t j) const;
    std::vector<Interval> family(Element part) const;
    /// Positions where the assigned part actually changes across a nonempty boundary.
    int effective_cut_count() const;
};

/// Throws InputError unless cuts are sorted within [0,1] and every interval
/// has a part id in [0, k).
void validate_scheme(const PartitionScheme& scheme);

/// Row-major n x k table of rationals.
struct ValuesTable {
    int n = 0;
    int k = 0;
    std::vector<Rational> entries;

    const Rational& at(int i, int j) const { return entries[i * k + j]; }
    Rational& at(int i, int j) { return entries[i * k + j]; }
    bool operator==(const ValuesTable&) const = default;
};

/// Cuts are prefix sums of the weights; interval j belongs to part g_j.
PartitionScheme decode(const JoinPoint& point, int k);

/// Entry (i, j) = mu_i(union of part j).
ValuesTable values_table(const PartitionScheme& scheme, const std::vector<Measure>& measures);

/// Cyclic successive differences x_{i,j} - x_{i,j-1} of the values rows.
ZeroSumMatrix defect_from_values(const ValuesTable& values);
ZeroSumMatrix defect_matrix(const PartitionScheme& scheme, const std::vector<Measure>& measures);

/// Outcome of the distress labeling at one vertex.
struct LabelOutcome {
    bool exact = false;
    CrossLabel label;  // meaningful only when !exact
    bool operator==(const LabelOutcome&) const = default;
};

/// The labeling on a precomputed values table (p = number of columns).
/// lambda_2 is the smallest measure attaining the global minimum value and
/// lambda_1 the start of the lexicographically smallest rotation (order
/// - < 0 < +) of that measure's cyclic sign vector. Part / label [j] of the
/// 1-based notation is element j-1.
LabelOutcome label_from_values(const ValuesTable& values);

/// Throws InputError unless p is prime and the point has n(p-1)+1 slots.
LabelOutcome label_vertex(const JoinPoint& point, const std::vector<Measure>& measures, int p);

/// Index of the lexicographically smallest rotation of a sign vector over
/// {-1, 0, +1}; ties keep the earliest start.
int smallest_rotation(const std::vector<int>& signs);

/// max_{i,j} |values(i,j) - 1/k|.
Rational max_deviation(const ValuesTable& values);

/// Options shared by the prime pipeline and the composite composition.
struct DivideOptions {
    int cap = 8;
    int workers = 1;
    bool orbit_pruning = true;
    bool value_pruning = true;
    /// Upper limit on finest-level facets examined before giving up.
    std::uint64_t facet_budget = 400'000'000ULL;
    int retry_budget = 6;
};

struct DivisionCertificate {
    Rational epsilon;
    Rational max_deviation;
    bool exact = false;
};

struct DivisionOutcome {
    PartitionScheme scheme;
    ValuesTable values;
    DivisionCertificate certificate;
};

/// eps-division for any k >= 2. Prime k runs the labeled-simplex pipeline
/// directly; composite k splits into the smallest prime factor first,
/// renormalizes every measure on every part and recurses, shrinking the
/// per-level budget and retrying until the re-integrated result is within
/// eps. Throws VerificationError when the retry budget runs out.
DivisionOutcome compose_division(const std::vector<Measure>& measures, int k, const Rational& epsilon,
                                 const DivideOptions& options = {});

/// Independent re-integration check: every |mu_i(F_j) - 1/k| < eps.
bool verify_division(const PartitionScheme& scheme, const std::vector<Measure>& measures, const Rational& epsilon);

/// A discrete necklace split: pieces between bead boundaries, one part per piece.
struct NecklaceSplit {
    int k = 2;
    std::vector<int> boundaries;  // bead-boundary indices of the cuts, in 0..L
    std::vector<Element> assignment;
    /// shares[part][color]
    std::vector<std::vector<int>> shares;
    int total_beads = 0;
    /// Bead boundaries where the owning part actually changes.
    int cut_count() const;
};

/// Throws InputError unless every color count is divisible by k.
void check_divisible(const BeadString& beads, int k);

/// Counts beads of each color per part; nullopt unless every part gets
/// exactly count(c)/k beads of every color.
std::optional<NecklaceSplit> evaluate_split(const BeadString& beads, int k, const std::vector<int>& boundaries,
                                            const std::vector<Element>& assignment);

/// Moves every cut to its nearest bead boundary (ties toward 0) and checks
/// the split; when that fails, tries every floor/ceil rounding of the cuts.
/// nullopt means no rounding of this scheme is an exact split.
std::optional<NecklaceSplit> round_to_beads(const PartitionScheme& scheme, const BeadString& beads, int k);

/// Full discrete pipeline: measures from beads, eps = 1/(4kL), division,
/// rounding; halves eps and retries when rounding fails.
NecklaceSplit split_necklace(const BeadString& beads, int k, const DivideOptions& options = {});

}  // namespace equidiv
