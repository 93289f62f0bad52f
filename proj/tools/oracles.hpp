#pragma once

#include "equidiv/colorful.hpp"
#include "equidiv/division.hpp"
#include "equidiv/join_complex.hpp"
#include "equidiv/measures.hpp"

#include <optional>
#include <random>
#include <vector>

namespace equidiv::oracle {

/// Mass of [a, b] by summing density times overlap length piece by piece.
Rational integrate(const Measure& measure, const Rational& a, const Rational& b);

/// Values table of a scheme rebuilt from the raw intervals.
std::vector<std::vector<Rational>> reintegrate(const PartitionScheme& scheme, const std::vector<Measure>& measures);

/// True when every reintegrated value lies strictly within epsilon of 1/k.
bool within(const PartitionScheme& scheme, const std::vector<Measure>& measures, const Rational& epsilon);

/// Random piecewise-constant measure: up to `max_pieces` pieces on a grid of
/// denominator at most 12, small integer density weights.
Measure random_measure(std::mt19937_64& rng, int max_pieces = 4);
std::vector<Measure> random_measures(std::mt19937_64& rng, int n, int max_pieces = 4);

/// Uniformly random point of the natural simplex with random elements.
JoinPoint random_join_point(std::mt19937_64& rng, const Group& group, int slots, int denominator = 24);

/// Equivariant labeling of a complex: one random label per vertex orbit.
std::vector<CrossLabel> random_equivariant_labels(std::mt19937_64& rng, const GComplex& complex, int n);

/// Whether k=2 thieves can split the necklace with at most `max_cuts` cuts
/// at bead boundaries (alternating parts, both starting parts).
bool necklace_feasible(const BeadString& beads, int max_cuts);

/// Every transversal (columns in order, rows 0..m-1) whose hull holds the
/// origin, in lexicographic order; stops after the first when `first_only`.
std::vector<std::vector<int>> feasible_transversals(const ColorfulInstance& instance, bool first_only);

/// Random instance with the origin inside every column's hull.
ColorfulInstance random_instance(std::mt19937_64& rng, int d, int m);

/// Every bead string of even length up to max_length whose color counts are
/// all even. The colors used are a, b, ... with no gaps.
std::vector<std::string> even_necklaces(int max_length, int max_colors);

}  // namespace equidiv::oracle
