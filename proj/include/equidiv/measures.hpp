#pragma once

#include "equidiv/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equidiv {

using Interval = std::pair<Rational, Rational>;

/// Atomless probability measure on [0,1] with piecewise-constant density:
/// density d_t on (b_{t-1}, b_t).
class Measure {
public:
    /// Throws InputError unless 0 = b_0 < ... < b_m = 1, all d_t >= 0 and the
    /// total mass is exactly one.
    Measure(std::vector<Rational> breakpoints, std::vector<Rational> densities);

    static Measure uniform();

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& densities() const { return densities_; }
    int pieces() const { return static_cast<int>(densities_.size()); }
    Rational max_density() const;

    /// Mass of [0, x]. Throws InputError outside [0,1].
    Rational cdf(const Rational& x) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> densities_;
    std::vector<Rational> cumulative_;
};

/// Sum of cdf(b) - cdf(a) over intervals with pairwise disjoint interiors.
Rational mass_of_union(const Measure& measure, const std::vector<Interval>& intervals);

/// Colors are the letters a.. in use; every color up to the largest must occur.
struct BeadString {
    std::vector<int> colors;
    int color_count = 0;

    int length() const { return static_cast<int>(colors.size()); }
    std::vector<int> counts() const;
    std::string text() const;
};

BeadString parse_beads(std::string_view text);

/// One measure per color: density L/count(c) on every bead of color c.
std::vector<Measure> beads_to_measures(const BeadString& beads);

/// Conditional measure on the union of `pieces` (disjoint, sorted), with the
/// gaps between pieces collapsed so the union becomes [0,1] by an affine
/// rescaling. Throws InputError if the union carries no mass or has no length.
Measure restrict_to_pieces(const Measure& measure, const std::vector<Interval>& pieces);

/// Maps a position of the collapsed line of restrict_to_pieces back to [0,1].
Rational uncollapse(const std::vector<Interval>& pieces, const Rational& position);

}  // namespace equidiv
