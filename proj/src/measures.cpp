#include "equidiv/measures.hpp"

#include "equidiv/error.hpp"

#include <algorithm>

namespace equidiv {

Measure::Measure(std::vector<Rational> breakpoints, std::vector<Rational> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
    if (breakpoints_.size() < 2 || densities_.size() + 1 != breakpoints_.size()) {
        throw InputError("measure needs m+1 breakpoints for m densities (m >= 1)");
    }
    for (auto& b : breakpoints_) b.canonicalize();
    for (auto& d : densities_) d.canonicalize();
    if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
        throw InputError("measure breakpoints must start at 0 and end at 1");
    }
    cumulative_.assign(breakpoints_.size(), Rational(0));
    for (std::size_t t = 0; t < densities_.size(); ++t) {
        if (breakpoints_[t + 1] <= breakpoints_[t]) throw InputError("measure breakpoints must be strictly increasing");
        if (densities_[t] < 0) throw InputError("measure density " + std::to_string(t) + " is negative");
        cumulative_[t + 1] = cumulative_[t] + densities_[t] * (breakpoints_[t + 1] - breakpoints_[t]);
    }
    if (cumulative_.back() != 1) throw InputError("measure total mass is " + to_string(cumulative_.back()) + ", not 1");
}

Measure Measure::uniform() { return Measure({Rational(0), Rational(1)}, {Rational(1)}); }

Rational Measure::max_density() const { return *std::max_element(densities_.begin(), densities_.end()); }

Rational Measure::cdf(const Rational& x) const {
    if (x < 0 || x > 1) throw InputError("cdf argument " + to_string(x) + " outside [0,1]");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.end()) return 1;
    const std::size_t t = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return cumulative_[t] + densities_[t] * (x - breakpoints_[t]);
}

Rational mass_of_union(const Measure& measure, const std::vector<Interval>& intervals) {
    std::vector<Interval> sorted = intervals;
    std::sort(sorted.begin(), sorted.end());
    Rational total = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& [a, b] = sorted[i];
        if (a > b) throw InputError("interval [" + to_string(a) + "," + to_string(b) + "] is reversed");
        if (i > 0 && a < sorted[i - 1].second) throw InputError("intervals overlap in their interiors");
        total += measure.cdf(b) - measure.cdf(a);
    }
    return total;
}

std::vector<int> BeadString::counts() const {
    std::vector<int> out(color_count, 0);
    for (int c : colors) ++out[c];
    return out;
}

std::string BeadString::text() const {
    std::string out;
    for (int c : colors) out.push_back(static_cast<char>('a' + c));
    return out;
}

BeadString parse_beads(std::string_view text) {
    BeadString out;
    if (text.empty()) throw InputError("bead string is empty");
    for (char ch : text) {
        if (ch < 'a' || ch > 'z') throw InputError(std::string("bead '") + ch + "' is not in a-z");
        out.colors.push_back(ch - 'a');
        out.color_count = std::max(out.color_count, ch - 'a' + 1);
    }
    const auto counts = out.counts();
    for (int c = 0; c < out.color_count; ++c) {
        if (counts[c] == 0) throw InputError(std::string("color '") + static_cast<char>('a' + c) + "' is absent");
    }
    return out;
}

std::vector<Measure> beads_to_measures(const BeadString& beads) {
    const int length = beads.length();
    const auto counts = beads.counts();
    std::vector<Measure> out;
    for (int c = 0; c < beads.color_count; ++c) {
        if (counts[c] == 0) throw InputError(std::string("color '") + static_cast<char>('a' + c) + "' is absent");
        std::vector<Rational> breaks{Rational(0)};
        std::vector<Rational> dens;
        const Rational density = ratio(length, counts[c]);
        for (int s = 0; s < length; ++s) {
            const Rational d = beads.colors[s] == c ? density : Rational(0);
            if (!dens.empty() && dens.back() == d) {
                breaks.back() = ratio(s + 1, length);
            } else {
                dens.push_back(d);
                breaks.push_back(ratio(s + 1, length));
            }
        }
        out.emplace_back(std::move(breaks), std::move(dens));
    }
    return out;
}

Measure restrict_to_pieces(const Measure& measure, const std::vector<Interval>& pieces) {
    Rational length = 0;
    for (const auto& [a, b] : pieces) length += b - a;
    const Rational mass = mass_of_union(measure, pieces);
    if (length <= 0 || mass <= 0) throw InputError("cannot restrict a measure to a null set");

    std::vector<Rational> breaks{Rational(0)};
    std::vector<Rational> dens;
    Rational offset = 0;
    const auto& bp = measure.breakpoints();
    for (const auto& [a, b] : pieces) {
        if (a == b) continue;
        std::vector<Rational> cuts{a};
        for (const auto& x : bp) {
            if (x > a && x < b) cuts.push_back(x);
        }
        cuts.push_back(b);
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            const Rational width = cuts[s + 1] - cuts[s];
            const Rational piece_mass = measure.cdf(cuts[s + 1]) - measure.cdf(cuts[s]);
            const Rational d = piece_mass / width * length / mass;
            offset += width;
            const Rational right = offset / length;
            if (!dens.empty() && dens.back() == d) {
                breaks.back() = right;
            } else {
                dens.push_back(d);
                breaks.push_back(right);
            }
        }
    }
    return Measure(std::move(breaks), std::move(dens));
}

Rational uncollapse(const std::vector<Interval>& pieces, const Rational& position) {
    Rational length = 0;
    for (const auto& [a, b] : pieces) length += b - a;
    Rational remaining = position * length;
    for (const auto& [a, b] : pieces) {
        const Rational width = b - a;
        if (remaining <= width && width > 0) return a + remaining;
        remaining -= width;
    }
    return pieces.back().second;
}

}  // namespace equidiv
