#include "oracles.hpp"

#include "equidiv/crosspolytope.hpp"

#include <algorithm>
#include <functional>

namespace equidiv::oracle {

Rational integrate(const Measure& measure, const Rational& a, const Rational& b) {
    const auto& bp = measure.breakpoints();
    const auto& dens = measure.densities();
    Rational total = 0;
    for (std::size_t t = 0; t < dens.size(); ++t) {
        const Rational lo = std::max(a, bp[t]);
        const Rational hi = std::min(b, bp[t + 1]);
        if (hi > lo) total += dens[t] * (hi - lo);
    }
    return total;
}

std::vector<std::vector<Rational>> reintegrate(const PartitionScheme& scheme, const std::vector<Measure>& measures) {
    std::vector<std::vector<Rational>> out(measures.size(), std::vector<Rational>(scheme.k, Rational(0)));
    Rational left = 0;
    for (std::size_t j = 0; j <= scheme.cuts.size(); ++j) {
        const Rational right = j < scheme.cuts.size() ? scheme.cuts[j] : Rational(1);
        for (std::size_t i = 0; i < measures.size(); ++i) {
            out[i][scheme.assignment[j]] += integrate(measures[i], left, right);
        }
        left = right;
    }
    return out;
}

bool within(const PartitionScheme& scheme, const std::vector<Measure>& measures, const Rational& epsilon) {
    if (scheme.assignment.size() != scheme.cuts.size() + 1) return false;
    for (std::size_t j = 0; j + 1 < scheme.cuts.size(); ++j) {
        if (scheme.cuts[j] > scheme.cuts[j + 1]) return false;
    }
    const Rational share = ratio(1, scheme.k);
    for (const auto& row : reintegrate(scheme, measures)) {
        Rational sum = 0;
        for (const auto& v : row) {
            const Rational gap = v > share ? Rational(v - share) : Rational(share - v);
            if (!(gap < epsilon)) return false;
            sum += v;
        }
        if (sum != 1) return false;
    }
    return true;
}

Measure random_measure(std::mt19937_64& rng, int max_pieces) {
    const int denominator = std::uniform_int_distribution<int>(std::max(2, max_pieces), 12)(rng);
    const int pieces = std::uniform_int_distribution<int>(1, std::min(max_pieces, denominator))(rng);
    std::vector<int> grid(denominator - 1);
    for (int s = 0; s < denominator - 1; ++s) grid[s] = s + 1;
    std::shuffle(grid.begin(), grid.end(), rng);
    std::vector<int> inner(grid.begin(), grid.begin() + (pieces - 1));
    std::sort(inner.begin(), inner.end());

    std::vector<Rational> breaks{Rational(0)};
    for (int b : inner) breaks.push_back(ratio(b, denominator));
    breaks.emplace_back(1);
    std::vector<int> weights(pieces);
    int positive = 0;
    for (auto& w : weights) {
        w = std::uniform_int_distribution<int>(0, 9)(rng);
        positive += w > 0;
    }
    if (positive == 0) weights[std::uniform_int_distribution<int>(0, pieces - 1)(rng)] = 1;
    Rational mass = 0;
    for (int t = 0; t < pieces; ++t) mass += weights[t] * (breaks[t + 1] - breaks[t]);
    std::vector<Rational> dens;
    for (int t = 0; t < pieces; ++t) dens.push_back(Rational(weights[t]) / mass);
    return Measure(std::move(breaks), std::move(dens));
}

std::vector<Measure> random_measures(std::mt19937_64& rng, int n, int max_pieces) {
    std::vector<Measure> out;
    for (int i = 0; i < n; ++i) out.push_back(random_measure(rng, max_pieces));
    return out;
}

JoinPoint random_join_point(std::mt19937_64& rng, const Group& group, int slots, int denominator) {
    // Stars and bars: sorted cut positions on the grid 0..denominator.
    std::vector<int> marks(slots - 1);
    for (auto& x : marks) x = std::uniform_int_distribution<int>(0, denominator)(rng);
    std::sort(marks.begin(), marks.end());
    std::vector<Rational> weights;
    int previous = 0;
    for (int x : marks) {
        weights.push_back(ratio(x - previous, denominator));
        previous = x;
    }
    weights.push_back(ratio(denominator - previous, denominator));
    std::vector<Element> elements(slots);
    for (auto& g : elements) g = std::uniform_int_distribution<int>(0, group.order() - 1)(rng);
    return make_join_point(group, std::move(weights), std::move(elements));
}

std::vector<CrossLabel> random_equivariant_labels(std::mt19937_64& rng, const GComplex& complex, int n) {
    const Group& group = complex.group;
    std::vector<CrossLabel> labels(complex.vertex_count());
    std::vector<bool> done(complex.vertex_count(), false);
    for (int v = 0; v < complex.vertex_count(); ++v) {
        if (done[v]) continue;
        const CrossLabel base{std::uniform_int_distribution<int>(0, group.order() - 1)(rng),
                              std::uniform_int_distribution<int>(1, n)(rng)};
        for (Element g = 0; g < group.order(); ++g) {
            const int w = complex.act(g, v);
            labels[w] = CrossLabel{group.mul(g, base.g), base.row};
            done[w] = true;
        }
    }
    return labels;
}

bool necklace_feasible(const BeadString& beads, int max_cuts) {
    const int L = beads.length();
    const auto counts = beads.counts();
    const int colors = beads.color_count;
    // prefix[s][c] = beads of color c among the first s.
    std::vector<std::vector<int>> prefix(L + 1, std::vector<int>(colors, 0));
    for (int s = 0; s < L; ++s) {
        prefix[s + 1] = prefix[s];
        ++prefix[s + 1][beads.colors[s]];
    }
    std::vector<int> cuts;
    std::function<bool(int)> search = [&](int from) {
        // Part 0 takes the pieces at even positions; the other start is the complement.
        std::vector<int> share(colors, 0);
        int left = 0;
        for (std::size_t j = 0; j <= cuts.size(); ++j) {
            const int right = j < cuts.size() ? cuts[j] : L;
            if (j % 2 == 0) {
                for (int c = 0; c < colors; ++c) share[c] += prefix[right][c] - prefix[left][c];
            }
            left = right;
        }
        bool ok = true;
        for (int c = 0; c < colors; ++c) ok = ok && share[c] * 2 == counts[c];
        if (ok) return true;
        if (static_cast<int>(cuts.size()) == max_cuts) return false;
        for (int b = from; b < L; ++b) {
            cuts.push_back(b);
            if (search(b + 1)) return true;
            cuts.pop_back();
        }
        return false;
    };
    return search(1);
}

std::vector<std::vector<int>> feasible_transversals(const ColorfulInstance& instance, bool first_only) {
    std::vector<std::vector<int>> out;
    const std::size_t columns = instance.columns.size();
    std::vector<int> alpha(columns, 0);
    while (true) {
        std::vector<RationalVector> points;
        for (std::size_t c = 0; c < columns; ++c) points.push_back(instance.columns[c][alpha[c]]);
        if (conv_contains_zero(points, instance.d).contains) {
            out.push_back(alpha);
            if (first_only) return out;
        }
        std::size_t c = columns;
        while (c > 0) {
            --c;
            if (++alpha[c] < instance.m) break;
            alpha[c] = 0;
            if (c == 0) return out;
        }
        if (columns == 0) return out;
    }
}

ColorfulInstance random_instance(std::mt19937_64& rng, int d, int m) {
    ColorfulInstance instance;
    instance.d = d;
    instance.m = m;
    std::uniform_int_distribution<int> coordinate(-6, 6);
    std::uniform_int_distribution<int> weight(1, 4);
    for (int nu = 0; nu <= d; ++nu) {
        std::vector<RationalVector> column;
        RationalVector sum(d, Rational(0));
        for (int row = 0; row + 1 < m; ++row) {
            RationalVector v(d);
            for (auto& x : v) x = coordinate(rng);
            const int w = weight(rng);
            for (int a = 0; a < d; ++a) sum[a] += w * v[a];
            column.push_back(std::move(v));
        }
        const int last = weight(rng);
        RationalVector closing(d);
        for (int a = 0; a < d; ++a) closing[a] = -sum[a] / last;
        // Place the closing vector at a random row so feasibility is not always row-aligned.
        const int at = std::uniform_int_distribution<int>(0, m - 1)(rng);
        column.insert(column.begin() + at, std::move(closing));
        instance.columns.push_back(std::move(column));
    }
    return instance;
}

std::vector<std::string> even_necklaces(int max_length, int max_colors) {
    std::vector<std::string> out;
    for (int length = 2; length <= max_length; length += 2) {
        std::string text(length, 'a');
        std::vector<int> digits(length, 0);
        while (true) {
            std::vector<int> counts(max_colors, 0);
            for (int x : digits) ++counts[x];
            int used = 0;
            while (used < max_colors && counts[used] > 0) ++used;
            bool ok = true;
            for (int c = 0; c < max_colors; ++c) {
                if (c >= used && counts[c] > 0) ok = false;
                if (counts[c] % 2 != 0) ok = false;
            }
            if (ok) {
                for (int s = 0; s < length; ++s) text[s] = static_cast<char>('a' + digits[s]);
                out.push_back(text);
            }
            int s = length - 1;
            while (s >= 0 && ++digits[s] == max_colors) digits[s--] = 0;
            if (s < 0) break;
        }
    }
    return out;
}

}  // namespace equidiv::oracle
