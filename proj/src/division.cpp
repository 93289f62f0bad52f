#include "equidiv/division.hpp"

#include "equidiv/error.hpp"
#include "equidiv/lattice_search.hpp"

#include <algorithm>

namespace equidiv {

Interval PartitionScheme::interval(std::size_t j) const {
    const Rational left = j == 0 ? Rational(0) : cuts[j - 1];
    const Rational right = j == cuts.size() ? Rational(1) : cuts[j];
    return {left, right};
}

std::vector<Interval> PartitionScheme::family(Element part) const {
    std::vector<Interval> out;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        if (assignment[j] != part) continue;
        auto piece = interval(j);
        if (piece.first == piece.second) continue;
        if (!out.empty() && out.back().second == piece.first) {
            out.back().second = piece.second;
        } else {
            out.push_back(std::move(piece));
        }
    }
    return out;
}

int PartitionScheme::effective_cut_count() const {
    int count = 0;
    int previous = -1;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        const auto piece = interval(j);
        if (piece.first == piece.second) continue;
        if (previous >= 0 && previous != assignment[j]) ++count;
        previous = assignment[j];
    }
    return count;
}

void validate_scheme(const PartitionScheme& scheme) {
    if (scheme.k < 2) throw InputError("a scheme needs at least two parts");
    if (scheme.assignment.size() != scheme.cuts.size() + 1) {
        throw InputError("a scheme with " + std::to_string(scheme.cuts.size()) + " cuts needs " +
                         std::to_string(scheme.cuts.size() + 1) + " assignments");
    }
    Rational previous = 0;
    for (std::size_t j = 0; j < scheme.cuts.size(); ++j) {
        const auto& x = scheme.cuts[j];
        if (x < previous || x > 1) throw InputError("cut " + std::to_string(j) + " is out of order or outside [0,1]");
        previous = x;
    }
    for (Element g : scheme.assignment) {
        if (g < 0 || g >= scheme.k) throw InputError("part id " + std::to_string(g) + " out of range");
    }
}

PartitionScheme decode(const JoinPoint& point, int k) {
    PartitionScheme scheme;
    scheme.k = k;
    Rational prefix = 0;
    for (std::size_t j = 0; j + 1 < point.slots(); ++j) {
        prefix += point.weights[j];
        scheme.cuts.push_back(prefix);
    }
    scheme.assignment = point.elements;
    return scheme;
}

ValuesTable values_table(const PartitionScheme& scheme, const std::vector<Measure>& measures) {
    ValuesTable table;
    table.n = static_cast<int>(measures.size());
    table.k = scheme.k;
    table.entries.assign(static_cast<std::size_t>(table.n) * table.k, Rational(0));
    for (int i = 0; i < table.n; ++i) {
        for (std::size_t j = 0; j < scheme.assignment.size(); ++j) {
            const auto [a, b] = scheme.interval(j);
            if (a == b) continue;
            table.at(i, scheme.assignment[j]) += measures[i].cdf(b) - measures[i].cdf(a);
        }
    }
    return table;
}

ZeroSumMatrix defect_from_values(const ValuesTable& values) {
    std::vector<Rational> entries(values.entries.size());
    for (int i = 0; i < values.n; ++i) {
        for (int j = 0; j < values.k; ++j) {
            entries[i * values.k + j] = values.at(i, j) - values.at(i, (j + values.k - 1) % values.k);
        }
    }
    return ZeroSumMatrix(values.n, values.k, std::move(entries));
}

ZeroSumMatrix defect_matrix(const PartitionScheme& scheme, const std::vector<Measure>& measures) {
    return defect_from_values(values_table(scheme, measures));
}

int smallest_rotation(const std::vector<int>& signs) {
    const int p = static_cast<int>(signs.size());
    int best = 0;
    for (int start = 1; start < p; ++start) {
        for (int t = 0; t < p; ++t) {
            const int a = signs[(start + t) % p];
            const int b = signs[(best + t) % p];
            if (a != b) {
                if (a < b) best = start;
                break;
            }
        }
    }
    return best;
}

LabelOutcome label_from_values(const ValuesTable& values) {
    std::size_t smallest = 0;
    for (std::size_t e = 1; e < values.entries.size(); ++e) {
        if (values.entries[e] < values.entries[smallest]) smallest = e;
    }
    const int row = static_cast<int>(smallest) / values.k;
    std::vector<int> signs(values.k);
    bool all_zero = true;
    for (int c = 0; c < values.k; ++c) {
        const int s = sgn(values.at(row, (c + 1) % values.k) - values.at(row, c));
        signs[c] = s > 0 ? 1 : (s < 0 ? -1 : 0);
        if (s != 0) all_zero = false;
    }
    LabelOutcome out;
    if (all_zero) {
        out.exact = true;
        return out;
    }
    out.label = CrossLabel{smallest_rotation(signs), row + 1};
    return out;
}

LabelOutcome label_vertex(const JoinPoint& point, const std::vector<Measure>& measures, int p) {
    if (!is_prime(p)) throw InputError("the distress labeling needs a prime number of parts, got " + std::to_string(p));
    const std::size_t expected = measures.size() * static_cast<std::size_t>(p - 1) + 1;
    if (point.slots() != expected) {
        throw InputError("point has " + std::to_string(point.slots()) + " slots, expected " + std::to_string(expected));
    }
    return label_from_values(values_table(decode(point, p), measures));
}

Rational max_deviation(const ValuesTable& values) {
    const Rational share = ratio(1, values.k);
    Rational worst = 0;
    for (const auto& v : values.entries) worst = std::max(worst, abs_value(v - share));
    return worst;
}

bool verify_division(const PartitionScheme& scheme, const std::vector<Measure>& measures, const Rational& epsilon) {
    validate_scheme(scheme);
    return max_deviation(values_table(scheme, measures)) < epsilon;
}

namespace {

Rational collapse(const std::vector<Interval>& pieces, const Rational& x) {
    Rational length = 0;
    for (const auto& [a, b] : pieces) length += b - a;
    Rational before = 0;
    for (const auto& [a, b] : pieces) {
        if (x <= b) return (before + std::max(Rational(0), Rational(x - a))) / length;
        before += b - a;
    }
    return 1;
}

/// Part of `scheme` owning the open neighbourhood of x (x not a cut).
Element owner(const PartitionScheme& scheme, const Rational& x) {
    for (std::size_t j = 0; j < scheme.assignment.size(); ++j) {
        const auto [a, b] = scheme.interval(j);
        if (a < x && x < b) return scheme.assignment[j];
    }
    throw InternalError("point " + to_string(x) + " lies on a cut");
}

PartitionScheme compose_factors(const std::vector<Measure>& measures, const std::vector<int>& factors,
                                const Rational& epsilon, const DivideOptions& options) {
    const int p = factors.front();
    PartitionScheme top = epsilon_divide(measures, p, epsilon, options).scheme;
    if (factors.size() == 1) return top;

    const std::vector<int> rest(factors.begin() + 1, factors.end());
    int sub_k = 1;
    for (int f : rest) sub_k *= f;

    std::vector<std::vector<Interval>> pieces(p);
    std::vector<PartitionScheme> subs;
    std::vector<Rational> cuts = top.cuts;
    for (int a = 0; a < p; ++a) {
        pieces[a] = top.family(a);
        std::vector<Measure> restricted;
        for (const auto& mu : measures) restricted.push_back(restrict_to_pieces(mu, pieces[a]));
        subs.push_back(compose_factors(restricted, rest, epsilon, options));
        for (const auto& c : subs.back().cuts) cuts.push_back(uncollapse(pieces[a], c));
    }
    std::sort(cuts.begin(), cuts.end());

    PartitionScheme out;
    out.k = p * sub_k;
    out.cuts = cuts;
    for (std::size_t j = 0; j <= cuts.size(); ++j) {
        const auto [u, v] = out.interval(j);
        if (u == v) {
            out.assignment.push_back(0);
            continue;
        }
        const Rational mid = (u + v) / 2;
        const Element a = owner(top, mid);
        const Element s = owner(subs[a], collapse(pieces[a], mid));
        out.assignment.push_back(a * sub_k + s);
    }
    return out;
}

}  // namespace

DivisionOutcome compose_division(const std::vector<Measure>& measures, int k, const Rational& epsilon,
                                 const DivideOptions& options) {
    if (k < 2) throw InputError("k must be at least 2");
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    if (measures.empty()) throw InputError("at least one measure is required");
    const std::vector<int> factors = prime_factors(k);

    DivisionOutcome out;
    out.certificate.epsilon = epsilon;
    if (factors.size() == 1) {
        PrimeDivision d = epsilon_divide(measures, k, epsilon, options);
        out.scheme = std::move(d.scheme);
        out.values = std::move(d.values);
        out.certificate.max_deviation = max_deviation(out.values);
        out.certificate.exact = out.certificate.max_deviation == 0;
        return out;
    }

    Rational budget = epsilon / (2 * static_cast<int>(factors.size()));
    Rational best = -1;
    for (int attempt = 0; attempt <= options.retry_budget; ++attempt) {
        PartitionScheme scheme = compose_factors(measures, factors, budget, options);
        ValuesTable values = values_table(scheme, measures);
        const Rational deviation = max_deviation(values);
        if (deviation < epsilon) {
            out.scheme = std::move(scheme);
            out.values = std::move(values);
            out.certificate.max_deviation = deviation;
            out.certificate.exact = deviation == 0;
            return out;
        }
        if (best < 0 || deviation < best) best = deviation;
        budget /= 2;
    }
    throw VerificationError("composite division for k=" + std::to_string(k) + " did not reach epsilon " +
                            to_string(epsilon) + " within the retry budget; best deviation " + to_string(best));
}

int NecklaceSplit::cut_count() const {
    int count = 0;
    int previous = -1;
    int position = 0;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        const int end = j < boundaries.size() ? boundaries[j] : total_beads;
        if (end > position) {
            if (previous >= 0 && previous != assignment[j]) ++count;
            previous = assignment[j];
            position = end;
        }
    }
    return count;
}

void check_divisible(const BeadString& beads, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    const auto counts = beads.counts();
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] % k != 0) {
            throw InputError("color '" + std::string(1, static_cast<char>('a' + c)) + "' occurs " +
                             std::to_string(counts[c]) + " times, not a multiple of " + std::to_string(k));
        }
    }
}

std::optional<NecklaceSplit> evaluate_split(const BeadString& beads, int k, const std::vector<int>& boundaries,
                                            const std::vector<Element>& assignment) {
    const int L = beads.length();
    if (assignment.size() != boundaries.size() + 1) return std::nullopt;
    int previous = 0;
    for (int b : boundaries) {
        if (b < previous || b > L) return std::nullopt;
        previous = b;
    }
    NecklaceSplit split;
    split.k = k;
    split.boundaries = boundaries;
    split.assignment = assignment;
    split.total_beads = L;
    split.shares.assign(k, std::vector<int>(beads.color_count, 0));
    int bead = 0;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        const int end = j < boundaries.size() ? boundaries[j] : L;
        for (; bead < end; ++bead) ++split.shares[assignment[j]][beads.colors[bead]];
    }
    const auto counts = beads.counts();
    for (int part = 0; part < k; ++part) {
        for (int c = 0; c < beads.color_count; ++c) {
            if (split.shares[part][c] * k != counts[c]) return std::nullopt;
        }
    }
    return split;
}

std::optional<NecklaceSplit> round_to_beads(const PartitionScheme& scheme, const BeadString& beads, int k) {
    check_divisible(beads, k);
    const int L = beads.length();
    const std::size_t N = scheme.cuts.size();
    std::vector<int> floors(N), nearest(N);
    std::vector<bool> integral(N);
    for (std::size_t j = 0; j < N; ++j) {
        const Rational scaled = scheme.cuts[j] * L;
        BigInt f;
        mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        floors[j] = static_cast<int>(f.get_si());
        integral[j] = scaled == Rational(f);
        const Rational fraction = scaled - Rational(f);
        nearest[j] = fraction > ratio(1, 2) ? floors[j] + 1 : floors[j];
    }
    if (auto split = evaluate_split(beads, k, nearest, scheme.assignment)) return split;

    if (N >= 20) return std::nullopt;
    std::vector<int> trial(N);
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
        bool skip = false;
        for (std::size_t j = 0; j < N; ++j) {
            const bool up = (mask >> j) & 1u;
            if (up && integral[j]) skip = true;
            trial[j] = floors[j] + (up ? 1 : 0);
        }
        if (skip) continue;
        if (auto split = evaluate_split(beads, k, trial, scheme.assignment)) return split;
    }
    return std::nullopt;
}

NecklaceSplit split_necklace(const BeadString& beads, int k, const DivideOptions& options) {
    check_divisible(beads, k);
    const std::vector<Measure> measures = beads_to_measures(beads);
    const int L = beads.length();
    Rational epsilon = ratio(1, 4 * k * L);
    for (int attempt = 0; attempt <= options.retry_budget; ++attempt) {
        const DivisionOutcome division = compose_division(measures, k, epsilon, options);
        if (auto split = round_to_beads(division.scheme, beads, k)) return *split;
        epsilon /= 2;
    }
    throw VerificationError("no exact split of '" + beads.text() + "' found within the retry budget");
}

}  // namespace equidiv
