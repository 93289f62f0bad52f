#include "equidiv/lattice_search.hpp"

#include "equidiv/error.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <unordered_map>

namespace equidiv {

bool band_pruning_is_sound(int p) { return p == 2 || p == 3; }

namespace {

using PackedKey = unsigned __int128;

struct PackedKeyHash {
    std::size_t operator()(PackedKey key) const {
        const auto lo = static_cast<std::uint64_t>(key);
        const auto hi = static_cast<std::uint64_t>(key >> 64);
        return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ hi);
    }
};

struct VertexLabel {
    bool exact = false;
    Element element = 0;
    int row = 1;
};

/// Best exact vertex / fully labeled face seen so far, with their sort keys.
struct Candidates {
    std::vector<int> exact_key;
    std::vector<int> exact_cuts;
    std::vector<Element> exact_elements;

    std::vector<int> face_key;
    std::vector<std::vector<int>> face_cuts;  // ordered by label element
    std::vector<Element> face_elements;
    int face_row = 1;

    std::uint64_t facets = 0;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;

    bool found() const { return !exact_key.empty() || !face_key.empty(); }

    void add_counters(const Candidates& other) {
        facets += other.facets;
        visited += other.visited;
        pruned += other.pruned;
    }

    void merge(const Candidates& other) {
        if (!other.exact_key.empty() && (exact_key.empty() || other.exact_key < exact_key)) {
            exact_key = other.exact_key;
            exact_cuts = other.exact_cuts;
            exact_elements = other.exact_elements;
        }
        if (!other.face_key.empty() && (face_key.empty() || other.face_key < face_key)) {
            face_key = other.face_key;
            face_cuts = other.face_cuts;
            face_elements = other.face_elements;
            face_row = other.face_row;
        }
        facets += other.facets;
        visited += other.visited;
        pruned += other.pruned;
    }
};

/// Records exact vertices and the canonical fully labeled face of one facet.
void consider_facet(const KuhnRefinement& refinement, const std::vector<Element>& elements,
                    const std::vector<std::vector<int>>& cuts, const std::vector<VertexLabel>& labels, int n, int p,
                    Candidates& best) {
    const std::size_t count = labels.size();
    bool any_exact = false;
    for (std::size_t a = 0; a < count; ++a) {
        if (!labels[a].exact) continue;
        any_exact = true;
        auto key = refinement.vertex_key(cuts[a], elements);
        if (best.exact_key.empty() || key < best.exact_key) {
            best.exact_key = std::move(key);
            best.exact_cuts = cuts[a];
            best.exact_elements = elements;
        }
    }
    if (any_exact || !best.exact_key.empty()) return;

    const unsigned full = (p >= 32) ? ~0u : ((1u << p) - 1u);
    for (int row = 1; row <= n; ++row) {
        unsigned mask = 0;
        for (std::size_t a = 0; a < count; ++a) {
            if (labels[a].row == row) mask |= 1u << labels[a].element;
        }
        if (mask != full) continue;
        std::vector<int> pick(p, -1);
        std::vector<std::vector<int>> pick_key(p);
        for (std::size_t a = 0; a < count; ++a) {
            if (labels[a].row != row) continue;
            const Element g = labels[a].element;
            auto key = refinement.vertex_key(cuts[a], elements);
            if (pick[g] < 0 || key < pick_key[g]) {
                pick[g] = static_cast<int>(a);
                pick_key[g] = std::move(key);
            }
        }
        std::vector<std::vector<int>> sorted = pick_key;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> face_key;
        for (const auto& key : sorted) face_key.insert(face_key.end(), key.begin(), key.end());
        if (best.face_key.empty() || face_key < best.face_key) {
            best.face_key = std::move(face_key);
            best.face_cuts.clear();
            for (int g = 0; g < p; ++g) best.face_cuts.push_back(cuts[pick[g]]);
            best.face_elements = elements;
            best.face_row = row;
        }
    }
}

LatticeScan finish(const KuhnRefinement& refinement, const Candidates& best, int p) {
    LatticeScan out;
    out.facets_scanned = best.facets;
    out.cells_visited = best.visited;
    out.cells_pruned = best.pruned;
    if (!best.exact_key.empty()) {
        out.exact_vertex = refinement.point(best.exact_cuts, best.exact_elements);
        out.key = best.exact_key;
    } else if (!best.face_key.empty()) {
        FoundFace face;
        face.i0 = best.face_row;
        for (int g = 0; g < p; ++g) {
            face.vertices.push_back(refinement.point(best.face_cuts[g], best.face_elements));
            face.labels.push_back(CrossLabel{g, best.face_row});
        }
        out.face = std::move(face);
        out.key = best.face_key;
    }
    return out;
}

template <class Int>
Int clamp_nonnegative(const Int& x) {
    return x < 0 ? Int(0) : x;
}

struct SharedState {
    std::atomic<std::uint64_t> facet_count{0};
    std::uint64_t budget = 0;
    std::atomic<bool> abort{false};
    /// Smallest item index known to contain an event; later items stop.
    std::atomic<std::int64_t> cutoff{std::numeric_limits<std::int64_t>::max()};

    void lower_cutoff(std::int64_t index) {
        std::int64_t current = cutoff.load();
        while (index < current && !cutoff.compare_exchange_weak(current, index)) {
        }
    }
};

template <class Int>
class ScanKernel {
public:
    ScanKernel(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
               std::vector<std::vector<Int>> table, Int lo_floor, Int hi_ceil, bool band, bool value_pruning)
        : refinement_(refinement),
          n_(static_cast<int>(measures.size())),
          p_(p),
          N_(refinement.N()),
          m_(refinement.resolution()),
          table_(std::move(table)),
          lo_floor_(std::move(lo_floor)),
          hi_ceil_(std::move(hi_ceil)),
          band_(band),
          value_pruning_(value_pruning),
          factors_(split_factors(refinement.resolution())) {
        level_resolution_.push_back(1);
        for (int q : factors_) {
            templates_.push_back(child_templates(N_, q));
            level_resolution_.push_back(level_resolution_.back() * q);
        }
        bits_ = std::bit_width(static_cast<std::uint64_t>(m_));
        if (bits_ * N_ > 128) throw CapExceeded("lattice resolution too large for this dimension");
        cells_.assign(levels() + 1, KuhnCell{std::vector<int>(N_), std::vector<int>(N_)});
        cuts_.assign(N_ + 1, std::vector<int>(N_));
        labels_.resize(N_ + 1);
        lo_.resize(p_);
        hi_.resize(p_);
        values_.resize(static_cast<std::size_t>(n_) * p_);
        signs_.resize(p_);
    }

    int levels() const { return static_cast<int>(factors_.size()); }
    std::size_t first_level_width() const { return levels() == 0 ? 1 : templates_[0].size(); }

    void scan_item(std::int64_t index, std::int64_t natural, std::size_t first, Candidates& best,
                   SharedState& shared) {
        index_ = index;
        elements_ = refinement_.natural_simplex(natural);
        cache_.clear();
        cells_[0] = root_cell(N_);
        if (levels() == 0) {
            descend(0, best, shared);
        } else {
            split(0, templates_[0][first]);
            descend(1, best, shared);
        }
        if (best.found()) shared.lower_cutoff(index);
    }

private:
    bool prune(const KuhnCell& cell, std::int64_t r) {
        if (!value_pruning_) return false;
        bool all_signs_fixed = true;
        for (int i = 0; i < n_; ++i) {
            const auto& T = table_[i];
            for (int c = 0; c < p_; ++c) {
                lo_[c] = 0;
                hi_[c] = 0;
            }
            for (int t = 0; t <= N_; ++t) {
                const std::int64_t left_lo = t == 0 ? 0 : cell.base[t - 1] * r;
                const std::int64_t left_hi = t == 0 ? 0 : (cell.base[t - 1] + 1) * r;
                const std::int64_t right_lo = t == N_ ? m_ : cell.base[t] * r;
                const std::int64_t right_hi = t == N_ ? m_ : (cell.base[t] + 1) * r;
                const Element c = elements_[t];
                lo_[c] += clamp_nonnegative<Int>(T[right_lo] - T[left_hi]);
                hi_[c] += T[right_hi] - T[left_lo];
            }
            for (int c = 0; c < p_; ++c) {
                if (band_ && (hi_[c] <= lo_floor_ || lo_[c] >= hi_ceil_)) return true;
                const int next = (c + 1) % p_;
                if (!(lo_[next] > hi_[c] || hi_[next] < lo_[c])) all_signs_fixed = false;
            }
        }
        return all_signs_fixed;
    }

    VertexLabel label(const std::vector<int>& cuts) {
        PackedKey key = 0;
        for (int j = 0; j < N_; ++j) key |= static_cast<PackedKey>(cuts[j]) << (bits_ * j);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        for (auto& v : values_) v = 0;
        for (int i = 0; i < n_; ++i) {
            const auto& T = table_[i];
            std::int64_t previous = 0;
            for (int t = 0; t <= N_; ++t) {
                const std::int64_t y = t == N_ ? m_ : cuts[t];
                values_[i * p_ + elements_[t]] += T[y] - T[previous];
                previous = y;
            }
        }
        std::size_t smallest = 0;
        for (std::size_t e = 1; e < values_.size(); ++e) {
            if (values_[e] < values_[smallest]) smallest = e;
        }
        const int row = static_cast<int>(smallest) / p_;
        bool all_zero = true;
        for (int c = 0; c < p_; ++c) {
            const Int& here = values_[row * p_ + c];
            const Int& next = values_[row * p_ + (c + 1) % p_];
            signs_[c] = next > here ? 1 : (next < here ? -1 : 0);
            if (signs_[c] != 0) all_zero = false;
        }
        VertexLabel out;
        if (all_zero) {
            out.exact = true;
        } else {
            out.element = smallest_rotation(signs_);
            out.row = row + 1;
        }
        cache_.emplace(key, out);
        return out;
    }

    /// Writes the child of cells_[level] given by tmpl into cells_[level + 1].
    void split(int level, const ChildTemplate& tmpl) {
        const KuhnCell& parent = cells_[level];
        KuhnCell& child = cells_[level + 1];
        const int q = factors_[level];
        for (int l = 0; l < N_; ++l) {
            const int coordinate = parent.perm[l];
            child.base[coordinate] = q * parent.base[coordinate] + tmpl.offset[l];
        }
        for (int a = 0; a < N_; ++a) child.perm[a] = parent.perm[tmpl.order[a]];
    }

    /// Depth-first over the split hierarchy; returns true once the item is done.
    bool descend(int level, Candidates& best, SharedState& shared) {
        if (shared.abort.load(std::memory_order_relaxed)) return true;
        if (shared.cutoff.load(std::memory_order_relaxed) < index_) return true;
        const KuhnCell& cell = cells_[level];
        const std::int64_t r = m_ / level_resolution_[level];
        if (prune(cell, r)) {
            ++best.pruned;
            return false;
        }
        ++best.visited;
        if (level == levels()) {
            ++best.facets;
            if (shared.facet_count.fetch_add(1, std::memory_order_relaxed) + 1 > shared.budget) {
                shared.abort = true;
                return true;
            }
            cuts_[0] = cell.base;
            labels_[0] = label(cuts_[0]);
            for (int a = 1; a <= N_; ++a) {
                cuts_[a] = cuts_[a - 1];
                ++cuts_[a][cell.perm[a - 1]];
                labels_[a] = label(cuts_[a]);
            }
            consider_facet(refinement_, elements_, cuts_, labels_, n_, p_, best);
            return best.found();
        }
        for (const auto& tmpl : templates_[level]) {
            split(level, tmpl);
            if (descend(level + 1, best, shared)) return true;
        }
        return false;
    }

    const KuhnRefinement& refinement_;
    int n_;
    int p_;
    int N_;
    std::int64_t m_;
    std::vector<std::vector<Int>> table_;
    Int lo_floor_;
    Int hi_ceil_;
    bool band_;
    bool value_pruning_;
    std::vector<int> factors_;
    std::vector<std::vector<ChildTemplate>> templates_;
    std::vector<std::int64_t> level_resolution_;
    int bits_ = 1;

    std::int64_t index_ = 0;
    std::vector<Element> elements_;
    std::unordered_map<PackedKey, VertexLabel, PackedKeyHash> cache_;
    std::vector<KuhnCell> cells_;
    std::vector<std::vector<int>> cuts_;
    std::vector<VertexLabel> labels_;
    std::vector<Int> lo_, hi_, values_;
    std::vector<int> signs_;
};

template <class Int>
LatticeScan run_scan(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
                     std::vector<std::vector<Int>> table, Int lo_floor, Int hi_ceil, bool band,
                     const ScanOptions& options) {
    const ScanKernel<Int> prototype(refinement, measures, p, std::move(table), std::move(lo_floor),
                                    std::move(hi_ceil), band, options.value_pruning);
    struct Item {
        std::int64_t natural;
        std::size_t first;
    };
    std::vector<Item> items;
    for (std::int64_t ns = 0; ns < refinement.natural_simplex_count(); ++ns) {
        if (options.orbit_pruning && !refinement.is_orbit_representative(ns)) continue;
        for (std::size_t t = 0; t < prototype.first_level_width(); ++t) items.push_back({ns, t});
    }
    std::vector<Candidates> results(items.size());
    SharedState shared;
    shared.budget = options.facet_budget;
    const int workers = std::max(1, options.workers);
    const auto item_count = static_cast<std::int64_t>(items.size());

#pragma omp parallel num_threads(workers)
    {
        ScanKernel<Int> kernel = prototype;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t idx = 0; idx < item_count; ++idx) {
            if (shared.cutoff.load() < idx || shared.abort.load()) continue;
            kernel.scan_item(idx, items[idx].natural, items[idx].first, results[idx], shared);
        }
    }
    if (shared.abort) {
        throw CapExceeded("facet budget of " + std::to_string(options.facet_budget) + " exhausted during the search");
    }
    Candidates best;
    for (const auto& r : results) {
        if (!best.found() && r.found()) best.merge(r);
        else best.add_counters(r);
    }
    return finish(refinement, best, p);
}

// Lattice CDF values T_i[y] = mu_i([0, y/m]) scaled by a common denominator.
// On each piece the CDF is affine in y, so only the piece coefficients need
// rational arithmetic.
std::vector<std::vector<BigInt>> scaled_cdf_tables(const std::vector<Measure>& measures, std::int64_t m,
                                                   BigInt& denominator) {
    struct Piece {
        std::int64_t first_y;
        Rational offset;
        Rational slope;
    };
    std::vector<std::vector<Piece>> pieces;
    denominator = 1;
    for (const auto& mu : measures) {
        const auto& bp = mu.breakpoints();
        const auto& dens = mu.densities();
        std::vector<Piece> affine;
        Rational cumulative = 0;
        for (std::size_t t = 0; t < dens.size(); ++t) {
            const Rational start = bp[t] * m;
            BigInt first;
            mpz_cdiv_q(first.get_mpz_t(), start.get_num_mpz_t(), start.get_den_mpz_t());
            Piece piece{first.get_si(), cumulative - dens[t] * bp[t], dens[t] / m};
            mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), piece.offset.get_den_mpz_t());
            mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), piece.slope.get_den_mpz_t());
            affine.push_back(std::move(piece));
            cumulative += dens[t] * (bp[t + 1] - bp[t]);
        }
        pieces.push_back(std::move(affine));
    }
    std::vector<std::vector<BigInt>> out;
    for (const auto& affine : pieces) {
        std::vector<BigInt> row(m + 1);
        for (std::size_t t = 0; t < affine.size(); ++t) {
            const std::int64_t end = t + 1 < affine.size() ? affine[t + 1].first_y : m + 1;
            if (affine[t].first_y >= end) continue;
            const Rational scaled_offset = affine[t].offset * denominator;
            const Rational scaled_slope = affine[t].slope * denominator;
            BigInt value = scaled_offset.get_num() + scaled_slope.get_num() * affine[t].first_y;
            for (std::int64_t y = affine[t].first_y; y < end; ++y) {
                row[y] = value;
                value += scaled_slope.get_num();
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

LatticeScan scan_lattice(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
                         const Rational& delta, const ScanOptions& options) {
    if (refinement.group().order() != p) throw InputError("group order must equal the number of parts");
    if (refinement.N() != static_cast<int>(measures.size()) * (p - 1)) throw InputError("N must equal n(p-1)");
    const std::int64_t m = refinement.resolution();
    BigInt denominator;
    auto big_table = scaled_cdf_tables(measures, m, denominator);
    const Rational lower = ratio(1, p) - delta;
    const Rational upper = ratio(1, p) + (p - 1) * delta;
    BigInt lo_floor, hi_ceil;
    {
        const Rational a = lower * denominator;
        const Rational b = upper * denominator;
        mpz_fdiv_q(lo_floor.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        mpz_cdiv_q(hi_ceil.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    }
    const bool band = band_pruning_is_sound(p);

    const BigInt limit = BigInt(1) << 56;
    if (denominator < limit && abs(lo_floor) < limit && abs(hi_ceil) < limit) {
        std::vector<std::vector<std::int64_t>> table;
        for (const auto& row : big_table) {
            std::vector<std::int64_t> scaled;
            scaled.reserve(row.size());
            for (const auto& z : row) scaled.push_back(z.get_si());
            table.push_back(std::move(scaled));
        }
        return run_scan<std::int64_t>(refinement, measures, p, std::move(table), lo_floor.get_si(), hi_ceil.get_si(),
                                      band, options);
    }
    return run_scan<BigInt>(refinement, measures, p, std::move(big_table), lo_floor, hi_ceil, band, options);
}

LatticeScan scan_lattice_reference(const KuhnRefinement& refinement, const std::vector<Measure>& measures, int p,
                                   bool orbit_pruning) {
    const int N = refinement.N();
    const int n = static_cast<int>(measures.size());
    const std::vector<int> factors = split_factors(refinement.resolution());
    std::vector<std::vector<ChildTemplate>> templates;
    for (int q : factors) templates.push_back(child_templates(N, q));

    Candidates best;
    for (std::int64_t ns = 0; ns < refinement.natural_simplex_count() && !best.found(); ++ns) {
        if (orbit_pruning && !refinement.is_orbit_representative(ns)) continue;
        const auto elements = refinement.natural_simplex(ns);
        std::map<std::vector<int>, VertexLabel> memo;
        std::function<bool(const KuhnCell&, std::size_t)> walk = [&](const KuhnCell& cell, std::size_t level) {
            if (level < factors.size()) {
                for (const auto& tmpl : templates[level]) {
                    if (walk(child_cell(cell, factors[level], tmpl), level + 1)) return true;
                }
                return false;
            }
            std::vector<std::vector<int>> cuts(N + 1);
            std::vector<VertexLabel> labels(N + 1);
            for (int a = 0; a <= N; ++a) {
                cuts[a] = cell_vertex(cell, a);
                auto it = memo.find(cuts[a]);
                if (it == memo.end()) {
                    const LabelOutcome outcome = label_vertex(refinement.point(cuts[a], elements), measures, p);
                    it = memo.emplace(cuts[a], VertexLabel{outcome.exact, outcome.label.g, outcome.label.row}).first;
                }
                labels[a] = it->second;
            }
            ++best.facets;
            ++best.visited;
            consider_facet(refinement, elements, cuts, labels, n, p, best);
            return best.found();
        };
        walk(root_cell(N), 0);
    }
    return finish(refinement, best, p);
}

Rational max_step_mass(const Measure& measure, std::int64_t resolution) {
    const auto& bp = measure.breakpoints();
    const auto& dens = measure.densities();
    const Rational step = ratio(1, resolution);
    Rational worst = 0;
    for (std::size_t t = 0; t < dens.size(); ++t) {
        // A whole lattice step fits inside the piece?
        const Rational start = bp[t] * resolution;
        BigInt first;
        mpz_cdiv_q(first.get_mpz_t(), start.get_num_mpz_t(), start.get_den_mpz_t());
        if (Rational(first + 1) <= bp[t + 1] * resolution && dens[t] * step > worst) worst = dens[t] * step;
    }
    for (std::size_t t = 1; t + 1 < bp.size(); ++t) {
        const Rational scaled = bp[t] * resolution;
        BigInt y;
        mpz_fdiv_q(y.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        const Rational a = Rational(y) / resolution;
        const Rational b = Rational(y + 1) / resolution;
        if (b > 1) continue;
        const Rational mass = measure.cdf(b) - measure.cdf(a);
        if (mass > worst) worst = mass;
    }
    return worst;
}

ResolutionChoice choose_resolution(const std::vector<Measure>& measures, int N, const Rational& delta, int cap) {
    if (delta <= 0) throw InputError("fineness target must be positive");
    const int multiplier = (N + 1) / 2;
    std::vector<std::pair<std::int64_t, int>> candidates;
    const std::int64_t limit = 1 << 20;
    for (std::int64_t a = 1; a <= limit; a *= 2) {
        for (std::int64_t b = a; b <= limit; b *= 3) {
            for (std::int64_t c = b; c <= limit; c *= 5) {
                const auto levels = static_cast<int>(split_factors(c).size());
                if (levels <= cap) candidates.emplace_back(c, levels);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    // A piece of length l and density d meets at most lm + 2 lattice steps, so
    // some step carries at least d l / (lm + 2). Used only to skip candidates,
    // with a margin that keeps rounding on the safe side.
    std::vector<std::pair<double, double>> shapes;
    for (const auto& mu : measures) {
        for (int t = 0; t < mu.pieces(); ++t) {
            shapes.emplace_back(Rational(mu.breakpoints()[t + 1] - mu.breakpoints()[t]).get_d(), mu.densities()[t].get_d());
        }
    }
    const double target = delta.get_d() * (1 + 1e-9);
    Rational best_bound = -1;
    for (const auto& [m, levels] : candidates) {
        // The average step is 1/m, so anything coarser cannot be fine enough.
        if (ratio(multiplier, m) >= delta && multiplier > 0) continue;
        const bool hopeless = std::any_of(shapes.begin(), shapes.end(), [&, m = m](const auto& shape) {
            const auto [length, density] = shape;
            return multiplier * density * length / (length * static_cast<double>(m) + 2) > target;
        });
        if (hopeless) continue;
        Rational worst = 0;
        for (const auto& mu : measures) {
            const Rational s = max_step_mass(mu, m);
            if (s > worst) worst = s;
        }
        const Rational bound = worst * multiplier;
        if (bound < delta) return ResolutionChoice{m, levels, bound};
        if (best_bound < 0 || bound < best_bound) best_bound = bound;
    }
    throw CapExceeded("refinement cap " + std::to_string(cap) + " exceeded: best reachable edge bound " +
                      (best_bound < 0 ? std::string("n/a") : to_string(best_bound)) + " is not below " +
                      to_string(delta));
}

PrimeDivision epsilon_divide(const std::vector<Measure>& measures, int p, const Rational& epsilon,
                             const DivideOptions& options) {
    if (!is_prime(p)) throw InputError("epsilon_divide needs a prime number of parts, got " + std::to_string(p));
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    if (measures.empty()) throw InputError("at least one measure is required");
    const int n = static_cast<int>(measures.size());
    const int N = n * (p - 1);
    const Rational delta = epsilon / ((p - 1) * (p - 1));

    const ResolutionChoice choice = choose_resolution(measures, N, delta, options.cap);
    const KuhnRefinement refinement(Group::cyclic(p), N, choice.resolution);
    ScanOptions scan_options;
    scan_options.orbit_pruning = options.orbit_pruning;
    scan_options.value_pruning = options.value_pruning;
    scan_options.workers = options.workers;
    scan_options.facet_budget = options.facet_budget;
    const LatticeScan scan = scan_lattice(refinement, measures, p, delta, scan_options);
    if (!scan.found()) {
        throw InternalError("no fully labeled simplex found for Z" + std::to_string(p) + " (n=" + std::to_string(n) + ")");
    }

    PrimeDivision out;
    out.report.resolution = choice.resolution;
    out.report.levels = choice.levels;
    out.report.fineness_bound = choice.bound;
    out.report.facets_scanned = scan.facets_scanned;
    out.report.cells_visited = scan.cells_visited;
    out.report.cells_pruned = scan.cells_pruned;
    if (scan.exact_vertex) {
        out.report.exact = true;
        out.report.designated = *scan.exact_vertex;
        if (!label_vertex(*scan.exact_vertex, measures, p).exact) throw InternalError("kernel exact label disagrees");
    } else {
        out.report.simplex = scan.face;
        for (std::size_t r = 0; r < scan.face->vertices.size(); ++r) {
            const LabelOutcome check = label_vertex(scan.face->vertices[r], measures, p);
            if (check.exact || check.label != scan.face->labels[r]) throw InternalError("kernel label disagrees");
        }
        out.report.designated = scan.face->vertices[0];
    }
    out.scheme = decode(out.report.designated, p);
    out.values = values_table(out.scheme, measures);
    const Rational deviation = max_deviation(out.values);
    if (!(deviation < epsilon)) {
        throw VerificationError("division deviates by " + to_string(deviation) + ", not below " + to_string(epsilon));
    }
    return out;
}

FaceAudit audit_face(const FoundFace& face, const std::vector<Measure>& measures, int p, const Rational& epsilon) {
    FaceAudit audit;
    const int n = static_cast<int>(measures.size());
    const Rational delta = epsilon / ((p - 1) * (p - 1));
    const Rational share = ratio(1, p);
    audit.labels_match = static_cast<int>(face.vertices.size()) == p;
    for (int r = 0; r < static_cast<int>(face.vertices.size()); ++r) {
        const LabelOutcome outcome = label_vertex(face.vertices[r], measures, p);
        if (outcome.exact || outcome.label != CrossLabel{r, face.i0}) audit.labels_match = false;
        audit.values.push_back(values_table(decode(face.vertices[r], p), measures));
    }
    audit.fine_edges = true;
    audit.unit_rows = true;
    audit.i0_attains_minimum = true;
    audit.literal_diagonal_minimum = true;
    audit.lower_bound = true;
    audit.upper_bound = true;
    for (std::size_t r = 0; r < audit.values.size(); ++r) {
        const auto& x = audit.values[r];
        for (std::size_t s = r + 1; s < audit.values.size(); ++s) {
            for (std::size_t e = 0; e < x.entries.size(); ++e) {
                if (!(abs_value(x.entries[e] - audit.values[s].entries[e]) < delta)) audit.fine_edges = false;
            }
        }
        Rational global_min = x.entries.front();
        for (const auto& v : x.entries) global_min = std::min(global_min, v);
        Rational row_min = x.at(face.i0 - 1, 0);
        for (int j = 0; j < p; ++j) row_min = std::min(row_min, x.at(face.i0 - 1, j));
        if (row_min != global_min) audit.i0_attains_minimum = false;
        if (x.at(face.i0 - 1, static_cast<int>(r)) != global_min) audit.literal_diagonal_minimum = false;
        for (int i = 0; i < n; ++i) {
            Rational sum = 0;
            for (int j = 0; j < p; ++j) {
                sum += x.at(i, j);
                if (!(x.at(i, j) < share + epsilon)) audit.upper_bound = false;
            }
            if (sum != 1) audit.unit_rows = false;
        }
        for (int j = 0; j < p; ++j) {
            if (!(x.at(face.i0 - 1, j) > share - epsilon / (p - 1))) audit.lower_bound = false;
        }
    }
    return audit;
}

}  // namespace equidiv
