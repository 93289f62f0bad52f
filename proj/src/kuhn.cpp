#include "equidiv/kuhn.hpp"

#include "equidiv/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equidiv {

std::vector<ChildTemplate> child_templates(int dimension, int q) {
    std::vector<ChildTemplate> out;
    std::vector<int> offset(dimension, q - 1);
    // Nonincreasing offsets, enumerated in lexicographically decreasing order.
    while (true) {
        // Blocks of equal offsets keep their internal order; enumerate shuffles
        // as multiset permutations of block ids.
        std::vector<int> block_of(dimension);
        int blocks = 0;
        for (int l = 0; l < dimension; ++l) {
            if (l > 0 && offset[l] != offset[l - 1]) ++blocks;
            block_of[l] = blocks;
        }
        std::vector<int> pattern = block_of;
        do {
            std::vector<int> next_in_block(blocks + 1, 0);
            std::vector<int> first_of_block(blocks + 1, dimension);
            for (int l = dimension - 1; l >= 0; --l) first_of_block[block_of[l]] = l;
            ChildTemplate tmpl{offset, std::vector<int>(dimension)};
            for (int a = 0; a < dimension; ++a) {
                const int b = pattern[a];
                tmpl.order[a] = first_of_block[b] + next_in_block[b]++;
            }
            out.push_back(std::move(tmpl));
        } while (std::next_permutation(pattern.begin(), pattern.end()));

        int l = dimension - 1;
        while (l >= 0 && offset[l] == 0) --l;
        if (l < 0) break;
        --offset[l];
        for (int r = l + 1; r < dimension; ++r) offset[r] = offset[l];
    }
    if (dimension == 0) out.assign(1, ChildTemplate{});
    return out;
}

KuhnCell root_cell(int dimension) {
    KuhnCell cell{std::vector<int>(dimension, 0), std::vector<int>(dimension)};
    for (int a = 0; a < dimension; ++a) cell.perm[a] = dimension - 1 - a;
    return cell;
}

KuhnCell child_cell(const KuhnCell& parent, int q, const ChildTemplate& tmpl) {
    const int dimension = static_cast<int>(parent.base.size());
    KuhnCell child{std::vector<int>(dimension), std::vector<int>(dimension)};
    for (int l = 0; l < dimension; ++l) {
        const int coordinate = parent.perm[l];
        child.base[coordinate] = q * parent.base[coordinate] + tmpl.offset[l];
    }
    for (int a = 0; a < dimension; ++a) child.perm[a] = parent.perm[tmpl.order[a]];
    return child;
}

std::vector<int> cell_vertex(const KuhnCell& cell, int a) {
    std::vector<int> y = cell.base;
    for (int s = 0; s < a; ++s) ++y[cell.perm[s]];
    return y;
}

KuhnRefinement::KuhnRefinement(Group group, int N, std::int64_t resolution)
    : group_(std::move(group)), N_(N), resolution_(resolution) {
    if (N < 0) throw InputError("lattice refinement needs N >= 0");
    if (resolution < 1 || resolution > (1 << 20)) throw InputError("lattice resolution out of range");
}

std::int64_t KuhnRefinement::natural_simplex_count() const {
    std::int64_t count = 1;
    for (int j = 0; j <= N_; ++j) count *= group_.order();
    return count;
}

std::vector<Element> KuhnRefinement::natural_simplex(std::int64_t index) const {
    const int k = group_.order();
    std::vector<Element> out(N_ + 1);
    for (int j = N_; j >= 0; --j) {
        out[j] = static_cast<Element>(index % k);
        index /= k;
    }
    return out;
}

bool KuhnRefinement::is_orbit_representative(std::int64_t index) const {
    return natural_simplex(index)[0] == 0;
}

JoinPoint KuhnRefinement::point(const std::vector<int>& cuts, const std::vector<Element>& elements) const {
    JoinPoint p{std::vector<Rational>(N_ + 1), std::vector<Element>(N_ + 1, 0)};
    int previous = 0;
    for (int j = 0; j <= N_; ++j) {
        const int y = j < N_ ? cuts[j] : static_cast<int>(resolution_);
        p.weights[j] = ratio(y - previous, resolution_);
        if (y != previous) p.elements[j] = elements[j];
        previous = y;
    }
    return p;
}

std::vector<int> KuhnRefinement::vertex_key(const std::vector<int>& cuts, const std::vector<Element>& elements) const {
    std::vector<int> key(2 * (N_ + 1));
    int previous = 0;
    for (int j = 0; j <= N_; ++j) {
        const int y = j < N_ ? cuts[j] : static_cast<int>(resolution_);
        key[2 * j] = y - previous;
        key[2 * j + 1] = y != previous ? elements[j] : 0;
        previous = y;
    }
    return key;
}

GComplex KuhnRefinement::materialize() const {
    const int m = static_cast<int>(resolution_);
    const auto templates = child_templates(N_, m);
    const std::int64_t naturals = natural_simplex_count();
    if (static_cast<double>(naturals) * static_cast<double>(templates.size()) > 2e6) {
        throw CapExceeded("lattice refinement too large to materialize");
    }
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<std::vector<int>>> raw_facets;
    std::vector<int> parents;
    const KuhnCell root = root_cell(N_);
    for (std::int64_t ns = 0; ns < naturals; ++ns) {
        const auto elements = natural_simplex(ns);
        for (const auto& tmpl : templates) {
            const KuhnCell cell = child_cell(root, m, tmpl);
            std::vector<std::vector<int>> keys;
            for (int a = 0; a <= N_; ++a) {
                auto key = vertex_key(cell_vertex(cell, a), elements);
                ids.emplace(key, 0);
                keys.push_back(std::move(key));
            }
            raw_facets.push_back(std::move(keys));
            parents.push_back(static_cast<int>(ns));
        }
    }
    GComplex out{group_, N_, 0, {}, {}, {}, {}};
    std::vector<const std::vector<int>*> by_id;
    int next = 0;
    for (auto& [key, id] : ids) {
        id = next++;
        JoinPoint p{std::vector<Rational>(N_ + 1), std::vector<Element>(N_ + 1)};
        for (int j = 0; j <= N_; ++j) {
            p.weights[j] = ratio(key[2 * j], m);
            p.elements[j] = key[2 * j + 1];
        }
        out.coords.push_back(std::move(p));
        by_id.push_back(&key);
    }
    for (const auto& keys : raw_facets) {
        std::vector<int> facet;
        for (const auto& key : keys) facet.push_back(ids.at(key));
        std::sort(facet.begin(), facet.end());
        out.facets.push_back(std::move(facet));
    }
    out.parent_facet = std::move(parents);
    const int k = group_.order();
    out.action.assign(k, std::vector<int>(by_id.size()));
    for (Element g = 0; g < k; ++g) {
        for (std::size_t v = 0; v < by_id.size(); ++v) {
            std::vector<int> moved = *by_id[v];
            for (int j = 0; j <= N_; ++j) {
                if (moved[2 * j] != 0) moved[2 * j + 1] = group_.mul(g, moved[2 * j + 1]);
            }
            out.action[g][v] = ids.at(moved);
        }
    }
    return out;
}

std::vector<int> split_factors(std::int64_t resolution) {
    std::vector<int> factors;
    for (int q : {5, 3, 2}) {
        while (resolution % q == 0) {
            factors.push_back(q);
            resolution /= q;
        }
    }
    if (resolution != 1) throw InputError("lattice resolution must be {2,3,5}-smooth");
    return factors;
}

Rational lattice_fineness_bound(const std::vector<Measure>& measures, int N, std::int64_t resolution) {
    Rational worst = 0;
    for (const auto& mu : measures) {
        Rational previous = 0;
        for (std::int64_t y = 1; y <= resolution; ++y) {
            const Rational current = mu.cdf(ratio(y, resolution));
            const Rational step = current - previous;
            if (step > worst) worst = step;
            previous = current;
        }
    }
    return worst * ((N + 1) / 2);
}

}  // namespace equidiv
