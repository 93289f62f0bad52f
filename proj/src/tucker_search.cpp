#include "equidiv/tucker_search.hpp"

#include "equidiv/error.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <optional>

namespace equidiv {

namespace {

LabelOutcome act_label(const Group& group, Element g, const LabelOutcome& label) {
    if (label.exact) return label;
    return LabelOutcome{false, CrossLabel{group.mul(g, label.label.g), label.label.row}};
}

bool is_orbit_representative(const GComplex& complex, const std::vector<int>& facet) {
    for (Element g = 1; g < complex.group.order(); ++g) {
        if (complex.act_on_set(g, facet) < facet) return false;
    }
    return true;
}

struct Best {
    int exact = -1;
    std::vector<int> face_key;  // sorted ids
    std::vector<int> face;      // ordered by label element
    int i0 = 0;
    std::uint64_t facets = 0;

    void offer_exact(int v) {
        if (exact < 0 || v < exact) exact = v;
    }
    void offer_face(std::vector<int> ordered, int row) {
        std::vector<int> key = ordered;
        std::sort(key.begin(), key.end());
        if (face_key.empty() || key < face_key) {
            face_key = std::move(key);
            face = std::move(ordered);
            i0 = row;
        }
    }
    void merge(const Best& other) {
        if (other.exact >= 0) offer_exact(other.exact);
        if (!other.face_key.empty() && (face_key.empty() || other.face_key < face_key)) {
            face_key = other.face_key;
            face = other.face;
            i0 = other.i0;
        }
        facets += other.facets;
    }
};

/// Processes one facet; `translate` adds every translate of what is found.
template <class LabelOf>
void scan_facet(const GComplex& complex, const std::vector<int>& facet, int n, bool translate, LabelOf&& label_of,
                Best& best) {
    ++best.facets;
    const Group& group = complex.group;
    const int k = group.order();
    const int elements = translate ? k : 1;
    std::vector<LabelOutcome> labels(facet.size());
    bool any_exact = false;
    for (std::size_t a = 0; a < facet.size(); ++a) {
        labels[a] = label_of(facet[a]);
        if (labels[a].exact) {
            any_exact = true;
            for (Element g = 0; g < elements; ++g) best.offer_exact(complex.act(g, facet[a]));
        }
    }
    if (any_exact || best.exact >= 0) return;
    for (int row = 1; row <= n; ++row) {
        std::vector<int> pick(k, -1);
        int covered = 0;
        for (std::size_t a = 0; a < facet.size(); ++a) {
            if (labels[a].label.row != row) continue;
            int& slot = pick[labels[a].label.g];
            if (slot < 0) ++covered;
            if (slot < 0 || facet[a] < slot) slot = facet[a];
        }
        if (covered != k) continue;
        for (Element g = 0; g < elements; ++g) {
            // The translate g.F is labeled by g times the labels of F.
            std::vector<int> ordered(k);
            for (Element h = 0; h < k; ++h) ordered[group.mul(g, h)] = complex.act(g, pick[h]);
            best.offer_face(std::move(ordered), row);
        }
    }
}

SearchResult to_result(const Best& best) {
    SearchResult out;
    out.facets_scanned = best.facets;
    if (best.exact >= 0) {
        out.kind = SearchResult::Kind::ExactVertex;
        out.exact_vertex = best.exact;
    } else if (!best.face_key.empty()) {
        out.kind = SearchResult::Kind::FoundSimplex;
        out.simplex = best.face;
        out.i0 = best.i0;
    }
    return out;
}

}  // namespace

int equivariance_violation(const GComplex& complex, const Labeling& labeling, int spot_checks) {
    const int V = complex.vertex_count();
    const int samples = spot_checks <= 0 ? V : std::min(V, spot_checks);
    for (int s = 0; s < samples; ++s) {
        const int v = samples == V ? s : static_cast<int>((static_cast<std::int64_t>(s) * V) / samples);
        const LabelOutcome base = labeling(v);
        for (Element g = 1; g < complex.group.order(); ++g) {
            if (labeling(complex.act(g, v)) != act_label(complex.group, g, base)) return v;
        }
    }
    return -1;
}

SearchResult find_fully_labeled(const GComplex& complex, const Labeling& labeling, int n,
                                const SearchOptions& options) {
    const int bad = equivariance_violation(complex, labeling, options.spot_checks);
    if (bad >= 0) throw InputError("labeling is not equivariant at vertex " + std::to_string(bad));

    std::vector<int> facets;
    for (std::size_t f = 0; f < complex.facet_count(); ++f) {
        if (!options.orbit_pruning || is_orbit_representative(complex, complex.facets[f])) {
            facets.push_back(static_cast<int>(f));
        }
    }
    const int workers = std::max(1, options.workers);
    const auto count = static_cast<std::int64_t>(facets.size());
    std::vector<Best> partial(workers);

#pragma omp parallel num_threads(workers)
    {
        const int thread = omp_get_thread_num();
        std::vector<std::optional<LabelOutcome>> memo(complex.vertex_count());
        auto label_of = [&](int v) {
            if (!memo[v]) memo[v] = labeling(v);
            return *memo[v];
        };
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            scan_facet(complex, complex.facets[facets[idx]], n, options.orbit_pruning, label_of, partial[thread]);
        }
    }
    Best best;
    for (const auto& b : partial) best.merge(b);
    return to_result(best);
}

SearchResult find_fully_labeled_reference(const GComplex& complex, const Labeling& labeling, int n) {
    Best best;
    for (const auto& facet : complex.facets) scan_facet(complex, facet, n, false, labeling, best);
    return to_result(best);
}

EdgeAudit audit_edges(const GComplex& complex, const std::vector<Measure>& measures, int p) {
    std::vector<ValuesTable> values;
    values.reserve(complex.coords.size());
    for (const auto& point : complex.coords) values.push_back(values_table(decode(point, p), measures));
    EdgeAudit audit;
    audit.worst = 0;
    for (const auto& [v, w] : complex_edges(complex)) {
        for (std::size_t e = 0; e < values[v].entries.size(); ++e) {
            const Rational diff = abs_value(values[v].entries[e] - values[w].entries[e]);
            if (audit.v < 0 || diff > audit.worst) {
                audit.worst = diff;
                audit.v = v;
                audit.w = w;
            }
        }
    }
    return audit;
}

GComplex refine_until_fine(const GComplex& complex, const std::vector<Measure>& measures, const Rational& epsilon,
                           int p, int cap) {
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    const Rational target = epsilon / ((p - 1) * (p - 1));
    GComplex current = complex;
    while (true) {
        const EdgeAudit audit = audit_edges(current, measures, p);
        if (audit.v < 0 || audit.worst < target) return current;
        if (current.depth >= cap) {
            throw CapExceeded("refinement cap " + std::to_string(cap) + " reached; worst edge (" +
                              std::to_string(audit.v) + ", " + std::to_string(audit.w) + ") moves a value by " +
                              to_string(audit.worst) + ", target below " + to_string(target));
        }
        current = barycentric_subdivide(current);
    }
}

TuckerTriple verify_tucker_triple(const GComplex& complex, const std::vector<int>& phi, const GPolytope& polytope) {
    if (static_cast<int>(phi.size()) != complex.vertex_count()) throw InputError("phi must map every vertex");
    const int q = static_cast<int>(polytope.vertices.size());
    for (int v = 0; v < complex.vertex_count(); ++v) {
        if (phi[v] < 0 || phi[v] >= q) throw InputError("phi maps vertex " + std::to_string(v) + " out of range");
    }
    for (Element g = 0; g < complex.group.order(); ++g) {
        for (int v = 0; v < complex.vertex_count(); ++v) {
            if (phi[complex.act(g, v)] != polytope.action[g][phi[v]]) {
                throw InputError("phi is not equivariant at vertex " + std::to_string(v));
            }
        }
    }
    const int d = polytope.dimension();
    std::map<std::vector<int>, ConvexWitness> seen;
    for (const auto& facet : complex.facets) {
        std::vector<int> images;
        for (int v : facet) images.push_back(phi[v]);
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        auto it = seen.find(images);
        if (it == seen.end()) {
            std::vector<RationalVector> points;
            for (int id : images) points.push_back(polytope.vertices[id]);
            it = seen.emplace(images, conv_contains_zero(points, d)).first;
        }
        if (!it->second.contains) continue;
        TuckerTriple out;
        out.found = true;
        for (std::size_t s = 0; s < images.size(); ++s) {
            if (it->second.coefficients[s] == 0) continue;
            for (int v : facet) {
                if (phi[v] == images[s]) {
                    out.simplex.push_back(v);
                    break;
                }
            }
        }
        std::vector<std::pair<int, Rational>> pairs;
        for (int v : out.simplex) {
            const auto pos = std::lower_bound(images.begin(), images.end(), phi[v]) - images.begin();
            pairs.emplace_back(v, it->second.coefficients[pos]);
        }
        std::sort(pairs.begin(), pairs.end());
        out.simplex.clear();
        for (auto& [v, c] : pairs) {
            out.simplex.push_back(v);
            out.coefficients.push_back(c);
        }
        return out;
    }
    return TuckerTriple{};
}

}  // namespace equidiv
