#include "equidiv/join_complex.hpp"

#include "equidiv/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equidiv {

JoinPoint make_join_point(const Group& group, std::vector<Rational> weights, std::vector<Element> elements) {
    if (weights.size() != elements.size() || weights.empty()) {
        throw InputError("join point needs matching, nonempty weight and element lists");
    }
    Rational total = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        weights[j].canonicalize();
        if (weights[j] < 0) throw InputError("join point weight " + std::to_string(j) + " is negative");
        if (!group.valid(elements[j])) throw InputError("join point element out of range in slot " + std::to_string(j));
        total += weights[j];
        if (weights[j] == 0) elements[j] = 0;
    }
    if (total != 1) throw InputError("join point weights sum to " + to_string(total) + ", expected 1");
    return JoinPoint{std::move(weights), std::move(elements)};
}

JoinPoint join_vertex(int slots, Element g, int j) {
    JoinPoint p{std::vector<Rational>(slots, Rational(0)), std::vector<Element>(slots, 0)};
    p.weights[j] = 1;
    p.elements[j] = g;
    return p;
}

JoinPoint act_point(const Group& group, Element g, const JoinPoint& point) {
    JoinPoint out = point;
    for (std::size_t j = 0; j < out.slots(); ++j) {
        if (out.weights[j] != 0) out.elements[j] = group.multiply(g, out.elements[j]);
    }
    return out;
}

std::vector<int> GComplex::act_on_set(Element g, const std::vector<int>& vertices) const {
    std::vector<int> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(action[g][v]);
    std::sort(out.begin(), out.end());
    return out;
}

GComplex build_join_complex(const Group& group, int N) {
    if (N < 0) throw InputError("join complex needs N >= 0");
    const int k = group.order();
    const int slots = N + 1;
    GComplex out{group, N, 0, {}, {}, {}, {}};
    out.coords.reserve(static_cast<std::size_t>(k) * slots);
    for (int j = 0; j < slots; ++j) {
        for (Element g = 0; g < k; ++g) out.coords.push_back(join_vertex(slots, g, j));
    }
    std::size_t facet_total = 1;
    for (int j = 0; j < slots; ++j) {
        if (facet_total > (std::size_t{1} << 26) / k) throw CapExceeded("natural triangulation too large to materialize");
        facet_total *= k;
    }
    out.facets.reserve(facet_total);
    std::vector<Element> choice(slots, 0);
    for (std::size_t index = 0; index < facet_total; ++index) {
        std::size_t rest = index;
        for (int j = slots - 1; j >= 0; --j) {
            choice[j] = static_cast<Element>(rest % k);
            rest /= k;
        }
        std::vector<int> facet(slots);
        for (int j = 0; j < slots; ++j) facet[j] = j * k + choice[j];
        out.facets.push_back(std::move(facet));
    }
    out.action.assign(k, std::vector<int>(out.coords.size()));
    for (Element g = 0; g < k; ++g) {
        for (int j = 0; j < slots; ++j) {
            for (Element h = 0; h < k; ++h) out.action[g][j * k + h] = j * k + group.mul(g, h);
        }
    }
    return out;
}

namespace {

JoinPoint average(const std::vector<const JoinPoint*>& points) {
    const std::size_t slots = points.front()->slots();
    JoinPoint out{std::vector<Rational>(slots, Rational(0)), std::vector<Element>(slots, 0)};
    for (const JoinPoint* p : points) {
        for (std::size_t j = 0; j < slots; ++j) {
            if (p->weights[j] == 0) continue;
            if (out.weights[j] != 0 && out.elements[j] != p->elements[j]) {
                throw InternalError("face vertices do not lie in one natural join simplex");
            }
            out.weights[j] += p->weights[j];
            out.elements[j] = p->elements[j];
        }
    }
    const Rational count(static_cast<long>(points.size()));
    for (auto& w : out.weights) w /= count;
    return out;
}

}  // namespace

GComplex barycentric_subdivide(const GComplex& complex) {
    const int dim = complex.N;
    std::map<std::vector<int>, int> face_ids;
    for (const auto& facet : complex.facets) {
        const int size = static_cast<int>(facet.size());
        for (unsigned mask = 1; mask < (1u << size); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < size; ++b) {
                if (mask & (1u << b)) face.push_back(facet[b]);
            }
            face_ids.emplace(std::move(face), 0);
        }
    }
    GComplex out{complex.group, complex.N, complex.depth + 1, {}, {}, {}, {}};
    out.coords.reserve(face_ids.size());
    std::vector<const std::vector<int>*> faces;
    faces.reserve(face_ids.size());
    int next = 0;
    for (auto& [face, id] : face_ids) {
        id = next++;
        std::vector<const JoinPoint*> pts;
        for (int v : face) pts.push_back(&complex.coords[v]);
        out.coords.push_back(average(pts));
        faces.push_back(&face);
    }

    std::vector<int> order(dim + 1);
    for (std::size_t f = 0; f < complex.facets.size(); ++f) {
        const auto& facet = complex.facets[f];
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> chain_face;
            std::vector<int> new_facet;
            for (int step = 0; step <= dim; ++step) {
                chain_face.insert(std::upper_bound(chain_face.begin(), chain_face.end(), facet[order[step]]),
                                  facet[order[step]]);
                new_facet.push_back(face_ids.at(chain_face));
            }
            std::sort(new_facet.begin(), new_facet.end());
            out.facets.push_back(std::move(new_facet));
            out.parent_facet.push_back(static_cast<int>(f));
        } while (std::next_permutation(order.begin(), order.end()));
    }

    const int k = complex.group.order();
    out.action.assign(k, std::vector<int>(out.coords.size()));
    for (Element g = 0; g < k; ++g) {
        for (std::size_t v = 0; v < faces.size(); ++v) {
            out.action[g][v] = face_ids.at(complex.act_on_set(g, *faces[v]));
        }
    }
    return out;
}

std::vector<std::pair<int, int>> complex_edges(const GComplex& complex) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& facet : complex.facets) {
        for (std::size_t a = 0; a < facet.size(); ++a) {
            for (std::size_t b = a + 1; b < facet.size(); ++b) edges.emplace_back(facet[a], facet[b]);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool point_in_natural_simplex(const JoinPoint& point, const std::vector<Element>& facet_elements) {
    for (std::size_t j = 0; j < point.slots(); ++j) {
        if (point.weights[j] != 0 && point.elements[j] != facet_elements[j]) return false;
    }
    return true;
}

}  // namespace equidiv
