#include "equidiv/colorful.hpp"

#include "equidiv/error.hpp"

namespace equidiv {

void validate_instance(const ColorfulInstance& instance) {
    if (instance.d < 1 || instance.m < 1) throw InputError("instance needs d >= 1 and m >= 1");
    if (static_cast<int>(instance.columns.size()) != instance.d + 1) {
        throw InputError("instance needs d+1 = " + std::to_string(instance.d + 1) + " columns");
    }
    for (std::size_t nu = 0; nu < instance.columns.size(); ++nu) {
        const auto& column = instance.columns[nu];
        if (static_cast<int>(column.size()) != instance.m) {
            throw InputError("column " + std::to_string(nu + 1) + " needs " + std::to_string(instance.m) + " vectors");
        }
        for (const auto& v : column) {
            if (static_cast<int>(v.size()) != instance.d) {
                throw InputError("column " + std::to_string(nu + 1) + " has a vector of the wrong dimension");
            }
        }
        if (!conv_contains_zero(column, instance.d).contains) {
            throw InputError("the origin is not in the convex hull of column " + std::to_string(nu + 1));
        }
    }
}

namespace {

bool descend(const ColorfulInstance& instance, std::size_t nu, std::vector<int>& alpha, ColorfulSelection& out) {
    ++out.nodes;
    if (nu == instance.columns.size()) {
        std::vector<RationalVector> points;
        for (std::size_t c = 0; c < alpha.size(); ++c) points.push_back(instance.columns[c][alpha[c]]);
        ConvexWitness witness = conv_contains_zero(points, instance.d);
        if (!witness.contains) return false;
        out.alpha = alpha;
        out.witness = std::move(witness);
        return true;
    }
    for (int row = 0; row < instance.m; ++row) {
        alpha[nu] = row;
        if (descend(instance, nu + 1, alpha, out)) return true;
    }
    return false;
}

}  // namespace

ColorfulSelection colorful_caratheodory(const ColorfulInstance& instance) {
    validate_instance(instance);
    ColorfulSelection out;
    std::vector<int> alpha(instance.columns.size(), 0);
    if (!descend(instance, 0, alpha, out)) {
        throw InternalError("no colorful transversal contains the origin");
    }
    return out;
}

}  // namespace equidiv
