#include "equidiv/group.hpp"

#include "equidiv/error.hpp"
#include "equidiv/rational.hpp"

namespace equidiv {

Group::Group(GroupKind kind, int p, int r, std::vector<Element> table, int order)
    : kind_(kind), p_(p), r_(r), order_(order), table_(std::move(table)), inverse_(order, -1) {
    for (Element g = 0; g < order_; ++g) {
        for (Element h = 0; h < order_; ++h) {
            if (mul(g, h) == 0) inverse_[g] = h;
        }
    }
}

Group Group::cyclic(int k) {
    if (k < 2) throw InputError("cyclic group needs order k >= 2, got " + std::to_string(k));
    std::vector<Element> table(static_cast<std::size_t>(k) * k);
    for (int g = 0; g < k; ++g) {
        for (int h = 0; h < k; ++h) table[g * k + h] = (g + h) % k;
    }
    return Group(GroupKind::Cyclic, k, 1, std::move(table), k);
}

Group Group::elementary_abelian(int p, int r) {
    if (!is_prime(p)) throw InputError("elementary-abelian group needs a prime p, got " + std::to_string(p));
    if (r < 1) throw InputError("elementary-abelian group needs rank r >= 1, got " + std::to_string(r));
    int k = 1;
    for (int i = 0; i < r; ++i) {
        if (k > (1 << 16) / p) throw InputError("elementary-abelian group too large");
        k *= p;
    }
    std::vector<Element> table(static_cast<std::size_t>(k) * k);
    for (int g = 0; g < k; ++g) {
        for (int h = 0; h < k; ++h) {
            int a = g, b = h, out = 0, place = 1;
            for (int i = 0; i < r; ++i) {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            table[g * k + h] = out;
        }
    }
    return Group(GroupKind::ElementaryAbelian, p, r, std::move(table), k);
}

Element Group::multiply(Element g, Element h) const {
    if (!valid(g) || !valid(h)) {
        throw InputError("group element out of range: " + std::to_string(g) + ", " + std::to_string(h) +
                         " (order " + std::to_string(order_) + ")");
    }
    return mul(g, h);
}

Element Group::inverse(Element g) const {
    if (!valid(g)) throw InputError("group element out of range: " + std::to_string(g));
    return inverse_[g];
}

std::vector<int> Group::coordinates(Element g) const {
    std::vector<int> out;
    for (int i = 0; i < r_; ++i) {
        out.push_back(g % p_);
        g /= p_;
    }
    return out;
}

std::string Group::describe() const {
    if (kind_ == GroupKind::Cyclic) return "Z" + std::to_string(order_);
    return "(Z" + std::to_string(p_) + ")^" + std::to_string(r_);
}

}  // namespace equidiv
