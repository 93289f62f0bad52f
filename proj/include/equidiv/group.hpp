#pragma once

#include <string>
#include <vector>

namespace equidiv {

using Element = int;

enum class GroupKind { Cyclic, ElementaryAbelian };

/// Finite group given by its multiplication table. Elements are the dense
/// ids 0..k-1 and 0 is the identity.
class Group {
public:
    static Group cyclic(int k);
    static Group elementary_abelian(int p, int r);

    int order() const { return order_; }
    GroupKind kind() const { return kind_; }
    /// Prime p and rank r; for a cyclic group of order k these are (k, 1).
    int prime() const { return p_; }
    int rank() const { return r_; }

    Element multiply(Element g, Element h) const;
    Element inverse(Element g) const;
    bool valid(Element g) const { return g >= 0 && g < order_; }

    /// Unchecked table lookup for inner loops.
    Element mul(Element g, Element h) const { return table_[g * order_ + h]; }

    /// Element ids as base-p digits (least significant first) for the
    /// elementary-abelian kind; the single residue for cyclic groups.
    std::vector<int> coordinates(Element g) const;

    std::string describe() const;

    bool operator==(const Group& other) const {
        return kind_ == other.kind_ && order_ == other.order_ && p_ == other.p_ && r_ == other.r_;
    }

private:
    Group(GroupKind kind, int p, int r, std::vector<Element> table, int order);

    GroupKind kind_;
    int p_;
    int r_;
    int order_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
};

}  // namespace equidiv
