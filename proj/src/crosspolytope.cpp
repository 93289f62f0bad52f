#include "equidiv/crosspolytope.hpp"

#include "equidiv/error.hpp"

#include <algorithm>
#include <numeric>

namespace equidiv {

ZeroSumMatrix::ZeroSumMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 1 || entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw InputError("zero-sum matrix shape mismatch");
    }
    for (int i = 0; i < rows_; ++i) {
        Rational sum = 0;
        for (int j = 0; j < cols_; ++j) sum += at(i, j);
        if (sum != 0) throw InputError("row " + std::to_string(i) + " sums to " + to_string(sum) + ", not 0");
    }
}

ZeroSumMatrix ZeroSumMatrix::zero(int rows, int cols) {
    return ZeroSumMatrix(rows, cols, std::vector<Rational>(static_cast<std::size_t>(rows) * cols, Rational(0)));
}

bool ZeroSumMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

ZeroSumMatrix ZeroSumMatrix::act(const Group& group, Element g) const {
    if (group.order() != cols_) throw InputError("group order does not match column count");
    std::vector<Rational> out(entries_.size());
    for (int i = 0; i < rows_; ++i) {
        for (int c = 0; c < cols_; ++c) out[i * cols_ + group.multiply(g, c)] = at(i, c);
    }
    return ZeroSumMatrix(rows_, cols_, std::move(out));
}

ZeroSumMatrix ZeroSumMatrix::operator+(const ZeroSumMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch");
    std::vector<Rational> out(entries_.size());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = entries_[e] + other.entries_[e];
    return ZeroSumMatrix(rows_, cols_, std::move(out));
}

ZeroSumMatrix vertex_vector(Element g, int row, int n, const Group& group) {
    const int k = group.order();
    if (!group.valid(g)) throw InputError("vertex_vector: element out of range");
    if (row < 1 || row > n) throw InputError("vertex_vector: row out of range");
    std::vector<Rational> entries(static_cast<std::size_t>(n) * k, Rational(0));
    const Rational share = ratio(1, k);
    for (int c = 0; c < k; ++c) entries[(row - 1) * k + c] = (c == g ? Rational(1) : Rational(0)) - share;
    return ZeroSumMatrix(n, k, std::move(entries));
}

std::optional<int> fiber_complete(const std::vector<CrossLabel>& labels, const Group& group, int n) {
    const int k = group.order();
    std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(k, false));
    for (const auto& label : labels) {
        if (!group.valid(label.g) || label.row < 1 || label.row > n) throw InputError("cross label out of range");
        seen[label.row][label.g] = true;
    }
    for (int i = 1; i <= n; ++i) {
        if (std::all_of(seen[i].begin(), seen[i].end(), [](bool b) { return b; })) return i;
    }
    return std::nullopt;
}

namespace {

/// Solves [p_s; 1] lambda = [0; 1] for the chosen support. Returns the unique
/// solution when the support is affinely independent and the system is
/// consistent.
std::optional<std::vector<Rational>> solve_support(const std::vector<RationalVector>& points,
                                                   const std::vector<int>& support, int d) {
    const int rows = d + 1;
    const int cols = static_cast<int>(support.size());
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < cols; ++c) a[r][c] = points[support[c]][r];
        a[r][cols] = 0;
    }
    for (int c = 0; c < cols; ++c) a[d][c] = 1;
    a[d][cols] = 1;

    int rank = 0;
    std::vector<int> pivot_row(cols, -1);
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(a[pivot], a[rank]);
        const Rational inv = 1 / a[rank][c];
        for (int cc = c; cc <= cols; ++cc) a[rank][cc] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational factor = a[r][c];
            for (int cc = c; cc <= cols; ++cc) a[r][cc] -= factor * a[rank][cc];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    if (rank < cols) return std::nullopt;
    for (int r = rank; r < rows; ++r) {
        if (a[r][cols] != 0) return std::nullopt;
    }
    std::vector<Rational> lambda(cols);
    for (int c = 0; c < cols; ++c) lambda[c] = a[pivot_row[c]][cols];
    return lambda;
}

bool next_combination(std::vector<int>& comb, int n) {
    const int s = static_cast<int>(comb.size());
    int i = s - 1;
    while (i >= 0 && comb[i] == n - s + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

}  // namespace

ConvexWitness conv_contains_zero(const std::vector<RationalVector>& points, int d) {
    ConvexWitness out;
    const int count = static_cast<int>(points.size());
    if (count == 0) return out;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != d) throw InputError("conv_contains_zero: point dimension mismatch");
    }
    const int max_support = std::min(count, d + 1);
    for (int s = 1; s <= max_support; ++s) {
        std::vector<int> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        do {
            auto lambda = solve_support(points, comb, d);
            if (!lambda) continue;
            if (std::any_of(lambda->begin(), lambda->end(), [](const Rational& q) { return q < 0; })) continue;
            out.contains = true;
            out.coefficients.assign(count, Rational(0));
            for (int c = 0; c < s; ++c) out.coefficients[comb[c]] = (*lambda)[c];
            return out;
        } while (next_combination(comb, count));
    }
    return out;
}

bool witness_is_valid(const std::vector<RationalVector>& points, const ConvexWitness& witness) {
    if (!witness.contains || witness.coefficients.size() != points.size() || points.empty()) return false;
    Rational total = 0;
    RationalVector sum(points.front().size(), Rational(0));
    for (std::size_t s = 0; s < points.size(); ++s) {
        const Rational& c = witness.coefficients[s];
        if (c < 0) return false;
        total += c;
        for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += c * points[s][r];
    }
    return total == 1 && std::all_of(sum.begin(), sum.end(), [](const Rational& q) { return q == 0; });
}

void validate_polytope(const GPolytope& polytope, const Group& group) {
    const int k = group.order();
    const int count = static_cast<int>(polytope.vertices.size());
    if (count == 0) throw InputError("polytope has no vertices");
    if (static_cast<int>(polytope.action.size()) != k) throw InputError("polytope action needs one permutation per element");
    for (Element g = 0; g < k; ++g) {
        const auto& perm = polytope.action[g];
        if (static_cast<int>(perm.size()) != count) throw InputError("polytope action permutation has wrong length");
        std::vector<bool> hit(count, false);
        for (int v : perm) {
            if (v < 0 || v >= count || hit[v]) throw InputError("polytope action is not a permutation");
            hit[v] = true;
        }
        for (Element h = 0; h < k; ++h) {
            for (int v = 0; v < count; ++v) {
                if (polytope.action[g][polytope.action[h][v]] != polytope.action[group.mul(g, h)][v]) {
                    throw InputError("polytope action does not respect the group table");
                }
            }
        }
    }
    RationalVector bary(polytope.dimension(), Rational(0));
    for (const auto& v : polytope.vertices) {
        for (std::size_t r = 0; r < bary.size(); ++r) bary[r] += v[r];
    }
    if (std::any_of(bary.begin(), bary.end(), [](const Rational& q) { return q != 0; })) {
        throw InputError("polytope vertex barycenter is not the origin");
    }
}

GPolytope crosspolytope(const Group& group, int n) {
    const int k = group.order();
    GPolytope out;
    for (int i = 1; i <= n; ++i) {
        for (Element g = 0; g < k; ++g) out.vertices.push_back(vertex_vector(g, i, n, group).entries());
    }
    out.action.assign(k, std::vector<int>(static_cast<std::size_t>(n) * k));
    for (Element g = 0; g < k; ++g) {
        for (int i = 1; i <= n; ++i) {
            for (Element h = 0; h < k; ++h) out.action[g][(i - 1) * k + h] = (i - 1) * k + group.mul(g, h);
        }
    }
    return out;
}

}  // namespace equidiv
