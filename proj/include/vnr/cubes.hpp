#pragma once

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vnr/forest.hpp"

// Cube cutting operations: iterated axis-aligned equal subdivisions of
// the unit k-cube, with exact rational box coordinates. Axes are 0-based
// internally (the text syntax is 1-based).

namespace vnr {

using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// A node either emits its box (leaf) or splits it into `pieces` equal
// slabs along `axis`.
struct CutNode {
    int axis = 0;
    std::vector<CutNode> kids;

    bool is_leaf() const { return kids.empty(); }
    int pieces() const { return static_cast<int>(kids.size()); }
    friend bool operator==(const CutNode&, const CutNode&) = default;
};

struct CutTree {
    int dim = 1;
    std::vector<std::vector<int>> piece_sets;  // allowed piece counts per axis
    CutNode root;

    friend bool operator==(const CutTree&, const CutTree&) = default;
};

struct Box {
    std::vector<std::pair<Rational, Rational>> sides;  // [lo, hi] per axis

    friend bool operator==(const Box&, const Box&) = default;
};

inline Rational box_volume(const Box& b) {
    Rational v(1);
    for (const auto& [lo, hi] : b.sides) v *= hi - lo;
    return v;
}

inline bool boxes_interior_disjoint(const Box& a, const Box& b) {
    for (size_t i = 0; i < a.sides.size(); ++i) {
        if (a.sides[i].second <= b.sides[i].first ||
            b.sides[i].second <= a.sides[i].first)
            return true;
    }
    return false;
}

// --- independence ----------------------------------------------------------

namespace detail {

inline std::vector<std::pair<long long, int>> factorize(long long v) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (v > 1) out.push_back({v, 1});
    return out;
}

// Rank of an integer matrix over the rationals, by fraction-free
// elimination.
inline int integer_rank(std::vector<std::vector<BigInt>> m) {
    int rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        size_t pivot = static_cast<size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<size_t>(rank)], m[pivot]);
        for (size_t row = static_cast<size_t>(rank) + 1; row < m.size(); ++row) {
            if (m[row][col] == 0) continue;
            BigInt a = m[static_cast<size_t>(rank)][col];
            BigInt b = m[row][col];
            for (size_t c = 0; c < cols; ++c)
                m[row][c] = m[row][c] * a - m[static_cast<size_t>(rank)][c] * b;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Integers n_1..n_k are independent when the only products
// n_1^a_1 ... n_k^a_k that coincide are those with equal exponents;
// equivalently their prime-exponent vectors are linearly independent
// over the rationals.
inline bool independence_check(const std::vector<int>& values) {
    for (int v : values) require(v >= 2, "independence: values must be >= 2");
    std::vector<long long> primes;
    std::vector<std::vector<std::pair<long long, int>>> factored;
    for (int v : values) {
        factored.push_back(detail::factorize(v));
        for (const auto& [p, e] : factored.back())
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::vector<BigInt>> matrix(values.size(),
                                            std::vector<BigInt>(primes.size(), BigInt(0)));
    for (size_t i = 0; i < values.size(); ++i)
        for (const auto& [p, e] : factored[i]) {
            size_t col = static_cast<size_t>(
                std::find(primes.begin(), primes.end(), p) - primes.begin());
            matrix[i][col] = e;
        }
    return detail::integer_rank(std::move(matrix)) == static_cast<int>(values.size());
}

// --- cut trees -------------------------------------------------------------

namespace detail {

inline void validate_cut_node(const CutNode& node, const CutTree& ct) {
    if (node.is_leaf()) return;
    require(node.axis >= 0 && node.axis < ct.dim, "cut tree: axis out of range");
    const std::vector<int>& allowed = ct.piece_sets[static_cast<size_t>(node.axis)];
    require(std::find(allowed.begin(), allowed.end(), node.pieces()) != allowed.end(),
            "cut tree: piece count not in the axis set");
    for (const CutNode& k : node.kids) validate_cut_node(k, ct);
}

}  // namespace detail

// An axis may carry an empty piece set when no subdivision ever uses it.
inline CutTree make_cut_tree(int dim, std::vector<std::vector<int>> piece_sets,
                             CutNode root) {
    require(dim >= 1, "cut tree: dimension must be >= 1");
    require(static_cast<int>(piece_sets.size()) == dim,
            "cut tree: one piece set per axis required");
    for (std::vector<int>& s : piece_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        require(independence_check(s), "cut tree: piece set is not independent");
    }
    CutTree ct{dim, std::move(piece_sets), std::move(root)};
    detail::validate_cut_node(ct.root, ct);
    return ct;
}

inline int cut_arity(const CutNode& node) {
    if (node.is_leaf()) return 1;
    int total = 0;
    for (const CutNode& k : node.kids) total += cut_arity(k);
    return total;
}

inline int cut_arity(const CutTree& ct) { return cut_arity(ct.root); }

namespace detail {

inline void collect_boxes(const CutNode& node, const Box& box, std::vector<Box>& out) {
    if (node.is_leaf()) {
        out.push_back(box);
        return;
    }
    const auto [lo, hi] = box.sides[static_cast<size_t>(node.axis)];
    Rational step = (hi - lo) / node.pieces();
    for (int i = 0; i < node.pieces(); ++i) {
        Box piece = box;
        piece.sides[static_cast<size_t>(node.axis)] = {lo + step * i,
                                                       lo + step * (i + 1)};
        collect_boxes(node.kids[static_cast<size_t>(i)], piece, out);
    }
}

}  // namespace detail

// Tiling of the unit k-cube, boxes in depth-first child order.
inline std::vector<Box> boxes_of(const CutTree& ct) {
    Box unit;
    unit.sides.assign(static_cast<size_t>(ct.dim), {Rational(0), Rational(1)});
    std::vector<Box> out;
    detail::collect_boxes(ct.root, unit, out);
    return out;
}

namespace detail {

inline bool graft_cut(CutNode& node, int& countdown, const CutNode& sub) {
    if (node.is_leaf()) {
        if (countdown-- == 0) {
            node = sub;
            return true;
        }
        return false;
    }
    for (CutNode& k : node.kids)
        if (graft_cut(k, countdown, sub)) return true;
    return false;
}

}  // namespace detail

// Operadic composition: replace the slot-th leaf box (0-based,
// depth-first) of outer by the whole subdivision inner, rescaled. The
// factors must share the dimension and their per-axis piece sets must
// merge into an independent family; the composite carries the merged
// sets.
inline CutTree operad_compose(const CutTree& outer, int slot, const CutTree& inner) {
    require(outer.dim == inner.dim, "operad compose: incompatible dimension data");
    if (slot < 0 || slot >= cut_arity(outer))
        throw std::out_of_range("operad compose: slot out of range");
    std::vector<std::vector<int>> merged = outer.piece_sets;
    for (size_t axis = 0; axis < merged.size(); ++axis)
        merged[axis].insert(merged[axis].end(), inner.piece_sets[axis].begin(),
                            inner.piece_sets[axis].end());
    CutNode root = outer.root;
    int countdown = slot;
    detail::graft_cut(root, countdown, inner.root);
    return make_cut_tree(outer.dim, std::move(merged), std::move(root));
}

}  // namespace vnr
