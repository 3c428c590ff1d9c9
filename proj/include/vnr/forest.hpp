#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Ordered n-ary rooted forests: the combinatorial substrate for paired
// forest diagrams, prefix maps and PROP morphisms. Trees and forests are
// immutable values with structural equality; all leaf indexing is 0-based
// left-to-right depth-first, roots taken in sequence order. (The text
// grammar converts to the 1-based convention at the I/O boundary.)

namespace vnr {

// plain value semantics (no expression templates), so deduced types
// stay BigInt
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// A tree is a leaf (no children) or an internal node with exactly n
// children, n being the arity of the surrounding Forest.
struct Tree {
    std::vector<Tree> kids;

    bool is_leaf() const { return kids.empty(); }
    friend bool operator==(const Tree&, const Tree&) = default;
};

inline Tree leaf() { return Tree{}; }

// Single caret: one internal node with n leaf children.
inline Tree caret(int n) {
    Tree t;
    t.kids.assign(static_cast<size_t>(n), Tree{});
    return t;
}

inline int tree_leaf_count(const Tree& t) {
    if (t.is_leaf()) return 1;
    int total = 0;
    for (const Tree& k : t.kids) total += tree_leaf_count(k);
    return total;
}

inline int tree_caret_count(const Tree& t) {
    if (t.is_leaf()) return 0;
    int total = 1;
    for (const Tree& k : t.kids) total += tree_caret_count(k);
    return total;
}

inline int tree_vertex_count(const Tree& t) {
    int total = 1;
    for (const Tree& k : t.kids) total += tree_vertex_count(k);
    return total;
}

inline bool tree_has_arity(const Tree& t, int n) {
    if (t.is_leaf()) return true;
    if (static_cast<int>(t.kids.size()) != n) return false;
    for (const Tree& k : t.kids)
        if (!tree_has_arity(k, n)) return false;
    return true;
}

struct Forest {
    int arity = 2;
    std::vector<Tree> roots;

    int root_count() const { return static_cast<int>(roots.size()); }
    friend bool operator==(const Forest&, const Forest&) = default;
};

inline Forest make_forest(int arity, std::vector<Tree> roots) {
    require(arity >= 2, "forest arity must be >= 2");
    require(!roots.empty(), "forest needs at least one root");
    for (const Tree& t : roots)
        require(tree_has_arity(t, arity), "tree arity mismatch in forest");
    return Forest{arity, std::move(roots)};
}

inline Forest trivial_forest(int arity, int r) {
    require(r >= 1, "forest needs at least one root");
    return make_forest(arity, std::vector<Tree>(static_cast<size_t>(r)));
}

inline int leaf_count(const Forest& f) {
    int total = 0;
    for (const Tree& t : f.roots) total += tree_leaf_count(t);
    return total;
}

inline int caret_count(const Forest& f) {
    int total = 0;
    for (const Tree& t : f.roots) total += tree_caret_count(t);
    return total;
}

// Address of a leaf: which root it hangs under and the digit word (over
// {0..n-1}) spelling the path down from that root.
struct LeafAddress {
    int root = 0;  // 0-based
    std::vector<uint8_t> word;

    friend bool operator==(const LeafAddress&, const LeafAddress&) = default;
    friend auto operator<=>(const LeafAddress&, const LeafAddress&) = default;
};

namespace detail {

inline void collect_addresses(const Tree& t, LeafAddress& cur,
                              std::vector<LeafAddress>& out) {
    if (t.is_leaf()) {
        out.push_back(cur);
        return;
    }
    for (size_t d = 0; d < t.kids.size(); ++d) {
        cur.word.push_back(static_cast<uint8_t>(d));
        collect_addresses(t.kids[d], cur, out);
        cur.word.pop_back();
    }
}

}  // namespace detail

// Addresses of all leaves in depth-first order; the sequence is strictly
// increasing under (root, word) order and covers each root's address
// space as a complete prefix-free family.
inline std::vector<LeafAddress> leaf_addresses(const Forest& f) {
    std::vector<LeafAddress> out;
    LeafAddress cur;
    for (int j = 0; j < f.root_count(); ++j) {
        cur.root = j;
        detail::collect_addresses(f.roots[static_cast<size_t>(j)], cur, out);
    }
    return out;
}

namespace detail {

// Replaces the leaf with depth-first index `target` (counting from
// `offset`) by `sub`. Returns the number of leaves seen in t.
inline int graft_at(Tree& t, int offset, int target, const Tree& sub) {
    if (t.is_leaf()) {
        if (offset == target) t = sub;
        return 1;
    }
    int seen = 0;
    for (Tree& k : t.kids) seen += graft_at(k, offset + seen, target, sub);
    return seen;
}

}  // namespace detail

// Replace leaf i (0-based depth-first) of f by the tree t.
inline Forest graft(const Forest& f, int i, const Tree& t) {
    require(tree_has_arity(t, f.arity), "grafted tree has wrong arity");
    if (i < 0 || i >= leaf_count(f))
        throw std::out_of_range("graft: leaf index out of range");
    Forest out = f;
    int seen = 0;
    for (Tree& root : out.roots) {
        int c = tree_leaf_count(root);
        if (i < seen + c) {
            detail::graft_at(root, seen, i, t);
            break;
        }
        seen += c;
    }
    return out;
}

namespace detail {

inline Tree join_trees(const Tree& a, const Tree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    Tree out;
    out.kids.reserve(a.kids.size());
    for (size_t d = 0; d < a.kids.size(); ++d)
        out.kids.push_back(join_trees(a.kids[d], b.kids[d]));
    return out;
}

inline bool tree_refines(const Tree& fine, const Tree& coarse) {
    if (coarse.is_leaf()) return true;
    if (fine.is_leaf()) return false;
    for (size_t d = 0; d < coarse.kids.size(); ++d)
        if (!tree_refines(fine.kids[d], coarse.kids[d])) return false;
    return true;
}

inline void tree_residual(const Tree& base, const Tree& refined,
                          std::vector<Tree>& out) {
    if (base.is_leaf()) {
        out.push_back(refined);
        return;
    }
    for (size_t d = 0; d < base.kids.size(); ++d)
        tree_residual(base.kids[d], refined.kids[d], out);
}

}  // namespace detail

// Least common refinement: node-wise union of carets.
inline Forest join(const Forest& f, const Forest& g) {
    require(f.arity == g.arity, "join: arity mismatch");
    require(f.root_count() == g.root_count(), "join: root count mismatch");
    Forest out{f.arity, {}};
    out.roots.reserve(f.roots.size());
    for (size_t j = 0; j < f.roots.size(); ++j)
        out.roots.push_back(detail::join_trees(f.roots[j], g.roots[j]));
    return out;
}

// True iff every caret of coarse appears in fine at the same address,
// i.e. fine is a subdivision of coarse.
inline bool refines(const Forest& fine, const Forest& coarse) {
    require(fine.arity == coarse.arity, "refines: arity mismatch");
    require(fine.root_count() == coarse.root_count(),
            "refines: root count mismatch");
    for (size_t j = 0; j < fine.roots.size(); ++j)
        if (!detail::tree_refines(fine.roots[j], coarse.roots[j]))
            return false;
    return true;
}

// For each leaf of base (in depth-first order), the subtree of refined
// rooted at that leaf's address. Grafting them back onto base gives
// refined again.
inline std::vector<Tree> residual(const Forest& base, const Forest& refined) {
    require(refines(refined, base), "residual: second forest must refine the first");
    std::vector<Tree> out;
    out.reserve(static_cast<size_t>(leaf_count(base)));
    for (size_t j = 0; j < base.roots.size(); ++j)
        detail::tree_residual(base.roots[j], refined.roots[j], out);
    return out;
}

// Canonical serialization shared with the text grammar: leaf "*",
// internal node "(child,...,child)".
inline void print_tree_to(const Tree& t, std::string& out) {
    if (t.is_leaf()) {
        out.push_back('*');
        return;
    }
    out.push_back('(');
    for (size_t d = 0; d < t.kids.size(); ++d) {
        if (d > 0) out.push_back(',');
        print_tree_to(t.kids[d], out);
    }
    out.push_back(')');
}

inline std::string print_tree(const Tree& t) {
    std::string out;
    print_tree_to(t, out);
    return out;
}

inline std::string print_forest(const Forest& f) {
    std::string out;
    for (size_t j = 0; j < f.roots.size(); ++j) {
        if (j > 0) out.push_back(',');
        print_tree_to(f.roots[j], out);
    }
    return out;
}

// --- counting and unranking by caret number -------------------------------
//
// Fuss-Catalan style dynamic programming. tuple[j][c] counts j-tuples of
// n-ary trees with c carets in total; tree[c] counts single trees. All
// counts are exact big integers. The induced rank order (first component
// varies slowest, smaller caret count first) is what the unranking
// functions decode.

struct CaretCounts {
    int n = 2;
    std::vector<BigInt> tree;                 // tree[c]
    std::vector<std::vector<BigInt>> tuple;   // tuple[j][c], j <= jmax
};

inline CaretCounts caret_counts(int n, int cmax, int jmax) {
    require(n >= 2, "arity must be >= 2");
    require(cmax >= 0 && jmax >= 1, "bad table bounds");
    jmax = std::max(jmax, n);
    CaretCounts cc;
    cc.n = n;
    cc.tree.assign(static_cast<size_t>(cmax) + 1, BigInt(0));
    cc.tuple.assign(static_cast<size_t>(jmax) + 1,
                    std::vector<BigInt>(static_cast<size_t>(cmax) + 1, BigInt(0)));
    cc.tuple[0][0] = 1;
    cc.tree[0] = 1;
    for (int c = 0; c <= cmax; ++c) {
        if (c > 0) {
            // root caret plus an n-tuple holding the remaining c-1 carets
            cc.tree[static_cast<size_t>(c)] =
                cc.tuple[static_cast<size_t>(n)][static_cast<size_t>(c) - 1];
        }
        for (int j = 1; j <= jmax; ++j) {
            BigInt total = 0;
            for (int a = 0; a <= c; ++a)
                total += cc.tree[static_cast<size_t>(a)] *
                         cc.tuple[static_cast<size_t>(j) - 1][static_cast<size_t>(c - a)];
            cc.tuple[static_cast<size_t>(j)][static_cast<size_t>(c)] = total;
        }
    }
    return cc;
}

inline BigInt count_trees_by_carets(int n, int c) {
    CaretCounts cc = caret_counts(n, c, n);
    return cc.tree[static_cast<size_t>(c)];
}

inline BigInt count_forests_by_carets(int n, int r, int c) {
    CaretCounts cc = caret_counts(n, c, std::max(n, r));
    return cc.tuple[static_cast<size_t>(r)][static_cast<size_t>(c)];
}

// Number of n-ary trees with exactly m leaves; 0 unless m = 1 mod (n-1).
inline BigInt count_trees(int n, long long m) {
    require(n >= 2, "arity must be >= 2");
    require(m >= 1, "leaf count must be >= 1");
    if ((m - 1) % (n - 1) != 0) return 0;
    long long c = (m - 1) / (n - 1);
    return count_trees_by_carets(n, static_cast<int>(c));
}

namespace detail {

inline Tree unrank_tree(const CaretCounts& cc, int c, BigInt rank);

inline std::vector<Tree> unrank_tuple(const CaretCounts& cc, int j, int c,
                                      BigInt rank) {
    std::vector<Tree> out;
    out.reserve(static_cast<size_t>(j));
    for (int slot = j; slot >= 1; --slot) {
        if (slot == 1) {
            out.push_back(unrank_tree(cc, c, rank));
            break;
        }
        for (int a = 0; a <= c; ++a) {
            BigInt rest = cc.tuple[static_cast<size_t>(slot) - 1][static_cast<size_t>(c - a)];
            BigInt block = cc.tree[static_cast<size_t>(a)] * rest;
            if (rank >= block) {
                rank -= block;
                continue;
            }
            out.push_back(unrank_tree(cc, a, rank / rest));
            rank %= rest;
            c -= a;
            break;
        }
    }
    return out;
}

inline Tree unrank_tree(const CaretCounts& cc, int c, BigInt rank) {
    if (c == 0) return Tree{};
    Tree t;
    t.kids = unrank_tuple(cc, cc.n, c - 1, std::move(rank));
    return t;
}

}  // namespace detail

inline Forest unrank_forest(const CaretCounts& cc, int r, int c, BigInt rank) {
    Forest f{cc.n, detail::unrank_tuple(cc, r, c, std::move(rank))};
    return f;
}

// All (n,r)-forests with exactly c carets, ordered lexicographically by
// their canonical serialization.
inline std::vector<Forest> enumerate_forests(int n, int r, int c) {
    require(r >= 1, "forest needs at least one root");
    require(c >= 0, "caret count must be >= 0");
    CaretCounts cc = caret_counts(n, c, std::max(n, r));
    BigInt total = cc.tuple[static_cast<size_t>(r)][static_cast<size_t>(c)];
    std::vector<Forest> out;
    for (BigInt rank = 0; rank < total; ++rank)
        out.push_back(unrank_forest(cc, r, c, rank));
    std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) {
        return print_forest(a) < print_forest(b);
    });
    return out;
}

}  // namespace vnr
