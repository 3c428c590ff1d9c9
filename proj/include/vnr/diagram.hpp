#pragma once

#include <optional>
#include <vector>

#include "vnr/forest.hpp"
#include "vnr/permutation.hpp"

// The Higman-Thompson group V_{n,r} as equivalence classes of paired
// forest diagrams (F-, sigma, F+). sigma(i) is the depth-first index of
// the F+ leaf matched with F- leaf i. Group operations return fully
// reduced diagrams, so every public value is the canonical
// representative of its class.

namespace vnr {

struct PairedDiagram {
    Forest dom;         // F-
    Forest cod;         // F+
    Permutation sigma;  // dom leaf i <-> cod leaf sigma(i)

    int arity() const { return dom.arity; }
    int roots() const { return dom.root_count(); }
    int leaves() const { return sigma.size(); }

    friend bool operator==(const PairedDiagram&, const PairedDiagram&) = default;
};

inline PairedDiagram make_diagram(Forest dom, Permutation sigma, Forest cod) {
    require(dom.arity == cod.arity, "diagram: arity mismatch");
    require(dom.root_count() == cod.root_count(), "diagram: root count mismatch");
    int l = leaf_count(dom);
    require(leaf_count(cod) == l, "diagram: leaf count mismatch");
    require(sigma.size() == l, "diagram: permutation size != leaf count");
    return PairedDiagram{std::move(dom), std::move(cod), std::move(sigma)};
}

inline PairedDiagram identity_diagram(int n, int r) {
    return PairedDiagram{trivial_forest(n, r), trivial_forest(n, r),
                         Permutation::identity(r)};
}

namespace detail {

// Depth-first indices of the leftmost leaf of every elementary caret
// (internal vertex all of whose children are leaves).
inline int elementary_carets(const Tree& t, int offset, std::vector<int>& out) {
    if (t.is_leaf()) return 1;
    bool all_leaves = true;
    int seen = 0;
    for (const Tree& k : t.kids) {
        if (!k.is_leaf()) all_leaves = false;
        seen += elementary_carets(k, offset + seen, out);
    }
    if (all_leaves) out.push_back(offset);
    return seen;
}

inline std::vector<int> elementary_carets(const Forest& f) {
    std::vector<int> out;
    int seen = 0;
    for (const Tree& t : f.roots) seen += elementary_carets(t, seen, out);
    return out;
}

// Contract the elementary caret whose leftmost leaf index is `at` back
// to a leaf.
inline bool contract_caret(Tree& t, int offset, int at) {
    if (t.is_leaf()) return false;
    bool all_leaves = true;
    for (const Tree& k : t.kids)
        if (!k.is_leaf()) all_leaves = false;
    if (all_leaves && offset == at) {
        t = Tree{};
        return true;
    }
    int seen = 0;
    for (Tree& k : t.kids) {
        int c = tree_leaf_count(k);
        if (at < offset + seen + c) return contract_caret(k, offset + seen, at);
        seen += c;
    }
    return false;
}

inline Forest contract_caret(const Forest& f, int at) {
    Forest out = f;
    int seen = 0;
    for (Tree& t : out.roots) {
        int c = tree_leaf_count(t);
        if (at < seen + c) {
            contract_caret(t, seen, at);
            return out;
        }
        seen += c;
    }
    return out;
}

}  // namespace detail

// Graft trees[i] simultaneously at dom leaf i and cod leaf sigma(i),
// extending sigma block-wise; represents the same group element.
inline PairedDiagram expand_all(const PairedDiagram& d,
                                const std::vector<Tree>& trees) {
    int l = d.leaves();
    require(static_cast<int>(trees.size()) == l,
            "expand_all: one tree per matched pair required");
    std::vector<int> sizes(trees.size());
    for (size_t i = 0; i < trees.size(); ++i)
        sizes[i] = tree_leaf_count(trees[i]);

    std::vector<int> dom_off(trees.size() + 1, 0);
    for (int i = 0; i < l; ++i)
        dom_off[static_cast<size_t>(i) + 1] =
            dom_off[static_cast<size_t>(i)] + sizes[static_cast<size_t>(i)];

    Permutation inv = d.sigma.inverse();
    std::vector<int> cod_off(trees.size() + 1, 0);
    for (int k = 0; k < l; ++k)
        cod_off[static_cast<size_t>(k) + 1] =
            cod_off[static_cast<size_t>(k)] + sizes[static_cast<size_t>(inv(k))];

    // graft right-to-left so earlier leaf indices stay valid
    Forest dom = d.dom;
    Forest cod = d.cod;
    for (int i = l - 1; i >= 0; --i) {
        if (trees[static_cast<size_t>(i)].is_leaf()) continue;
        dom = graft(dom, i, trees[static_cast<size_t>(i)]);
    }
    for (int k = l - 1; k >= 0; --k) {
        const Tree& t = trees[static_cast<size_t>(inv(k))];
        if (t.is_leaf()) continue;
        cod = graft(cod, k, t);
    }

    Permutation sigma;
    sigma.img.resize(static_cast<size_t>(dom_off[trees.size()]));
    for (int i = 0; i < l; ++i)
        for (int t = 0; t < sizes[static_cast<size_t>(i)]; ++t)
            sigma.img[static_cast<size_t>(dom_off[static_cast<size_t>(i)] + t)] =
                cod_off[static_cast<size_t>(d.sigma(i))] + t;

    return PairedDiagram{std::move(dom), std::move(cod), std::move(sigma)};
}

// Graft tree at the single matched pair i.
inline PairedDiagram expand(const PairedDiagram& d, int i, const Tree& tree) {
    if (i < 0 || i >= d.leaves())
        throw std::out_of_range("expand: pair index out of range");
    std::vector<Tree> trees(static_cast<size_t>(d.leaves()));
    trees[static_cast<size_t>(i)] = tree;
    return expand_all(d, trees);
}

// Remove matched elementary caret pairs until none remain. A pair is
// matched when dom leaves i..i+n-1 form an elementary caret, sigma maps
// them order-preservingly onto sigma(i)..sigma(i)+n-1, and those cod
// leaves form an elementary caret as well. The fixed point is the
// canonical representative.
inline PairedDiagram reduce(PairedDiagram d) {
    const int n = d.arity();
    for (;;) {
        std::vector<int> dom_carets = detail::elementary_carets(d.dom);
        std::vector<int> cod_carets = detail::elementary_carets(d.cod);
        std::optional<int> hit;
        for (int i : dom_carets) {
            int j = d.sigma(i);
            bool consecutive = true;
            for (int t = 1; t < n && consecutive; ++t)
                consecutive = d.sigma(i + t) == j + t;
            if (!consecutive) continue;
            if (std::find(cod_carets.begin(), cod_carets.end(), j) == cod_carets.end())
                continue;
            hit = i;
            break;
        }
        if (!hit) return d;

        int i = *hit;
        int j = d.sigma(i);
        auto squeeze = [n](int x, int at) { return x <= at ? x : x - n + 1; };
        Permutation sigma;
        sigma.img.resize(static_cast<size_t>(d.leaves() - n + 1));
        for (int a = 0; a < static_cast<int>(sigma.img.size()); ++a) {
            int old = a <= i ? a : a + n - 1;
            sigma.img[static_cast<size_t>(a)] = squeeze(d.sigma(old), j);
        }
        d = PairedDiagram{detail::contract_caret(d.dom, i),
                          detail::contract_caret(d.cod, j), std::move(sigma)};
    }
}

// Group product "apply y, then x": both factors are expanded until
// dom(x) and cod(y) agree on their least common refinement, then the
// permutations compose. Result is reduced.
inline PairedDiagram multiply(const PairedDiagram& x, const PairedDiagram& y) {
    require(x.arity() == y.arity(), "multiply: arity mismatch");
    require(x.roots() == y.roots(), "multiply: root count mismatch");

    Forest middle = join(x.dom, y.cod);

    PairedDiagram xe = expand_all(x, residual(x.dom, middle));

    std::vector<Tree> cod_res = residual(y.cod, middle);
    std::vector<Tree> by_pair(cod_res.size());
    for (int i = 0; i < y.leaves(); ++i)
        by_pair[static_cast<size_t>(i)] = cod_res[static_cast<size_t>(y.sigma(i))];
    PairedDiagram ye = expand_all(y, by_pair);

    return reduce(PairedDiagram{std::move(ye.dom), std::move(xe.cod),
                                compose(xe.sigma, ye.sigma)});
}

inline PairedDiagram invert(const PairedDiagram& d) {
    return reduce(PairedDiagram{d.cod, d.dom, d.sigma.inverse()});
}

// True iff x and y represent the same group element.
inline bool equal(const PairedDiagram& x, const PairedDiagram& y) {
    require(x.arity() == y.arity() && x.roots() == y.roots(),
            "equal: elements live in different groups");
    return reduce(x) == reduce(y);
}

// Membership in the F / T families: evaluated on the canonical form,
// sigma must be the identity (F) or a power of the full rotation (T).
inline bool is_in_F(const PairedDiagram& d) { return reduce(d).sigma.is_identity(); }

inline bool is_in_T(const PairedDiagram& d) { return reduce(d).sigma.is_rotation_power(); }

// V_{n,r} -> V_{n,r+1}: adjoin a bare root fixed by the matching.
inline PairedDiagram stabilize(const PairedDiagram& d) {
    PairedDiagram out = reduce(d);
    out.dom.roots.push_back(Tree{});
    out.cod.roots.push_back(Tree{});
    out.sigma.img.push_back(out.sigma.size());
    return out;
}

// V_{n,r} -> V_{n,r+n-1}: expand until both forests carry a caret at the
// last root, then split that caret's subtrees into n separate roots. The
// leaf sequence (and sigma) is untouched.
inline PairedDiagram periodicity_iso(const PairedDiagram& d) {
    PairedDiagram e = reduce(d);
    if (e.dom.roots.back().is_leaf()) {
        int i = leaf_count(e.dom) - 1;  // last root's single leaf is the last leaf
        e = expand(e, i, caret(e.arity()));
    }
    if (e.cod.roots.back().is_leaf()) {
        int j = leaf_count(e.cod) - 1;
        e = expand(e, e.sigma.inverse()(j), caret(e.arity()));
    }

    auto detach = [](Forest& f) {
        Tree last = std::move(f.roots.back());
        f.roots.pop_back();
        for (Tree& k : last.kids) f.roots.push_back(std::move(k));
    };
    detach(e.dom);
    detach(e.cod);
    return reduce(e);
}

// Inverse direction: gather the last n roots of both forests under a
// fresh caret.
inline PairedDiagram periodicity_iso_inverse(const PairedDiagram& d) {
    int n = d.arity();
    require(d.roots() >= n, "periodicity inverse needs at least n roots");
    PairedDiagram e = d;
    auto attach = [n](Forest& f) {
        Tree top;
        top.kids.assign(f.roots.end() - n, f.roots.end());
        f.roots.erase(f.roots.end() - n, f.roots.end());
        f.roots.push_back(std::move(top));
    };
    attach(e.dom);
    attach(e.cod);
    return reduce(e);
}

}  // namespace vnr
