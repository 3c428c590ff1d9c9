#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vnr/diagram.hpp"
#include "vnr/forest.hpp"
#include "vnr/permutation.hpp"

// Morphisms of the PROP S(O_{1,n}) in normalized (permutation, forest)
// form, the square-filling and cancellation machinery of the calculus of
// fractions, and the span presentation of group elements.

namespace vnr {

// A morphism source -> target: input wire w enters forest leaf perm(w);
// each root of the forest is one output operation.
struct PropMorphism {
    int arity = 2;
    Permutation perm;
    Forest forest;

    int source() const { return perm.size(); }
    int target() const { return forest.root_count(); }

    friend bool operator==(const PropMorphism&, const PropMorphism&) = default;
};

inline PropMorphism make_prop_morphism(int arity, Permutation perm, Forest forest) {
    require(forest.arity == arity, "prop morphism: forest arity mismatch");
    require(perm.size() == leaf_count(forest),
            "prop morphism: permutation size != leaf count");
    return PropMorphism{arity, std::move(perm), std::move(forest)};
}

inline PropMorphism identity_morphism(int n, int r) {
    return PropMorphism{n, Permutation::identity(r), trivial_forest(n, r)};
}

// g after f. The forest of f is grafted block-wise into the leaves of
// g's forest and the wire permutation composed through the block
// offsets.
inline PropMorphism prop_compose(const PropMorphism& g, const PropMorphism& f) {
    require(g.arity == f.arity, "prop compose: arity mismatch");
    require(f.target() == g.source(), "prop compose: boundary mismatch");

    const int r = f.target();
    // f's forest split at its roots: tree t covers f-leaves
    // [tree_start[t], tree_start[t+1])
    std::vector<int> tree_start(static_cast<size_t>(r) + 1, 0);
    for (int t = 0; t < r; ++t)
        tree_start[static_cast<size_t>(t) + 1] =
            tree_start[static_cast<size_t>(t)] +
            tree_leaf_count(f.forest.roots[static_cast<size_t>(t)]);

    // graft tree t of f at leaf g.perm(t) of g's forest
    Forest composed = g.forest;
    std::vector<int> tree_at_gleaf(static_cast<size_t>(r));
    for (int t = 0; t < r; ++t) tree_at_gleaf[static_cast<size_t>(g.perm(t))] = t;
    for (int q = r - 1; q >= 0; --q)
        composed = graft(composed, q,
                         f.forest.roots[static_cast<size_t>(tree_at_gleaf[static_cast<size_t>(q)])]);

    // leaf block offsets of the composed forest, indexed by g-leaf
    std::vector<int> block_start(static_cast<size_t>(r) + 1, 0);
    for (int q = 0; q < r; ++q)
        block_start[static_cast<size_t>(q) + 1] =
            block_start[static_cast<size_t>(q)] +
            tree_leaf_count(f.forest.roots[static_cast<size_t>(tree_at_gleaf[static_cast<size_t>(q)])]);

    Permutation perm;
    perm.img.resize(static_cast<size_t>(f.source()));
    for (int w = 0; w < f.source(); ++w) {
        int fl = f.perm(w);
        int t = 0;
        while (tree_start[static_cast<size_t>(t) + 1] <= fl) ++t;
        perm.img[static_cast<size_t>(w)] =
            block_start[static_cast<size_t>(g.perm(t))] + (fl - tree_start[static_cast<size_t>(t)]);
    }
    return PropMorphism{g.arity, std::move(perm), std::move(composed)};
}

// Legs (u, v) of a commuting square prop_compose(f, u) == prop_compose(g, v)
// over the cospan f: a -> c, g: b -> c. The common composite forest is
// the join of the two underlying forests, so for pure forests the fill
// is the minimal one.
inline std::pair<PropMorphism, PropMorphism> square_fill(const PropMorphism& f,
                                                         const PropMorphism& g) {
    require(f.arity == g.arity, "square fill: arity mismatch");
    require(f.target() == g.target(), "square fill: targets differ");

    Forest middle = join(f.forest, g.forest);

    auto leg = [&](const PropMorphism& m) {
        std::vector<Tree> res = residual(m.forest, middle);
        std::vector<Tree> roots(res.size());
        for (int t = 0; t < m.source(); ++t)
            roots[static_cast<size_t>(t)] = res[static_cast<size_t>(m.perm(t))];
        int total = 0;
        for (const Tree& tr : roots) total += tree_leaf_count(tr);
        return make_prop_morphism(m.arity, Permutation::identity(total),
                                  make_forest(m.arity, std::move(roots)));
    };

    PropMorphism u = leg(f);
    PropMorphism v = leg(g);

    // align the two composite wire permutations
    Permutation hf = prop_compose(f, u).perm;
    Permutation hg = prop_compose(g, v).perm;
    v.perm = compose(hg.inverse(), hf);
    return {std::move(u), std::move(v)};
}

// --- bounded-exhaustive cancellation checking ------------------------------

using ComposeFn =
    std::function<PropMorphism(const PropMorphism&, const PropMorphism&)>;

struct CancellationReport {
    long long morphisms = 0;
    long long left_checks = 0;
    long long right_checks = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

// All morphisms with the given arity, source <= max_source and at most
// max_carets carets in the forest, in a deterministic order.
inline std::vector<PropMorphism> enumerate_prop_morphisms(int n, int max_source,
                                                          int max_carets) {
    std::vector<PropMorphism> out;
    for (int m = 1; m <= max_source; ++m) {
        for (int r = 1; r <= m; ++r) {
            if ((m - r) % (n - 1) != 0) continue;
            int carets = (m - r) / (n - 1);
            if (carets > max_carets) continue;
            for (const Forest& f : enumerate_forests(n, r, carets)) {
                std::vector<int> img(static_cast<size_t>(m));
                std::iota(img.begin(), img.end(), 0);
                do {
                    out.push_back(PropMorphism{n, Permutation{img}, f});
                } while (std::next_permutation(img.begin(), img.end()));
            }
        }
    }
    return out;
}

// Exhaustively verify left cancellation (a.f == a.g implies f == g) and
// right cancellation (f.a == g.a implies f == g) over the bounded
// enumeration. The composition rule is injectable so a corrupted rule
// can be shown to fail.
inline CancellationReport check_cancellative(int n, int max_source, int max_carets,
                                             const ComposeFn& comp = {}) {
    ComposeFn compose_fn = comp ? comp : [](const PropMorphism& g, const PropMorphism& f) {
        return prop_compose(g, f);
    };
    std::vector<PropMorphism> all = enumerate_prop_morphisms(n, max_source, max_carets);
    CancellationReport report;
    report.morphisms = static_cast<long long>(all.size());

    auto describe = [](const PropMorphism& m) {
        std::string s = "[";
        for (int i = 0; i < m.source(); ++i) {
            if (i) s += ",";
            s += std::to_string(m.perm(i) + 1);
        }
        s += "];" + print_forest(m.forest);
        return s;
    };

    // group by (source, target) so candidate pairs are cheap to scan
    for (size_t fi = 0; fi < all.size(); ++fi) {
        for (size_t gi = fi + 1; gi < all.size(); ++gi) {
            const PropMorphism& f = all[fi];
            const PropMorphism& g = all[gi];
            if (f.source() != g.source() || f.target() != g.target()) continue;
            for (const PropMorphism& a : all) {
                if (a.source() == f.target()) {
                    ++report.left_checks;
                    if (compose_fn(a, f) == compose_fn(a, g))
                        report.counterexamples.push_back(
                            "left: a=" + describe(a) + " f=" + describe(f) +
                            " g=" + describe(g));
                }
                if (a.target() == f.source()) {
                    ++report.right_checks;
                    if (compose_fn(f, a) == compose_fn(g, a))
                        report.counterexamples.push_back(
                            "right: a=" + describe(a) + " f=" + describe(f) +
                            " g=" + describe(g));
                }
                if (!report.counterexamples.empty() &&
                    report.counterexamples.size() > 8)
                    return report;
            }
        }
    }
    return report;
}

// --- fractions --------------------------------------------------------------

// The span (p: m -> r, q: m -> s) presenting the groupoid morphism
// q . p^-1 : r -> s.
struct Fraction {
    PropMorphism p;
    PropMorphism q;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline Fraction make_fraction(PropMorphism p, PropMorphism q) {
    require(p.arity == q.arity, "fraction: arity mismatch");
    require(p.source() == q.source(), "fraction: legs must share their source");
    return Fraction{std::move(p), std::move(q)};
}

inline Fraction identity_fraction(int n, int r) {
    return Fraction{identity_morphism(n, r), identity_morphism(n, r)};
}

inline Fraction fraction_invert(const Fraction& x) { return Fraction{x.q, x.p}; }

// Composite "x then y" (x: r -> s, y: s -> t): fill the square over
// (numerator of x, denominator of y) and whisker the outer legs.
inline Fraction fraction_multiply(const Fraction& x, const Fraction& y) {
    require(x.p.arity == y.p.arity, "fraction multiply: arity mismatch");
    require(x.q.target() == y.p.target(), "fraction multiply: boundary mismatch");
    auto [u, v] = square_fill(x.q, y.p);
    return Fraction{prop_compose(x.p, u), prop_compose(y.q, v)};
}

// Automorphism spans fold into paired forest diagrams: the permutations
// move into the leaf matching.
inline PairedDiagram fraction_to_diagram(const Fraction& x) {
    require(x.p.target() == x.q.target(),
            "fraction to diagram: endpoints differ");
    Permutation sigma = compose(x.q.perm, x.p.perm.inverse());
    return reduce(make_diagram(x.p.forest, std::move(sigma), x.q.forest));
}

inline Fraction diagram_to_fraction(const PairedDiagram& d) {
    int m = d.leaves();
    return Fraction{
        PropMorphism{d.arity(), Permutation::identity(m), d.dom},
        PropMorphism{d.arity(), d.sigma, d.cod}};
}

}  // namespace vnr
