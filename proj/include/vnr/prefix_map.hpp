#pragma once

#include <algorithm>
#include <vector>

#include "vnr/diagram.hpp"
#include "vnr/forest.hpp"

// Independent semantics for diagram elements: finite prefix-substitution
// bijections of r copies of the n-ary Cantor set, and the induced exact
// piecewise-linear maps on r unit intervals. Everything here is exact;
// no floating point.

namespace vnr {

struct PrefixRule {
    LeafAddress from;
    LeafAddress to;

    friend bool operator==(const PrefixRule&, const PrefixRule&) = default;
};

struct PrefixMap {
    int arity = 2;
    int roots = 1;
    std::vector<PrefixRule> rules;

    friend bool operator==(const PrefixMap&, const PrefixMap&) = default;
};

namespace detail {

inline bool is_prefix(const std::vector<uint8_t>& p, const std::vector<uint8_t>& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Complete prefix-free cover of each root's address space: no address is
// a prefix of another, and the cylinder measures add up to 1 per root.
inline bool is_complete_cover(const std::vector<LeafAddress>& cover, int n, int r) {
    std::vector<LeafAddress> sorted = cover;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i].root == sorted[i + 1].root &&
            is_prefix(sorted[i].word, sorted[i + 1].word))
            return false;
    }
    size_t max_len = 0;
    for (const LeafAddress& a : sorted) {
        if (a.root < 0 || a.root >= r) return false;
        max_len = std::max(max_len, a.word.size());
    }
    std::vector<BigInt> mass(static_cast<size_t>(r), BigInt(0));
    BigInt full = 1;
    for (size_t i = 0; i < max_len; ++i) full *= n;
    for (const LeafAddress& a : sorted) {
        BigInt m = 1;
        for (size_t i = a.word.size(); i < max_len; ++i) m *= n;
        mass[static_cast<size_t>(a.root)] += m;
    }
    for (const BigInt& m : mass)
        if (m != full) return false;
    return true;
}

}  // namespace detail

inline void validate_prefix_map(const PrefixMap& pm) {
    require(pm.arity >= 2 && pm.roots >= 1, "prefix map: bad (n,r)");
    std::vector<LeafAddress> dom, cod;
    dom.reserve(pm.rules.size());
    cod.reserve(pm.rules.size());
    for (const PrefixRule& rule : pm.rules) {
        for (uint8_t d : rule.from.word)
            require(d < pm.arity, "prefix map: digit out of range");
        for (uint8_t d : rule.to.word)
            require(d < pm.arity, "prefix map: digit out of range");
        dom.push_back(rule.from);
        cod.push_back(rule.to);
    }
    require(detail::is_complete_cover(dom, pm.arity, pm.roots),
            "prefix map: domain is not a complete prefix-free cover");
    require(detail::is_complete_cover(cod, pm.arity, pm.roots),
            "prefix map: codomain is not a complete prefix-free cover");
}

inline PrefixMap identity_prefix_map(int n, int r) {
    PrefixMap pm{n, r, {}};
    for (int j = 0; j < r; ++j)
        pm.rules.push_back({LeafAddress{j, {}}, LeafAddress{j, {}}});
    return pm;
}

// Rules u_i -> v_sigma(i) read off the two leaf address sequences.
inline PrefixMap to_prefix_map(const PairedDiagram& d) {
    std::vector<LeafAddress> dom = leaf_addresses(d.dom);
    std::vector<LeafAddress> cod = leaf_addresses(d.cod);
    PrefixMap pm{d.arity(), d.roots(), {}};
    pm.rules.reserve(dom.size());
    for (int i = 0; i < d.leaves(); ++i)
        pm.rules.push_back({dom[static_cast<size_t>(i)],
                            cod[static_cast<size_t>(d.sigma(i))]});
    return pm;
}

// Merge sibling rule families {w0->z0, ..., w(n-1)->z(n-1)} into w->z
// until none remain, then sort by domain address. Equality of canonical
// forms decides equality of the underlying bijections.
inline PrefixMap canonicalize(PrefixMap pm) {
    const int n = pm.arity;
    std::sort(pm.rules.begin(), pm.rules.end(),
              [](const PrefixRule& a, const PrefixRule& b) { return a.from < b.from; });
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i + static_cast<size_t>(n) <= pm.rules.size(); ++i) {
            const PrefixRule& first = pm.rules[i];
            if (first.from.word.empty() || first.to.word.empty()) continue;
            if (first.from.word.back() != 0 || first.to.word.back() != 0) continue;
            bool family = true;
            for (int d = 1; d < n && family; ++d) {
                const PrefixRule& next = pm.rules[i + static_cast<size_t>(d)];
                family = next.from.root == first.from.root &&
                         next.to.root == first.to.root &&
                         next.from.word.size() == first.from.word.size() &&
                         next.to.word.size() == first.to.word.size() &&
                         next.from.word.back() == d && next.to.word.back() == d &&
                         std::equal(first.from.word.begin(), first.from.word.end() - 1,
                                    next.from.word.begin()) &&
                         std::equal(first.to.word.begin(), first.to.word.end() - 1,
                                    next.to.word.begin());
            }
            if (!family) continue;
            PrefixRule parent = first;
            parent.from.word.pop_back();
            parent.to.word.pop_back();
            pm.rules.erase(pm.rules.begin() + static_cast<long>(i),
                           pm.rules.begin() + static_cast<long>(i) + n);
            pm.rules.insert(pm.rules.begin() + static_cast<long>(i), parent);
            merged = true;
            break;
        }
    }
    return pm;
}

inline bool pm_equal(const PrefixMap& a, const PrefixMap& b) {
    require(a.arity == b.arity && a.roots == b.roots,
            "pm_equal: maps live on different spaces");
    return canonicalize(a) == canonicalize(b);
}

// Prefix map of "apply b, then a": b's codomain cover and a's domain
// cover are refined to a common cover and the rules substituted through.
inline PrefixMap compose(const PrefixMap& a, const PrefixMap& b) {
    require(a.arity == b.arity && a.roots == b.roots,
            "compose: maps live on different spaces");
    PrefixMap out{a.arity, a.roots, {}};
    for (const PrefixRule& rb : b.rules) {
        for (const PrefixRule& ra : a.rules) {
            if (ra.from.root != rb.to.root) continue;
            if (detail::is_prefix(ra.from.word, rb.to.word)) {
                // b lands inside a's rule: u -> v', s  where v = u'.s
                PrefixRule r;
                r.from = rb.from;
                r.to = ra.to;
                r.to.word.insert(r.to.word.end(),
                                 rb.to.word.begin() + static_cast<long>(ra.from.word.size()),
                                 rb.to.word.end());
                out.rules.push_back(std::move(r));
            } else if (detail::is_prefix(rb.to.word, ra.from.word)) {
                // a cuts b's codomain cylinder: u.t -> v'  where u' = v.t
                PrefixRule r;
                r.from = rb.from;
                r.from.word.insert(r.from.word.end(),
                                   ra.from.word.begin() + static_cast<long>(rb.to.word.size()),
                                   ra.from.word.end());
                r.to = ra.to;
                out.rules.push_back(std::move(r));
            }
        }
    }
    return canonicalize(std::move(out));
}

inline PrefixMap invert(const PrefixMap& pm) {
    PrefixMap out{pm.arity, pm.roots, {}};
    out.rules.reserve(pm.rules.size());
    for (const PrefixRule& r : pm.rules) out.rules.push_back({r.to, r.from});
    return canonicalize(std::move(out));
}

namespace detail {

// Minimal tree covering the given sorted address words.
inline Tree tree_from_cover(int n, std::vector<std::vector<uint8_t>>::const_iterator begin,
                            std::vector<std::vector<uint8_t>>::const_iterator end,
                            size_t depth) {
    require(begin != end, "prefix map: empty cover block");
    if (begin + 1 == end && begin->size() == depth) return Tree{};
    Tree t;
    t.kids.reserve(static_cast<size_t>(n));
    auto it = begin;
    for (int d = 0; d < n; ++d) {
        auto stop = it;
        while (stop != end && stop->size() > depth &&
               (*stop)[depth] == static_cast<uint8_t>(d))
            ++stop;
        t.kids.push_back(tree_from_cover(n, it, stop, depth + 1));
        it = stop;
    }
    require(it == end, "prefix map: cover does not fill the tree");
    return t;
}

inline Forest forest_from_cover(int n, int r, std::vector<LeafAddress> cover) {
    std::sort(cover.begin(), cover.end());
    std::vector<Tree> roots;
    roots.reserve(static_cast<size_t>(r));
    std::vector<std::vector<uint8_t>> words;
    auto it = cover.begin();
    for (int j = 0; j < r; ++j) {
        words.clear();
        while (it != cover.end() && it->root == j) words.push_back((it++)->word);
        roots.push_back(tree_from_cover(n, words.begin(), words.end(), 0));
    }
    return make_forest(n, std::move(roots));
}

}  // namespace detail

// Reduced diagram whose prefix map is canonically equal to pm: assemble
// the minimal forests over the two covers and read the matching off the
// rule pairing.
inline PairedDiagram from_prefix_map(const PrefixMap& pm) {
    validate_prefix_map(pm);
    PrefixMap c = canonicalize(pm);
    Forest dom = detail::forest_from_cover(c.arity, c.roots, [&] {
        std::vector<LeafAddress> v;
        for (const PrefixRule& r : c.rules) v.push_back(r.from);
        return v;
    }());
    Forest cod = detail::forest_from_cover(c.arity, c.roots, [&] {
        std::vector<LeafAddress> v;
        for (const PrefixRule& r : c.rules) v.push_back(r.to);
        return v;
    }());
    std::vector<LeafAddress> cod_leaves = leaf_addresses(cod);
    Permutation sigma;
    sigma.img.resize(c.rules.size());
    // rules are sorted by domain address == depth-first order of dom
    for (size_t i = 0; i < c.rules.size(); ++i) {
        auto it = std::lower_bound(cod_leaves.begin(), cod_leaves.end(), c.rules[i].to);
        sigma.img[i] = static_cast<int>(it - cod_leaves.begin());
    }
    return reduce(make_diagram(std::move(dom), std::move(sigma), std::move(cod)));
}

// Pointwise action on cylinders: u_i.w -> v_i.w.
inline LeafAddress apply_word(const PrefixMap& pm, const LeafAddress& a) {
    require(a.root >= 0 && a.root < pm.roots, "apply_word: component out of range");
    for (uint8_t d : a.word)
        require(d < pm.arity, "apply_word: digit out of range");
    for (const PrefixRule& r : pm.rules) {
        if (r.from.root != a.root) continue;
        if (detail::is_prefix(r.from.word, a.word)) {
            LeafAddress out = r.to;
            out.word.insert(out.word.end(),
                            a.word.begin() + static_cast<long>(r.from.word.size()),
                            a.word.end());
            return out;
        }
    }
    throw std::invalid_argument(
        "apply_word: insufficient depth, no domain prefix matches the word");
}

// --- exact piecewise-linear evaluation -------------------------------------

// The n-adic rational num / n^exp in component root, normalized so that
// n does not divide num unless exp == 0.
struct NAdic {
    int root = 0;
    BigInt num = 0;
    int exp = 0;

    friend bool operator==(const NAdic&, const NAdic&) = default;
};

inline NAdic nadic_normalize(int n, NAdic x) {
    while (x.exp > 0 && x.num % n == 0) {
        x.num /= n;
        --x.exp;
    }
    return x;
}

inline BigInt nadic_pow(int n, int e) {
    BigInt p = 1;
    for (int i = 0; i < e; ++i) p *= n;
    return p;
}

// Value of the left endpoint of a cylinder as an integer numerator over
// n^word-length.
inline BigInt address_numerator(int n, const std::vector<uint8_t>& word) {
    BigInt v = 0;
    for (uint8_t d : word) v = v * n + d;
    return v;
}

// One affine segment of the PL picture: the cylinder of a matched leaf
// pair, with slope n^slope_exp.
struct PlSegment {
    LeafAddress from;
    LeafAddress to;
    int slope_exp = 0;
};

inline std::vector<PlSegment> pl_segments(const PairedDiagram& d) {
    std::vector<LeafAddress> dom = leaf_addresses(d.dom);
    std::vector<LeafAddress> cod = leaf_addresses(d.cod);
    std::vector<PlSegment> out;
    out.reserve(dom.size());
    for (int i = 0; i < d.leaves(); ++i) {
        const LeafAddress& u = dom[static_cast<size_t>(i)];
        const LeafAddress& v = cod[static_cast<size_t>(d.sigma(i))];
        out.push_back({u, v, static_cast<int>(u.word.size()) -
                             static_cast<int>(v.word.size())});
    }
    return out;
}

// Evaluate the PL map at an n-adic point. Cylinders are read as
// left-closed right-open intervals; the point 1 belongs to the closure
// of the last interval of its component.
inline NAdic eval_pl(const PairedDiagram& d, const NAdic& x) {
    const int n = d.arity();
    require(x.root >= 0 && x.root < d.roots(), "eval_pl: component out of range");
    require(x.num >= 0 && x.num <= nadic_pow(n, x.exp), "eval_pl: point outside [0,1]");

    // walk down the domain tree, peeling one digit per level
    const Tree* node = &d.dom.roots[static_cast<size_t>(x.root)];
    BigInt num = x.num;
    int exp = x.exp;
    int leaf_index = 0;
    for (int j = 0; j < x.root; ++j)
        leaf_index += tree_leaf_count(d.dom.roots[static_cast<size_t>(j)]);
    while (!node->is_leaf()) {
        int digit;
        if (exp == 0) {
            digit = (num == 0) ? 0 : n - 1;  // 0 or the closure at 1
            if (num != 0) num = 1;           // stay at the right endpoint
        } else {
            BigInt scale = nadic_pow(n, exp - 1);
            BigInt q = num / scale;
            digit = static_cast<int>(q);
            if (digit == n) {  // exactly 1 within this cylinder
                digit = n - 1;
                num = scale;   // right endpoint of the last child
            } else {
                num -= q * scale;
            }
            --exp;
        }
        for (int t = 0; t < digit; ++t)
            leaf_index += tree_leaf_count(node->kids[static_cast<size_t>(t)]);
        node = &node->kids[static_cast<size_t>(digit)];
    }

    // leaf_index now names the matched pair; place the local remainder
    // into the codomain cylinder
    std::vector<LeafAddress> cod = leaf_addresses(d.cod);
    const LeafAddress& target = cod[static_cast<size_t>(d.sigma(leaf_index))];
    int k = static_cast<int>(target.word.size());
    NAdic out;
    out.root = target.root;
    out.num = address_numerator(n, target.word) * nadic_pow(n, exp) + num;
    out.exp = k + exp;
    return nadic_normalize(n, out);
}

}  // namespace vnr
