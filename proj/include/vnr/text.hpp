#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnr/cubes.hpp"
#include "vnr/diagram.hpp"
#include "vnr/forest.hpp"
#include "vnr/permutation.hpp"
#include "vnr/prefix_map.hpp"
#include "vnr/prop.hpp"

// Element grammar (whitespace insignificant, printer emits none):
//
//   forest   := tree { "," tree }
//   tree     := "*" | "(" tree { "," tree } ")"
//   perm     := "[" int { "," int } "]"          one-line, 1-based
//   diagram  := forest ";" perm ";" forest
//   morphism := perm ";" forest
//   cuttree  := "*" | "(" axis "," pieces ":" cuttree { "," cuttree } ")"
//   nadic    := int | int "/" int "^" int        p / n^e
//
// The arity is inferred from the first internal node and enforced across
// the whole value; an all-leaf value falls back to the hint (default 2).

namespace vnr {

struct ParseError : std::runtime_error {
    size_t offset;

    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"),
          offset(off) {}
};

namespace detail {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos];
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits) throw ParseError("expected an integer", start);
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    void end() {
        skip_ws();
        if (pos < text.size()) throw ParseError("trailing input", pos);
    }
};

// Child counts observed while parsing, with the offset of the first
// offending node kept for diagnostics.
struct ArityWitness {
    int count = 0;
    size_t offset = 0;
};

inline Tree parse_tree(Cursor& cur, std::vector<ArityWitness>& seen) {
    if (cur.eat('*')) return Tree{};
    size_t at = cur.pos;
    cur.expect('(');
    Tree t;
    t.kids.push_back(parse_tree(cur, seen));
    while (cur.eat(',')) t.kids.push_back(parse_tree(cur, seen));
    cur.expect(')');
    seen.push_back({static_cast<int>(t.kids.size()), at});
    return t;
}

inline std::vector<Tree> parse_tree_list(Cursor& cur, std::vector<ArityWitness>& seen) {
    std::vector<Tree> roots;
    roots.push_back(parse_tree(cur, seen));
    while (cur.eat(',')) roots.push_back(parse_tree(cur, seen));
    return roots;
}

inline int resolve_arity(const std::vector<ArityWitness>& seen, int hint, size_t at) {
    int n = 0;
    for (const ArityWitness& w : seen) {
        if (w.count < 2)
            throw ParseError("internal node needs at least 2 children", w.offset);
        if (n == 0) n = w.count;
        if (w.count != n)
            throw ParseError("arity inconsistency: node has " +
                                 std::to_string(w.count) + " children, expected " +
                                 std::to_string(n),
                             w.offset);
    }
    if (n == 0) n = hint > 0 ? hint : 2;
    if (hint > 0 && n != hint)
        throw ParseError("arity " + std::to_string(n) + " conflicts with expected " +
                             std::to_string(hint),
                         at);
    return n;
}

inline Permutation parse_perm(Cursor& cur) {
    size_t at = cur.pos;
    cur.expect('[');
    std::vector<int> img;
    img.push_back(static_cast<int>(cur.integer()) - 1);
    while (cur.eat(',')) img.push_back(static_cast<int>(cur.integer()) - 1);
    cur.expect(']');
    if (!is_valid_permutation(img))
        throw ParseError("not a permutation of 1.." + std::to_string(img.size()), at);
    return Permutation{std::move(img)};
}

}  // namespace detail

inline Forest parse_forest(std::string_view s, int arity_hint = 0) {
    detail::Cursor cur{s};
    std::vector<detail::ArityWitness> seen;
    std::vector<Tree> roots = detail::parse_tree_list(cur, seen);
    cur.end();
    return make_forest(detail::resolve_arity(seen, arity_hint, 0), std::move(roots));
}

inline PairedDiagram parse_diagram(std::string_view s, int arity_hint = 0) {
    detail::Cursor cur{s};
    std::vector<detail::ArityWitness> seen;
    std::vector<Tree> dom_roots = detail::parse_tree_list(cur, seen);
    cur.expect(';');
    size_t perm_at = cur.pos;
    Permutation sigma = detail::parse_perm(cur);
    cur.expect(';');
    size_t cod_at = cur.pos;
    std::vector<Tree> cod_roots = detail::parse_tree_list(cur, seen);
    cur.end();

    int n = detail::resolve_arity(seen, arity_hint, 0);
    Forest dom = make_forest(n, std::move(dom_roots));
    Forest cod = make_forest(n, std::move(cod_roots));
    if (dom.root_count() != cod.root_count())
        throw ParseError("forests have different root counts", cod_at);
    if (leaf_count(dom) != leaf_count(cod))
        throw ParseError("forests have different leaf counts", cod_at);
    if (sigma.size() != leaf_count(dom))
        throw ParseError("permutation size " + std::to_string(sigma.size()) +
                             " != leaf count " + std::to_string(leaf_count(dom)),
                         perm_at);
    return PairedDiagram{std::move(dom), std::move(cod), std::move(sigma)};
}

inline PropMorphism parse_prop_morphism(std::string_view s, int arity_hint = 0) {
    detail::Cursor cur{s};
    size_t perm_at = cur.pos;
    Permutation perm = detail::parse_perm(cur);
    cur.expect(';');
    std::vector<detail::ArityWitness> seen;
    std::vector<Tree> roots = detail::parse_tree_list(cur, seen);
    cur.end();
    int n = detail::resolve_arity(seen, arity_hint, 0);
    Forest forest = make_forest(n, std::move(roots));
    if (perm.size() != leaf_count(forest))
        throw ParseError("permutation size != leaf count", perm_at);
    return PropMorphism{n, std::move(perm), std::move(forest)};
}

namespace detail {

inline CutNode parse_cut_node(Cursor& cur,
                              std::vector<std::vector<int>>& sets_by_axis) {
    if (cur.eat('*')) return CutNode{};
    size_t at = cur.pos;
    cur.expect('(');
    long long axis = cur.integer();
    cur.expect(',');
    long long pieces = cur.integer();
    cur.expect(':');
    if (axis < 1) throw ParseError("axis must be >= 1", at);
    if (pieces < 2) throw ParseError("piece count must be >= 2", at);
    CutNode node;
    node.axis = static_cast<int>(axis) - 1;
    node.kids.push_back(parse_cut_node(cur, sets_by_axis));
    while (cur.eat(',')) node.kids.push_back(parse_cut_node(cur, sets_by_axis));
    cur.expect(')');
    if (node.pieces() != pieces)
        throw ParseError("node lists " + std::to_string(node.pieces()) +
                             " children but declares " + std::to_string(pieces),
                         at);
    if (sets_by_axis.size() <= static_cast<size_t>(node.axis))
        sets_by_axis.resize(static_cast<size_t>(node.axis) + 1);
    sets_by_axis[static_cast<size_t>(node.axis)].push_back(node.pieces());
    return node;
}

}  // namespace detail

// Dimension and per-axis piece sets are inferred from the labels that
// actually occur; min_dims pads with unused axes.
inline CutTree parse_cut_tree(std::string_view s, int min_dims = 1) {
    detail::Cursor cur{s};
    std::vector<std::vector<int>> sets;
    CutNode root = detail::parse_cut_node(cur, sets);
    cur.end();
    if (static_cast<int>(sets.size()) < min_dims)
        sets.resize(static_cast<size_t>(min_dims));
    int dims = static_cast<int>(sets.size());
    return make_cut_tree(dims, std::move(sets), std::move(root));
}

// Digit word over {0..n-1}; single characters, whitespace optional.
inline std::vector<uint8_t> parse_word(std::string_view s, int arity) {
    std::vector<uint8_t> out;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a digit", i);
        int d = c - '0';
        if (d >= arity)
            throw ParseError("digit " + std::to_string(d) + " out of range for arity " +
                                 std::to_string(arity),
                             i);
        out.push_back(static_cast<uint8_t>(d));
    }
    return out;
}

// "p/n^e" or a bare integer (base reported as 0 in that case).
struct NAdicText {
    BigInt num;
    int base = 0;
    int exp = 0;
};

inline NAdicText parse_nadic(std::string_view s) {
    detail::Cursor cur{s};
    size_t at = cur.pos;
    long long p = cur.integer();
    if (p < 0) throw ParseError("numerator must be >= 0", at);
    NAdicText out;
    out.num = p;
    if (cur.eat('/')) {
        long long base = cur.integer();
        if (base < 2) throw ParseError("base must be >= 2", at);
        cur.expect('^');
        long long e = cur.integer();
        if (e < 0) throw ParseError("exponent must be >= 0", at);
        out.base = static_cast<int>(base);
        out.exp = static_cast<int>(e);
    }
    cur.end();
    return out;
}

// --- printers ---------------------------------------------------------------

inline std::string print_permutation(const Permutation& p) {
    std::string out = "[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p(i) + 1);
    }
    out += "]";
    return out;
}

inline std::string print_diagram(const PairedDiagram& d) {
    return print_forest(d.dom) + ";" + print_permutation(d.sigma) + ";" +
           print_forest(d.cod);
}

inline std::string print_prop_morphism(const PropMorphism& m) {
    return print_permutation(m.perm) + ";" + print_forest(m.forest);
}

namespace detail {

inline void print_cut_node(const CutNode& node, std::string& out) {
    if (node.is_leaf()) {
        out += "*";
        return;
    }
    out += "(" + std::to_string(node.axis + 1) + "," +
           std::to_string(node.pieces()) + ":";
    for (int i = 0; i < node.pieces(); ++i) {
        if (i) out += ",";
        print_cut_node(node.kids[static_cast<size_t>(i)], out);
    }
    out += ")";
}

}  // namespace detail

inline std::string print_cut_tree(const CutTree& ct) {
    std::string out;
    detail::print_cut_node(ct.root, out);
    return out;
}

inline std::string print_rational(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline std::string print_box(const Box& b) {
    std::string out;
    for (size_t i = 0; i < b.sides.size(); ++i) {
        if (i) out += " x ";
        out += print_rational(b.sides[i].first) + ".." +
               print_rational(b.sides[i].second);
    }
    return out;
}

inline std::string print_word(const std::vector<uint8_t>& word) {
    std::string out;
    out.reserve(word.size());
    for (uint8_t d : word) {
        if (d < 10) {
            out.push_back(static_cast<char>('0' + d));
        } else {
            if (!out.empty()) out.push_back(' ');
            out += std::to_string(static_cast<int>(d));
        }
    }
    return out;
}

inline std::string print_address(const LeafAddress& a) {
    return std::to_string(a.root + 1) + ":" + print_word(a.word);
}

inline std::string print_nadic(int n, const NAdic& x) {
    if (x.exp == 0) return x.num.str();
    return x.num.str() + "/" + std::to_string(n) + "^" + std::to_string(x.exp);
}

inline std::string print_point(int n, const NAdic& x) {
    return std::to_string(x.root + 1) + ":" + print_nadic(n, x);
}

}  // namespace vnr
