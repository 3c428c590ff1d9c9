#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "vnr/prefix_map.hpp"
#include "vnr/random.hpp"
#include "vnr/suites.hpp"
#include "vnr/text.hpp"

using namespace vnr;

namespace {

LeafAddress addr(int root, std::initializer_list<int> digits) {
    LeafAddress a;
    a.root = root;
    for (int d : digits) a.word.push_back(static_cast<uint8_t>(d));
    return a;
}

PrefixMap map_of(int n, int r, std::initializer_list<std::pair<LeafAddress, LeafAddress>> rules) {
    PrefixMap pm{n, r, {}};
    for (const auto& [u, v] : rules) pm.rules.push_back({u, v});
    return pm;
}

}  // namespace

TEST_CASE("to_prefix_map") {
    SECTION("identity has one empty rule per root") {
        PrefixMap pm = to_prefix_map(identity_diagram(2, 1));
        REQUIRE(pm.rules.size() == 1);
        CHECK(pm.rules[0].from == addr(0, {}));
        CHECK(pm.rules[0].to == addr(0, {}));
    }

    SECTION("rules read off the matched leaf addresses") {
        PairedDiagram x = parse_diagram("(*,(*,*));[1,2,3];((*,*),*)");
        PrefixMap pm = to_prefix_map(x);
        REQUIRE(pm.rules.size() == 3);
        CHECK(pm.rules[0] == PrefixRule{addr(0, {0}), addr(0, {0, 0})});
        CHECK(pm.rules[1] == PrefixRule{addr(0, {1, 0}), addr(0, {0, 1})});
        CHECK(pm.rules[2] == PrefixRule{addr(0, {1, 1}), addr(0, {1})});
    }

    SECTION("rule count equals the leaf count") {
        PairedDiagram d = random_element(3, 2, 5, 11);
        CHECK(to_prefix_map(d).rules.size() == static_cast<size_t>(d.leaves()));
    }
}

TEST_CASE("compose prefix maps") {
    PairedDiagram x = parse_diagram("(*,(*,*));[1,2,3];((*,*),*)");
    PrefixMap pm = to_prefix_map(x);

    SECTION("identity is neutral") {
        CHECK(pm_equal(compose(pm, identity_prefix_map(2, 1)), pm));
        CHECK(pm_equal(compose(identity_prefix_map(2, 1), pm), pm));
    }

    SECTION("hand-substituted square") {
        PrefixMap sq = compose(pm, pm);
        PrefixMap expected = map_of(2, 1,
                                    {{addr(0, {0}), addr(0, {0, 0, 0})},
                                     {addr(0, {1, 0}), addr(0, {0, 0, 1})},
                                     {addr(0, {1, 1, 0}), addr(0, {0, 1})},
                                     {addr(0, {1, 1, 1}), addr(0, {1})}});
        CHECK(sq == canonicalize(expected));
        CHECK(pm_equal(sq, expected));
    }

    SECTION("inverse law") {
        CHECK(pm_equal(compose(pm, to_prefix_map(invert(x))),
                       identity_prefix_map(2, 1)));
    }
}

TEST_CASE("pm_equal") {
    PrefixMap pm = to_prefix_map(parse_diagram("(*,(*,*));[1,2,3];((*,*),*)"));
    CHECK(pm_equal(pm, pm));

    SECTION("sibling rules merge") {
        PrefixMap split = map_of(2, 1, {{addr(0, {0}), addr(0, {0})},
                                        {addr(0, {1}), addr(0, {1})}});
        CHECK(pm_equal(split, identity_prefix_map(2, 1)));
        CHECK(canonicalize(split).rules.size() == 1);
    }

    SECTION("merging cascades") {
        PrefixMap deep = map_of(2, 1, {{addr(0, {0, 0}), addr(0, {0, 0})},
                                       {addr(0, {0, 1}), addr(0, {0, 1})},
                                       {addr(0, {1}), addr(0, {1})}});
        CHECK(canonicalize(deep).rules.size() == 1);
    }

    SECTION("different bijections stay different") {
        PrefixMap swapped = map_of(2, 1, {{addr(0, {0}), addr(0, {1})},
                                          {addr(0, {1}), addr(0, {0})}});
        CHECK_FALSE(pm_equal(swapped, identity_prefix_map(2, 1)));
    }
}

TEST_CASE("from_prefix_map") {
    CHECK(from_prefix_map(identity_prefix_map(2, 1)) == identity_diagram(2, 1));

    SECTION("swap assembles to the transposition diagram") {
        PrefixMap swapped = map_of(2, 1, {{addr(0, {0}), addr(0, {1})},
                                          {addr(0, {1}), addr(0, {0})}});
        CHECK(from_prefix_map(swapped) == parse_diagram("(*,*);[2,1];(*,*)"));
    }

    SECTION("round trip through diagrams") {
        for (uint64_t s = 0; s < 100; ++s) {
            Rng rng = trial_rng(51, s);
            PairedDiagram d = random_element_upto(rng, 2 + static_cast<int>(s % 2), 1 + static_cast<int>(s % 3), 5);
            CHECK(from_prefix_map(to_prefix_map(d)) == reduce(d));
        }
    }

    SECTION("invalid covers rejected") {
        PrefixMap incomplete = map_of(2, 1, {{addr(0, {0}), addr(0, {})}});
        CHECK_THROWS_AS(from_prefix_map(incomplete), std::invalid_argument);
        PrefixMap overlapping = map_of(2, 1, {{addr(0, {}), addr(0, {0})},
                                              {addr(0, {0}), addr(0, {1})},
                                              {addr(0, {1}), addr(0, {1, 0})},
                                              {addr(0, {1, 1}), addr(0, {1, 1})}});
        CHECK_THROWS_AS(from_prefix_map(overlapping), std::invalid_argument);
    }
}

TEST_CASE("apply_word") {
    PairedDiagram x = parse_diagram("(*,(*,*));[1,2,3];((*,*),*)");
    PrefixMap pm = to_prefix_map(x);

    CHECK(apply_word(identity_prefix_map(2, 1), addr(0, {1, 0, 1})) ==
          addr(0, {1, 0, 1}));
    CHECK(apply_word(pm, addr(0, {1, 0, 1})) == addr(0, {0, 1, 1}));

    SECTION("too-shallow words are refused") {
        CHECK_THROWS_WITH(apply_word(pm, addr(0, {})),
                          Catch::Matchers::ContainsSubstring("insufficient depth"));
    }

    SECTION("component out of range") {
        CHECK_THROWS_AS(apply_word(pm, addr(1, {0})), std::invalid_argument);
    }
}

TEST_CASE("eval_pl") {
    PairedDiagram x = parse_diagram("(*,(*,*));[1,2,3];((*,*),*)");

    SECTION("identity fixes every point") {
        NAdic half{0, 1, 1};
        CHECK(eval_pl(identity_diagram(2, 1), half) == half);
    }

    SECTION("interval [1/2,3/4) slides onto [1/4,1/2)") {
        CHECK(eval_pl(x, NAdic{0, 1, 1}) == NAdic{0, 1, 2});
    }

    SECTION("endpoints") {
        CHECK(eval_pl(x, NAdic{0, 0, 0}) == NAdic{0, 0, 0});
        CHECK(eval_pl(x, NAdic{0, 1, 0}) == NAdic{0, 1, 0});
    }

    SECTION("matches the word action on deep finite expansions") {
        for (uint64_t s = 0; s < 60; ++s) {
            Rng rng = trial_rng(61, s);
            PairedDiagram d = random_element_upto(rng, 2, 1, 5);
            PrefixMap pm = to_prefix_map(d);
            // a point with exactly 10 digits, below 1
            std::vector<uint8_t> word;
            BigInt num = 0;
            for (int i = 0; i < 10; ++i) {
                uint8_t digit = static_cast<uint8_t>(rng.below_int(2));
                word.push_back(digit);
                num = num * 2 + digit;
            }
            LeafAddress image = apply_word(pm, LeafAddress{0, word});
            NAdic value = eval_pl(d, NAdic{0, num, 10});
            NAdic expected = nadic_normalize(
                2, NAdic{image.root,
                         address_numerator(2, image.word),
                         static_cast<int>(image.word.size())});
            CHECK(value == expected);
        }
    }

    SECTION("slopes are powers of n and breakpoints n-adic by construction") {
        PairedDiagram d = random_element(3, 2, 6, 77);
        std::vector<PlSegment> segs = pl_segments(d);
        CHECK(segs.size() == static_cast<size_t>(d.leaves()));
        for (const PlSegment& s : segs) {
            CHECK(s.slope_exp == static_cast<int>(s.from.word.size()) -
                                     static_cast<int>(s.to.word.size()));
            // the segment endpoints evaluate consistently: left endpoint
            // of the source cylinder lands on the left endpoint of the
            // target cylinder
            NAdic lo = nadic_normalize(
                3, NAdic{s.from.root, address_numerator(3, s.from.word),
                         static_cast<int>(s.from.word.size())});
            NAdic expected = nadic_normalize(
                3, NAdic{s.to.root, address_numerator(3, s.to.word),
                         static_cast<int>(s.to.word.size())});
            CHECK(eval_pl(d, lo) == expected);
        }
    }

    SECTION("component out of range") {
        CHECK_THROWS_AS(eval_pl(x, NAdic{2, 0, 0}), std::invalid_argument);
    }
}

TEST_CASE("depth-wise bijectivity") {
    // at depth past every rule, the images of all words form a complete
    // prefix-free cover again
    auto check_depth = [](int n, int r, int depth, uint64_t seed) {
        Rng rng = trial_rng(seed, 0);
        PairedDiagram d = random_element_upto(rng, n, r, 4);
        PrefixMap pm = to_prefix_map(d);
        std::vector<LeafAddress> images;
        std::vector<uint8_t> word(static_cast<size_t>(depth), 0);
        for (int root = 0; root < r; ++root) {
            std::fill(word.begin(), word.end(), 0);
            for (;;) {
                images.push_back(apply_word(pm, LeafAddress{root, word}));
                int i = depth - 1;
                while (i >= 0 && ++word[static_cast<size_t>(i)] == n) {
                    word[static_cast<size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
            }
        }
        std::set<LeafAddress> distinct(images.begin(), images.end());
        CHECK(distinct.size() == images.size());
        // prefix-freeness plus exact total mass
        std::vector<LeafAddress> sorted(distinct.begin(), distinct.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i) {
            bool pfx = sorted[i].root == sorted[i + 1].root &&
                       sorted[i].word.size() <= sorted[i + 1].word.size() &&
                       std::equal(sorted[i].word.begin(), sorted[i].word.end(),
                                  sorted[i + 1].word.begin());
            CHECK_FALSE(pfx);
        }
        size_t max_len = 0;
        for (const LeafAddress& a : sorted) max_len = std::max(max_len, a.word.size());
        BigInt full = 0, mass = 0;
        BigInt unit = 1;
        for (size_t i = 0; i < max_len; ++i) unit *= n;
        full = unit * r;
        for (const LeafAddress& a : sorted) {
            BigInt m = 1;
            for (size_t i = a.word.size(); i < max_len; ++i) m *= n;
            mass += m;
        }
        CHECK(mass == full);
    };
    check_depth(2, 1, 8, 71);
    check_depth(2, 2, 8, 72);
    check_depth(3, 1, 8, 73);
    check_depth(3, 2, 8, 74);
}

TEST_CASE("oracle agreement sample") {
    suites::SuiteReport r = suites::oracle(2, 2, 60, 5, 99);
    INFO(r.to_string());
    CHECK(r.ok());
}
