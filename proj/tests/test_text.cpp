#include <catch2/catch_amalgamated.hpp>

#include "vnr/random.hpp"
#include "vnr/text.hpp"

using namespace vnr;

TEST_CASE("parse_diagram") {
    SECTION("identity") {
        PairedDiagram d = parse_diagram("*;[1];*");
        CHECK(d == identity_diagram(2, 1));
        CHECK(parse_diagram("*;[1];*", 3) == identity_diagram(3, 1));
    }

    SECTION("whitespace is insignificant, printer is strict") {
        const std::string canon = "(*,(*,*));[1,2,3];((*,*),*)";
        PairedDiagram d = parse_diagram(" ( * , ( * , * ) ) ; [ 1 , 2 , 3 ] ; ( ( * , * ) , * ) ");
        CHECK(print_diagram(d) == canon);
        CHECK(parse_diagram(canon) == d);
    }

    SECTION("permutation size must match the leaf count") {
        CHECK_THROWS_AS(parse_diagram("(*,*);[1];(*,*)"), ParseError);
    }

    SECTION("arity inconsistency is diagnosed with a location") {
        try {
            parse_diagram("(*,*);[1,2,3];(*,*,*)");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("arity") != std::string::npos);
            CHECK(e.offset == 14);
        }
    }

    SECTION("leaf count mismatch between the forests") {
        CHECK_THROWS_AS(parse_diagram("((*,*),*);[1,2,3];(*,*)"), ParseError);
    }

    SECTION("root count mismatch") {
        CHECK_THROWS_AS(parse_diagram("*,*;[1,2];(*,*)"), ParseError);
    }

    SECTION("permutations must be bijections") {
        CHECK_THROWS_AS(parse_diagram("(*,*);[1,1];(*,*)"), ParseError);
        CHECK_THROWS_AS(parse_diagram("(*,*);[0,1];(*,*)"), ParseError);
    }

    SECTION("syntax errors carry byte offsets") {
        try {
            parse_diagram("(*,(*,);[1,2];(*,*)");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.offset == 6);
        }
        CHECK_THROWS_AS(parse_diagram("(*,*);[1,2];(*,*) junk"), ParseError);
        CHECK_THROWS_AS(parse_diagram(""), ParseError);
    }

    SECTION("single-child nodes are rejected") {
        CHECK_THROWS_AS(parse_diagram("(*);[1];(*)"), ParseError);
    }
}

TEST_CASE("print then parse is the identity on random elements") {
    for (uint64_t s = 0; s < 1000; ++s) {
        Rng rng = trial_rng(1000, s);
        int n = 2 + static_cast<int>(s % 3);
        int r = 1 + static_cast<int>(s % 3);
        PairedDiagram d = random_element_upto(rng, n, r, 6);
        PairedDiagram back = parse_diagram(print_diagram(d), n);
        CHECK(back == d);
    }
}

TEST_CASE("prop morphism text") {
    PropMorphism m = parse_prop_morphism("[2,1,3];(*,*),*");
    CHECK(m.source() == 3);
    CHECK(m.target() == 2);
    CHECK(print_prop_morphism(m) == "[2,1,3];(*,*),*");
    CHECK_THROWS_AS(parse_prop_morphism("[1,2];(*,*),*"), ParseError);
}

TEST_CASE("cut tree text") {
    CutTree ct = parse_cut_tree("(1,2:*,(2,3:*,*,*))", 2);
    CHECK(ct.dim == 2);
    CHECK(ct.piece_sets == std::vector<std::vector<int>>{{2}, {3}});
    CHECK(print_cut_tree(ct) == "(1,2:*,(2,3:*,*,*))");
    CHECK(print_cut_tree(parse_cut_tree("*")) == "*");

    SECTION("declared width must match the child list") {
        CHECK_THROWS_AS(parse_cut_tree("(1,3:*,*)"), ParseError);
    }

    SECTION("dependent piece counts on one axis are rejected") {
        CHECK_THROWS_AS(parse_cut_tree("(1,2:(1,4:*,*,*,*),*)"), std::invalid_argument);
    }
}

TEST_CASE("n-adic text") {
    NAdicText t = parse_nadic("3/2^2");
    CHECK(t.num == 3);
    CHECK(t.base == 2);
    CHECK(t.exp == 2);
    NAdicText one = parse_nadic("1");
    CHECK(one.num == 1);
    CHECK(one.base == 0);
    CHECK(print_nadic(2, NAdic{0, 3, 2}) == "3/2^2");
    CHECK(print_nadic(2, NAdic{0, 1, 0}) == "1");
    CHECK_THROWS_AS(parse_nadic("1/2"), ParseError);
    CHECK_THROWS_AS(parse_nadic("x"), ParseError);
}

TEST_CASE("word text") {
    CHECK(parse_word("101", 2) == std::vector<uint8_t>{1, 0, 1});
    CHECK(parse_word("1 0 1", 2) == std::vector<uint8_t>{1, 0, 1});
    CHECK(parse_word("", 2).empty());
    CHECK_THROWS_AS(parse_word("102", 2), ParseError);
    CHECK(print_word({0, 1, 1}) == "011");
}

TEST_CASE("box text") {
    Box b;
    b.sides.push_back({Rational(0), Rational(1) / 2});
    b.sides.push_back({Rational(1) / 3, Rational(2) / 3});
    CHECK(print_box(b) == "0/1..1/2 x 1/3..2/3");
}
