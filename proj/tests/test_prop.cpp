#include <catch2/catch_amalgamated.hpp>

#include "vnr/prop.hpp"
#include "vnr/random.hpp"
#include "vnr/suites.hpp"
#include "vnr/text.hpp"

using namespace vnr;

namespace {

PropMorphism random_morphism(Rng& rng, int n, int target, int max_carets) {
    Forest forest = random_forest(rng, n, target, rng.below_int(max_carets + 1));
    return PropMorphism{n, random_permutation(rng, leaf_count(forest)), forest};
}

}  // namespace

TEST_CASE("prop_compose") {
    PropMorphism f = parse_prop_morphism("[1,2,3];(*,*),*");

    SECTION("identity laws") {
        CHECK(prop_compose(identity_morphism(2, f.target()), f) == f);
        CHECK(prop_compose(f, identity_morphism(2, f.source())) == f);
    }

    SECTION("pure forests compose by grafting") {
        PropMorphism g = parse_prop_morphism("[1,2];(*,*)");
        PropMorphism gf = prop_compose(g, f);
        CHECK(gf.forest == parse_forest("((*,*),*)"));
        CHECK(gf.perm.is_identity());
        CHECK(gf.source() == f.source());
        CHECK(gf.target() == g.target());
    }

    SECTION("wire permutations thread through the blocks") {
        // g sends wire 1 to leaf 2 and wire 2 to leaf 1
        PropMorphism g = parse_prop_morphism("[2,1];(*,*)");
        PropMorphism gf = prop_compose(g, f);
        // f's first tree (2 leaves) lands on g's second leaf
        CHECK(gf.forest == parse_forest("(*,(*,*))"));
        CHECK(gf.perm.img == std::vector<int>{1, 2, 0});
    }

    SECTION("associativity on random composable triples") {
        for (uint64_t s = 0; s < 80; ++s) {
            Rng rng = trial_rng(101, s);
            PropMorphism a = random_morphism(rng, 2, 1 + rng.below_int(2), 2);
            PropMorphism b = random_morphism(rng, 2, a.source(), 2);
            PropMorphism c = random_morphism(rng, 2, b.source(), 2);
            CHECK(prop_compose(prop_compose(a, b), c) ==
                  prop_compose(a, prop_compose(b, c)));
        }
    }

    SECTION("boundary mismatch rejected") {
        CHECK_THROWS_AS(prop_compose(f, f), std::invalid_argument);
    }
}

TEST_CASE("square_fill") {
    SECTION("same morphism twice fills with identities") {
        PropMorphism f = parse_prop_morphism("[2,1,3];(*,(*,*))");
        auto [u, v] = square_fill(f, f);
        CHECK(u == identity_morphism(2, 3));
        CHECK(v == identity_morphism(2, 3));
    }

    SECTION("pure forests fill through join and residuals") {
        PropMorphism f{2, Permutation::identity(3), parse_forest("((*,*),*)")};
        PropMorphism g{2, Permutation::identity(3), parse_forest("(*,(*,*))")};
        auto [u, v] = square_fill(f, g);
        Forest j = join(f.forest, g.forest);
        std::vector<Tree> fu = residual(f.forest, j);
        std::vector<Tree> gv = residual(g.forest, j);
        CHECK(u.forest == make_forest(2, fu));
        CHECK(v.forest == make_forest(2, gv));
        CHECK(prop_compose(f, u).forest == j);
        CHECK(prop_compose(f, u) == prop_compose(g, v));
    }

    SECTION("commutes on random cospans") {
        for (uint64_t s = 0; s < 150; ++s) {
            Rng rng = trial_rng(103, s);
            int target = 1 + rng.below_int(2);
            PropMorphism f = random_morphism(rng, 2, target, 2);
            PropMorphism g = random_morphism(rng, 2, target, 2);
            auto [u, v] = square_fill(f, g);
            CHECK(prop_compose(f, u) == prop_compose(g, v));
        }
    }
}

TEST_CASE("cancellation at desk scale") {
    SECTION("small bound is clean") {
        CancellationReport r = check_cancellative(2, 3, 1);
        CHECK(r.ok());
        CHECK(r.morphisms > 0);
        CHECK(r.left_checks > 0);
        CHECK(r.right_checks > 0);
    }

    SECTION("a corrupted composition rule is caught") {
        ComposeFn corrupted = [](const PropMorphism& g, const PropMorphism& f) {
            PropMorphism out = prop_compose(g, f);
            // forget the wire routing: pretend inputs arrive in order
            out.perm = Permutation::identity(out.source());
            return out;
        };
        CancellationReport r = check_cancellative(2, 3, 1, corrupted);
        CHECK_FALSE(r.ok());
    }
}

TEST_CASE("fractions") {
    SECTION("identity fraction is the identity element") {
        CHECK(fraction_to_diagram(identity_fraction(2, 1)) == identity_diagram(2, 1));
        CHECK(fraction_to_diagram(identity_fraction(3, 2)) == identity_diagram(3, 2));
    }

    SECTION("span of a diagram folds back to its canonical form") {
        for (uint64_t s = 0; s < 60; ++s) {
            Rng rng = trial_rng(107, s);
            PairedDiagram d = random_element_upto(rng, 2, 1 + rng.below_int(2), 5);
            CHECK(fraction_to_diagram(diagram_to_fraction(d)) == reduce(d));
        }
    }

    SECTION("inverse span composes to the identity") {
        for (uint64_t s = 0; s < 40; ++s) {
            Rng rng = trial_rng(109, s);
            PairedDiagram d = random_element_upto(rng, 2, 1, 4);
            Fraction x = diagram_to_fraction(d);
            CHECK(equal(fraction_to_diagram(fraction_multiply(x, fraction_invert(x))),
                        identity_diagram(2, 1)));
            CHECK(equal(fraction_to_diagram(fraction_multiply(fraction_invert(x), x)),
                        identity_diagram(2, 1)));
        }
    }

    SECTION("multiplication transports to the diagram group") {
        for (uint64_t s = 0; s < 60; ++s) {
            Rng rng = trial_rng(113, s);
            PairedDiagram a = random_element_upto(rng, 3, 1, 4);
            PairedDiagram b = random_element_upto(rng, 3, 1, 4);
            PairedDiagram via_fractions = fraction_to_diagram(
                fraction_multiply(diagram_to_fraction(a), diagram_to_fraction(b)));
            CHECK(via_fractions == multiply(b, a));
        }
    }

    SECTION("endpoint mismatch rejected") {
        Fraction bad{identity_morphism(2, 1), identity_morphism(2, 1)};
        bad.q = PropMorphism{2, Permutation::identity(2), trivial_forest(2, 2)};
        CHECK_THROWS_AS(fraction_to_diagram(bad), std::invalid_argument);
    }
}

TEST_CASE("cancellative suite sample") {
    suites::SuiteReport r = suites::cancellative(2, 3, 1, 60, 911);
    INFO(r.to_string());
    CHECK(r.ok());
}

TEST_CASE("fractions suite sample") {
    suites::SuiteReport r = suites::fractions(2, 2, 50, 4, 777);
    INFO(r.to_string());
    CHECK(r.ok());
}
