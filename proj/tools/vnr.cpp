// Command line front end for the V_{n,r} diagram calculus: parsing and
// printing of the element grammar, group operations, the Cantor-set and
// PL actions, cube subdivisions, PROP composition, DOT rendering and the
// seeded property suites.
//
// Exit codes: 0 success, 1 domain or usage error, 2 property-suite
// failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnr/cubes.hpp"
#include "vnr/diagram.hpp"
#include "vnr/dot.hpp"
#include "vnr/forest.hpp"
#include "vnr/prefix_map.hpp"
#include "vnr/prop.hpp"
#include "vnr/random.hpp"
#include "vnr/suites.hpp"
#include "vnr/text.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 1729;

// Infer the shared arity of a pair of elements: an all-leaf element
// adopts the arity of its partner.
std::pair<vnr::PairedDiagram, vnr::PairedDiagram> parse_diagram_pair(
    const std::string& a, const std::string& b) {
    bool a_has_node = a.find('(') != std::string::npos;
    bool b_has_node = b.find('(') != std::string::npos;
    if (!a_has_node && b_has_node) {
        vnr::PairedDiagram y = vnr::parse_diagram(b);
        vnr::PairedDiagram x = vnr::parse_diagram(a, y.arity());
        return {std::move(x), std::move(y)};
    }
    vnr::PairedDiagram x = vnr::parse_diagram(a);
    vnr::PairedDiagram y = vnr::parse_diagram(b, x.arity());
    return {std::move(x), std::move(y)};
}

std::pair<vnr::PropMorphism, vnr::PropMorphism> parse_morphism_pair(
    const std::string& a, const std::string& b) {
    bool a_has_node = a.find('(') != std::string::npos;
    bool b_has_node = b.find('(') != std::string::npos;
    if (!a_has_node && b_has_node) {
        vnr::PropMorphism y = vnr::parse_prop_morphism(b);
        vnr::PropMorphism x = vnr::parse_prop_morphism(a, y.arity);
        return {std::move(x), std::move(y)};
    }
    vnr::PropMorphism x = vnr::parse_prop_morphism(a);
    vnr::PropMorphism y = vnr::parse_prop_morphism(b, x.arity);
    return {std::move(x), std::move(y)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of the Higman-Thompson groups V_{n,r}"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- reduce ----
    std::string reduce_text;
    CLI::App* cmd_reduce = app.add_subcommand("reduce", "canonical form of an element");
    cmd_reduce->add_option("element", reduce_text, "paired diagram")->required();
    cmd_reduce->callback([&] {
        std::cout << vnr::print_diagram(vnr::reduce(vnr::parse_diagram(reduce_text)))
                  << "\n";
    });

    // ---- mul ----
    std::vector<std::string> mul_texts;
    CLI::App* cmd_mul = app.add_subcommand(
        "mul", "product x*y (y acts first, then x); canonical form");
    cmd_mul->add_option("elements", mul_texts, "two paired diagrams")
        ->expected(2);
    cmd_mul->callback([&] {
        auto [x, y] = parse_diagram_pair(mul_texts[0], mul_texts[1]);
        std::cout << vnr::print_diagram(vnr::multiply(x, y)) << "\n";
    });

    // ---- inv ----
    std::string inv_text;
    CLI::App* cmd_inv = app.add_subcommand("inv", "inverse element, canonical form");
    cmd_inv->add_option("element", inv_text, "paired diagram")->required();
    cmd_inv->callback([&] {
        std::cout << vnr::print_diagram(vnr::invert(vnr::parse_diagram(inv_text)))
                  << "\n";
    });

    // ---- eq ----
    std::vector<std::string> eq_texts;
    CLI::App* cmd_eq = app.add_subcommand("eq", "do two diagrams represent the same element");
    cmd_eq->add_option("elements", eq_texts, "two paired diagrams")->expected(2);
    cmd_eq->callback([&] {
        auto [x, y] = parse_diagram_pair(eq_texts[0], eq_texts[1]);
        std::cout << (vnr::equal(x, y) ? "true" : "false") << "\n";
    });

    // ---- act ----
    std::string act_text, act_word;
    int act_component = 1;
    CLI::App* cmd_act = app.add_subcommand("act", "apply the element to an address word");
    cmd_act->add_option("element", act_text, "paired diagram")->required();
    cmd_act->add_option("--word", act_word, "digits over 0..n-1, spaces optional")
        ->required();
    cmd_act->add_option("--component", act_component, "1-based interval index");
    cmd_act->callback([&] {
        vnr::PairedDiagram d = vnr::parse_diagram(act_text);
        vnr::LeafAddress a{act_component - 1, vnr::parse_word(act_word, d.arity())};
        vnr::LeafAddress out = vnr::apply_word(vnr::to_prefix_map(d), a);
        std::cout << vnr::print_address(out) << "\n";
    });

    // ---- eval ----
    std::string eval_text, eval_rational;
    int eval_component = 1;
    CLI::App* cmd_eval =
        app.add_subcommand("eval", "evaluate the piecewise linear map at an n-adic point");
    cmd_eval->add_option("element", eval_text, "paired diagram")->required();
    cmd_eval->add_option("--rational", eval_rational, "point as p/n^e (or 0, 1)")
        ->required();
    cmd_eval->add_option("--component", eval_component, "1-based interval index");
    cmd_eval->callback([&] {
        vnr::PairedDiagram d = vnr::parse_diagram(eval_text);
        vnr::NAdicText p = vnr::parse_nadic(eval_rational);
        if (p.base != 0 && p.base != d.arity())
            throw std::invalid_argument("point base " + std::to_string(p.base) +
                                        " differs from element arity " +
                                        std::to_string(d.arity()));
        vnr::NAdic x{eval_component - 1, p.num, p.exp};
        std::cout << vnr::print_point(d.arity(), vnr::eval_pl(d, x)) << "\n";
    });

    // ---- random ----
    int rnd_arity = 2, rnd_roots = 1, rnd_carets = 4;
    uint64_t rnd_seed = kDefaultSeed;
    CLI::App* cmd_random = app.add_subcommand("random", "seeded random element");
    cmd_random->add_option("--arity", rnd_arity, "n >= 2");
    cmd_random->add_option("--roots", rnd_roots, "r >= 1");
    cmd_random->add_option("--carets", rnd_carets, "caret count of both forests");
    cmd_random->add_option("--seed", rnd_seed, "RNG seed");
    cmd_random->callback([&] {
        std::cout << vnr::print_diagram(
                         vnr::random_element(rnd_arity, rnd_roots, rnd_carets, rnd_seed))
                  << "\n";
    });

    // ---- count ----
    int count_arity = 2;
    long long count_leaves = 1;
    CLI::App* cmd_count = app.add_subcommand("count", "number of n-ary trees with m leaves");
    cmd_count->add_option("--arity", count_arity, "n >= 2")->required();
    cmd_count->add_option("--leaves", count_leaves, "m >= 1")->required();
    cmd_count->callback([&] {
        std::cout << vnr::count_trees(count_arity, count_leaves).str() << "\n";
    });

    // ---- dot ----
    std::string dot_text;
    CLI::App* cmd_dot = app.add_subcommand("dot", "Graphviz rendering of a diagram");
    cmd_dot->add_option("element", dot_text, "paired diagram")->required();
    cmd_dot->callback([&] {
        std::cout << vnr::render_dot(vnr::parse_diagram(dot_text));
    });

    // ---- boxes ----
    std::string boxes_text;
    int boxes_dims = 1;
    CLI::App* cmd_boxes = app.add_subcommand("boxes", "tiling of the unit cube, one box per line");
    cmd_boxes->add_option("cuttree", boxes_text, "cut tree, e.g. (1,2:*,(2,3:*,*,*))")
        ->required();
    cmd_boxes->add_option("--dims", boxes_dims, "minimum dimension");
    cmd_boxes->callback([&] {
        vnr::CutTree ct = vnr::parse_cut_tree(boxes_text, boxes_dims);
        for (const vnr::Box& b : vnr::boxes_of(ct))
            std::cout << vnr::print_box(b) << "\n";
    });

    // ---- independent ----
    std::vector<int> indep_values;
    CLI::App* cmd_indep =
        app.add_subcommand("independent", "are the integers multiplicatively independent");
    cmd_indep->add_option("values", indep_values, "integers >= 2")
        ->required()
        ->expected(-1);
    cmd_indep->callback([&] {
        std::cout << (vnr::independence_check(indep_values) ? "true" : "false") << "\n";
    });

    // ---- prop ----
    CLI::App* cmd_prop = app.add_subcommand("prop", "PROP morphism operations");
    cmd_prop->require_subcommand(1);

    std::vector<std::string> prop_compose_texts;
    CLI::App* cmd_prop_compose =
        cmd_prop->add_subcommand("compose", "composite g after f");
    cmd_prop_compose->add_option("morphisms", prop_compose_texts, "outer then inner")
        ->expected(2);
    cmd_prop_compose->callback([&] {
        auto [g, f] = parse_morphism_pair(prop_compose_texts[0], prop_compose_texts[1]);
        std::cout << vnr::print_prop_morphism(vnr::prop_compose(g, f)) << "\n";
    });

    std::vector<std::string> prop_fill_texts;
    CLI::App* cmd_prop_fill =
        cmd_prop->add_subcommand("square-fill", "legs u, v with f.u == g.v");
    cmd_prop_fill->add_option("morphisms", prop_fill_texts, "cospan f, g")->expected(2);
    cmd_prop_fill->callback([&] {
        auto [f, g] = parse_morphism_pair(prop_fill_texts[0], prop_fill_texts[1]);
        auto [u, v] = vnr::square_fill(f, g);
        std::cout << vnr::print_prop_morphism(u) << "\n"
                  << vnr::print_prop_morphism(v) << "\n";
    });

    // ---- check ----
    std::string check_suite;
    int check_arity = 2, check_roots = 1, check_trials = 500, check_carets = 8;
    int check_sequences = 20, check_max_source = 4;
    uint64_t check_seed = kDefaultSeed;
    CLI::App* cmd_check = app.add_subcommand("check", "run a seeded property suite");
    cmd_check
        ->add_option("--suite", check_suite,
                     "group-axioms | oracle | confluence | cancellative | fractions")
        ->required();
    cmd_check->add_option("--arity", check_arity, "n >= 2");
    cmd_check->add_option("--roots", check_roots, "r >= 1");
    cmd_check->add_option("--trials", check_trials, "random trials");
    cmd_check->add_option("--carets", check_carets, "caret budget per element");
    cmd_check->add_option("--sequences", check_sequences,
                          "expansion sequences per diagram (confluence)");
    cmd_check->add_option("--max-source", check_max_source,
                          "exhaustive source bound (cancellative)");
    cmd_check->add_option("--seed", check_seed, "RNG seed");
    cmd_check->callback([&] {
        vnr::suites::SuiteReport report;
        if (check_suite == "group-axioms") {
            report = vnr::suites::group_axioms(check_arity, check_roots, check_trials,
                                               check_carets, check_seed);
        } else if (check_suite == "oracle") {
            report = vnr::suites::oracle(check_arity, check_roots, check_trials,
                                         check_carets, check_seed);
        } else if (check_suite == "confluence") {
            report = vnr::suites::confluence(check_arity, check_roots, check_trials,
                                             check_sequences, check_carets, check_seed);
        } else if (check_suite == "cancellative") {
            report = vnr::suites::cancellative(check_arity, check_max_source,
                                               std::min(check_carets, 2), check_trials,
                                               check_seed);
        } else if (check_suite == "fractions") {
            report = vnr::suites::fractions(check_arity, check_roots, check_trials,
                                            check_carets, check_seed);
        } else {
            throw std::invalid_argument("unknown suite: " + check_suite);
        }
        std::cout << report.to_string();
        if (!report.ok()) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
