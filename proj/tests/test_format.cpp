// space-file parsing, rendering, and the round-trip contract.

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gtop;

namespace {
const char* example1_text = R"(# the first worked example
space Example1
points a b c
open {}
open {a}
open {b}
open {a b}
open {a b c}
gamma rule intclosure
end
)";
}  // namespace

TEST_CASE("parsing the Example-1 file yields the Example-1 space") {
    const SpaceFile f = parse_space_file(example1_text);
    CHECK(f.space.name == "Example1");
    CHECK(f.space.carrier() == 3);
    CHECK(f.space.opens().size() == 5);
    REQUIRE(f.rule.has_value());
    CHECK(*f.rule == RuleExpr::int_closure());
    CHECK(f.space.gamma == example1_space().gamma);
    CHECK(f.space.topology == example1_space().topology);
}

TEST_CASE("explicit tables and conditional rules parse") {
    const SpaceFile f = parse_space_file(R"(space T
points a b
open {}
open {a}
open {a b}
gamma {} = {}
gamma {a} = {a b}
gamma {a b} = {a b}
end
)");
    CHECK_FALSE(f.rule.has_value());
    CHECK(f.space.gamma_of(SubSet::of(2, {0})) == SubSet::full_set(2));

    const SpaceFile g = parse_space_file(R"(space S
points a b c
open {}
open {a}
open {b c}
open {a b c}
gamma rule if-contains b then identity else closure
end
)");
    REQUIRE(g.rule.has_value());
    CHECK(*g.rule ==
          RuleExpr::if_contains(1, RuleExpr::identity(), RuleExpr::closure_rule()));
    CHECK(g.space.gamma == regular_example_space().gamma);
}

TEST_CASE("diagnostics carry line numbers and error kinds") {
    // unknown point in an open
    try {
        parse_space_file("space T\npoints a b c\nopen {}\nopen {a d}\nopen {a b c}\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.code == ParseError::Code::UnknownPoint);
        CHECK(e.line == 4);
    }

    // missing gamma entry for X
    try {
        parse_space_file(
            "space T\npoints a b\nopen {}\nopen {a b}\ngamma {} = {}\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.code == ParseError::Code::OperationInvalid);
        CHECK(e.line == 6);
    }

    // topology axiom failure is reported at 'end'
    try {
        parse_space_file(
            "space T\npoints a b\nopen {}\nopen {a}\nopen {b}\ngamma rule identity\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.code == ParseError::Code::TopologyInvalid);
        CHECK(e.line == 7);
    }

    // duplicate table entry for the same open
    try {
        parse_space_file(
            "space T\npoints a\nopen {}\nopen {a}\ngamma {} = {}\ngamma {} = {a}\n"
            "gamma {a} = {a}\nend\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.code == ParseError::Code::OperationInvalid);
    }

    CHECK_THROWS_AS(parse_space_file("space T\npoints a\nopen {a\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_space_file("space T\npoints a\nopen {a}\nopen {}\n"), ParseError);
    CHECK_THROWS_AS(parse_space_file("points a\nopen {a}\nend\n"), ParseError);
    CHECK_THROWS_AS(
        parse_space_file("space T\npoints a\nopen {}\nopen {a}\ngamma rule bogus\nend\n"),
        ParseError);
}

TEST_CASE("render/parse round-trip") {
    const char* files[] = {
        example1_text,
        "space S\npoints a b c\nopen {}\nopen {a}\nopen {b c}\nopen {a b c}\n"
        "gamma rule if-contains b then identity else closure\nend\n",
        "space T\npoints a b\nopen {}\nopen {a}\nopen {a b}\n"
        "gamma {} = {b}\ngamma {a} = {a b}\ngamma {a b} = {a b}\nend\n",
    };
    for (const char* text : files) {
        const SpaceFile f = parse_space_file(text);
        const SpaceFile g = parse_space_file(render_space_file(f));
        CHECK(f == g);
        CHECK(render_space_file(f) == render_space_file(g));
    }
}

TEST_CASE("round-trip across every catalog space on two points") {
    for (const Topology& t : enumerate_topologies(2)) {
        for (const RuleExpr& rule : rule_catalog(2)) {
            const SpaceFile f{make_space(t, rule, "S"), rule};
            CHECK(parse_space_file(render_space_file(f)) == f);
        }
        // explicit-table form
        const SpaceFile f{make_space(t, RuleExpr::closure_rule(), "S"), std::nullopt};
        CHECK(parse_space_file(render_space_file(f)) == f);
    }
}
