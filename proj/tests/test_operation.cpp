// gamma-ops: rule evaluation, table validation, and the three operation
// property predicates.

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gtop;

namespace {
const Topology& example1_topology() {
    static const Topology t = Topology::of(3, {{}, {0}, {1}, {0, 1}, {0, 1, 2}});
    return t;
}
}  // namespace

TEST_CASE("build_operation evaluates rules through closure/interior") {
    const Topology& t = example1_topology();

    const OperationTable intcl = build_operation(t, RuleExpr::int_closure());
    // cl({a,b}) = X, int(X) = X, confirmed against the oracles
    const SubSet ab = SubSet::of(3, {0, 1});
    CHECK(testutil::oracle_closure(t, ab) == SubSet::full_set(3));
    CHECK(intcl.value_of(ab) == SubSet::full_set(3));
    CHECK(intcl.value_of(SubSet::of(3, {0})) == SubSet::of(3, {0}));

    const OperationTable id = build_operation(t, RuleExpr::identity());
    for (const auto& [open, value] : id.entries()) CHECK(open == value);

    // clopen-partition topology with the conditional rule: {a} is closed, so the
    // else-branch closure fixes it; b ∈ {b,c} selects identity
    const Topology t2 = Topology::of(3, {{}, {0}, {1, 2}, {0, 1, 2}});
    const OperationTable cond = build_operation(
        t2, RuleExpr::if_contains(1, RuleExpr::identity(), RuleExpr::closure_rule()));
    CHECK(cond.value_of(SubSet::of(3, {0})) == SubSet::of(3, {0}));
    CHECK(cond.value_of(SubSet::of(3, {1, 2})) == SubSet::of(3, {1, 2}));

    // deterministic rebuild
    CHECK(build_operation(t2, RuleExpr::if_contains(1, RuleExpr::identity(),
                                                    RuleExpr::closure_rule())) == cond);
}

TEST_CASE("rule catalog tables are always expansive") {
    for (int n = 1; n <= 3; ++n) {
        for (const Topology& t : enumerate_topologies(n)) {
            for (const RuleExpr& rule : rule_catalog(n)) {
                const OperationTable table = build_operation(t, rule);
                for (const auto& [open, value] : table.entries()) CHECK(open.subset_of(value));
            }
        }
    }
}

TEST_CASE("rule expression guards") {
    CHECK(RuleExpr::identity().depth() == 0);
    RuleExpr nested = RuleExpr::if_contains(
        0, RuleExpr::if_contains(0, RuleExpr::if_contains(0, RuleExpr::identity(),
                                                          RuleExpr::closure_rule()),
                                 RuleExpr::identity()),
        RuleExpr::identity());
    CHECK(nested.depth() == 3);
    RuleExpr four = RuleExpr::if_contains(1, nested, RuleExpr::identity());
    CHECK(four.depth() == 4);
    CHECK_THROWS_AS(RuleExpr::if_contains(0, four, RuleExpr::identity()), std::invalid_argument);

    CHECK(four.to_string(default_point_names(2)).starts_with("if-contains b then if-contains a"));
}

TEST_CASE("validate_operation accepts Example 1 and rejects broken tables") {
    const Topology& t = example1_topology();
    const auto set = [](std::initializer_list<int> pts) { return SubSet::of(3, pts); };

    // the full Example-1 intcl table, written out explicitly
    CHECK_NOTHROW(validate_operation(t, {{set({}), set({})},
                                         {set({0}), set({0})},
                                         {set({1}), set({1})},
                                         {set({0, 1}), set({0, 1, 2})},
                                         {set({0, 1, 2}), set({0, 1, 2})}}));

    try {
        validate_operation(t, {{set({}), set({})},
                               {set({0}), set({})},
                               {set({1}), set({1})},
                               {set({0, 1}), set({0, 1})},
                               {set({0, 1, 2}), set({0, 1, 2})}});
        FAIL("expected OperationError");
    } catch (const OperationError& e) {
        CHECK(e.code == OperationError::Code::NotExpansive);
        CHECK(e.witness == set({0}));
    }

    try {
        validate_operation(t, {{set({}), set({})},
                               {set({0}), set({0})},
                               {set({1}), set({1})},
                               {set({0, 1}), set({0, 1})}});
        FAIL("expected OperationError");
    } catch (const OperationError& e) {
        CHECK(e.code == OperationError::Code::MissingEntry);
        CHECK(e.witness == set({0, 1, 2}));
    }

    try {
        validate_operation(t, {{set({}), set({})},
                               {set({0}), set({0})},
                               {set({1}), set({1})},
                               {set({2}), set({2})},
                               {set({0, 1}), set({0, 1})},
                               {set({0, 1, 2}), set({0, 1, 2})}});
        FAIL("expected OperationError");
    } catch (const OperationError& e) {
        CHECK(e.code == OperationError::Code::ExtraEntry);
        CHECK(e.witness == set({2}));
    }

    // gamma is defined on opens only
    const OperationTable table = build_operation(t, RuleExpr::identity());
    CHECK_THROWS_AS(table.value_of(set({2})), std::out_of_range);
}

TEST_CASE("operation property predicates on the worked examples") {
    const Space ex1 = example1_space();
    const Space ex2 = example2_space();

    CHECK(is_regular_operation(ex1).holds);
    CHECK(is_strictly_regular_operation(ex1).holds);
    CHECK(is_open_operation(ex1).holds);

    CHECK(is_regular_operation(ex2).holds);
    CHECK(is_strictly_regular_operation(ex2).holds);
    const Verdict open2 = is_open_operation(ex2);
    REQUIRE_FALSE(open2.holds);
    CHECK(open2.witness->given.front() == Binding::set("V", SubSet::of(3, {0})));
}

TEST_CASE("explicit table breaking regularity, with the expected witness") {
    const Topology& t = example1_topology();
    const auto set = [](std::initializer_list<int> pts) { return SubSet::of(3, pts); };
    const OperationTable table = validate_operation(t, {{set({}), set({})},
                                                        {set({0}), set({0, 2})},
                                                        {set({1}), set({1})},
                                                        {set({0, 1}), set({0, 1})},
                                                        {set({0, 1, 2}), set({0, 1, 2})}});
    const Space s(t, table, "Ex1-explicit");

    const Verdict reg = is_regular_operation(s);
    REQUIRE_FALSE(reg.holds);
    // U^γ ∩ V^γ = {a,c} ∩ {a,b} = {a}; no W ∋ a has W^γ ⊆ {a}
    CHECK(reg.witness->given == std::vector<Binding>{Binding::point("x", 0),
                                                     Binding::set("U", set({0})),
                                                     Binding::set("V", set({0, 1}))});
    CHECK_FALSE(is_strictly_regular_operation(s).holds);
    CHECK(testutil::revalidate_regularity<false>(s, reg));
}

TEST_CASE("strict regularity implies regularity across the n<=3 catalog") {
    for (int n = 1; n <= 3; ++n) {
        for (const Space& s : testutil::catalog_spaces(n)) {
            if (is_strictly_regular_operation(s).holds) {
                CHECK(is_regular_operation(s).holds);
            }
        }
    }
}

TEST_CASE("identity rule: gamma values are opens, so the operation is gamma-open") {
    for (const Topology& t : enumerate_topologies(3)) {
        const Space s = make_space(t, RuleExpr::identity());
        CHECK(is_open_operation(s).holds);
    }
}

TEST_CASE("all_expansive_tables enumerates the full product on 2 points") {
    const auto topos = enumerate_topologies(2);
    const std::size_t expected[] = {4, 8, 8, 16};
    for (std::size_t i = 0; i < topos.size(); ++i) {
        const auto tables = all_expansive_tables(topos[i]);
        CHECK(tables.size() == expected[i]);
        for (const OperationTable& table : tables) {
            for (const auto& [open, value] : table.entries()) CHECK(open.subset_of(value));
        }
        // pairwise distinct
        for (std::size_t a = 0; a < tables.size(); ++a) {
            for (std::size_t b = a + 1; b < tables.size(); ++b) CHECK(!(tables[a] == tables[b]));
        }
    }
}
