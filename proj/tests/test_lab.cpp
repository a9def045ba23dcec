// theorem lab: atom/implication parsing, scan accounting, determinism across
// worker counts, counterexample re-validation, paper-example reproduction.

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace gtop;

namespace {
long catalog_instances(int max_points) {
    long total = 0;
    for (int n = 1; n <= max_points; ++n) {
        total += static_cast<long>(enumerate_topologies(n).size()) *
                 static_cast<long>(rule_catalog(n).size());
    }
    return total;
}
}  // namespace

TEST_CASE("atom and implication parsing") {
    auto atom = PropertyAtom::parse("gs-regular(gamma)", ClosedMode::TauClosed);
    REQUIRE(atom.has_value());
    CHECK(atom->kind == PropertyAtom::Kind::GsRegular);
    CHECK(atom->mode == ClosedMode::GammaClosed);

    atom = PropertyAtom::parse(" gs-normal ", ClosedMode::GammaClosed);
    REQUIRE(atom.has_value());
    CHECK(atom->mode == ClosedMode::GammaClosed);
    CHECK(atom->name() == "gs-normal(gamma)");

    CHECK_FALSE(PropertyAtom::parse("no-such-atom", ClosedMode::TauClosed).has_value());

    auto imp = Implication::parse("gamma-t2 & regular-op => gs-normal(tau)", ClosedMode::TauClosed);
    REQUIRE(imp.has_value());
    CHECK(imp->hypotheses.size() == 2);
    CHECK(imp->name() == "gamma-t2 & regular-op => gs-normal(tau)");

    CHECK_FALSE(Implication::parse("gamma-t2", ClosedMode::TauClosed).has_value());
    CHECK_FALSE(Implication::parse("=> gamma-t1", ClosedMode::TauClosed).has_value());
    CHECK_FALSE(Implication::parse("a => b => c", ClosedMode::TauClosed).has_value());
}

TEST_CASE("check_implication: holds, accounting, and witnesses") {
    Scope scope;
    scope.max_points = 3;

    auto imp = Implication::parse("strictly-regular-op => regular-op", ClosedMode::TauClosed);
    LabRow row = check_implication(*imp, scope);
    CHECK(row.holds());
    CHECK(row.total() == catalog_instances(3));

    // indiscrete spaces are regular but not gamma-T1
    scope.max_points = 2;
    imp = Implication::parse("regular-op => gamma-t1", ClosedMode::TauClosed);
    row = check_implication(*imp, scope);
    REQUIRE_FALSE(row.holds());
    CHECK(row.total() == catalog_instances(2));
    CHECK(revalidate(row));
}

TEST_CASE("gamma-t1 is equivalent to all singletons being gamma-closed") {
    Scope scope;
    scope.max_points = 3;
    auto fwd =
        Implication::parse("gamma-t1 => all-singletons-gamma-closed", ClosedMode::TauClosed);
    auto rev =
        Implication::parse("all-singletons-gamma-closed => gamma-t1", ClosedMode::TauClosed);
    CHECK(check_implication(*fwd, scope).holds());
    CHECK(check_implication(*rev, scope).holds());
}

TEST_CASE("scan determinism across worker counts") {
    auto imp = Implication::parse("gamma-t2 => gamma-t1", ClosedMode::TauClosed);
    Scope s1;
    s1.max_points = 3;
    s1.workers = 1;
    Scope s4 = s1;
    s4.workers = 4;

    const LabRow r1 = check_implication(*imp, s1);
    const LabRow r4 = check_implication(*imp, s4);
    CHECK(r1.holds());
    CHECK(r1.scanned == r4.scanned);
    CHECK(r1.skipped == r4.skipped);

    // a failing scan picks the same canonical-first counterexample
    auto bad = Implication::parse("regular-op => gamma-t2", ClosedMode::TauClosed);
    const LabRow b1 = check_implication(*bad, s1);
    const LabRow b4 = check_implication(*bad, s4);
    REQUIRE_FALSE(b1.holds());
    REQUIRE_FALSE(b4.holds());
    CHECK(b1.cex->space_desc == b4.cex->space_desc);
    CHECK(b1.cex->conclusion_verdict.witness == b4.cex->conclusion_verdict.witness);
}

TEST_CASE("all-tables source is gated and scans the full product") {
    Scope scope;
    scope.max_points = 2;
    scope.source = OperationSource::AllTables;

    auto imp = Implication::parse("strictly-regular-op => regular-op", ClosedMode::TauClosed);
    LabRow row = check_implication(*imp, scope);
    CHECK(row.holds());
    // n=1: gamma(∅) ∈ {∅, X} gives two tables; n=2: per-topology products
    CHECK(row.total() == 2 + (4 + 8 + 8 + 16));

    scope.max_points = 3;
    CHECK_THROWS_AS(check_implication(*imp, scope), ScopeError);
}

TEST_CASE("theorem smoke scans on two points") {
    Scope scope;
    scope.max_points = 2;

    CHECK(check_theorem_1(scope, false).holds());
    CHECK(check_theorem_1(scope, true).holds());
    CHECK(check_theorem_2(scope).holds());
    CHECK(check_theorem_5(scope, ClosedMode::TauClosed).holds());
    CHECK(check_theorem_7(scope, ClosedMode::TauClosed).holds());

    // thm3 under max-trace with gamma-closed sets already fails on 2 points:
    // the Sierpinski space with closure, Y = {b}
    const LabRow t3 = check_theorem_3(scope, TraceConvention::MaxTrace, ClosedMode::GammaClosed);
    REQUIRE_FALSE(t3.holds());
    CHECK(revalidate(t3));
    CHECK(t3.cex->carrier == 2);

    const LabRow t6 = check_theorem_6(scope, TraceConvention::MaxTrace, ClosedMode::TauClosed);
    REQUIRE_FALSE(t6.holds());
    CHECK(revalidate(t6));
}

TEST_CASE("theorem-5 lemma is refuted by the Example-2 configuration") {
    Scope scope;
    scope.max_points = 3;
    const LabRow lemma = check_theorem_5_lemma(scope);
    REQUIRE_FALSE(lemma.holds());
    CHECK(revalidate(lemma));

    // the recorded space is strictly regular yet has disjoint opens with
    // intersecting gamma-values; Example 2 is such a configuration
    const Space ex2 = example2_space();
    CHECK(is_strictly_regular_operation(ex2).holds);
    CHECK((ex2.gamma_of(SubSet::of(3, {0})) & ex2.gamma_of(SubSet::of(3, {1}))) ==
          SubSet::of(3, {2}));
}

TEST_CASE("worked examples all reproduce") {
    const LabReport report = run_paper_examples();
    CHECK(report.rows.size() == 11);
    for (const LabRow& row : report.rows) {
        INFO(row.name);
        CHECK(row.holds());
    }
    // the divergence row carries the flag text
    const LabRow& flag = report.rows.back();
    CHECK(flag.name == "normal-example/claim-divergence-flag");
    CHECK(flag.note.find("MODE-DEPENDENT") != std::string::npos);
}

TEST_CASE("report rendering is stable and strips timings on demand") {
    Scope scope;
    scope.max_points = 2;
    auto imp = Implication::parse("gamma-t2 => gamma-t1", ClosedMode::TauClosed);
    LabReport report;
    report.title = "t";
    report.rows.push_back(check_implication(*imp, scope));

    const std::string with_ms = report.render(true);
    const std::string without_ms = report.render(false);
    CHECK(with_ms != without_ms);
    CHECK(without_ms.find("scanned=") != std::string::npos);
    // the ms-free rendering of two runs is identical
    LabReport again;
    again.title = "t";
    again.rows.push_back(check_implication(*imp, scope));
    CHECK(again.render(false) == without_ms);
}
