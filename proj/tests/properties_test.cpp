#include <gtest/gtest.h>

#include "pirank/properties.hpp"

namespace pirank {
namespace {

using fixtures::fig9;

PropertyReport check(const ArgumentationFramework& af, Semantics s, PowerIndex p, Property prop) {
  return check_property(af, s, p, prop);
}

TEST(Property, NamesRoundTrip) {
  for (auto p : kAllProperties) EXPECT_EQ(parse_property(to_string(p)), p);
  EXPECT_FALSE(parse_property("monotony").has_value());
}

TEST(CheckProperty, TotalityAndAbstractionOnFixture) {
  for (auto s : kAllSemantics)
    for (auto p : kAllIndexes) {
      EXPECT_EQ(check(fig9(), s, p, Property::totality).verdict, Verdict::holds);
      EXPECT_EQ(check(fig9(), s, p, Property::abstraction).verdict, Verdict::holds);
    }
}

TEST(CheckProperty, ExplicitIsomorphism) {
  CheckOptions options;
  options.isomorphism = Isomorphism{{{"a", "e"}, {"b", "d"}, {"c", "c"}, {"d", "b"}, {"e", "a"}}};
  const auto r = check_property(fig9(), Semantics::complete, PowerIndex::shapley, Property::abstraction, options);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(CheckProperty, SelfContradiction) {
  const ArgumentationFramework af({"x", "y"}, {{"y", "y"}});
  EXPECT_EQ(check(af, Semantics::conflict_free, PowerIndex::shapley, Property::self_contradiction).verdict,
            Verdict::holds);
}

TEST(CheckProperty, NonAttackedEquivalence) {
  const ArgumentationFramework af({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  for (auto s : {Semantics::complete, Semantics::preferred, Semantics::stable})
    for (auto p : kAllIndexes)
      EXPECT_EQ(check(af, s, p, Property::non_attacked_equivalence).verdict, Verdict::holds);
}

TEST(CheckProperty, AcceptancePrecedenceOnFixture) {
  for (auto s : {Semantics::complete, Semantics::preferred, Semantics::stable})
    for (auto p : {PowerIndex::shapley, PowerIndex::banzhaf, PowerIndex::johnston}) {
      EXPECT_EQ(check(fig9(), s, p, Property::scp).verdict, Verdict::holds);
      EXPECT_EQ(check(fig9(), s, p, Property::crp).verdict, Verdict::holds);
    }
}

TEST(CheckProperty, DegenerateIsSkipped) {
  const ArgumentationFramework loop({"x"}, {{"x", "x"}});
  const auto r = check(loop, Semantics::stable, PowerIndex::shapley, Property::totality);
  EXPECT_EQ(r.verdict, Verdict::skipped);
  EXPECT_EQ(to_string(r.verdict), "skipped-degenerate");
  EXPECT_FALSE(reverify(r));
}

// Found by search: within the 3-cycle a0 and a2 tie, but once the isolated
// self-attacker joins, a2's out-score moves and a0 pulls ahead.
TEST(CheckProperty, IndependenceWitness) {
  const auto af = parse_apx(
      "arg(a0). arg(a1). arg(a2). arg(b0)."
      "att(a0,a1). att(a1,a2). att(a2,a0). att(a2,a1). att(b0,b0).");
  const auto component = connected_components(af)[0];
  const auto local = rank_framework(component, Semantics::conflict_free, PowerIndex::shapley);
  EXPECT_TRUE(local.ranking.equivalent("a0", "a2"));
  const auto whole = rank_framework(af, Semantics::conflict_free, PowerIndex::shapley);
  EXPECT_TRUE(whole.ranking.strictly_better("a0", "a2"));

  const auto r = check(af, Semantics::conflict_free, PowerIndex::shapley, Property::independence);
  ASSERT_EQ(r.verdict, Verdict::violated);
  EXPECT_EQ(r.witness->pair, (std::pair<std::string, std::string>{"a2", "a0"}));
  EXPECT_TRUE(reverify(r));
}

// An isolated argument never lands in an out-set, so it penalises every
// out-coalition containing it and shifts the others' out-scores unevenly.
TEST(CheckProperty, IndependenceIsolatedArgument) {
  const auto component = parse_apx("arg(a). arg(b). arg(c). att(b,a). att(b,c). att(c,b).");
  const auto af = disjoint_union(component, ArgumentationFramework({"xa"}, {}));
  const auto local = rank_framework(component, Semantics::admissible, PowerIndex::shapley, CompareMode::exact);
  EXPECT_EQ(render_ranking(local.ranking), "c > a = b");
  const auto whole = rank_framework(af, Semantics::admissible, PowerIndex::shapley, CompareMode::exact);
  EXPECT_EQ(render_ranking(whole.ranking), "xa > c > a > b");
  EXPECT_EQ(whole.scores[1].pi_out, ExactValue(-1, 12));

  const auto r = check(af, Semantics::admissible, PowerIndex::shapley, Property::independence);
  ASSERT_EQ(r.verdict, Verdict::violated);
  EXPECT_TRUE(reverify(r));
}

TEST(GroupCompare, Cases) {
  const auto af = fig9();
  const auto r = rank_framework(af, Semantics::complete, PowerIndex::shapley).ranking;  // a = c > d = e > b
  EXPECT_EQ(group_compare(af, r, af.set({"a", "d"}), af.set({"c", "e"})), GroupComparison::geq);
  EXPECT_EQ(group_compare(af, r, af.set({"a", "d"}), af.set({"e", "b"})), GroupComparison::strict);
  EXPECT_EQ(group_compare(af, r, af.set({"a", "b"}), af.set({"d"})), GroupComparison::strict);
  EXPECT_EQ(group_compare(af, r, af.set({"b"}), af.set({"d"})), GroupComparison::neither);
  EXPECT_EQ(group_compare(af, r, af.set({"a"}), af.set({"c", "d"})), GroupComparison::neither);
  EXPECT_EQ(group_compare(af, r, af.empty_set(), af.empty_set()), GroupComparison::geq);
  EXPECT_EQ(to_string(GroupComparison::strict), "strict");
}

TEST(Search, FindsCardinalityPrecedenceViolation) {
  SearchOptions options;
  options.samples = 2000;
  const auto out = search_counterexample(Property::cardinality_precedence, Semantics::conflict_free,
                                         PowerIndex::shapley, options);
  ASSERT_EQ(out.outcome, SearchOutcome::violated);
  ASSERT_TRUE(out.report && out.report->witness);
  EXPECT_TRUE(reverify(*out.report));
  const auto& w = *out.report->witness;
  const auto& af = w.framework;
  EXPECT_LT(popcount(af.attackers_mask(af.index(w.pair.first))),
            popcount(af.attackers_mask(af.index(w.pair.second))));
}

TEST(Search, TotalityHoldsOnSmallSweep) {
  SearchOptions options;
  options.max_args = 4;
  options.samples = 50;
  const auto out = search_counterexample(Property::totality, Semantics::complete, PowerIndex::banzhaf, options);
  EXPECT_EQ(out.outcome, SearchOutcome::holds_on_all_tested);
  EXPECT_GT(out.tested, 0u);
}

TEST(Search, SelfContradictionHoldsForConflictFree) {
  SearchOptions options;
  options.max_args = 5;
  options.samples = 200;
  const auto out = search_counterexample(Property::self_contradiction, Semantics::conflict_free,
                                         PowerIndex::shapley, options);
  EXPECT_EQ(out.outcome, SearchOutcome::holds_on_all_tested);
}

TEST(Search, BudgetAndBounds) {
  SearchOptions options;
  options.deadline = Deadline::after(std::chrono::milliseconds(0));
  EXPECT_EQ(search_counterexample(Property::totality, Semantics::complete, PowerIndex::shapley, options).outcome,
            SearchOutcome::budget_exhausted);
  SearchOptions too_big;
  too_big.max_args = 8;
  EXPECT_THROW(search_counterexample(Property::totality, Semantics::complete, PowerIndex::shapley, too_big),
               InvalidInput);
}

TEST(Search, SeededRunsRepeat) {
  SearchOptions options;
  options.samples = 300;
  options.seed = 42;
  const auto a = search_counterexample(Property::quality_precedence, Semantics::complete, PowerIndex::shapley,
                                       options);
  const auto b = search_counterexample(Property::quality_precedence, Semantics::complete, PowerIndex::shapley,
                                       options);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.tested, b.tested);
  if (a.report && b.report) {
    EXPECT_EQ(to_json(*a.report), to_json(*b.report));
  }
}

TEST(ToJson, Layout) {
  const auto r = check(fig9(), Semantics::complete, PowerIndex::shapley, Property::totality);
  EXPECT_EQ(to_json(r).dump(),
            R"({"property":"totality","semantics":"complete","index":"shapley","verdict":"holds-on-instance","witness":null})");
  const ArgumentationFramework af({"x", "y"}, {{"y", "x"}});
  CheckOptions options;
  options.isomorphism = Isomorphism{{{"x", "y"}, {"y", "x"}}};
  const auto abs = check_property(af, Semantics::complete, PowerIndex::shapley, Property::abstraction, options);
  EXPECT_EQ(abs.verdict, Verdict::holds);
}

}  // namespace
}  // namespace pirank
