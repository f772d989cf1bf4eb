#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pirank/generate.hpp"
#include "pirank/semantics.hpp"

namespace pirank {
namespace {

using fixtures::fig9;

std::string listing(const ArgumentationFramework& af, Semantics s) { return render_family(af, enumerate(af, s)); }

TEST(Enumerate, FixtureFamilies) {
  const auto af = fig9();
  EXPECT_EQ(listing(af, Semantics::conflict_free),
            "{},{a},{b},{c},{d},{e},{a,c},{a,d},{a,e},{c,d},{c,e},{a,c,d},{a,c,e}");
  EXPECT_EQ(listing(af, Semantics::admissible), "{},{a},{d},{e},{a,c},{a,d},{a,e},{c,d},{c,e},{a,c,d},{a,c,e}");
  EXPECT_EQ(listing(af, Semantics::complete), "{a,c},{a,c,d},{a,c,e}");
  EXPECT_EQ(listing(af, Semantics::preferred), "{a,c,d},{a,c,e}");
  EXPECT_EQ(listing(af, Semantics::stable), "{a,c,d},{a,c,e}");
  EXPECT_EQ(listing(af, Semantics::grounded), "{a,c}");
}

TEST(Enumerate, RebuttalFixtures) {
  EXPECT_EQ(listing(fixtures::f8a(), Semantics::admissible), "{},{a},{c},{a,c}");
  EXPECT_EQ(listing(fixtures::f8a(), Semantics::preferred), "{a,c}");
  EXPECT_EQ(listing(fixtures::f8b(), Semantics::admissible), "{},{b},{c},{a,c}");
  EXPECT_EQ(listing(fixtures::f8b(), Semantics::preferred), "{b},{a,c}");
}

TEST(Enumerate, SelfLoopHasNoStableExtension) {
  const ArgumentationFramework loop({"x"}, {{"x", "x"}});
  EXPECT_TRUE(enumerate(loop, Semantics::stable).empty());
  EXPECT_EQ(listing(loop, Semantics::conflict_free), "{}");
}

TEST(Enumerate, SizeLimitAndDeadline) {
  std::vector<std::string> args;
  for (int i = 0; i < 22; ++i) args.push_back("x" + std::to_string(i));
  const ArgumentationFramework big(args, {}, 22);
  EXPECT_THROW(enumerate(big, Semantics::conflict_free, Deadline::after(std::chrono::milliseconds(0))),
               BudgetExceeded);
}

TEST(LabellingFromInset, Cases) {
  const auto af = fig9();
  const auto grounded = labelling_from_inset(af, af.set({"a", "c"}));
  EXPECT_EQ(grounded.in_set(), af.set({"a", "c"}));
  EXPECT_EQ(grounded.out_set(), af.set({"b"}));
  EXPECT_EQ(grounded.undec_set(), af.set({"d", "e"}));

  const auto none = labelling_from_inset(af, af.empty_set());
  EXPECT_EQ(none.undec_set(), af.all());

  const auto stable = labelling_from_inset(af, af.set({"a", "c", "d"}));
  EXPECT_EQ(stable.out_set(), af.set({"b", "e"}));
  EXPECT_TRUE(stable.undec_set().empty());
}

TEST(Satisfies, Cases) {
  const auto af = fig9();
  EXPECT_TRUE(satisfies(af, af.set({"c", "d"}), Semantics::admissible));
  EXPECT_FALSE(satisfies(af, af.set({"b"}), Semantics::admissible));
  EXPECT_TRUE(satisfies(af, af.empty_set(), Semantics::conflict_free));
  EXPECT_TRUE(satisfies(af, af.set({"a", "c", "e"}), Semantics::preferred));
  EXPECT_FALSE(satisfies(af, af.set({"a", "c"}), Semantics::preferred));
  EXPECT_TRUE(satisfies(af, af.set({"a", "c"}), Semantics::grounded));
}

TEST(Grounded, Cases) {
  const auto af = fig9();
  EXPECT_EQ(grounded_fixpoint(af), af.set({"a", "c"}));
  const ArgumentationFramework mutual({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_TRUE(grounded_fixpoint(mutual).empty());
  const auto f8a = fixtures::f8a();
  EXPECT_EQ(grounded_fixpoint(f8a), f8a.set({"a", "c"}));
}

TEST(Acceptance, Cases) {
  const auto af = fig9();
  EXPECT_EQ(acceptance_status(af, Semantics::preferred, "a"), Acceptance::sceptical);
  EXPECT_EQ(acceptance_status(af, Semantics::preferred, "d"), Acceptance::credulous_only);
  EXPECT_EQ(acceptance_status(af, Semantics::complete, "b"), Acceptance::rejected);
  const ArgumentationFramework loop({"x"}, {{"x", "x"}});
  EXPECT_EQ(acceptance_status(loop, Semantics::stable, "x"), Acceptance::degenerate);
}

TEST(OutFamily, Cases) {
  const auto af = fig9();
  EXPECT_EQ(render_family(af, out_family(af, enumerate(af, Semantics::complete))), "{b},{b,d},{b,e}");
  EXPECT_EQ(render_family(af, out_family(af, enumerate(af, Semantics::admissible))), "{},{b},{b,d},{b,e}");
  const ExtensionFamily just_empty(af.frame_id(), {0});
  EXPECT_EQ(render_family(af, out_family(af, just_empty)), "{}");
}

TEST(Enumerate, OracleEquivalenceUpToFour) {
  for_each_digraph(4, /*up_to_naming=*/false, [](const ArgumentationFramework& af) {
    for (auto s : kAllSemantics) {
      const auto family = enumerate(af, s);
      const std::set<std::uint64_t> got(family.masks().begin(), family.masks().end());
      ASSERT_EQ(got, oracle::family(af, s)) << serialize(af, Format::apx) << " " << to_string(s);
    }
  });
}

TEST(Enumerate, StructuralInvariants) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const auto af = random_framework(rng, 1, 7);
    const auto cf = enumerate(af, Semantics::conflict_free);
    const auto adm = enumerate(af, Semantics::admissible);
    const auto com = enumerate(af, Semantics::complete);
    const auto pre = enumerate(af, Semantics::preferred);
    const auto stb = enumerate(af, Semantics::stable);
    auto included = [](const ExtensionFamily& small, const ExtensionFamily& large) {
      return std::all_of(small.masks().begin(), small.masks().end(), [&](Mask m) { return large.contains(m); });
    };
    EXPECT_TRUE(included(stb, pre));
    EXPECT_TRUE(included(pre, com));
    EXPECT_TRUE(included(com, adm));
    EXPECT_TRUE(included(adm, cf));

    const Mask g = grounded_fixpoint(af).bits();
    EXPECT_TRUE(com.contains(g));
    for (Mask m : com.masks()) EXPECT_EQ(g & ~m, 0u);
    for (Mask p : pre.masks())
      for (Mask m : com.masks()) EXPECT_FALSE(m != p && (p & ~m) == 0);
    for (Mask e : stb.masks()) EXPECT_EQ(e | attacked_by(af, e), af.full_mask());

    // Brute-force filtering with the public predicate.
    for (auto s : {Semantics::conflict_free, Semantics::admissible, Semantics::complete, Semantics::stable}) {
      std::vector<Mask> filtered;
      for (Mask m = 0; m <= af.full_mask(); ++m)
        if (satisfies(af, af.set(m), s)) filtered.push_back(m);
      EXPECT_EQ(ExtensionFamily(af.frame_id(), filtered), enumerate(af, s));
    }

    for (auto s : {Semantics::complete, Semantics::grounded, Semantics::preferred, Semantics::stable})
      for (Mask m : enumerate(af, s).masks())
        EXPECT_TRUE(is_reinstatement_labelling(af, labelling_from_inset(af, af.set(m))));
  }
}

TEST(Enumerate, CanonicalOrder) {
  const auto af = fig9();
  const auto masks = enumerate(af, Semantics::conflict_free).masks();
  for (std::size_t k = 1; k < masks.size(); ++k) EXPECT_TRUE(canonical_less(masks[k - 1], masks[k]));
}

}  // namespace
}  // namespace pirank
