#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace subseq;
using testing_util::F;
using testing_util::S;

namespace {

constexpr Calculus G = Calculus::GWFN2;

Derivation proof_of(std::string_view s) {
  auto out = prove(S(s));
  if (!out.proved) throw std::logic_error("fixture not provable: " + std::string(s));
  return *out.proof;
}

}  // namespace

TEST(Weaken, IdLeafAbsorbsContext) {
  Derivation d = weaken(make_leaf(S("p |- p"), G), Side::Left, F("q"));
  EXPECT_TRUE(multiset_equal(d.conclusion, S("q, p |- p")));
  EXPECT_EQ(d.height(), 0);
  EXPECT_TRUE(accepts(d, G));
}

TEST(Weaken, ContextDiscardingRuleOnlyEditsConclusion) {
  Derivation d = proof_of("|- p -> p");
  ASSERT_EQ(d.rule, RuleId::RStrict);
  Derivation w = weaken(d, Side::Right, F("r"));
  EXPECT_TRUE(multiset_equal(w.conclusion, S("|- r, p -> p")));
  EXPECT_TRUE(multiset_equal(w.premises[0].conclusion, S("p |- p")));
  EXPECT_TRUE(accepts(w, G));
}

TEST(Weaken, PropagatesThroughContextSharingRules) {
  Derivation d = proof_of("p & q, r |- q");
  ASSERT_EQ(d.rule, RuleId::LAnd);
  Derivation w = weaken(d, Side::Left, F("s"));
  EXPECT_EQ(w.height(), d.height());
  EXPECT_TRUE(accepts(w, G));
  EXPECT_EQ(count_formula(w.premises[0].conclusion.ante, F("s")), 1u);
}

TEST(Weaken, SingleSuccedentRejectsRightWeakening) {
  Derivation d = make_leaf(S("p |- p"), Calculus::GWFS);
  EXPECT_THROW(weaken(d, Side::Right, F("q")), TransformError);
  EXPECT_TRUE(accepts(weaken(d, Side::Left, F("q")), Calculus::GWFS));
}

TEST(Contract, Leaf) {
  Derivation d = contract(make_leaf(S("p, p |- p"), G), G, Side::Left, F("p"));
  EXPECT_TRUE(multiset_equal(d.conclusion, S("p |- p")));
  EXPECT_THROW(contract(d, G, Side::Left, F("p")), TransformError);
}

TEST(Contract, LRStrictWithDuplicateOnTheLeft) {
  Derivation base = proof_of("c -> e |- c & s -> e");
  Derivation d = weaken(base, Side::Left, F("c -> e"));
  Derivation r = contract(d, G, Side::Left, F("c -> e"));
  EXPECT_TRUE(multiset_equal(r.conclusion, S("c -> e |- c & s -> e")));
  EXPECT_LE(r.height(), d.height());
  EXPECT_TRUE(accepts(r, G));
}

TEST(Contract, LRStrictWithDuplicateOnTheRight) {
  Derivation base = proof_of("p -> q |- p -> q");
  ASSERT_EQ(base.rule, RuleId::LRStrict);
  Derivation d = weaken(base, Side::Right, F("p -> q"));
  Derivation r = contract(d, G, Side::Right, F("p -> q"));
  EXPECT_TRUE(multiset_equal(r.conclusion, S("p -> q |- p -> q")));
  EXPECT_EQ(r.rule, RuleId::LRStrict);
  EXPECT_TRUE(accepts(r, G));
}

TEST(Contract, PrincipalCopy) {
  Derivation d = proof_of("p & q, p & q |- q & p");
  Derivation r = contract(d, G, Side::Left, F("p & q"));
  EXPECT_TRUE(multiset_equal(r.conclusion, S("p & q |- q & p")));
  EXPECT_LE(r.height(), d.height());
  EXPECT_TRUE(accepts(r, G));
}

TEST(Invert, Examples) {
  Derivation d = proof_of("p & q, r |- q");
  auto a = invert_on(d, G, RuleId::LAnd, F("p & q"));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(multiset_equal(a[0].conclusion, S("p, q, r |- q")));
  EXPECT_TRUE(accepts(a[0], G));

  Derivation e = proof_of("p, q |- p & q");
  auto b = invert_on(e, G, RuleId::RAnd, F("p & q"));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(multiset_equal(b[0].conclusion, S("p, q |- p")));
  EXPECT_TRUE(multiset_equal(b[1].conclusion, S("p, q |- q")));

  Derivation f = proof_of("p -> q |- p -> q");
  EXPECT_THROW(invert(f, G, RuleId::LRStrict, {{0}, {0}}), NonInvertible);
  EXPECT_THROW(invert(f, G, RuleId::RStrict, {{}, {0}}), NonInvertible);
}

TEST(Invert, ThroughOtherRules) {
  Derivation d = proof_of("(p | q) & r, p => s |- s | q");
  auto a = invert_on(d, G, RuleId::LMat, F("p => s"));
  EXPECT_TRUE(accepts(a[0], G));
  EXPECT_LE(a[0].height(), d.height());
}

TEST(Unbox, Examples) {
  Derivation a = unbox_arrow(proof_of("|- p -> p"));
  EXPECT_TRUE(multiset_equal(a.conclusion, S("p |- p")));
  Derivation b = unbox_arrow(proof_of("|- (p & q) -> p"));
  EXPECT_TRUE(multiset_equal(b.conclusion, S("p & q |- p")));
  EXPECT_TRUE(accepts(b, G));
  EXPECT_THROW(unbox_arrow(proof_of("p |- q -> q")), TransformError);
}

TEST(Cut, Atomic) {
  CutTrace t;
  Derivation d = eliminate_cut({make_leaf(S("p |- p"), G), make_leaf(S("p |- p"), G), F("p")}, &t);
  // Gamma, Gamma' |- Delta, Delta' with the cut formula removed once on each side.
  EXPECT_TRUE(multiset_equal(d.conclusion, S("p |- p")));
  EXPECT_TRUE(is_cut_free(d));
  EXPECT_EQ(t.violations, 0u);
}

TEST(Cut, PrincipalStrictImplication) {
  Derivation left = proof_of("q -> r |- p & q -> r");
  Derivation right = proof_of("p & q -> r |- (p & q) & s -> r");
  ASSERT_EQ(left.rule, RuleId::LRStrict);
  ASSERT_EQ(right.rule, RuleId::LRStrict);
  CutTrace t;
  Derivation d = eliminate_cut({left, right, F("p & q -> r")}, &t);
  EXPECT_TRUE(multiset_equal(d.conclusion, S("q -> r |- (p & q) & s -> r")));
  EXPECT_TRUE(accepts(d, G));
  EXPECT_TRUE(is_cut_free(d));
  EXPECT_EQ(t.violations, 0u);
  EXPECT_GT(t.calls, 1u);
}

TEST(Cut, NonPrincipalLeft) {
  Derivation left = proof_of("p & r |- p, s");
  Derivation right = proof_of("p, q |- p | q");
  CutTrace t;
  Derivation d = eliminate_cut({left, right, F("p")}, &t);
  EXPECT_TRUE(multiset_equal(d.conclusion, S("p & r, q |- s, p | q")));
  EXPECT_TRUE(accepts(d, G));
  EXPECT_EQ(t.violations, 0u);
}

TEST(Cut, Rejections) {
  Derivation l = make_leaf(S("p |- p"), G);
  EXPECT_THROW(eliminate_cut({l, l, F("q")}, nullptr), TransformError);
  Derivation bad{S("p |- q"), RuleId::Id, {{0}, {0}}, {}};
  EXPECT_THROW(eliminate_cut({bad, l, F("q")}, nullptr), TransformError);
}

TEST(Cut, EliminateAllCuts) {
  Derivation a = proof_of("p & q |- p");
  Derivation b = proof_of("p |- p | r");
  Derivation cut{S("p & q |- p | r"), RuleId::Cut, {{0}, {0}}, {a, b}};
  ASSERT_TRUE(accepts(cut, G, {true}));
  CutTrace t;
  Derivation d = eliminate_all_cuts(cut, &t);
  EXPECT_TRUE(is_cut_free(d));
  EXPECT_TRUE(multiset_equal(d.conclusion, cut.conclusion));
  EXPECT_TRUE(accepts(d, G));
}

TEST(HeightPreservation, CorpusSample) {
  auto seqs = corpus::sequents(corpus::frm(3), 3, 3, true);
  Prover p(G);
  int checked = 0;
  for (const auto& s : seqs) {
    auto out = p.prove(s);
    if (!out.proved) continue;
    const Derivation& d = *out.proof;
    const int h = d.height();
    for (Side side : {Side::Left, Side::Right}) {
      Derivation w = weaken(d, side, F("q -> p"));
      ASSERT_EQ(w.height(), h);
      ASSERT_TRUE(accepts(w, G));
    }
    for (const auto& f : s.ante) {
      Derivation c = contract(weaken(d, Side::Left, f), G, Side::Left, f);
      ASSERT_LE(c.height(), h);
      ASSERT_TRUE(accepts(c, G));
      ASSERT_TRUE(multiset_equal(c.conclusion, s));
      RuleId r;
      switch (f.kind()) {
        case Kind::And: r = RuleId::LAnd; break;
        case Kind::Or: r = RuleId::LOr; break;
        default: continue;
      }
      for (const auto& q : invert_on(d, G, r, f)) {
        ASSERT_LE(q.height(), h);
        ASSERT_TRUE(accepts(q, G)) << print_sequent(s);
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}
