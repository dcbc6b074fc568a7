#include <gtest/gtest.h>

#include <functional>

#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace subseq;
using testing_util::F;
using testing_util::S;

namespace {

constexpr Calculus G = Calculus::GWFN2;
constexpr Calculus M = Calculus::G3MNec;

// Reference decision: try every rule application, no strategy, no memo.
bool naive(const Sequent& s, Calculus c) {
  if (is_initial(s, c)) return true;
  for (const auto& app : applicable_rules(s, c)) {
    bool all = true;
    for (const auto& p : app.premises)
      if (!naive(p, c)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(Prove, Examples) {
  auto a = prove(S("|- (p & q) -> p"));
  ASSERT_TRUE(a.proved);
  EXPECT_TRUE(accepts(*a.proof, G));

  auto b = prove(S("p, p -> q |- q"));
  EXPECT_FALSE(b.proved);
  EXPECT_FALSE(b.proof);
  EXPECT_FALSE(b.failed_leaves.empty());

  auto c = prove(S("[](p => q) |- [](p => q)"), M);
  ASSERT_TRUE(c.proved);
  EXPECT_EQ(c.proof->rule, RuleId::LRMonotone);
  EXPECT_TRUE(accepts(*c.proof, M));
}

TEST(Prove, RejectsWrongLanguage) {
  EXPECT_THROW(prove(S("[](p => q) |- p")), std::invalid_argument);
  EXPECT_THROW(prove(S("p -> q |- p"), M), std::invalid_argument);
  EXPECT_THROW(Prover(Calculus::GWFS), std::invalid_argument);
}

TEST(Prove, LocalModusPonensFails) {
  EXPECT_FALSE(prove(S("p, p -> q |- q")).proved);
  EXPECT_TRUE(prove(S("p, p => q |- q")).proved);
  // Neither transitivity nor the meet of two implications is a sequent-level law.
  EXPECT_FALSE(prove(S("p -> q, q -> r |- p -> r")).proved);
  EXPECT_FALSE(prove(S("|- (p -> q) & (p -> r) -> (p -> q & r)")).proved);
  EXPECT_TRUE(prove(S("p -> q & r |- p & s -> q | s")).proved);
  EXPECT_FALSE(prove(S("|- p -> (q -> p)")).proved);
}

TEST(Prove, AgreesWithNaiveSearchAndProofsCheck) {
  // Reference counts computed with the naive decision below, frozen here.
  auto seqs = corpus::sequents(corpus::frm2(3), 3, 3);
  ASSERT_EQ(seqs.size(), 288869u);
  Prover pg(G), pm(M);
  std::size_t proved = 0;
  for (const auto& s : seqs) {
    auto out = pg.prove(s);
    ASSERT_EQ(out.proved, naive(s, G)) << print_sequent(s);
    if (out.proved) {
      ++proved;
      ASSERT_TRUE(is_cut_free(*out.proof));
      ASSERT_NO_THROW(check_derivation(*out.proof, G)) << print_sequent(s);
      ASSERT_TRUE(multiset_equal(out.proof->conclusion, s));
    }
    Sequent t = translate_sequent(s).image;
    ASSERT_EQ(pm.provable(t), naive(t, M)) << print_sequent(t);
  }
  EXPECT_EQ(proved, 175040u);
}

TEST(Prove, DeterministicProofs) {
  Sequent s = S("p | r -> q & r |- p -> q, s");
  auto a = prove(s), b = prove(s);
  ASSERT_TRUE(a.proved);
  EXPECT_EQ(print_derivation(*a.proof), print_derivation(*b.proof));
}

TEST(GeneralId, Examples) {
  Derivation a = derive_general_id(F("p"), {}, {});
  EXPECT_EQ(a.rule, RuleId::Id);
  EXPECT_EQ(a.height(), 0);

  Derivation b = derive_general_id(F("p -> q"), {}, {});
  EXPECT_EQ(b.rule, RuleId::LRStrict);
  EXPECT_TRUE(multiset_equal(b.premises[0].conclusion, S("p => q, p |- q")));
  EXPECT_NO_THROW(check_derivation(b, G));

  Derivation c = derive_general_id(F("p => q"), {F("r")}, {F("s")});
  EXPECT_EQ(c.rule, RuleId::RMat);
  EXPECT_EQ(c.premises[0].rule, RuleId::LMat);
  EXPECT_NO_THROW(check_derivation(c, G));
}

TEST(GeneralId, EveryFormulaOnCorpus) {
  auto pool = corpus::frm2(4);
  for (const auto& layer : pool)
    for (const auto& x : layer) {
      Derivation d = derive_general_id(x, {F("r")}, {F("s")});
      ASSERT_TRUE(accepts(d, G)) << print_formula(x);
      Derivation m = derive_general_id(box_translate(x), {}, {}, M);
      ASSERT_TRUE(accepts(m, M)) << print_formula(x);
    }
}
