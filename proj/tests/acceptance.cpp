// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Corpora are exhaustive at small bounds (two atoms plus bot, formulas up to
// commutativity of & and |, sequents as multisets) and are topped up with
// seeded random samples up to the larger weight bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/corpus.hpp"
#include "support/hilbert_fixtures.hpp"

using namespace subseq;

namespace {

constexpr Calculus G = Calculus::GWFN2;
constexpr Calculus M = Calculus::G3MNec;

struct Report {
  int failures = 0;

  void line(int n, const std::string& title, bool ok, const std::string& detail, double seconds) {
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << title << ": " << detail << " [" << t << "]"
              << std::endl;
    if (!ok) ++failures;
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Formula F(std::string_view s) { return parse_formula(s); }


bool in_frm_sequent(const Sequent& s) {
  for (const auto* side : {&s.ante, &s.succ})
    for (const auto& f : *side)
      if (!in_frm(f)) return false;
  return true;
}

// --- corpora --------------------------------------------------------------------

struct Corpora {
  std::vector<Sequent> frm;        // criterion 4
  std::vector<Sequent> frm2;       // criterion 5 (superset of frm)
  std::vector<Sequent> measure;    // criterion 3
  std::vector<Sequent> single;     // criterion 9
  std::string frm_desc, frm2_desc, measure_desc, single_desc;
};

Corpora build_corpora() {
  Corpora c;
  corpus::Sampler smp(20240601);
  const auto frm4 = corpus::frm(4);
  const auto frm2_4 = corpus::frm2(4);

  // Frm: all sequents of weight <= 3 with <= 3 formulas and of weight 4 with <= 2
  // formulas; plus 4000 random sequents of weight 4..6.
  c.frm = corpus::sequents(frm4, 3, 3);
  std::size_t exhaustive = c.frm.size();
  for (const auto& s : corpus::sequents(frm4, 4, 2))
    if (s.weight() == 4) c.frm.push_back(s);
  exhaustive = c.frm.size();
  for (int i = 0; i < 4000; ++i) c.frm.push_back(smp.sequent(smp.uniform(4, 6), 3, false, smp.coin(0.8)));
  c.frm_desc = std::to_string(exhaustive) + " exhaustive + 4000 sampled Frm sequents";

  c.frm2 = corpus::sequents(frm2_4, 3, 3);
  exhaustive = c.frm2.size();
  for (int i = 0; i < 4000; ++i) c.frm2.push_back(smp.sequent(smp.uniform(4, 6), 3, true, smp.coin(0.8)));
  c.frm2_desc = std::to_string(exhaustive) + " exhaustive + 4000 sampled Frm2 sequents";

  c.measure = c.frm2;
  for (const auto& s : corpus::sequents(frm2_4, 4, 2))
    if (s.weight() == 4) c.measure.push_back(s);
  exhaustive = c.measure.size() - 4000;
  for (int i = 0; i < 20000; ++i) c.measure.push_back(smp.sequent(smp.uniform(5, 8), 4, true, smp.coin(0.8)));
  c.measure_desc = std::to_string(exhaustive) + " exhaustive + 24000 sampled Frm2 sequents";

  c.single = corpus::sequents(frm2_4, 3, 3, false, true);
  exhaustive = c.single.size();
  for (int i = 0; i < 3000; ++i) {
    Sequent s;
    int n = smp.uniform(0, 2);
    for (int k = 0; k < n; ++k) s.ante.push_back(smp.frm2(smp.uniform(0, 3)));
    s.succ.push_back(smp.coin(0.8) ? smp.frm(smp.uniform(0, 4)) : smp.frm2(smp.uniform(0, 4)));
    c.single.push_back(s);
  }
  c.single_desc = std::to_string(exhaustive) + " exhaustive + 3000 sampled";
  return c;
}

// --- criteria -------------------------------------------------------------------

void axioms(Report& r, Prover& pg) {
  Timer t;
  const std::vector<Formula> atoms = {F("p"), F("q"), F("r")};
  const std::vector<Formula> nests = {F("p -> q"), F("p & q")};
  int total = 0, failed = 0;
  std::string first;
  for (int k : axiom_numbers()) {
    // Each metavariable: its own atom, or one of the nested formulas.
    for (int mask = 0; mask < 27; ++mask) {
      std::map<std::string, Formula> sub;
      int m = mask;
      for (int v = 0; v < 3; ++v, m /= 3) sub[std::string(1, static_cast<char>('A' + v))] = m % 3 == 0 ? atoms[v] : nests[m % 3 - 1];
      Formula inst = instantiate(axiom_schema(k), sub);
      ++total;
      if (!pg.provable({{}, {inst}})) {
        if (!failed++) first = print_formula(inst);
      }
    }
  }
  r.line(1, "axiom schemas", failed == 0,
         std::to_string(total - failed) + "/" + std::to_string(total) + " instances proved" +
             (failed ? ", first failure |- " + first : ""),
         t.seconds());
}

void rule_closure(Report& r, Prover& pg) {
  Timer t;
  const std::vector<Formula> pool = {F("p"), F("q"), F("r"), F("bot"), F("p -> q"), F("p & q"), F("p | q"), F("p -> p")};
  const Formula A = Formula::atom("A"), B = Formula::atom("B"), C = Formula::atom("C"), D = Formula::atom("D");
  auto imp = Formula::strict;
  struct RuleSchema {
    int number;
    std::vector<Formula> premises;
    Formula conclusion;
  };
  const std::vector<RuleSchema> rules = {
      {7, {A, imp(A, B)}, B},
      {8, {A}, imp(B, A)},
      {9, {imp(A, B), imp(B, C)}, imp(A, C)},
      {10, {imp(A, B), imp(A, C)}, imp(A, Formula::conj(B, C))},
      {11, {imp(A, C), imp(B, C)}, imp(Formula::disj(A, B), C)},
      {12, {A, B}, Formula::conj(A, B)},
      {13, {imp(C, Formula::disj(A, D)), imp(Formula::conj(C, B), D)}, imp(imp(A, B), imp(C, D))},
  };
  std::function<Formula(const Formula&, const std::map<std::string, Formula>&)> inst =
      [&](const Formula& f, const std::map<std::string, Formula>& s) -> Formula {
    if (f.is_atom()) return s.at(f.name());
    if (f.is_bottom()) return f;
    return Formula::binary(f.kind(), inst(f.lhs(), s), inst(f.rhs(), s));
  };
  std::size_t instances = 0, live = 0, failed = 0;
  std::map<int, std::size_t> live_by_rule;
  std::string first;
  const std::size_t n = pool.size();
  for (const auto& rule : rules)
    for (std::size_t code = 0; code < n * n * n * n; ++code) {
      std::map<std::string, Formula> s;
      std::size_t x = code;
      for (const char* v : {"A", "B", "C", "D"}) {
        s[v] = pool[x % n];
        x /= n;
      }
      ++instances;
      bool all = true;
      for (const auto& p : rule.premises)
        if (!pg.provable({{}, {inst(p, s)}})) {
          all = false;
          break;
        }
      if (!all) continue;
      ++live;
      ++live_by_rule[rule.number];
      Formula concl = inst(rule.conclusion, s);
      if (!pg.provable({{}, {concl}}) && !failed++) first = "rule " + std::to_string(rule.number) + ": |- " + print_formula(concl);
    }
  std::string by;
  for (const auto& [k, v] : live_by_rule) by += (by.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
  r.line(2, "rule closure", failed == 0 && live_by_rule.size() == rules.size(),
         std::to_string(live) + " instances with proved premises out of " + std::to_string(instances) + " (per rule " + by +
             "), " + std::to_string(failed) + " unproved conclusions" + (failed ? ", first " + first : ""),
         t.seconds());
}

void measure(Report& r, const Corpora& c) {
  Timer t;
  std::size_t apps = 0, violations = 0;
  std::string first;
  for (const auto& s : c.measure) {
    const int w = s.weight();
    for (const auto& app : applicable_rules(s, G)) {
      ++apps;
      for (const auto& p : app.premises)
        if (p.weight() >= w && !violations++) first = print_sequent(s);
    }
    Sequent m = translate_sequent(s).image;
    for (const auto& app : applicable_rules(m, M)) {
      ++apps;
      for (const auto& p : app.premises)
        if (p.weight() >= m.weight() && !violations++) first = print_sequent(m);
    }
  }
  r.line(3, "weight decreases backwards", violations == 0,
         c.measure_desc + ", " + std::to_string(apps) + " rule applications, " + std::to_string(violations) +
             " violations" + (violations ? ", first at " + first : ""),
         t.seconds());
}

void soundness(Report& r, const Corpora& c, Prover& pg) {
  Timer t;
  RefutationOracle oracle(c.frm, 3, {"p", "q"});
  auto wit = oracle.run();
  std::size_t proved = 0, refuted = 0, violations = 0, recheck = 0;
  std::string first;
  for (std::size_t k = 0; k < c.frm.size(); ++k) {
    bool p = pg.provable(c.frm[k]);
    proved += p;
    if (!wit[k]) continue;
    ++refuted;
    Model m = oracle.to_model(*wit[k]);
    if (sequent_valid(m, c.frm[k]) || model_violation(m)) ++recheck;
    if (p && !violations++) first = print_sequent(c.frm[k]);
  }
  std::size_t open_unprovable = c.frm.size() - proved - refuted;
  r.line(4, "soundness against all superset-closed models with <= 3 worlds", violations == 0 && recheck == 0,
         c.frm_desc + ": " + std::to_string(proved) + " proved, none refuted; " + std::to_string(refuted) +
             " refuted, all unprovable; " + std::to_string(open_unprovable) + " unprovable without a small countermodel" +
             (violations ? "; VIOLATION at " + first : "") + (recheck ? "; witness re-check failed" : ""),
         t.seconds());
}

void embedding(Report& r, const Corpora& c, Prover& pg, Prover& pm) {
  Timer t;
  std::size_t agree = 0, disagree = 0, comp = 0, comp_bad = 0, embedded = 0, embed_bad = 0;
  std::string first;
  for (const auto& s : c.frm2) {
    bool a = pg.provable(s);
    bool b = pm.provable(translate_sequent(s).image);
    if (a == b) ++agree;
    else if (!disagree++) first = print_sequent(s);
    if (in_frm_sequent(s) && !s.succ.empty()) {
      ++comp;
      auto res = companion_check(s.ante, s.succ, &pg, &pm);
      if (res.sequent_provable != res.modal_provable || res.sequent_provable != a) ++comp_bad;
    }
    if (a && embedded < 20000) {
      ++embedded;
      Derivation e = embed_proof(*pg.prove(s).proof);
      if (!accepts(e, M) || !accepts(unembed_proof(e), G)) ++embed_bad;
    }
  }
  r.line(5, "embedding into the modal calculus", disagree == 0 && comp_bad == 0 && embed_bad == 0,
         c.frm2_desc + ": " + std::to_string(agree) + " agree, " + std::to_string(disagree) + " disagree" +
             (disagree ? " (first " + first + ")" : "") + "; companion " + std::to_string(comp - comp_bad) + "/" +
             std::to_string(comp) + "; " + std::to_string(embedded) + " proofs embedded and pulled back, " +
             std::to_string(embed_bad) + " rejected",
         t.seconds());
}

void cut_elimination(Report& r, Prover& pg) {
  Timer t;
  corpus::Sampler smp(77);
  std::size_t built = 0, ok = 0, attempts = 0, principal_both = 0;
  CutTrace trace;
  std::string first;
  while (built < 300 && attempts < 200000) {
    ++attempts;
    Formula d = smp.coin(0.7) ? smp.frm(smp.uniform(0, 4)) : smp.frm2(smp.uniform(1, 4));
    auto side = [&](int max) {
      FormulaList out;
      int n = smp.uniform(0, max);
      for (int i = 0; i < n; ++i) out.push_back(smp.frm(smp.uniform(0, 3)));
      return out;
    };
    Sequent left{side(2), concat({d}, side(1))};
    Sequent right{concat({d}, side(2)), side(2)};
    if (smp.coin(0.3)) left.ante.push_back(d);
    if (!pg.provable(left) || !pg.provable(right)) continue;
    ++built;
    Derivation l = *pg.prove(left).proof, rr = *pg.prove(right).proof;
    auto [ll, lr] = principal_formulas(l);
    auto [rl, rr2] = principal_formulas(rr);
    if (lr && *lr == d && rl && *rl == d) ++principal_both;
    Sequent expected{concat(left.ante, erase_at(right.ante, 0)), concat(erase_at(left.succ, 0), right.succ)};
    try {
      Derivation out = eliminate_cut({l, rr, d}, &trace);
      if (is_cut_free(out) && accepts(out, G) && multiset_equal(out.conclusion, expected)) ++ok;
      else if (first.empty()) first = print_sequent(expected);
    } catch (const std::exception& e) {
      if (first.empty()) first = print_sequent(expected) + " (" + e.what() + ")";
    }
  }
  r.line(6, "cut elimination", built >= 200 && ok == built && trace.violations == 0,
         std::to_string(ok) + "/" + std::to_string(built) + " random cuts eliminated (" + std::to_string(principal_both) +
             " principal on both sides), " + std::to_string(trace.calls) + " recursive calls, " +
             std::to_string(trace.violations) + " measure violations" + (first.empty() ? "" : ", first failure " + first),
         t.seconds());
}

void hp_admissibility(Report& r, const Corpora& c, Prover& pg) {
  Timer t;
  corpus::Sampler smp(4242);
  std::size_t derivations = 0, ops = 0, violations = 0;
  std::string first;
  auto check = [&](const Derivation& out, int h, const char* what, const Sequent& s) {
    ++ops;
    if (out.height() > h || !accepts(out, G)) {
      if (!violations++) first = std::string(what) + " on " + print_sequent(s);
    }
  };
  std::size_t stride = 0;
  for (const auto& s : c.frm2) {
    if (++stride % 7 != 0 && s.weight() < 4) continue;  // thin out the exhaustive part
    auto out = pg.prove(s);
    if (!out.proved) continue;
    const Derivation& d = *out.proof;
    const int h = d.height();
    ++derivations;
    Formula extra = smp.frm2(smp.uniform(0, 3));
    check(weaken(d, Side::Left, extra), h, "weaken L", s);
    check(weaken(d, Side::Right, extra), h, "weaken R", s);
    for (Side side : {Side::Left, Side::Right})
      for (const auto& f : side_of(s, side)) {
        check(contract(weaken(d, side, f), G, side, f), h, "contract", s);
        RuleId rule;
        switch (f.kind()) {
          case Kind::And: rule = side == Side::Left ? RuleId::LAnd : RuleId::RAnd; break;
          case Kind::Or: rule = side == Side::Left ? RuleId::LOr : RuleId::ROr; break;
          case Kind::MatImp: rule = side == Side::Left ? RuleId::LMat : RuleId::RMat; break;
          default: continue;
        }
        for (const auto& q : invert_on(d, G, rule, f)) check(q, h, "invert", s);
      }
    if (s.ante.empty() && s.succ.size() == 1 && s.succ[0].is(Kind::StrictImp) && d.rule == RuleId::RStrict)
      check(unbox_arrow(d), h, "unbox", s);
  }
  r.line(7, "height-preserving admissibility", derivations >= 500 && violations == 0,
         std::to_string(derivations) + " derivations, " + std::to_string(ops) + " transformations, " +
             std::to_string(violations) + " violations" + (first.empty() ? "" : ", first " + first),
         t.seconds());
}

void subformula(Report& r, const Corpora& c, Prover& pg) {
  Timer t;
  std::size_t proofs = 0, nodes = 0, outside = 0, rmat = 0, frm_succ = 0;
  std::string first;
  for (const auto* set : {&c.frm2, &c.frm}) {
    for (const auto& s : *set) {
      auto out = pg.prove(s);
      if (!out.proved) continue;
      ++proofs;
      std::set<Formula> allowed;
      for (const auto* side : {&s.ante, &s.succ})
        for (const auto& f : *side) allowed.merge(ext_subformulas(f));
      bool succ_frm = std::all_of(s.succ.begin(), s.succ.end(), [](const Formula& f) { return in_frm(f); });
      frm_succ += succ_frm;
      for_each_node(*out.proof, [&](const Derivation& n) {
        ++nodes;
        for (const auto* side : {&n.conclusion.ante, &n.conclusion.succ})
          for (const auto& f : *side)
            if (!allowed.count(f) && !outside++) first = print_formula(f) + " in proof of " + print_sequent(s);
        if (succ_frm && n.rule == RuleId::RMat && !rmat++) first = "R=> in proof of " + print_sequent(s);
      });
    }
  }
  r.line(8, "extended subformula property", outside == 0 && rmat == 0,
         std::to_string(proofs) + " proofs, " + std::to_string(nodes) + " nodes, " + std::to_string(outside) +
             " foreign formulas; " + std::to_string(frm_succ) + " proofs with Frm succedent, " + std::to_string(rmat) +
             " using R=>" + (first.empty() ? "" : ", first " + first),
         t.seconds());
}

void single_succedent(Report& r, const Corpora& c, Prover& pg) {
  Timer t;
  SingleSearch direct;
  std::size_t in_scope = 0, agree = 0, height_bad = 0, out_scope = 0, scope_errors = 0, out_agree = 0;
  std::string first;
  for (const auto& s : c.single) {
    const bool covered = in_frm(s.succ[0]);
    const bool multi = pg.provable(s);
    try {
      auto out = prove_single(s, &pg, &direct);
      bool same = out.proved() == multi;
      if (out.proved()) {
        Derivation m = single_to_multi(*out.proof);
        if (!accepts(*out.proof, Calculus::GWFS) || !accepts(m, G) || m.height() > out.proof->height()) ++height_bad;
      }
      if (covered) {
        ++in_scope;
        if (same) ++agree;
        else if (first.empty()) first = print_sequent(s);
      } else {
        ++out_scope;
        out_agree += same;
      }
    } catch (const ScopeError&) {
      ++out_scope;
      ++scope_errors;
    } catch (const std::exception& e) {
      ++in_scope;
      if (first.empty()) first = print_sequent(s) + " (" + e.what() + ")";
    }
  }
  // Disjunction property over |- X | Y.
  std::size_t disj = 0, disj_ok = 0;
  auto pairs = [&](const corpus::ByWeight& pool, int max) {
    for (int a = 0; a <= max; ++a)
      for (int b = 0; a + b <= max; ++b)
        for (const auto& x : pool[a])
          for (const auto& y : pool[b]) {
            Sequent s{{}, {Formula::disj(x, y)}};
            if (!pg.provable(s)) continue;
            try {
              if (!prove_single(s, &pg, &direct).proved()) continue;
            } catch (const ScopeError&) {
              continue;
            }
            ++disj;
            Formula side = disjunction_split(x, y) == Disjunct::Left ? x : y;
            if (prove_single({{}, {side}}, &pg, &direct).proved()) ++disj_ok;
            else if (first.empty()) first = "disjunction " + print_sequent(s);
          }
  };
  pairs(corpus::frm(4), 4);
  pairs(corpus::frm2(3), 3);
  r.line(9, "single-succedent equivalence and disjunction property",
         agree == in_scope && height_bad == 0 && disj == disj_ok && disj > 0,
         c.single_desc + ": " + std::to_string(agree) + "/" + std::to_string(in_scope) +
             " with Frm succedent agree, height never grows (" + std::to_string(height_bad) + " bad); " +
             "outside Frm: " + std::to_string(out_agree) + "/" + std::to_string(out_scope) + " decided, " +
             std::to_string(scope_errors) + " ScopeError; disjunction split " + std::to_string(disj_ok) + "/" +
             std::to_string(disj) + (first.empty() ? "" : ", first failure " + first),
         t.seconds());
}

void hilbert(Report& r, const Corpora& c, Prover& pg) {
  Timer t;
  std::size_t compiled = 0, bad = 0, lines = 0;
  std::string first;
  for (const auto& s : c.frm) {
    if (s.succ.empty()) continue;
    auto out = pg.prove(s);
    if (!out.proved) continue;
    ++compiled;
    try {
      HilbertProof h = sequent_to_hilbert(*out.proof);
      lines += h.lines.size();
      if (check_hilbert(h) != hilbert_target(s.ante, s.succ)) throw std::logic_error("wrong conclusion");
    } catch (const std::exception& e) {
      if (!bad++) first = print_sequent(s) + " (" + e.what() + ")";
    }
  }
  std::size_t fixtures_ok = 0;
  std::set<int> axioms_seen, rules_seen;
  const auto fx = fixtures::hilbert_fixtures();
  for (const auto& f : fx) {
    for (const auto& l : f.proof.lines) (l.just.kind == JustKind::Axiom ? axioms_seen : rules_seen).insert(l.just.number);
    try {
      Formula goal = check_hilbert(f.proof);
      Derivation d = hilbert_to_sequent(f.proof, {}, {goal});
      bool ok = accepts(d, G) && is_cut_free(d);
      if (goal.is(Kind::StrictImp)) ok = ok && accepts(hilbert_to_sequent(f.proof, {goal.lhs()}, {goal.rhs()}), G);
      if (ok) ++fixtures_ok;
      else if (first.empty()) first = f.name;
    } catch (const std::exception& e) {
      if (first.empty()) first = f.name + " (" + e.what() + ")";
    }
  }
  // Weak deduction: all pairs up to total weight 4, plus sampled pairs of weight <= 6 each.
  std::size_t pairs = 0, unequal = 0;
  auto pool = corpus::frm(4);
  auto test = [&](const Formula& a, const Formula& b) {
    ++pairs;
    auto [x, y] = deduction_check(a, b, &pg);
    if (x != y && !unequal++ && first.empty()) first = "deduction " + print_formula(a) + " / " + print_formula(b);
  };
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b)
      for (const auto& x : pool[a])
        for (const auto& y : pool[b]) test(x, y);
  std::size_t exhaustive_pairs = pairs;
  corpus::Sampler smp(99);
  for (int i = 0; i < 20000; ++i) test(smp.frm(smp.uniform(0, 6)), smp.frm(smp.uniform(0, 6)));
  const bool all_covered = axioms_seen.size() == axiom_numbers().size() && rules_seen.size() == 7;
  r.line(10, "Hilbert system bridges", bad == 0 && fixtures_ok == fx.size() && all_covered && unequal == 0,
         std::to_string(compiled - bad) + "/" + std::to_string(compiled) + " sequent proofs compiled (" +
             std::to_string(lines) + " lines); " + std::to_string(fixtures_ok) + "/" + std::to_string(fx.size()) +
             " Hilbert fixtures (" + std::to_string(axioms_seen.size()) + " axioms, " + std::to_string(rules_seen.size()) +
             " rules) translated; deduction check equal on " + std::to_string(pairs - unequal) + "/" +
             std::to_string(pairs) + " pairs (" + std::to_string(exhaustive_pairs) + " exhaustive)" +
             (first.empty() ? "" : ", first failure " + first),
         t.seconds());
}

void negative(Report& r, Prover& pg) {
  Timer t;
  Sequent s = parse_sequent("p, p -> q |- q");
  bool unprovable = !pg.provable(s);
  auto m = countermodel(s, 2);
  bool ok = unprovable && m && m->worlds <= 2 && !sequent_valid(*m, s) && !model_violation(*m);
  std::string detail = std::string(unprovable ? "not provable" : "PROVABLE") + "; ";
  if (m) {
    std::string table = print_model(*m);
    for (auto& ch : table)
      if (ch == '\n') ch = ';';
    detail += std::to_string(m->worlds) + "-world countermodel: " + table;
  } else {
    detail += "no countermodel";
  }
  r.line(11, "local modus ponens fails", ok, detail, t.seconds());
}

}  // namespace

int main() {
  Timer total;
  Report r;
  Prover pg(G), pm(M);
  Corpora c = build_corpora();
  std::cout << "corpora built in " << total.seconds() << "s" << std::endl;

  axioms(r, pg);
  rule_closure(r, pg);
  measure(r, c);
  soundness(r, c, pg);
  embedding(r, c, pg, pm);
  cut_elimination(r, pg);
  hp_admissibility(r, c, pg);
  subformula(r, c, pg);
  single_succedent(r, c, pg);
  hilbert(r, c, pg);
  negative(r, pg);

  std::cout << (r.failures ? "FAILED " : "ALL PASSED ") << "(" << r.failures << " failing, " << total.seconds()
            << "s)" << std::endl;
  return r.failures ? 1 : 0;
}
