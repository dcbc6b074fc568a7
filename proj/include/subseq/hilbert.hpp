#pragma once

// The Hilbert system WF_N2: proofs as numbered line lists, the restricted
// consequence relation, and compilers between Hilbert proofs and GWF_N2 derivations.
//
// Axioms                                    Rules
//   1  A -> A | B                             7  A, A -> B / B            (MP)
//   2  B -> A | B                             8  A / B -> A               (AF)
//   3  A & B -> A                             9  A -> B, B -> C / A -> C
//   4  A & B -> B                            10  A -> B, A -> C / A -> B & C
//   5  A & (B | C) -> A & B | A & C          11  A -> C, B -> C / A | B -> C
//   6  A -> A                                12  A, B / A & B
//  14  bot -> A                              13  C -> A | D, C & B -> D / (A -> B) -> (C -> D)
//
// Rules 8-11 and 13 apply only to assumption-free premises; MP needs an
// assumption-free A -> B. Rule 12 is unrestricted.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "subseq/search.hpp"
#include "subseq/transforms.hpp"

namespace subseq {

enum class JustKind { Axiom, Rule, Assumption };

struct Justification {
  JustKind kind = JustKind::Axiom;
  int number = 0;                         // axiom or rule number
  std::vector<std::size_t> refs;          // premise lines (0-based), rules only
  std::map<std::string, Formula> subst;   // metavariable -> formula, axioms only (may be empty)
  std::size_t assumption = 0;             // index into the assumption list
};

struct HilbertLine {
  Formula formula;
  Justification just;
};

struct HilbertProof {
  std::vector<HilbertLine> lines;
};

class HilbertError : public std::runtime_error {
 public:
  enum class Kind { BadAxiomInstance, RestrictionViolated, DanglingRef, BadRuleApplication, BadAssumption, StratumError, Empty };

  HilbertError(Kind kind, std::size_t line, const std::string& reason)
      : std::runtime_error(std::string(kind_name(kind)) + " at line " + std::to_string(line + 1) + ": " + reason),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::BadAxiomInstance: return "BadAxiomInstance";
      case Kind::RestrictionViolated: return "RestrictionViolated";
      case Kind::DanglingRef: return "DanglingRef";
      case Kind::BadRuleApplication: return "BadRuleApplication";
      case Kind::BadAssumption: return "BadAssumption";
      case Kind::StratumError: return "StratumError";
      case Kind::Empty: return "Empty";
    }
    return "?";
  }

 private:
  Kind kind_;
  std::size_t line_;
};

inline const std::vector<int>& axiom_numbers() {
  static const std::vector<int> v = {1, 2, 3, 4, 5, 6, 14};
  return v;
}

inline int rule_arity(int k) { return k == 8 ? 1 : 2; }

inline bool is_rule_number(int k) { return k >= 7 && k <= 13; }

/// Schema with metavariables as atoms named A, B, C.
inline Formula axiom_schema(int k) {
  const Formula A = Formula::atom("A"), B = Formula::atom("B"), C = Formula::atom("C");
  auto imp = Formula::strict;
  switch (k) {
    case 1: return imp(A, Formula::disj(A, B));
    case 2: return imp(B, Formula::disj(A, B));
    case 3: return imp(Formula::conj(A, B), A);
    case 4: return imp(Formula::conj(A, B), B);
    case 5:
      return imp(Formula::conj(A, Formula::disj(B, C)), Formula::disj(Formula::conj(A, B), Formula::conj(A, C)));
    case 6: return imp(A, A);
    case 14: return imp(Formula::bottom(), A);
    default: throw std::invalid_argument("no axiom " + std::to_string(k));
  }
}

inline bool is_metavariable(const Formula& f) {
  return f.is_atom() && (f.name() == "A" || f.name() == "B" || f.name() == "C");
}

inline Formula instantiate(const Formula& schema, const std::map<std::string, Formula>& subst) {
  if (is_metavariable(schema)) {
    auto it = subst.find(schema.name());
    if (it == subst.end()) throw std::invalid_argument("instantiate: unbound metavariable " + schema.name());
    return it->second;
  }
  switch (schema.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return schema;
    case Kind::Box: return Formula::box(instantiate(schema.body(), subst));
    default: return Formula::binary(schema.kind(), instantiate(schema.lhs(), subst), instantiate(schema.rhs(), subst));
  }
}

/// First-order match of f against a schema; extends `subst`.
inline bool match_schema(const Formula& schema, const Formula& f, std::map<std::string, Formula>& subst) {
  if (is_metavariable(schema)) {
    auto [it, fresh] = subst.emplace(schema.name(), f);
    return fresh || it->second == f;
  }
  if (schema.kind() != f.kind()) return false;
  switch (schema.kind()) {
    case Kind::Atom: return schema.name() == f.name();
    case Kind::Bottom: return true;
    case Kind::Box: return match_schema(schema.body(), f.body(), subst);
    default: return match_schema(schema.lhs(), f.lhs(), subst) && match_schema(schema.rhs(), f.rhs(), subst);
  }
}

/// Conclusion of rule k from its premises, or a reason it does not apply.
/// Rule 8 leaves B free, so the stated conclusion is needed.
inline std::variant<Formula, std::string> rule_conclusion(int k, const std::vector<Formula>& p, const Formula& stated) {
  using R = std::variant<Formula, std::string>;
  auto strict = [](const Formula& f) { return f.is(Kind::StrictImp); };
  switch (k) {
    case 7:
      if (!strict(p[1]) || p[1].lhs() != p[0]) return R(std::string("MP needs premises A and A -> B"));
      return R(p[1].rhs());
    case 8:
      if (!strict(stated) || stated.rhs() != p[0]) return R(std::string("rule 8 concludes B -> A from A"));
      return R(stated);
    case 9:
      if (!strict(p[0]) || !strict(p[1]) || p[0].rhs() != p[1].lhs())
        return R(std::string("rule 9 needs A -> B and B -> C"));
      return R(Formula::strict(p[0].lhs(), p[1].rhs()));
    case 10:
      if (!strict(p[0]) || !strict(p[1]) || p[0].lhs() != p[1].lhs())
        return R(std::string("rule 10 needs A -> B and A -> C"));
      return R(Formula::strict(p[0].lhs(), Formula::conj(p[0].rhs(), p[1].rhs())));
    case 11:
      if (!strict(p[0]) || !strict(p[1]) || p[0].rhs() != p[1].rhs())
        return R(std::string("rule 11 needs A -> C and B -> C"));
      return R(Formula::strict(Formula::disj(p[0].lhs(), p[1].lhs()), p[0].rhs()));
    case 12: return R(Formula::conj(p[0], p[1]));
    case 13: {
      // C -> A | D, C & B -> D  /  (A -> B) -> (C -> D)
      if (!strict(p[0]) || !p[0].rhs().is(Kind::Or) || !strict(p[1]) || !p[1].lhs().is(Kind::And))
        return R(std::string("rule 13 needs C -> A | D and C & B -> D"));
      const Formula& c = p[0].lhs();
      const Formula& a = p[0].rhs().lhs();
      const Formula& d = p[0].rhs().rhs();
      const Formula& b = p[1].lhs().rhs();
      if (p[1].lhs().lhs() != c || p[1].rhs() != d) return R(std::string("rule 13 premises disagree on C or D"));
      return R(Formula::strict(Formula::strict(a, b), Formula::strict(c, d)));
    }
    default: return R("no rule " + std::to_string(k));
  }
}

/// Assumption indices each line depends on.
inline std::vector<std::set<std::size_t>> assumption_sets(const HilbertProof& p) {
  std::vector<std::set<std::size_t>> out(p.lines.size());
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& j = p.lines[i].just;
    if (j.kind == JustKind::Assumption) out[i].insert(j.assumption);
    if (j.kind == JustKind::Rule)
      for (auto r : j.refs)
        if (r < i) out[i].insert(out[r].begin(), out[r].end());
  }
  return out;
}

/// Validates p as a derivation from `assumptions` and returns its last formula.
inline Formula check_hilbert(const HilbertProof& p, const FormulaList& assumptions = {}) {
  using K = HilbertError::Kind;
  if (p.lines.empty()) throw HilbertError(K::Empty, 0, "proof has no lines");
  const auto deps = assumption_sets(p);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    const auto& j = line.just;
    if (!in_frm(line.formula))
      throw HilbertError(K::StratumError, i, "'" + print_formula(line.formula) + "' is not in Frm");
    switch (j.kind) {
      case JustKind::Assumption:
        if (j.assumption >= assumptions.size()) throw HilbertError(K::BadAssumption, i, "no such assumption");
        if (assumptions[j.assumption] != line.formula)
          throw HilbertError(K::BadAssumption, i, "line differs from assumption " + std::to_string(j.assumption + 1));
        break;
      case JustKind::Axiom: {
        if (std::find(axiom_numbers().begin(), axiom_numbers().end(), j.number) == axiom_numbers().end())
          throw HilbertError(K::BadAxiomInstance, i, "no axiom " + std::to_string(j.number));
        const Formula schema = axiom_schema(j.number);
        bool ok;
        if (!j.subst.empty()) {
          try {
            ok = instantiate(schema, j.subst) == line.formula;
          } catch (const std::invalid_argument&) {
            ok = false;
          }
        } else {
          std::map<std::string, Formula> s;
          ok = match_schema(schema, line.formula, s);
        }
        if (!ok)
          throw HilbertError(K::BadAxiomInstance, i,
                             "'" + print_formula(line.formula) + "' is not an instance of axiom " + std::to_string(j.number));
        break;
      }
      case JustKind::Rule: {
        if (!is_rule_number(j.number)) throw HilbertError(K::BadRuleApplication, i, "no rule " + std::to_string(j.number));
        if (static_cast<int>(j.refs.size()) != rule_arity(j.number))
          throw HilbertError(K::BadRuleApplication, i, "rule " + std::to_string(j.number) + " has the wrong number of premises");
        std::vector<Formula> prem;
        for (auto r : j.refs) {
          if (r >= i) throw HilbertError(K::DanglingRef, i, "premise reference must point to an earlier line");
          prem.push_back(p.lines[r].formula);
        }
        auto c = rule_conclusion(j.number, prem, line.formula);
        if (auto* why = std::get_if<std::string>(&c)) throw HilbertError(K::BadRuleApplication, i, *why);
        if (std::get<Formula>(c) != line.formula)
          throw HilbertError(K::BadRuleApplication, i,
                             "rule " + std::to_string(j.number) + " yields '" + print_formula(std::get<Formula>(c)) + "'");
        const int k = j.number;
        if (k == 7 && !deps[j.refs[1]].empty())
          throw HilbertError(K::RestrictionViolated, i, "MP on an implication that depends on assumptions");
        if (k == 8 || k == 9 || k == 10 || k == 11 || k == 13)
          for (auto r : j.refs)
            if (!deps[r].empty())
              throw HilbertError(K::RestrictionViolated, i,
                                 "rule " + std::to_string(k) + " applied to a premise that depends on assumptions");
        break;
      }
    }
  }
  return p.lines.back().formula;
}

// --- building proofs -------------------------------------------------------------

/// Appends lines; assumption-free lines are shared by formula.
class HilbertBuilder {
 public:
  std::size_t axiom(int k, std::map<std::string, Formula> subst) {
    Formula f = instantiate(axiom_schema(k), subst);
    if (auto i = lookup(f)) return *i;
    Justification j;
    j.kind = JustKind::Axiom;
    j.number = k;
    j.subst = std::move(subst);
    return push(f, std::move(j));
  }

  std::size_t rule(int k, std::vector<std::size_t> refs, std::optional<Formula> stated = std::nullopt) {
    std::vector<Formula> prem;
    for (auto r : refs) prem.push_back(proof_.lines.at(r).formula);
    auto c = rule_conclusion(k, prem, stated ? *stated : Formula::bottom());
    if (auto* why = std::get_if<std::string>(&c)) throw std::logic_error("HilbertBuilder: " + *why);
    Formula f = std::get<Formula>(c);
    if (auto i = lookup(f)) return *i;
    Justification j;
    j.kind = JustKind::Rule;
    j.number = k;
    j.refs = std::move(refs);
    return push(f, std::move(j));
  }

  Formula formula(std::size_t i) const { return proof_.lines.at(i).formula; }

  /// The proof up to and including `target`; later lines cannot feed it.
  HilbertProof finish(std::size_t target) const {
    HilbertProof out = proof_;
    out.lines.resize(target + 1);
    return out;
  }

  // Lattice helpers; every returned line is assumption-free.
  std::size_t refl(const Formula& a) { return axiom(6, {{"A", a}}); }
  std::size_t chain(std::size_t ab, std::size_t bc) { return rule(9, {ab, bc}); }
  std::size_t mp(std::size_t a, std::size_t ab) { return rule(7, {a, ab}); }

 private:
  std::optional<std::size_t> lookup(const Formula& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t push(const Formula& f, Justification j) {
    proof_.lines.push_back({f, std::move(j)});
    index_.emplace(f.key(), proof_.lines.size() - 1);
    return proof_.lines.size() - 1;
  }

  HilbertProof proof_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

// Lattice reasoning: atoms, bot and strict implications are opaque generators of
// a distributive lattice with bottom. F <= G is decided and proved by the usual
// normal-form recursion.

inline bool contains_disj_in_meet(const Formula& f) {
  if (f.is(Kind::Or)) return true;
  if (f.is(Kind::And)) return contains_disj_in_meet(f.lhs()) || contains_disj_in_meet(f.rhs());
  return false;
}

inline bool meet_has(const Formula& f, const Formula& g) {
  if (f == g) return true;
  if (f.is(Kind::And)) return meet_has(f.lhs(), g) || meet_has(f.rhs(), g);
  return false;
}

inline bool lattice_leq(const Formula& f, const Formula& g) {
  if (f == g || f.is_bottom()) return true;
  if (g.is(Kind::And)) return lattice_leq(f, g.lhs()) && lattice_leq(f, g.rhs());
  if (f.is(Kind::Or)) return lattice_leq(f.lhs(), g) && lattice_leq(f.rhs(), g);
  if (f.is(Kind::And) && contains_disj_in_meet(f)) {
    // Distribute one disjunction out of the meet.
    std::function<std::vector<Formula>(const Formula&)> dnf_split = [&](const Formula& h) -> std::vector<Formula> {
      if (h.is(Kind::Or)) return {h.lhs(), h.rhs()};
      if (h.is(Kind::And)) {
        if (contains_disj_in_meet(h.rhs())) {
          auto parts = dnf_split(h.rhs());
          return {Formula::conj(h.lhs(), parts[0]), Formula::conj(h.lhs(), parts[1])};
        }
        auto parts = dnf_split(h.lhs());
        return {Formula::conj(h.rhs(), parts[0]), Formula::conj(h.rhs(), parts[1])};
      }
      return {h};
    };
    auto parts = dnf_split(f);
    return lattice_leq(parts[0], g) && lattice_leq(parts[1], g);
  }
  if (meet_has(f, Formula::bottom())) return true;
  if (g.is(Kind::Or)) return lattice_leq(f, g.lhs()) || lattice_leq(f, g.rhs());
  return meet_has(f, g);
}

class LatticeProver {
 public:
  explicit LatticeProver(HilbertBuilder& b) : b_(b) {}

  /// Line proving f -> g; throws if f <= g fails in distributive lattices.
  std::size_t prove(const Formula& f, const Formula& g) {
    if (f == g) return b_.refl(f);
    if (f.is_bottom()) return b_.axiom(14, {{"A", g}});
    if (g.is(Kind::And)) return b_.rule(10, {prove(f, g.lhs()), prove(f, g.rhs())});
    if (f.is(Kind::Or)) return b_.rule(11, {prove(f.lhs(), g), prove(f.rhs(), g)});
    if (f.is(Kind::And) && contains_disj_in_meet(f)) {
      std::size_t lift = distribute(f);
      return b_.chain(lift, prove(b_.formula(lift).rhs(), g));
    }
    if (meet_has(f, Formula::bottom())) return b_.chain(project(f, Formula::bottom()), b_.axiom(14, {{"A", g}}));
    if (g.is(Kind::Or)) {
      if (lattice_leq(f, g.lhs())) return b_.chain(prove(f, g.lhs()), b_.axiom(1, {{"A", g.lhs()}, {"B", g.rhs()}}));
      if (lattice_leq(f, g.rhs())) return b_.chain(prove(f, g.rhs()), b_.axiom(2, {{"A", g.lhs()}, {"B", g.rhs()}}));
      throw std::logic_error("lattice: '" + print_formula(f) + "' does not entail '" + print_formula(g) + "'");
    }
    if (!meet_has(f, g))
      throw std::logic_error("lattice: '" + print_formula(f) + "' does not entail '" + print_formula(g) + "'");
    return project(f, g);
  }

 private:
  // f is a meet containing g as a leaf: f -> g by projections.
  std::size_t project(const Formula& f, const Formula& g) {
    if (f == g) return b_.refl(f);
    const std::map<std::string, Formula> s{{"A", f.lhs()}, {"B", f.rhs()}};
    if (meet_has(f.lhs(), g)) return b_.chain(b_.axiom(3, s), project(f.lhs(), g));
    return b_.chain(b_.axiom(4, s), project(f.rhs(), g));
  }

  // a & b -> b & a
  std::size_t swap(const Formula& f) {
    const std::map<std::string, Formula> s{{"A", f.lhs()}, {"B", f.rhs()}};
    return b_.rule(10, {b_.axiom(4, s), b_.axiom(3, s)});
  }

  // f (a meet containing a disjunction) -> x | y, by axiom 5 after moving the disjunction right.
  std::size_t distribute(const Formula& f) {
    if (f.is(Kind::Or)) return b_.refl(f);
    const Formula& a = f.lhs();
    const Formula& r = f.rhs();
    if (contains_disj_in_meet(r)) {
      std::size_t to_disj;  // a & r -> a & (x | y)
      Formula d = r;
      if (r.is(Kind::Or)) {
        to_disj = b_.refl(f);
      } else {
        std::size_t lr = distribute(r);
        d = b_.formula(lr).rhs();
        const std::map<std::string, Formula> s{{"A", a}, {"B", r}};
        to_disj = b_.rule(10, {b_.axiom(3, s), b_.chain(b_.axiom(4, s), lr)});
      }
      std::size_t ax5 = b_.axiom(5, {{"A", a}, {"B", d.lhs()}, {"C", d.rhs()}});
      return b_.chain(to_disj, ax5);
    }
    std::size_t sw = swap(f);
    return b_.chain(sw, distribute(b_.formula(sw).rhs()));
  }

  HilbertBuilder& b_;
};

}  // namespace detail

/// Whether f -> g holds by distributive-lattice reasoning alone.
inline bool lattice_entails(const Formula& f, const Formula& g) { return detail::lattice_leq(f, g); }

/// Assumption-free Hilbert proof of f -> g for a lattice-valid pair.
inline HilbertProof lattice_proof(const Formula& f, const Formula& g) {
  HilbertBuilder b;
  detail::LatticeProver lp(b);
  return b.finish(lp.prove(f, g));
}

/// The formula a sequent stands for: /\Gamma -> \/Delta, or \/Delta when Gamma is empty.
inline Formula hilbert_target(const FormulaList& gamma, const FormulaList& delta) {
  if (delta.empty()) throw std::invalid_argument("hilbert_target: empty succedent has no formula");
  if (gamma.empty()) return big_or(delta);
  return Formula::strict(big_and(gamma), big_or(delta));
}

// --- sequent derivation -> Hilbert proof -----------------------------------------

namespace detail {

class SequentCompiler {
 public:
  SequentCompiler() : lattice_(b_) {}

  std::size_t compile(const Derivation& d) {
    const Sequent& s = d.conclusion;
    for (const auto* side : {&s.ante, &s.succ})
      for (const auto& f : *side)
        if (!in_frm(f)) throw std::invalid_argument("sequent_to_hilbert: '" + print_formula(f) + "' is not in Frm");
    if (s.succ.empty()) throw std::invalid_argument("sequent_to_hilbert: empty succedent");
    const Formula target = hilbert_target(s.ante, s.succ);
    const bool closed = s.ante.empty();
    const Shape shape = rule_info(d.rule).shape;
    auto [pl, pr] = principal_formulas(d);

    switch (shape) {
      case Shape::Id:
      case Shape::LBot: return lattice_.prove(target.lhs(), target.rhs());
      case Shape::LAnd:
        // Antecedents of left rules are never empty.
        return bridge_left(compile(d.premises[0]), target.lhs());
      case Shape::LOr: {
        // Premises may list Delta in different orders; align the consequents first.
        std::size_t l = bridge_right(compile(d.premises[0]), target.rhs());
        std::size_t r = bridge_right(compile(d.premises[1]), target.rhs());
        std::size_t cases = b_.rule(11, {l, r});
        return bridge_left(cases, target.lhs());
      }
      case Shape::RAnd: {
        std::size_t l = compile(d.premises[0]), r = compile(d.premises[1]);
        if (closed) {
          std::size_t both = b_.rule(12, {l, r});
          return b_.mp(both, lattice_.prove(b_.formula(both), target));
        }
        l = bridge_left(l, target.lhs());
        r = bridge_left(r, target.lhs());
        return bridge_right(b_.rule(10, {l, r}), target.rhs());
      }
      case Shape::ROr: {
        std::size_t p = compile(d.premises[0]);
        if (closed) return b_.mp(p, lattice_.prove(b_.formula(p), target));
        return bridge_right(p, target.rhs());
      }
      case Shape::RArrow: {
        std::size_t p = compile(d.premises[0]);  // A -> B
        if (closed) return b_.mp(p, lattice_.prove(b_.formula(p), target));
        std::size_t af = b_.rule(8, {p}, Formula::strict(target.lhs(), b_.formula(p)));
        return bridge_right(af, target.rhs());
      }
      case Shape::LRArrow: {
        // Premise C=>D, A |- B. Inverting L=> gives (A |- B, C) and (D, A |- B).
        const Formula& cd = *pl;
        const Formula& ab = *pr;
        const Formula c = cd.lhs(), dd = cd.rhs(), a = ab.lhs(), b = ab.rhs();
        auto inv = invert_on(d.premises[0], Calculus::GWFN2, RuleId::LMat, Formula::material(c, dd));
        // 1. A -> C | B
        std::size_t s1 = bridge_right(compile(inv[0]), Formula::disj(c, b));
        // 2. A & D -> B
        std::size_t s2 = bridge_left(compile(inv[1]), Formula::conj(a, dd));
        // 3. (C -> D) -> (A -> B) by N2
        std::size_t n2 = b_.rule(13, {s1, s2});
        // 4. /\Gamma -> \/Delta
        return bridge_right(bridge_left(n2, target.lhs()), target.rhs());
      }
      default:
        throw std::invalid_argument(std::string("sequent_to_hilbert: rule ") + rule_name(d.rule) +
                                    " cannot occur in a derivation over Frm");
    }
  }

  HilbertBuilder& builder() { return b_; }

 private:
  // From x -> y get x2 -> y where x2 <= x.
  std::size_t bridge_left(std::size_t line, const Formula& x2) {
    const Formula x = b_.formula(line).lhs();
    if (x == x2) return line;
    return b_.chain(lattice_.prove(x2, x), line);
  }
  // From x -> y get x -> y2 where y <= y2.
  std::size_t bridge_right(std::size_t line, const Formula& y2) {
    const Formula y = b_.formula(line).rhs();
    if (y == y2) return line;
    return b_.chain(line, lattice_.prove(y, y2));
  }

  HilbertBuilder b_;
  LatticeProver lattice_;
};

}  // namespace detail

/// Assumption-free Hilbert proof of /\Gamma -> \/Delta (or \/Delta) from a
/// cut-free GWF_N2 derivation of Gamma |- Delta over Frm.
inline HilbertProof sequent_to_hilbert(const Derivation& d) {
  if (!is_cut_free(d)) throw std::invalid_argument("sequent_to_hilbert: derivation must be cut-free");
  detail::SequentCompiler c;
  std::size_t last = c.compile(d);
  return c.builder().finish(last);
}

// --- Hilbert proof -> sequent derivation -----------------------------------------

namespace detail {

inline Derivation axiom_derivation(int k, const Formula& inst) {
  constexpr Calculus G = Calculus::GWFN2;
  const Formula x = inst.lhs(), y = inst.rhs();
  Sequent goal{{x}, {y}};
  Derivation body;
  switch (k) {
    case 1:  // A |- A | B
      body = rule_node(RuleId::ROr, goal, std::nullopt, y, {derive_general_id(x, {}, {y.rhs()})});
      break;
    case 2:
      body = rule_node(RuleId::ROr, goal, std::nullopt, y, {derive_general_id(x, {}, {y.lhs()})});
      break;
    case 3:  // A & B |- A
      body = rule_node(RuleId::LAnd, goal, x, std::nullopt, {derive_general_id(x.lhs(), {x.rhs()}, {})});
      break;
    case 4:
      body = rule_node(RuleId::LAnd, goal, x, std::nullopt, {derive_general_id(x.rhs(), {x.lhs()}, {})});
      break;
    case 5: {  // A & (B | C) |- A & B | A & C
      const Formula a = x.lhs(), bc = x.rhs(), b = bc.lhs(), c = bc.rhs();
      const Formula ab = y.lhs(), ac = y.rhs();
      auto branch = [&](const Formula& side, const Formula& conj, const Formula& other) {
        // A, side |- conj, other with conj = A & side
        Sequent s{{a, side}, {conj, other}};
        auto l = derive_general_id(a, {side}, {other});
        auto r = derive_general_id(side, {a}, {other});
        return rule_node(RuleId::RAnd, s, std::nullopt, conj, {std::move(l), std::move(r)});
      };
      Sequent split{{a, bc}, {ab, ac}};
      auto lor = rule_node(RuleId::LOr, split, bc, std::nullopt, {branch(b, ab, ac), branch(c, ac, ab)});
      auto ror = rule_node(RuleId::ROr, Sequent{{a, bc}, {y}}, std::nullopt, y, {std::move(lor)});
      body = rule_node(RuleId::LAnd, goal, x, std::nullopt, {std::move(ror)});
      break;
    }
    case 6: body = derive_general_id(x, {}, {}); break;
    case 14: body = make_leaf(goal, G); break;
    default: throw std::invalid_argument("no axiom " + std::to_string(k));
  }
  return rule_node(RuleId::RStrict, Sequent{{}, {inst}}, std::nullopt, inst, {std::move(body)});
}

inline Derivation cut(const Derivation& left, const Derivation& right, const Formula& f) {
  return eliminate_cut({left, right, f});
}

inline Derivation close_arrow(Derivation premise, const Formula& arrow) {
  return rule_node(RuleId::RStrict, Sequent{{}, {arrow}}, std::nullopt, arrow, {std::move(premise)});
}

}  // namespace detail

/// Cut-free GWF_N2 derivation of "|- F" for every line F of an assumption-free proof.
inline std::vector<Derivation> hilbert_lines_to_sequents(const HilbertProof& p) {
  check_hilbert(p, {});
  std::vector<Derivation> out;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    const Formula& f = line.formula;
    const auto& j = line.just;
    if (j.kind == JustKind::Axiom) {
      out.push_back(detail::axiom_derivation(j.number, f));
      continue;
    }
    auto prem = [&](std::size_t k) -> const Derivation& { return out[j.refs[k]]; };
    auto pf = [&](std::size_t k) -> const Formula& { return p.lines[j.refs[k]].formula; };
    switch (j.number) {
      case 7:  // |- A and A |- B, cut on A
        out.push_back(detail::cut(prem(0), unbox_arrow(prem(1)), pf(0)));
        break;
      case 8:
        out.push_back(detail::close_arrow(weaken(prem(0), Side::Left, f.lhs()), f));
        break;
      case 9:
        out.push_back(detail::close_arrow(detail::cut(unbox_arrow(prem(0)), unbox_arrow(prem(1)), pf(0).rhs()), f));
        break;
      case 10: {
        Sequent s{{f.lhs()}, {f.rhs()}};
        out.push_back(detail::close_arrow(
            rule_node(RuleId::RAnd, s, std::nullopt, f.rhs(), {unbox_arrow(prem(0)), unbox_arrow(prem(1))}), f));
        break;
      }
      case 11: {
        Sequent s{{f.lhs()}, {f.rhs()}};
        out.push_back(detail::close_arrow(
            rule_node(RuleId::LOr, s, f.lhs(), std::nullopt, {unbox_arrow(prem(0)), unbox_arrow(prem(1))}), f));
        break;
      }
      case 12:
        out.push_back(rule_node(RuleId::RAnd, Sequent{{}, {f}}, std::nullopt, f, {prem(0), prem(1)}));
        break;
      case 13: {
        // From |- C -> A | D and |- C & B -> D to |- (A -> B) -> (C -> D).
        const Formula ab = f.lhs(), cd = f.rhs();
        const Formula a = ab.lhs(), b = ab.rhs(), c = cd.lhs(), d = cd.rhs();
        auto p1 = invert_on(unbox_arrow(prem(0)), Calculus::GWFN2, RuleId::ROr, pf(0).rhs())[0];  // C |- A, D
        auto p2 = invert_on(unbox_arrow(prem(1)), Calculus::GWFN2, RuleId::LAnd, pf(1).lhs())[0];  // C, B |- D
        const Formula mat = Formula::material(a, b);
        auto lmat = rule_node(RuleId::LMat, Sequent{{mat, c}, {d}}, mat, std::nullopt, {std::move(p1), std::move(p2)});
        auto lr = rule_node(RuleId::LRStrict, Sequent{{ab}, {cd}}, ab, cd, {std::move(lmat)});
        out.push_back(detail::close_arrow(std::move(lr), f));
        break;
      }
      default: throw std::logic_error("hilbert_to_sequent: unexpected rule");
    }
  }
  return out;
}

/// Cut-free GWF_N2 derivation of Gamma |- Delta from an assumption-free proof of
/// /\Gamma -> \/Delta (or of \/Delta when Gamma is empty).
inline Derivation hilbert_to_sequent(const HilbertProof& p, const FormulaList& gamma, const FormulaList& delta) {
  const Formula target = hilbert_target(gamma, delta);
  for (const auto* side : {&gamma, &delta})
    for (const auto& f : *side)
      if (!in_frm(f)) throw std::invalid_argument("hilbert_to_sequent: '" + print_formula(f) + "' is not in Frm");
  auto all = hilbert_lines_to_sequents(p);
  if (p.lines.back().formula != target)
    throw std::invalid_argument("hilbert_to_sequent: proof concludes '" + print_formula(p.lines.back().formula) +
                                "', expected '" + print_formula(target) + "'");
  Derivation d = all.back();
  if (!gamma.empty()) d = unbox_arrow(d);
  // Peel the right-nested conjunction and disjunction spines.
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
    d = invert_on(d, Calculus::GWFN2, RuleId::LAnd, big_and({gamma.begin() + static_cast<std::ptrdiff_t>(i), gamma.end()}))[0];
  for (std::size_t i = 0; i + 1 < delta.size(); ++i)
    d = invert_on(d, Calculus::GWFN2, RuleId::ROr, big_or({delta.begin() + static_cast<std::ptrdiff_t>(i), delta.end()}))[0];
  return with_conclusion(d, Sequent{gamma, delta}, Calculus::GWFN2);
}

/// (A |- B provable, |- A -> B provable) in GWF_N2.
inline std::pair<bool, bool> deduction_check(const Formula& a, const Formula& b, Prover* prover = nullptr) {
  std::optional<Prover> local;
  if (!prover) prover = &local.emplace(Calculus::GWFN2);
  return {prover->provable({{a}, {b}}), prover->provable({{}, {Formula::strict(a, b)}})};
}

}  // namespace subseq
