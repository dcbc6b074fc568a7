#pragma once

// Backward proof search for the multi-succedent calculi. Every rule of GWF_N2
// and G3M_Nec lowers the total weight of the sequent, so plain memoised
// recursion terminates without a loop check.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subseq/kernel.hpp"

namespace subseq {

struct SearchOutcome {
  bool proved = false;
  std::optional<Derivation> proof;
  /// NotProvable: sequents where the search got stuck (non-initial, no rule applies).
  std::vector<Sequent> failed_leaves;

  explicit operator bool() const { return proved; }
};

inline bool invertible_shape(Shape s) {
  switch (s) {
    case Shape::LAnd:
    case Shape::RAnd:
    case Shape::LOr:
    case Shape::ROr:
    case Shape::LMat:
    case Shape::RMat: return true;
    default: return false;
  }
}

/// Reusable decision procedure; the memo table survives across calls.
///
/// Strategy: initial sequents first; otherwise the first invertible rule (by
/// rule order, then position) is applied and no alternative is tried, since
/// its premises are provable whenever the conclusion is. When no invertible
/// rule applies, every LR->/R-> instance is tried and the lowest proof kept.
class Prover {
 public:
  explicit Prover(Calculus c) : calc_(c) {
    if (single_succedent(c)) throw std::invalid_argument("Prover: use prove_single for the single-succedent calculus");
  }

  Calculus calculus() const { return calc_; }

  bool provable(const Sequent& s) { return solve(s).provable; }

  SearchOutcome prove(const Sequent& s) {
    SearchOutcome out;
    if (auto v = sequent_violation(calc_, s)) throw std::invalid_argument(*v);
    out.proved = solve(s).provable;
    if (out.proved) {
      out.proof = build(s);
    } else {
      collect_failures(s, out.failed_leaves);
    }
    return out;
  }

  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct Entry {
    bool provable = false;
    int height = 0;
    RuleId rule = RuleId::Id;
    std::optional<Formula> left, right;
  };

  const Entry& solve(const Sequent& s) {
    std::string key = canonical_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Entry e = compute(s);
    return memo_.emplace(std::move(key), std::move(e)).first->second;
  }

  static std::pair<std::optional<Formula>, std::optional<Formula>> formulas_at(const Sequent& s, const Principal& pr) {
    std::optional<Formula> l, r;
    if (!pr.left.empty()) l = s.ante[pr.left[0]];
    if (!pr.right.empty()) r = s.succ[pr.right[0]];
    return {l, r};
  }

  Entry compute(const Sequent& s) {
    Entry e;
    if (auto init = is_initial(s, calc_)) {
      e.provable = true;
      e.rule = init->first;
      std::tie(e.left, e.right) = formulas_at(s, init->second);
      return e;
    }
    auto apps = applicable_rules(s, calc_);
    for (const auto& app : apps) {
      if (!invertible_shape(rule_info(app.rule).shape)) continue;
      int h = 0;
      bool ok = true;
      for (const auto& p : app.premises) {
        const Entry& pe = solve(p);
        if (!pe.provable) {
          ok = false;
          break;
        }
        h = std::max(h, pe.height);
      }
      e.rule = app.rule;
      std::tie(e.left, e.right) = formulas_at(s, app.principal);
      e.provable = ok;
      e.height = h + 1;
      return e;
    }
    // Only context-discarding rules remain; their premises do not depend on side formulas,
    // so identical (left, right) formula pairs are tried once.
    std::vector<std::string> seen;
    for (const auto& app : apps) {
      auto [l, r] = formulas_at(s, app.principal);
      std::string tag = std::to_string(static_cast<int>(app.rule)) + (l ? l->key() : "") + "/" + (r ? r->key() : "");
      if (std::find(seen.begin(), seen.end(), tag) != seen.end()) continue;
      seen.push_back(tag);
      const Entry& pe = solve(app.premises[0]);
      if (pe.provable && (!e.provable || pe.height + 1 < e.height)) {
        e.provable = true;
        e.height = pe.height + 1;
        e.rule = app.rule;
        e.left = l;
        e.right = r;
      }
    }
    return e;
  }

  Derivation build(const Sequent& s) {
    const Entry e = solve(s);
    Principal pr;
    if (e.left) pr.left.push_back(locate(s, Side::Left, *e.left));
    if (e.right) pr.right.push_back(locate(s, Side::Right, *e.right));
    if (rule_info(e.rule).arity == 0) return Derivation{s, e.rule, pr, {}};
    auto prem = std::get<std::vector<Sequent>>(rule_premises(calc_, e.rule, s, pr));
    std::vector<Derivation> sub;
    for (const auto& p : prem) sub.push_back(build(p));
    return Derivation{s, e.rule, pr, std::move(sub)};
  }

  void collect_failures(const Sequent& s, std::vector<Sequent>& out, std::size_t cap = 64) {
    if (out.size() >= cap || solve(s).provable) return;
    auto apps = applicable_rules(s, calc_);
    if (apps.empty()) {
      out.push_back(s);
      return;
    }
    for (const auto& app : apps) {
      if (invertible_shape(rule_info(app.rule).shape)) {
        for (const auto& p : app.premises) collect_failures(p, out, cap);
        return;
      }
    }
    for (const auto& app : apps) collect_failures(app.premises[0], out, cap);
  }

  Calculus calc_;
  std::unordered_map<std::string, Entry> memo_;
};

/// One-shot search in GWF_N2 or G3M_Nec.
inline SearchOutcome prove(const Sequent& s, Calculus c = Calculus::GWFN2) {
  Prover p(c);
  return p.prove(s);
}

/// X, Gamma |- Delta, X by structural recursion on X (no search). In G3M_Nec the
/// modal clause goes through LR_M[].
inline Derivation derive_general_id(const Formula& x, const FormulaList& gamma, const FormulaList& delta,
                                    Calculus c = Calculus::GWFN2) {
  if (single_succedent(c)) throw std::invalid_argument("derive_general_id: multi-succedent calculi only");
  Sequent concl{concat({x}, gamma), concat(delta, {x})};
  auto rule = [c](Shape s) { return *rule_for(c, s); };
  switch (x.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return make_leaf(concl, c);
    case Kind::And: {
      // L& then R&: X, Y, Gamma |- Delta, X&Y
      Sequent mid{concat({x.lhs(), x.rhs()}, gamma), concat(delta, {x})};
      auto a = derive_general_id(x.lhs(), concat({x.rhs()}, gamma), delta, c);
      auto b = derive_general_id(x.rhs(), concat({x.lhs()}, gamma), delta, c);
      auto r = rule_node(rule(Shape::RAnd), mid, std::nullopt, x, {std::move(a), std::move(b)});
      return rule_node(rule(Shape::LAnd), concl, x, std::nullopt, {std::move(r)});
    }
    case Kind::Or: {
      // R| then L|: X|Y, Gamma |- Delta, X, Y
      Sequent mid{concl.ante, concat(delta, {x.lhs(), x.rhs()})};
      auto a = derive_general_id(x.lhs(), gamma, concat(delta, {x.rhs()}), c);
      auto b = derive_general_id(x.rhs(), gamma, concat(delta, {x.lhs()}), c);
      auto l = rule_node(rule(Shape::LOr), mid, x, std::nullopt, {std::move(a), std::move(b)});
      return rule_node(rule(Shape::ROr), concl, std::nullopt, x, {std::move(l)});
    }
    case Kind::MatImp: {
      // R=> then L=>: A, A=>B, Gamma |- Delta, B
      Sequent mid{concat({x.lhs(), x}, gamma), concat(delta, {x.rhs()})};
      auto a = derive_general_id(x.lhs(), gamma, concat(delta, {x.rhs()}), c);
      auto b = derive_general_id(x.rhs(), concat({x.lhs()}, gamma), delta, c);
      auto l = rule_node(rule(Shape::LMat), mid, x, std::nullopt, {std::move(a), std::move(b)});
      return rule_node(rule(Shape::RMat), concl, std::nullopt, x, {std::move(l)});
    }
    case Kind::StrictImp: {
      // LR-> over A=>B, A |- B, which is L=> over (A |- B, A) and (B, A |- B).
      const Formula m = Formula::material(x.lhs(), x.rhs());
      Sequent prem{{m, x.lhs()}, {x.rhs()}};
      auto a = derive_general_id(x.lhs(), {}, {x.rhs()}, c);
      auto b = derive_general_id(x.rhs(), {x.lhs()}, {}, c);
      auto l = rule_node(rule(Shape::LMat), prem, m, std::nullopt, {std::move(a), std::move(b)});
      return rule_node(rule(Shape::LRArrow), concl, x, x, {std::move(l)});
    }
    case Kind::Box: {
      auto inner = derive_general_id(x.body(), {}, {}, c);
      return rule_node(rule(Shape::LRArrow), concl, x, x, {std::move(inner)});
    }
  }
  throw std::logic_error("derive_general_id: unknown connective");
}

}  // namespace subseq
