#pragma once

// Height-preserving structural transformations on cut-free derivations of the
// multi-succedent calculi (GWF_N2 and G3M_Nec) and cut elimination for GWF_N2.
// Left weakening also works on GWF^s_N2 derivations.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subseq/kernel.hpp"

namespace subseq {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonInvertible : public TransformError {
 public:
  using TransformError::TransformError;
};

namespace detail {

inline bool discards_context(RuleId r) {
  Shape s = rule_info(r).shape;
  return s == Shape::LRArrow || s == Shape::RArrow;
}

inline Sequent add_formulas(Sequent s, const FormulaList& left, const FormulaList& right) {
  s.ante = concat(std::move(s.ante), left);
  s.succ = concat(std::move(s.succ), right);
  return s;
}

inline Derivation weaken_rec(const Derivation& d, const FormulaList& left, const FormulaList& right) {
  Derivation out = d;
  // Appending keeps every principal index valid.
  out.conclusion = add_formulas(d.conclusion, left, right);
  if (discards_context(d.rule)) return out;
  if (rule_info(d.rule).shape == Shape::LMat && single_succedent(rule_info(d.rule).calculus)) {
    // Premise 1 of L=>^s has its own succedent; only the antecedent is shared.
    out.premises[0] = weaken_rec(d.premises[0], left, {});
    out.premises[1] = weaken_rec(d.premises[1], left, right);
    return out;
  }
  for (auto& p : out.premises) p = weaken_rec(p, left, right);
  return out;
}

}  // namespace detail

/// Adds `left` to the antecedent and `right` to the succedent of the endsequent.
/// Height is unchanged. Right weakening is rejected for the single-succedent calculus.
inline Derivation weaken_many(const Derivation& d, const FormulaList& left, const FormulaList& right) {
  if (single_succedent(rule_info(d.rule).calculus) && !right.empty())
    throw TransformError("weaken: right weakening is not available in the single-succedent calculus");
  if (rule_info(d.rule).shape == Shape::Cut) throw TransformError("weaken: input must be cut-free");
  return detail::weaken_rec(d, left, right);
}

inline Derivation weaken(const Derivation& d, Side side, const Formula& f) {
  return side == Side::Left ? weaken_many(d, {f}, {}) : weaken_many(d, {}, {f});
}

// --- inversion -------------------------------------------------------------------

namespace detail {

inline Side principal_side(Shape s) {
  switch (s) {
    case Shape::LAnd:
    case Shape::LOr:
    case Shape::LMat: return Side::Left;
    default: return Side::Right;
  }
}

inline std::vector<Derivation> invert_rec(const Derivation& d, Calculus c, RuleId rule, const Formula& f) {
  const Side side = principal_side(rule_info(rule).shape);
  Principal pr;
  (side == Side::Left ? pr.left : pr.right).push_back(locate(d.conclusion, side, f));
  auto r = rule_premises(c, rule, d.conclusion, pr);
  if (auto* why = std::get_if<std::string>(&r)) throw TransformError("invert: " + *why);
  auto targets = std::get<std::vector<Sequent>>(std::move(r));

  std::vector<Derivation> out;
  if (d.premises.empty()) {
    for (auto& t : targets) out.push_back(with_conclusion(d, std::move(t), c));
    return out;
  }
  auto [pl, pright] = principal_formulas(d);
  const auto& mine = side == Side::Left ? pl : pright;
  if (d.rule == rule && mine && *mine == f) {
    for (std::size_t k = 0; k < targets.size(); ++k) out.push_back(with_conclusion(d.premises[k], targets[k], c));
    return out;
  }
  if (discards_context(d.rule)) {
    for (auto& t : targets) out.push_back(with_conclusion(d, std::move(t), c));
    return out;
  }
  std::vector<std::vector<Derivation>> sub;
  for (const auto& p : d.premises) sub.push_back(invert_rec(p, c, rule, f));
  for (std::size_t k = 0; k < targets.size(); ++k) {
    std::vector<Derivation> prem;
    for (auto& s : sub) prem.push_back(std::move(s[k]));
    out.push_back(rule_node(d.rule, std::move(targets[k]), pl, pright, std::move(prem)));
  }
  return out;
}

}  // namespace detail

/// Derivations of the premises of `rule` applied at `principal` in the endsequent of d,
/// each no higher than d. LR->/R-> (and their modal counterparts) are not invertible.
inline std::vector<Derivation> invert(const Derivation& d, Calculus c, RuleId rule, const Principal& principal) {
  const RuleInfo& info = rule_info(rule);
  if (info.calculus != c) throw TransformError(std::string("invert: ") + info.name + " is not a rule of " + calculus_name(c));
  if (single_succedent(c)) throw TransformError("invert: only the multi-succedent calculi are supported");
  switch (info.shape) {
    case Shape::LAnd:
    case Shape::LOr:
    case Shape::LMat:
    case Shape::RAnd:
    case Shape::ROr:
    case Shape::RMat: break;
    default: throw NonInvertible(std::string("invert: rule ") + info.name + " is not invertible");
  }
  const Side side = detail::principal_side(info.shape);
  const auto& idx = side == Side::Left ? principal.left : principal.right;
  const auto& list = side_of(d.conclusion, side);
  if (idx.size() != 1 || idx[0] >= list.size()) throw TransformError("invert: principal position mismatch");
  return detail::invert_rec(d, c, rule, list[idx[0]]);
}

/// Convenience overload: invert on the first occurrence of f.
inline std::vector<Derivation> invert_on(const Derivation& d, Calculus c, RuleId rule, const Formula& f) {
  const Side side = detail::principal_side(rule_info(rule).shape);
  auto i = find_formula(side_of(d.conclusion, side), f);
  if (!i) throw TransformError("invert: formula not in endsequent");
  Principal pr;
  (side == Side::Left ? pr.left : pr.right).push_back(*i);
  return invert(d, c, rule, pr);
}

// --- contraction ---------------------------------------------------------------------

inline Derivation contract(const Derivation& d, Calculus c, Side side, const Formula& f);

namespace detail {

inline Derivation contract_principal(const Derivation& d, Calculus c, Sequent concl, const Formula& f) {
  const Shape shape = rule_info(d.rule).shape;
  const RuleId rule = d.rule;
  auto [pl, pr] = principal_formulas(d);
  std::vector<Derivation> prem;
  switch (shape) {
    case Shape::LAnd: {
      auto inv = invert_on(d.premises[0], c, rule, f)[0];
      inv = contract(inv, c, Side::Left, f.lhs());
      prem.push_back(contract(inv, c, Side::Left, f.rhs()));
      break;
    }
    case Shape::LOr:
      prem.push_back(contract(invert_on(d.premises[0], c, rule, f)[0], c, Side::Left, f.lhs()));
      prem.push_back(contract(invert_on(d.premises[1], c, rule, f)[1], c, Side::Left, f.rhs()));
      break;
    case Shape::LMat:
      prem.push_back(contract(invert_on(d.premises[0], c, rule, f)[0], c, Side::Right, f.lhs()));
      prem.push_back(contract(invert_on(d.premises[1], c, rule, f)[1], c, Side::Left, f.rhs()));
      break;
    case Shape::RAnd:
      prem.push_back(contract(invert_on(d.premises[0], c, rule, f)[0], c, Side::Right, f.lhs()));
      prem.push_back(contract(invert_on(d.premises[1], c, rule, f)[1], c, Side::Right, f.rhs()));
      break;
    case Shape::ROr: {
      auto inv = invert_on(d.premises[0], c, rule, f)[0];
      inv = contract(inv, c, Side::Right, f.lhs());
      prem.push_back(contract(inv, c, Side::Right, f.rhs()));
      break;
    }
    case Shape::RMat: {
      auto inv = invert_on(d.premises[0], c, rule, f)[0];
      inv = contract(inv, c, Side::Left, f.lhs());
      prem.push_back(contract(inv, c, Side::Right, f.rhs()));
      break;
    }
    default: throw TransformError("contract: unexpected principal rule");
  }
  return rule_node(rule, std::move(concl), pl, pr, std::move(prem));
}

}  // namespace detail

/// Removes one of (at least) two copies of f from the given side, without
/// increasing the height.
inline Derivation contract(const Derivation& d, Calculus c, Side side, const Formula& f) {
  if (single_succedent(c)) throw TransformError("contract: only the multi-succedent calculi are supported");
  if (rule_info(d.rule).shape == Shape::Cut) throw TransformError("contract: input must be cut-free");
  if (count_formula(side_of(d.conclusion, side), f) < 2)
    throw TransformError("contract: '" + print_formula(f) + "' is not duplicated on that side");
  Sequent concl = d.conclusion;
  {
    auto& list = side_of(concl, side);
    // Drop the last copy; positions are re-located below anyway.
    for (std::size_t i = list.size(); i-- > 0;)
      if (list[i] == f) {
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
  }
  if (d.premises.empty() || detail::discards_context(d.rule)) return with_conclusion(d, std::move(concl), c);

  auto [pl, pr] = principal_formulas(d);
  const auto& mine = side == Side::Left ? pl : pr;
  if (mine && *mine == f) return detail::contract_principal(d, c, std::move(concl), f);

  std::vector<Derivation> prem;
  for (const auto& p : d.premises) prem.push_back(contract(p, c, side, f));
  return rule_node(d.rule, std::move(concl), pl, pr, std::move(prem));
}

/// Contracts one copy of each listed formula.
inline Derivation contract_each(Derivation d, Calculus c, Side side, const FormulaList& fs) {
  for (const auto& f : fs) d = contract(d, c, side, f);
  return d;
}

// --- unboxing --------------------------------------------------------------------------

/// From a GWF_N2 derivation of "|- A -> B" obtain one of "A |- B" (no higher).
inline Derivation unbox_arrow(const Derivation& d) {
  const Sequent& s = d.conclusion;
  if (!s.ante.empty() || s.succ.size() != 1 || !s.succ[0].is(Kind::StrictImp))
    throw TransformError("unbox_arrow: endsequent must be exactly '|- A -> B', got '" + print_sequent(s) + "'");
  // With an empty antecedent the only rule that can conclude the sequent is R->.
  if (d.rule != RuleId::RStrict) throw TransformError("unbox_arrow: last rule is not R->");
  return d.premises[0];
}

// --- cut elimination --------------------------------------------------------------------

struct CutInstance {
  Derivation left;   // Gamma |- D, Delta
  Derivation right;  // D, Gamma' |- Delta'
  Formula cut_formula;

  int cut_height() const { return left.height() + right.height(); }
};

/// Instrumentation for eliminate_cut: every recursive call must strictly
/// decrease (weight of cut formula, cut-height) lexicographically.
struct CutTrace {
  std::size_t calls = 0;
  std::size_t violations = 0;
  int max_depth = 0;
};

namespace detail {

struct CutMeasure {
  int weight;
  int cut_height;
  bool operator<(const CutMeasure& o) const {
    return weight < o.weight || (weight == o.weight && cut_height < o.cut_height);
  }
};

inline bool principal_on(const Derivation& d, Side side, const Formula& f) {
  if (d.premises.empty()) return false;
  auto [l, r] = principal_formulas(d);
  const auto& m = side == Side::Left ? l : r;
  return m && *m == f;
}

class CutEliminator {
 public:
  explicit CutEliminator(CutTrace* trace) : trace_(trace) {}

  Derivation run(const Derivation& L, const Derivation& R, const Formula& D, std::optional<CutMeasure> parent,
                 int depth) {
    constexpr Calculus c = Calculus::GWFN2;
    const CutMeasure m{weight(D), L.height() + R.height()};
    if (trace_) {
      ++trace_->calls;
      trace_->max_depth = std::max(trace_->max_depth, depth);
      if (parent && !(m < *parent)) ++trace_->violations;
    }
    auto gamma = L.conclusion.ante;
    auto delta_opt = erase_one(L.conclusion.succ, D);
    auto gamma2_opt = erase_one(R.conclusion.ante, D);
    if (!delta_opt || !gamma2_opt) throw TransformError("eliminate_cut: cut formula missing from a premise");
    const FormulaList& delta = *delta_opt;
    const FormulaList& gamma2 = *gamma2_opt;
    const FormulaList& delta2 = R.conclusion.succ;
    Sequent target{concat(gamma, gamma2), concat(delta, delta2)};

    // Left premise initial.
    if (L.premises.empty()) {
      if (is_initial({gamma, delta}, c)) return make_leaf(target, c);
      // id whose principal atom is the cut formula: weaken the right premise.
      return with_target(weaken_many(R, *erase_one(gamma, D), delta), target);
    }
    // Right premise initial.
    if (R.premises.empty()) {
      if (is_initial({gamma2, delta2}, c)) return make_leaf(target, c);
      if (D.is_atom()) return with_target(weaken_many(L, gamma2, *erase_one(delta2, D)), target);
      // D = bot is never principal on the left premise: commute below.
    }

    if (!principal_on(L, Side::Right, D)) return commute_left(L, R, D, target, m, depth);
    if (!principal_on(R, Side::Left, D)) return commute_right(L, R, D, target, m, depth);

    switch (D.kind()) {
      case Kind::And: {
        // L: R& over (G |- Dl, X) (G |- Dl, Y); R: L& over (X, Y, G' |- D')
        auto c1 = run(L.premises[0], R.premises[0], D.lhs(), m, depth + 1);
        auto c2 = run(L.premises[1], c1, D.rhs(), m, depth + 1);
        c2 = contract_each(c2, c, Side::Left, gamma);
        return with_target(contract_each(c2, c, Side::Right, delta), target);
      }
      case Kind::Or: {
        auto c1 = run(L.premises[0], R.premises[0], D.lhs(), m, depth + 1);
        auto c2 = run(c1, R.premises[1], D.rhs(), m, depth + 1);
        c2 = contract_each(c2, c, Side::Left, gamma2);
        return with_target(contract_each(c2, c, Side::Right, delta2), target);
      }
      case Kind::MatImp: {
        // L: R=> over (A, G |- Dl, B); R: L=> over (G' |- D', A) (B, G' |- D')
        auto c1 = run(R.premises[0], L.premises[0], D.lhs(), m, depth + 1);
        auto c2 = run(c1, R.premises[1], D.rhs(), m, depth + 1);
        c2 = contract_each(c2, c, Side::Left, gamma2);
        return with_target(contract_each(c2, c, Side::Right, delta2), target);
      }
      case Kind::StrictImp: {
        // The left premise ends in LR-> or R-> with premise (Pi, E |- F); the right one in
        // LR-> with premise (E => F, A |- B). Cut on E => F instead, then re-apply.
        const Derivation& lp = L.premises[0];
        const Formula mat = Formula::material(D.lhs(), D.rhs());
        Sequent rm_concl{*erase_one(lp.conclusion.ante, D.lhs()), {mat}};
        Derivation rm = rule_node(RuleId::RMat, rm_concl, std::nullopt, mat, {lp});
        auto inner = run(rm, R.premises[0], mat, m, depth + 1);
        auto [rl, rr] = principal_formulas(R);
        if (L.rule == RuleId::LRStrict) {
          auto [ll, lr] = principal_formulas(L);
          return rule_node(RuleId::LRStrict, target, ll, rr, {std::move(inner)});
        }
        return rule_node(RuleId::RStrict, target, std::nullopt, rr, {std::move(inner)});
      }
      default: break;
    }
    throw TransformError("eliminate_cut: no reduction for cut formula '" + print_formula(D) + "'");
  }

 private:
  static Derivation with_target(Derivation d, const Sequent& target) {
    if (!multiset_equal(d.conclusion, target)) throw std::logic_error("eliminate_cut: endsequent drifted");
    return d;
  }

  Derivation commute_left(const Derivation& L, const Derivation& R, const Formula& D, const Sequent& target,
                          CutMeasure m, int depth) {
    if (discards_context(L.rule)) return with_conclusion(L, target, Calculus::GWFN2);
    std::vector<Derivation> prem;
    for (const auto& p : L.premises) prem.push_back(run(p, R, D, m, depth + 1));
    auto [l, r] = principal_formulas(L);
    return rule_node(L.rule, target, l, r, std::move(prem));
  }

  Derivation commute_right(const Derivation& L, const Derivation& R, const Formula& D, const Sequent& target,
                           CutMeasure m, int depth) {
    if (discards_context(R.rule)) return with_conclusion(R, target, Calculus::GWFN2);
    std::vector<Derivation> prem;
    for (const auto& p : R.premises) prem.push_back(run(L, p, D, m, depth + 1));
    auto [l, r] = principal_formulas(R);
    return rule_node(R.rule, target, l, r, std::move(prem));
  }

  CutTrace* trace_;
};

}  // namespace detail

/// Cut-free GWF_N2 derivation of Gamma, Gamma' |- Delta, Delta' from cut-free
/// derivations of the two cut premises.
inline Derivation eliminate_cut(const CutInstance& cut, CutTrace* trace = nullptr) {
  for (const auto* d : {&cut.left, &cut.right}) {
    if (!is_cut_free(*d)) throw TransformError("eliminate_cut: premises must be cut-free");
    try {
      check_derivation(*d, Calculus::GWFN2);
    } catch (const KernelError& e) {
      throw TransformError(std::string("eliminate_cut: invalid premise derivation: ") + e.what());
    }
  }
  if (!find_formula(cut.left.conclusion.succ, cut.cut_formula) ||
      !find_formula(cut.right.conclusion.ante, cut.cut_formula))
    throw TransformError("eliminate_cut: cut formula does not occur in the cut positions");
  detail::CutEliminator elim(trace);
  return elim.run(cut.left, cut.right, cut.cut_formula, std::nullopt, 0);
}

/// Removes every Cut node, topmost first.
inline Derivation eliminate_all_cuts(const Derivation& d, CutTrace* trace = nullptr) {
  Derivation out = d;
  for (auto& p : out.premises) p = eliminate_all_cuts(p, trace);
  if (out.rule != RuleId::Cut) return out;
  const Formula D = out.premises[0].conclusion.succ.at(out.principal.right.at(0));
  Derivation r = eliminate_cut({out.premises[0], out.premises[1], D}, trace);
  return with_conclusion(r, out.conclusion, Calculus::GWFN2);
}

}  // namespace subseq
