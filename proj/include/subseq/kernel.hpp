#pragma once

// Rule tables of GWF_N2, GWF^s_N2 and G3M_Nec, read both ways: forward as a
// derivation checker, backward as the list of rule applications to a sequent.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subseq/derivation.hpp"
#include "subseq/text.hpp"

namespace subseq {

class KernelError : public std::runtime_error {
 public:
  enum class Kind { RuleMismatch, StratumError, WrongCalculus };

  KernelError(Kind kind, std::string path, const std::string& reason)
      : std::runtime_error(std::string(kind_name(kind)) + " at " + path + ": " + reason),
        kind_(kind),
        path_(std::move(path)) {}

  Kind kind() const { return kind_; }
  const std::string& path() const { return path_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::RuleMismatch: return "RuleMismatch";
      case Kind::StratumError: return "StratumError";
      case Kind::WrongCalculus: return "WrongCalculus";
    }
    return "?";
  }

 private:
  Kind kind_;
  std::string path_;
};

inline bool formula_allowed(Calculus c, const Formula& f) {
  return c == Calculus::G3MNec ? in_modal_language(f) : in_frm2(f);
}

/// Stratum check for a whole sequent; returns a reason on failure.
inline std::optional<std::string> sequent_violation(Calculus c, const Sequent& s) {
  for (const auto* side : {&s.ante, &s.succ})
    for (const auto& f : *side)
      if (!formula_allowed(c, f))
        return "formula '" + print_formula(f) + "' is outside the language of " + calculus_name(c);
  if (single_succedent(c) && s.succ.size() != 1) return "single-succedent sequent needs exactly one succedent formula";
  return std::nullopt;
}

struct RuleApplication {
  RuleId rule;
  Principal principal;
  std::vector<Sequent> premises;
};

namespace detail {

inline FormulaList prepend(FormulaList rest, std::initializer_list<Formula> front) {
  FormulaList out(front);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// The "arrow" connective: -> in GWF calculi, [] in G3M_Nec.
inline bool is_arrow(Calculus c, const Formula& f) {
  return c == Calculus::G3MNec ? f.is(Kind::Box) : f.is(Kind::StrictImp);
}

}  // namespace detail

/// Premises of a logical rule instance, or a reason why the instance is malformed.
inline std::variant<std::vector<Sequent>, std::string> rule_premises(Calculus c, RuleId rule,
                                                                      const Sequent& s,
                                                                      const Principal& pr) {
  using Result = std::variant<std::vector<Sequent>, std::string>;
  const RuleInfo& info = rule_info(rule);
  if (info.calculus != c) return Result(std::string("rule ") + info.name + " is not a rule of " + calculus_name(c));
  const bool single = single_succedent(c);

  auto want = [&](std::size_t nl, std::size_t nr) -> std::optional<std::string> {
    if (pr.left.size() != nl || pr.right.size() != nr)
      return std::string("rule ") + info.name + " expects " + std::to_string(nl) + " left and " +
             std::to_string(nr) + " right principal positions";
    for (auto i : pr.left)
      if (i >= s.ante.size()) return std::string("left principal position out of range");
    for (auto j : pr.right)
      if (j >= s.succ.size()) return std::string("right principal position out of range");
    return std::nullopt;
  };

  auto left_shape = [&](Kind k) -> std::optional<std::string> {
    if (auto e = want(1, 0)) return e;
    if (!s.ante[pr.left[0]].is(k))
      return std::string("principal formula '") + print_formula(s.ante[pr.left[0]]) + "' has the wrong shape for " + info.name;
    return std::nullopt;
  };
  auto right_shape = [&](Kind k) -> std::optional<std::string> {
    if (auto e = want(0, 1)) return e;
    if (!s.succ[pr.right[0]].is(k))
      return std::string("principal formula '") + print_formula(s.succ[pr.right[0]]) + "' has the wrong shape for " + info.name;
    return std::nullopt;
  };

  std::vector<Sequent> out;
  switch (info.shape) {
    case Shape::Id: {
      if (auto e = want(1, 1)) return Result(*e);
      const Formula& a = s.ante[pr.left[0]];
      if (!a.is_atom()) return Result(std::string("id requires an atomic principal formula"));
      if (s.succ[pr.right[0]] != a) return Result(std::string("id principal formulas differ"));
      return Result(out);
    }
    case Shape::LBot: {
      if (auto e = want(1, 0)) return Result(*e);
      if (!s.ante[pr.left[0]].is_bottom()) return Result(std::string("Lbot principal formula is not bot"));
      return Result(out);
    }
    case Shape::LAnd: {
      if (auto e = left_shape(Kind::And)) return Result(*e);
      const Formula& f = s.ante[pr.left[0]];
      out.push_back({detail::prepend(erase_at(s.ante, pr.left[0]), {f.lhs(), f.rhs()}), s.succ});
      return Result(out);
    }
    case Shape::LOr: {
      if (auto e = left_shape(Kind::Or)) return Result(*e);
      const Formula& f = s.ante[pr.left[0]];
      FormulaList rest = erase_at(s.ante, pr.left[0]);
      out.push_back({detail::prepend(rest, {f.lhs()}), s.succ});
      out.push_back({detail::prepend(rest, {f.rhs()}), s.succ});
      return Result(out);
    }
    case Shape::LMat: {
      if (auto e = left_shape(Kind::MatImp)) return Result(*e);
      const Formula& f = s.ante[pr.left[0]];
      FormulaList rest = erase_at(s.ante, pr.left[0]);
      if (single) {
        // The principal formula stays in the first premise.
        out.push_back({s.ante, {f.lhs()}});
      } else {
        out.push_back({rest, concat(s.succ, {f.lhs()})});
      }
      out.push_back({detail::prepend(rest, {f.rhs()}), s.succ});
      return Result(out);
    }
    case Shape::RAnd: {
      if (auto e = right_shape(Kind::And)) return Result(*e);
      const Formula& f = s.succ[pr.right[0]];
      FormulaList rest = erase_at(s.succ, pr.right[0]);
      out.push_back({s.ante, concat(rest, {f.lhs()})});
      out.push_back({s.ante, concat(rest, {f.rhs()})});
      return Result(out);
    }
    case Shape::ROr: {
      if (auto e = right_shape(Kind::Or)) return Result(*e);
      const Formula& f = s.succ[pr.right[0]];
      out.push_back({s.ante, concat(erase_at(s.succ, pr.right[0]), {f.lhs(), f.rhs()})});
      return Result(out);
    }
    case Shape::ROrL:
    case Shape::ROrR: {
      if (auto e = right_shape(Kind::Or)) return Result(*e);
      const Formula& f = s.succ[pr.right[0]];
      out.push_back({s.ante, {info.shape == Shape::ROrL ? f.lhs() : f.rhs()}});
      return Result(out);
    }
    case Shape::RMat: {
      if (auto e = right_shape(Kind::MatImp)) return Result(*e);
      const Formula& f = s.succ[pr.right[0]];
      out.push_back({detail::prepend(s.ante, {f.lhs()}), concat(erase_at(s.succ, pr.right[0]), {f.rhs()})});
      return Result(out);
    }
    case Shape::LRArrow: {
      if (auto e = want(1, 1)) return Result(*e);
      const Formula& l = s.ante[pr.left[0]];
      const Formula& r = s.succ[pr.right[0]];
      if (!detail::is_arrow(c, l) || !detail::is_arrow(c, r))
        return Result(std::string(info.name) + " needs arrow principal formulas on both sides");
      if (c == Calculus::G3MNec) {
        out.push_back({{l.body()}, {r.body()}});
      } else {
        out.push_back({{Formula::material(l.lhs(), l.rhs()), r.lhs()}, {r.rhs()}});
      }
      return Result(out);
    }
    case Shape::RArrow: {
      if (auto e = want(0, 1)) return Result(*e);
      const Formula& r = s.succ[pr.right[0]];
      if (!detail::is_arrow(c, r)) return Result(std::string(info.name) + " needs an arrow principal formula");
      if (c == Calculus::G3MNec) {
        out.push_back({{}, {r.body()}});
      } else {
        out.push_back({{r.lhs()}, {r.rhs()}});
      }
      return Result(out);
    }
    case Shape::Cut: return Result(std::string("cut has no backward reading"));
  }
  return Result(std::string("unknown rule"));
}

/// Matches s against the initial sequents of c (id before Lbot).
inline std::optional<std::pair<RuleId, Principal>> is_initial(const Sequent& s, Calculus c) {
  if (single_succedent(c) && s.succ.size() != 1) return std::nullopt;
  for (std::size_t j = 0; j < s.succ.size(); ++j) {
    if (!s.succ[j].is_atom()) continue;
    if (auto i = find_formula(s.ante, s.succ[j]))
      return std::make_pair(*rule_for(c, Shape::Id), Principal{{*i}, {j}});
  }
  if (auto i = find_formula(s.ante, Formula::bottom()))
    return std::make_pair(*rule_for(c, Shape::LBot), Principal{{*i}, {}});
  return std::nullopt;
}

/// Every backward rule application to s, ordered by rule then by leftmost principal.
/// Initial sequents are reported by is_initial, not here.
inline std::vector<RuleApplication> applicable_rules(const Sequent& s, Calculus c) {
  std::vector<RuleApplication> out;
  for (const auto& info : rule_table()) {
    if (info.calculus != c || info.arity == 0 || info.shape == Shape::Cut) continue;
    std::vector<Principal> candidates;
    switch (info.shape) {
      case Shape::LAnd:
      case Shape::LOr:
      case Shape::LMat:
        for (std::size_t i = 0; i < s.ante.size(); ++i) candidates.push_back({{i}, {}});
        break;
      case Shape::RAnd:
      case Shape::ROr:
      case Shape::ROrL:
      case Shape::ROrR:
      case Shape::RMat:
      case Shape::RArrow:
        for (std::size_t j = 0; j < s.succ.size(); ++j) candidates.push_back({{}, {j}});
        break;
      case Shape::LRArrow:
        for (std::size_t i = 0; i < s.ante.size(); ++i)
          for (std::size_t j = 0; j < s.succ.size(); ++j) candidates.push_back({{i}, {j}});
        break;
      default: break;
    }
    for (auto& pr : candidates) {
      auto r = rule_premises(c, info.id, s, pr);
      if (auto* ps = std::get_if<std::vector<Sequent>>(&r)) out.push_back({info.id, std::move(pr), std::move(*ps)});
    }
  }
  return out;
}

struct CheckOptions {
  /// Accept Cut / Cut^s nodes ("structural-extended" mode).
  bool allow_cut = false;
};

namespace detail {

inline int check_node(const Derivation& d, Calculus c, const CheckOptions& opt, const std::string& path) {
  using K = KernelError::Kind;
  if (auto v = sequent_violation(c, d.conclusion)) throw KernelError(K::StratumError, path, *v);
  const RuleInfo& info = rule_info(d.rule);
  if (info.calculus != c) throw KernelError(K::WrongCalculus, path, std::string(info.name) + " is not a rule of " + calculus_name(c));
  if (static_cast<int>(d.premises.size()) != info.arity)
    throw KernelError(K::RuleMismatch, path,
                      std::string(info.name) + " takes " + std::to_string(info.arity) + " premise(s), got " +
                          std::to_string(d.premises.size()));

  if (info.shape == Shape::Cut) {
    if (!opt.allow_cut) throw KernelError(K::RuleMismatch, path, "cut is not a rule of the cut-free calculus");
    const Sequent& a = d.premises[0].conclusion;
    const Sequent& b = d.premises[1].conclusion;
    if (d.principal.right.size() != 1 || d.principal.left.size() != 1 || d.principal.right[0] >= a.succ.size() ||
        d.principal.left[0] >= b.ante.size())
      throw KernelError(K::RuleMismatch, path, "cut positions out of range");
    if (a.succ[d.principal.right[0]] != b.ante[d.principal.left[0]])
      throw KernelError(K::RuleMismatch, path, "cut formulas differ between premises");
    Sequent expected{concat(a.ante, erase_at(b.ante, d.principal.left[0])),
                     concat(erase_at(a.succ, d.principal.right[0]), b.succ)};
    if (!multiset_equal(expected, d.conclusion))
      throw KernelError(K::RuleMismatch, path, "cut conclusion is not the union of the premise contexts");
  } else {
    auto r = rule_premises(c, d.rule, d.conclusion, d.principal);
    if (auto* why = std::get_if<std::string>(&r)) throw KernelError(K::RuleMismatch, path, *why);
    const auto& expected = std::get<std::vector<Sequent>>(r);
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (!multiset_equal(expected[k], d.premises[k].conclusion))
        throw KernelError(K::RuleMismatch, path,
                          std::string(info.name) + " premise " + std::to_string(k) + " should be '" +
                              print_sequent(expected[k]) + "' but is '" + print_sequent(d.premises[k].conclusion) + "'");
  }
  int h = -1;
  for (std::size_t k = 0; k < d.premises.size(); ++k)
    h = std::max(h, check_node(d.premises[k], c, opt, path + "." + std::to_string(k)));
  return h + 1;
}

}  // namespace detail

/// Validates d against the rules of c and returns its height.
/// Throws KernelError naming the first offending node by its path ("root.0.1").
inline int check_derivation(const Derivation& d, Calculus c, CheckOptions opt = {}) {
  return detail::check_node(d, c, opt, "root");
}

inline bool accepts(const Derivation& d, Calculus c, CheckOptions opt = {}) {
  try {
    check_derivation(d, c, opt);
    return true;
  } catch (const KernelError&) {
    return false;
  }
}

/// Builds a node from a backward rule application and premise derivations.
inline Derivation make_node(const Sequent& conclusion, const RuleApplication& app, std::vector<Derivation> premises) {
  return Derivation{conclusion, app.rule, app.principal, std::move(premises)};
}

/// Index of f on the given side of s; throws if absent.
inline std::size_t locate(const Sequent& s, Side side, const Formula& f) {
  auto i = find_formula(side_of(s, side), f);
  if (!i) throw std::logic_error("locate: '" + print_formula(f) + "' not found in '" + print_sequent(s) + "'");
  return *i;
}

/// Principal formulas of d's last rule (empty optionals where the rule has none).
inline std::pair<std::optional<Formula>, std::optional<Formula>> principal_formulas(const Derivation& d) {
  std::optional<Formula> l, r;
  if (rule_info(d.rule).shape == Shape::Cut) return {l, r};
  if (!d.principal.left.empty()) l = d.conclusion.ante.at(d.principal.left[0]);
  if (!d.principal.right.empty()) r = d.conclusion.succ.at(d.principal.right[0]);
  return {l, r};
}

/// Node whose principal positions are found by formula equality in the conclusion.
inline Derivation rule_node(RuleId rule, Sequent conclusion, const std::optional<Formula>& left,
                            const std::optional<Formula>& right, std::vector<Derivation> premises) {
  Principal pr;
  if (left) pr.left.push_back(locate(conclusion, Side::Left, *left));
  if (right) pr.right.push_back(locate(conclusion, Side::Right, *right));
  return Derivation{std::move(conclusion), rule, std::move(pr), std::move(premises)};
}

/// Same rule and premises as d, new conclusion (principal positions re-located).
/// For initial sequents the leaf is rebuilt from scratch.
inline Derivation with_conclusion(const Derivation& d, Sequent conclusion, Calculus c) {
  if (d.premises.empty()) {
    auto [l, r] = principal_formulas(d);
    // Keep the same principal atom when it survives; otherwise any initial match.
    if (l && find_formula(conclusion.ante, *l) && (!r || find_formula(conclusion.succ, *r)))
      return rule_node(d.rule, std::move(conclusion), l, r, {});
    auto init = is_initial(conclusion, c);
    if (!init) throw std::logic_error("with_conclusion: '" + print_sequent(conclusion) + "' is not initial");
    return Derivation{std::move(conclusion), init->first, init->second, {}};
  }
  auto [l, r] = principal_formulas(d);
  return rule_node(d.rule, std::move(conclusion), l, r, d.premises);
}

/// Leaf for an initial sequent; throws if s is not initial in c.
inline Derivation make_leaf(const Sequent& s, Calculus c) {
  auto init = is_initial(s, c);
  if (!init) throw std::logic_error("make_leaf: '" + print_sequent(s) + "' is not an initial sequent");
  return Derivation{s, init->first, init->second, {}};
}

}  // namespace subseq
