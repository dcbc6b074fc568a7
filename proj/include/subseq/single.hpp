#pragma once

// The single-succedent calculus GWF^s_N2: direct search, the translation of its
// derivations into GWF_N2, and the decision procedure that routes through GWF_N2.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subseq/search.hpp"
#include "subseq/transforms.hpp"

namespace subseq {

/// The input lies outside the fragment where single- and multi-succedent
/// provability are known to coincide, and the direct search found nothing.
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Antecedent with duplicates removed (first occurrence kept); contraction is
/// admissible on the left, so provability only depends on this set.
inline FormulaList dedupe(const FormulaList& fs) {
  FormulaList out;
  std::unordered_set<std::string> seen;
  for (const auto& f : fs)
    if (seen.insert(f.key()).second) out.push_back(f);
  return out;
}

inline std::string set_key(const Sequent& s) {
  std::set<std::string> keys;
  for (const auto& f : s.ante) keys.insert(f.key());
  std::string out;
  for (const auto& k : keys) out += k + ",";
  out += "|" + s.succ.at(0).key();
  return out;
}

}  // namespace detail

/// Direct backward search in GWF^s_N2.
///
/// L=>^s keeps its principal formula, so weight need not drop. Antecedents are
/// treated as sets and a sequent already on the current branch is a dead end;
/// the state space is then finite. Failures found under a loop cut are not
/// memoised, since they may depend on the branch.
class SingleSearch {
 public:
  /// depth_bound < 0 means unbounded (the loop check alone guarantees termination).
  explicit SingleSearch(int depth_bound = -1) : bound_(depth_bound) {}

  std::optional<Derivation> run(const Sequent& s) {
    if (auto v = sequent_violation(Calculus::GWFS, s)) throw std::invalid_argument(*v);
    Sequent norm{detail::dedupe(s.ante), s.succ};
    auto d = search(norm, 0).proof;
    if (!d) return std::nullopt;
    return fit(std::move(*d), s);
  }

 private:
  struct Result {
    std::optional<Derivation> proof;
    bool loop_cut = false;
  };

  // Left-weakens a proof of the deduplicated sequent into one of `actual`.
  static Derivation fit(Derivation d, const Sequent& actual) {
    auto extra = multiset_minus(actual.ante, d.conclusion.ante);
    if (!extra) throw std::logic_error("SingleSearch: antecedent mismatch");
    if (extra->empty()) {
      if (!multiset_equal(d.conclusion, actual)) throw std::logic_error("SingleSearch: endsequent mismatch");
      return with_conclusion(d, actual, Calculus::GWFS);
    }
    d = weaken_many(d, *extra, {});
    return with_conclusion(d, actual, Calculus::GWFS);
  }

  Result search(const Sequent& s, int depth) {
    const std::string key = detail::set_key(s);
    if (auto it = proved_.find(key); it != proved_.end()) return {fit(it->second, s), false};
    if (failed_.count(key)) return {};
    if (on_path_.count(key)) return {std::nullopt, true};
    if (bound_ >= 0 && depth > bound_) return {std::nullopt, true};

    if (auto init = is_initial(s, Calculus::GWFS)) {
      Derivation leaf{s, init->first, init->second, {}};
      proved_.emplace(key, leaf);
      return {leaf, false};
    }

    on_path_.insert(key);
    bool cut = false;
    std::optional<Derivation> found;
    for (const auto& app : applicable_rules(s, Calculus::GWFS)) {
      std::vector<Derivation> prem;
      bool ok = true;
      for (const auto& p : app.premises) {
        Sequent norm{detail::dedupe(p.ante), p.succ};
        Result r = search(norm, depth + 1);
        cut = cut || r.loop_cut;
        if (!r.proof) {
          ok = false;
          break;
        }
        prem.push_back(fit(std::move(*r.proof), p));
      }
      if (ok) {
        found = make_node(s, app, std::move(prem));
        break;
      }
    }
    on_path_.erase(key);

    if (found) {
      proved_.emplace(key, *found);
      return {found, false};
    }
    if (!cut) failed_.insert(key);
    return {std::nullopt, cut};
  }

  int bound_;
  std::unordered_map<std::string, Derivation> proved_;
  std::unordered_set<std::string> failed_;
  std::unordered_set<std::string> on_path_;
};

/// Height-preserving translation of a GWF^s_N2 derivation into GWF_N2.
inline Derivation single_to_multi(const Derivation& d) {
  constexpr Calculus M = Calculus::GWFN2;
  const RuleInfo& info = rule_info(d.rule);
  if (info.calculus != Calculus::GWFS) throw TransformError("single_to_multi: not a single-succedent derivation");
  if (info.shape == Shape::Cut) throw TransformError("single_to_multi: input must be cut-free");
  if (d.premises.empty()) return make_leaf(d.conclusion, M);

  auto [l, r] = principal_formulas(d);
  std::vector<Derivation> prem;
  for (const auto& p : d.premises) prem.push_back(single_to_multi(p));
  switch (info.shape) {
    case Shape::ROrL:
    case Shape::ROrR: {
      const Formula& f = *r;
      const Formula other = info.shape == Shape::ROrL ? f.rhs() : f.lhs();
      Derivation w = weaken(prem[0], Side::Right, other);
      return rule_node(RuleId::ROr, d.conclusion, std::nullopt, f, {std::move(w)});
    }
    case Shape::LMat: {
      // Premise 1 is A=>B, Gamma |- A. Weaken by Z, invert on A=>B, contract A.
      const Formula& f = *l;
      const Formula& z = d.conclusion.succ[0];
      Derivation w = weaken(prem[0], Side::Right, z);
      Derivation inv = invert_on(w, M, RuleId::LMat, f)[0];
      Derivation p1 = contract(inv, M, Side::Right, f.lhs());
      return rule_node(RuleId::LMat, d.conclusion, f, std::nullopt, {std::move(p1), std::move(prem[1])});
    }
    default: break;
  }
  auto target = rule_for(M, info.shape);
  if (!target) throw TransformError("single_to_multi: no counterpart for rule");
  return rule_node(*target, d.conclusion, l, r, std::move(prem));
}

enum class SingleVerdict { Proved, NotProvable };

struct SingleOutcome {
  SingleVerdict verdict = SingleVerdict::NotProvable;
  std::optional<Derivation> proof;  // GWF^s derivation when Proved
  std::vector<Sequent> failed_leaves;
  bool proved() const { return verdict == SingleVerdict::Proved; }
};

/// Decides Gamma |- X in GWF^s_N2.
///
/// GWF_N2 is consulted first: a single-succedent proof translates into a
/// multi-succedent one, so a GWF_N2 failure settles the question. When X is in
/// Frm the converse holds as well and the direct search must succeed. For other
/// X a direct-search failure is reported as ScopeError rather than guessed.
/// Both helpers are optional; passing them shares their memo tables across calls.
inline SingleOutcome prove_single(const Sequent& s, Prover* multi = nullptr, SingleSearch* direct = nullptr) {
  if (s.succ.size() != 1) throw std::invalid_argument("prove_single: succedent must hold exactly one formula");
  if (auto v = sequent_violation(Calculus::GWFS, s)) throw std::invalid_argument(*v);
  std::optional<Prover> local;
  if (!multi) multi = &local.emplace(Calculus::GWFN2);
  if (multi->calculus() != Calculus::GWFN2) throw std::invalid_argument("prove_single: helper prover must be GWF_N2");

  SingleOutcome out;
  if (!multi->provable(s)) {
    out.failed_leaves = multi->prove(s).failed_leaves;
    return out;
  }
  std::optional<SingleSearch> own;
  if (!direct) direct = &own.emplace();
  auto d = direct->run(s);
  if (!d) {
    if (in_frm(s.succ[0]))
      throw std::logic_error("prove_single: GWF_N2 proves '" + print_sequent(s) +
                             "' but no single-succedent proof was found");
    throw ScopeError("prove_single: '" + print_sequent(s) +
                     "' is provable in GWF_N2 but has a non-Frm succedent and no single-succedent proof");
  }
  out.verdict = SingleVerdict::Proved;
  out.proof = std::move(d);
  return out;
}

enum class Disjunct { Left, Right };

/// For a provable "|- X | Y", which disjunct the normal proof selects.
inline Disjunct disjunction_split(const Formula& x, const Formula& y) {
  Sequent s{{}, {Formula::disj(x, y)}};
  auto out = prove_single(s);
  if (!out.proved()) throw std::invalid_argument("disjunction_split: '" + print_sequent(s) + "' is not provable");
  // With an empty antecedent only a right rule can end the proof.
  switch (out.proof->rule) {
    case RuleId::ROrLS: return Disjunct::Left;
    case RuleId::ROrRS: return Disjunct::Right;
    default: throw std::logic_error("disjunction_split: unexpected last rule " + std::string(rule_name(out.proof->rule)));
  }
}

}  // namespace subseq
