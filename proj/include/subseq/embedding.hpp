#pragma once

// The []-translation on sequents and on derivations: GWF_N2 into G3M_Nec and back.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subseq/search.hpp"
#include "subseq/transforms.hpp"

namespace subseq {

class NotInImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TranslatedSequent {
  Sequent source;
  Sequent image;
};

inline FormulaList translate_list(const FormulaList& fs) {
  FormulaList out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(box_translate(f));
  return out;
}

inline TranslatedSequent translate_sequent(const Sequent& s) {
  return {s, {translate_list(s.ante), translate_list(s.succ)}};
}

/// Inverse image of a modal sequent, or nullopt if some formula is not a translation.
inline std::optional<Sequent> untranslate_sequent(const Sequent& g) {
  Sequent out;
  for (Side side : {Side::Left, Side::Right})
    for (const auto& f : side_of(g, side)) {
      auto u = box_untranslate(f);
      if (!u) return std::nullopt;
      side_of(out, side).push_back(*u);
    }
  return out;
}

namespace detail {

inline std::optional<Formula> translate_opt(const std::optional<Formula>& f) {
  if (!f) return std::nullopt;
  return box_translate(*f);
}

}  // namespace detail

/// GWF_N2 derivation of Gamma |- Delta  ->  G3M_Nec derivation of Gamma^[] |- Delta^[].
/// R-> becomes R=>[] followed by R_N[]; LR-> becomes R=>[] followed by LR_M[].
inline Derivation embed_proof(const Derivation& d) {
  constexpr Calculus M = Calculus::G3MNec;
  const RuleInfo& info = rule_info(d.rule);
  if (info.calculus != Calculus::GWFN2 || info.shape == Shape::Cut)
    throw std::invalid_argument("embed_proof: expects a cut-free GWF_N2 derivation");
  Sequent image = translate_sequent(d.conclusion).image;
  if (d.premises.empty()) return make_leaf(image, M);

  auto [l, r] = principal_formulas(d);
  if (info.shape == Shape::LRArrow || info.shape == Shape::RArrow) {
    // Premise (C=>D, A |- B) or (A |- B); close it under R=>[] to get (... |- A^[] => B^[]).
    Derivation inner = embed_proof(d.premises[0]);
    const Formula body = box_translate(*r).body();
    Sequent mat{*erase_one(inner.conclusion.ante, body.lhs()), {body}};
    Derivation rm = rule_node(RuleId::RMatM, mat, std::nullopt, body, {std::move(inner)});
    RuleId rule = info.shape == Shape::LRArrow ? RuleId::LRMonotone : RuleId::RNec;
    return rule_node(rule, std::move(image), detail::translate_opt(l), box_translate(*r), {std::move(rm)});
  }
  std::vector<Derivation> prem;
  for (const auto& p : d.premises) prem.push_back(embed_proof(p));
  return rule_node(*rule_for(M, info.shape), std::move(image), detail::translate_opt(l), detail::translate_opt(r),
                   std::move(prem));
}

/// G3M_Nec derivation of a translated sequent  ->  GWF_N2 derivation of the source.
/// The premise of LR_M[] / R_N[] is taken apart by inverting R=>[] on its succedent.
inline Derivation unembed_proof(const Derivation& d) {
  constexpr Calculus G = Calculus::GWFN2;
  constexpr Calculus M = Calculus::G3MNec;
  const RuleInfo& info = rule_info(d.rule);
  if (info.calculus != M) throw std::invalid_argument("unembed_proof: expects a G3M_Nec derivation");
  auto source = untranslate_sequent(d.conclusion);
  if (!source) throw NotInImage("unembed_proof: '" + print_sequent(d.conclusion) + "' is not a translated sequent");
  if (d.premises.empty()) return make_leaf(*source, G);

  auto [l, r] = principal_formulas(d);
  auto back = [](const std::optional<Formula>& f) -> std::optional<Formula> {
    if (!f) return std::nullopt;
    return box_untranslate(*f);
  };
  if (info.shape == Shape::LRArrow || info.shape == Shape::RArrow) {
    const Formula& body = r->body();
    if (!body.is(Kind::MatImp)) throw NotInImage("unembed_proof: boxed formula is not a translated implication");
    // Premise X |- A=>B (or |- A=>B); invert to A, X |- B.
    Derivation inv = invert_on(d.premises[0], M, RuleId::RMatM, body)[0];
    Derivation inner = unembed_proof(inv);
    RuleId rule = info.shape == Shape::LRArrow ? RuleId::LRStrict : RuleId::RStrict;
    return rule_node(rule, std::move(*source), back(l), back(r), {std::move(inner)});
  }
  std::vector<Derivation> prem;
  for (const auto& p : d.premises) prem.push_back(unembed_proof(p));
  return rule_node(*rule_for(G, info.shape), std::move(*source), back(l), back(r), std::move(prem));
}

/// The modal companion statement: Gamma |- Delta in GWF_N2 against
/// |- (/\Gamma -> \/Delta)^[] in G3M_Nec. With Gamma empty the implication is
/// dropped and the modal goal is |- (\/Delta)^[].
struct CompanionResult {
  bool sequent_provable;
  bool modal_provable;
  Formula modal_goal;
};

inline Formula companion_formula(const FormulaList& gamma, const FormulaList& delta) {
  if (delta.empty()) throw std::invalid_argument("companion: Delta must be nonempty");
  Formula target = gamma.empty() ? big_or(delta) : Formula::strict(big_and(gamma), big_or(delta));
  return box_translate(target);
}

inline CompanionResult companion_check(const FormulaList& gamma, const FormulaList& delta, Prover* multi = nullptr,
                                       Prover* modal = nullptr) {
  for (const auto* side : {&gamma, &delta})
    for (const auto& f : *side)
      if (!in_frm(f)) throw std::invalid_argument("companion: '" + print_formula(f) + "' is not in Frm");
  Formula goal = companion_formula(gamma, delta);
  std::optional<Prover> a, b;
  if (!multi) multi = &a.emplace(Calculus::GWFN2);
  if (!modal) modal = &b.emplace(Calculus::G3MNec);
  return {multi->provable({gamma, delta}), modal->provable({{}, {goal}}), goal};
}

}  // namespace subseq
