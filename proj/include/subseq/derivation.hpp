#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subseq/sequent.hpp"

namespace subseq {

enum class Calculus { GWFN2, GWFS, G3MNec };

inline const char* calculus_name(Calculus c) {
  switch (c) {
    case Calculus::GWFN2: return "gwfn2";
    case Calculus::GWFS: return "gwfs";
    case Calculus::G3MNec: return "mnec";
  }
  return "?";
}

inline std::optional<Calculus> calculus_from_name(std::string_view s) {
  if (s == "gwfn2") return Calculus::GWFN2;
  if (s == "gwfs") return Calculus::GWFS;
  if (s == "mnec") return Calculus::G3MNec;
  return std::nullopt;
}

inline bool single_succedent(Calculus c) { return c == Calculus::GWFS; }

enum class RuleId {
  // GWF_N2
  Id, LBot, LAnd, RAnd, LOr, ROr, LMat, RMat, LRStrict, RStrict,
  // GWF^s_N2
  IdS, LBotS, LAndS, RAndS, LOrS, ROrLS, ROrRS, LMatS, RMatS, LRStrictS, RStrictS,
  // G3M_Nec
  IdM, LBotM, LAndM, RAndM, LOrM, ROrM, LMatM, RMatM, LRMonotone, RNec,
  // structural, accepted only when cuts are allowed
  Cut, CutS,
};

/// Calculus-independent rule shape. LRArrow/RArrow are LR-> / R-> in the
/// intuitionistic-style calculi and LR_M[] / R_N[] in G3M_Nec: in all cases
/// the premise discards every side formula.
enum class Shape { Id, LBot, LAnd, RAnd, LOr, ROr, ROrL, ROrR, LMat, RMat, LRArrow, RArrow, Cut };

struct RuleInfo {
  RuleId id;
  Calculus calculus;
  Shape shape;
  const char* name;
  int arity;
};

inline const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> table = {
      {RuleId::Id, Calculus::GWFN2, Shape::Id, "id", 0},
      {RuleId::LBot, Calculus::GWFN2, Shape::LBot, "Lbot", 0},
      {RuleId::LAnd, Calculus::GWFN2, Shape::LAnd, "L&", 1},
      {RuleId::RAnd, Calculus::GWFN2, Shape::RAnd, "R&", 2},
      {RuleId::LOr, Calculus::GWFN2, Shape::LOr, "L|", 2},
      {RuleId::ROr, Calculus::GWFN2, Shape::ROr, "R|", 1},
      {RuleId::LMat, Calculus::GWFN2, Shape::LMat, "L=>", 2},
      {RuleId::RMat, Calculus::GWFN2, Shape::RMat, "R=>", 1},
      {RuleId::LRStrict, Calculus::GWFN2, Shape::LRArrow, "LR->", 1},
      {RuleId::RStrict, Calculus::GWFN2, Shape::RArrow, "R->", 1},
      {RuleId::IdS, Calculus::GWFS, Shape::Id, "id^s", 0},
      {RuleId::LBotS, Calculus::GWFS, Shape::LBot, "Lbot^s", 0},
      {RuleId::LAndS, Calculus::GWFS, Shape::LAnd, "L&^s", 1},
      {RuleId::RAndS, Calculus::GWFS, Shape::RAnd, "R&^s", 2},
      {RuleId::LOrS, Calculus::GWFS, Shape::LOr, "L|^s", 2},
      {RuleId::ROrLS, Calculus::GWFS, Shape::ROrL, "R|l^s", 1},
      {RuleId::ROrRS, Calculus::GWFS, Shape::ROrR, "R|r^s", 1},
      {RuleId::LMatS, Calculus::GWFS, Shape::LMat, "L=>^s", 2},
      {RuleId::RMatS, Calculus::GWFS, Shape::RMat, "R=>^s", 1},
      {RuleId::LRStrictS, Calculus::GWFS, Shape::LRArrow, "LR->^s", 1},
      {RuleId::RStrictS, Calculus::GWFS, Shape::RArrow, "R->^s", 1},
      {RuleId::IdM, Calculus::G3MNec, Shape::Id, "id[]", 0},
      {RuleId::LBotM, Calculus::G3MNec, Shape::LBot, "Lbot[]", 0},
      {RuleId::LAndM, Calculus::G3MNec, Shape::LAnd, "L&[]", 1},
      {RuleId::RAndM, Calculus::G3MNec, Shape::RAnd, "R&[]", 2},
      {RuleId::LOrM, Calculus::G3MNec, Shape::LOr, "L|[]", 2},
      {RuleId::ROrM, Calculus::G3MNec, Shape::ROr, "R|[]", 1},
      {RuleId::LMatM, Calculus::G3MNec, Shape::LMat, "L=>[]", 2},
      {RuleId::RMatM, Calculus::G3MNec, Shape::RMat, "R=>[]", 1},
      {RuleId::LRMonotone, Calculus::G3MNec, Shape::LRArrow, "LR_M[]", 1},
      {RuleId::RNec, Calculus::G3MNec, Shape::RArrow, "R_N[]", 1},
      {RuleId::Cut, Calculus::GWFN2, Shape::Cut, "Cut", 2},
      {RuleId::CutS, Calculus::GWFS, Shape::Cut, "Cut^s", 2},
  };
  return table;
}

inline const RuleInfo& rule_info(RuleId id) { return rule_table()[static_cast<std::size_t>(id)]; }
inline const char* rule_name(RuleId id) { return rule_info(id).name; }

inline std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& r : rule_table())
    if (name == r.name) return r.id;
  return std::nullopt;
}

/// The rule of the given shape in the given calculus, if there is one.
inline std::optional<RuleId> rule_for(Calculus c, Shape s) {
  for (const auto& r : rule_table())
    if (r.calculus == c && r.shape == s) return r.id;
  return std::nullopt;
}

/// Positions of principal formulas in the conclusion. For cut nodes the
/// positions refer to the premises instead: `right` indexes the cut formula in
/// the first premise's succedent, `left` in the second premise's antecedent.
struct Principal {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  friend bool operator==(const Principal&, const Principal&) = default;
};

struct Derivation {
  Sequent conclusion;
  RuleId rule = RuleId::Id;
  Principal principal;
  std::vector<Derivation> premises;

  /// Leaves have height 0.
  int height() const {
    int h = -1;
    for (const auto& p : premises) h = std::max(h, p.height());
    return h + 1;
  }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.node_count();
    return n;
  }
};

inline bool contains_rule(const Derivation& d, RuleId r) {
  if (d.rule == r) return true;
  return std::any_of(d.premises.begin(), d.premises.end(),
                     [r](const Derivation& p) { return contains_rule(p, r); });
}

inline bool is_cut_free(const Derivation& d) {
  return !contains_rule(d, RuleId::Cut) && !contains_rule(d, RuleId::CutS);
}

template <class Fn>
void for_each_node(const Derivation& d, Fn&& fn) {
  fn(d);
  for (const auto& p : d.premises) for_each_node(p, fn);
}

}  // namespace subseq
