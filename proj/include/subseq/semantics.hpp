#pragma once

// Finite N-neighbourhood models. Worlds are 0..n-1, a set of worlds is a bit
// mask, and N(w) is a bit mask over those masks: bit X of nbhd[w] is set iff X is
// a neighbourhood of w. Only Frm formulas have a world semantics.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "subseq/sequent.hpp"
#include "subseq/text.hpp"

namespace subseq {

inline constexpr int kMaxWorlds = 4;

class SemanticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Model {
  int worlds = 1;
  std::vector<std::uint32_t> nbhd;              // per world, over 2^worlds subsets
  std::map<std::string, std::uint32_t> valuation;  // atom -> set of worlds
  bool superset_closed = true;

  std::uint32_t full() const { return (1u << worlds) - 1; }
};

/// W in N(w) for all w, and upward closure when the flag is set.
inline std::optional<std::string> model_violation(const Model& m) {
  if (m.worlds < 1 || m.worlds > kMaxWorlds) return "world count out of range";
  if (static_cast<int>(m.nbhd.size()) != m.worlds) return "one neighbourhood family per world expected";
  const std::uint32_t subsets = 1u << m.worlds;
  for (int w = 0; w < m.worlds; ++w) {
    const std::uint32_t fam = m.nbhd[w];
    if (subsets < 32 && (fam >> subsets) != 0) return "neighbourhood outside the powerset";
    if (!((fam >> m.full()) & 1u)) return "W is not a neighbourhood of world " + std::to_string(w);
    if (!m.superset_closed) continue;
    for (std::uint32_t x = 0; x < subsets; ++x)
      if ((fam >> x) & 1u)
        for (std::uint32_t y = 0; y < subsets; ++y)
          if ((x & y) == x && !((fam >> y) & 1u)) return "N(" + std::to_string(w) + ") is not closed under supersets";
  }
  for (const auto& [a, v] : m.valuation)
    if (v & ~m.full()) return "valuation of " + a + " mentions a missing world";
  return std::nullopt;
}

/// Set of worlds forcing f. Unknown atoms have empty extension.
inline std::uint32_t extension(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = m.valuation.find(f.name());
      return it == m.valuation.end() ? 0u : it->second;
    }
    case Kind::Bottom: return 0u;
    case Kind::And: return extension(m, f.lhs()) & extension(m, f.rhs());
    case Kind::Or: return extension(m, f.lhs()) | extension(m, f.rhs());
    case Kind::StrictImp: {
      const std::uint32_t x = (~extension(m, f.lhs()) | extension(m, f.rhs())) & m.full();
      std::uint32_t out = 0;
      for (int w = 0; w < m.worlds; ++w)
        if ((m.nbhd[w] >> x) & 1u) out |= 1u << w;
      return out;
    }
    default:
      throw SemanticsError("no world semantics for '" + print_formula(f) + "' (only Frm formulas are evaluated)");
  }
}

inline bool eval(const Model& m, int w, const Formula& f) {
  if (w < 0 || w >= m.worlds) throw SemanticsError("eval: no such world");
  return (extension(m, f) >> w) & 1u;
}

/// Every world forcing all of the antecedent forces some succedent formula.
inline bool sequent_valid(const Model& m, const Sequent& s) {
  std::uint32_t ante = m.full(), succ = 0;
  for (const auto& f : s.ante) ante &= extension(m, f);
  for (const auto& f : s.succ) succ |= extension(m, f);
  return (ante & ~succ) == 0;
}

/// All neighbourhood families over n worlds that contain W (and are upward
/// closed if requested), in increasing mask order.
inline std::vector<std::uint32_t> neighbourhood_choices(int n, bool superset_closed) {
  if (n < 1 || n > 3) throw SemanticsError("neighbourhood_choices: 1 to 3 worlds supported");
  const std::uint32_t subsets = 1u << n, full = subsets - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t fam = 0; fam < (1u << subsets); ++fam) {
    if (!((fam >> full) & 1u)) continue;
    bool ok = true;
    if (superset_closed)
      for (std::uint32_t x = 0; x < subsets && ok; ++x)
        if ((fam >> x) & 1u)
          for (std::uint32_t y = 0; y < subsets; ++y)
            if ((x & y) == x && !((fam >> y) & 1u)) {
              ok = false;
              break;
            }
    if (ok) out.push_back(fam);
  }
  return out;
}

inline constexpr std::uint64_t kDefaultModelCap = std::uint64_t{1} << 32;

/// Number of models enumerate_models would produce; throws when above `cap`.
inline std::uint64_t model_count(int n, bool superset_closed, std::size_t atoms, std::uint64_t cap = kDefaultModelCap) {
  if (n < 1 || n > 3) throw SemanticsError("enumerate_models: world count must be 1, 2 or 3");
  const std::uint64_t choices = neighbourhood_choices(n, superset_closed).size();
  long double total = 1;
  for (int w = 0; w < n; ++w) total *= static_cast<long double>(choices);
  total *= std::pow(2.0L, static_cast<long double>(n * atoms));
  if (total > static_cast<long double>(cap)) throw SemanticsError("enumerate_models: model space exceeds the size cap");
  return static_cast<std::uint64_t>(total);
}

/// Calls fn on every model, frames in lexicographic order of their families and,
/// within a frame, valuations in increasing index (bit a*n+i: atom a true at world i).
/// Stops early when fn returns false.
inline void enumerate_models(int n, bool superset_closed, const std::vector<std::string>& atoms,
                             const std::function<bool(const Model&)>& fn, std::uint64_t cap = kDefaultModelCap) {
  model_count(n, superset_closed, atoms.size(), cap);
  const auto choices = neighbourhood_choices(n, superset_closed);
  const std::uint64_t vals = std::uint64_t{1} << (n * atoms.size());
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  Model m;
  m.worlds = n;
  m.superset_closed = superset_closed;
  m.nbhd.assign(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int w = 0; w < n; ++w) m.nbhd[w] = choices[idx[w]];
    for (std::uint64_t v = 0; v < vals; ++v) {
      for (std::size_t a = 0; a < atoms.size(); ++a)
        m.valuation[atoms[a]] = static_cast<std::uint32_t>((v >> (a * n)) & m.full());
      if (!fn(m)) return;
    }
    int w = n - 1;
    while (w >= 0 && ++idx[w] == choices.size()) idx[w--] = 0;
    if (w < 0) return;
  }
}

inline std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (g.is_atom()) out.insert(g.name());
    else if (g.is(Kind::Box)) go(g.body());
    else if (!g.is_bottom()) {
      go(g.lhs());
      go(g.rhs());
    }
  };
  go(f);
  return out;
}

inline std::vector<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> all;
  for (const auto* side : {&s.ante, &s.succ})
    for (const auto& f : *side) all.merge(atoms_of(f));
  return {all.begin(), all.end()};
}

// --- batch refutation ------------------------------------------------------------

/// Decides, for many Frm sequents at once, whether some superset-closed model with
/// at most max_worlds worlds refutes them. Evaluation is bit-parallel: one 64-bit
/// word holds the truth value of a formula at one world under 64 valuations, and
/// all formulas are evaluated once per frame.
class RefutationOracle {
 public:
  struct Witness {
    int worlds;
    std::vector<std::uint32_t> nbhd;
    std::uint64_t valuation_index;
  };

  RefutationOracle(std::vector<Sequent> sequents, int max_worlds, std::vector<std::string> atoms = {})
      : sequents_(std::move(sequents)), max_worlds_(max_worlds), atoms_(std::move(atoms)) {
    if (max_worlds < 1 || max_worlds > 3) throw SemanticsError("countermodel: max worlds must be 1, 2 or 3");
    if (atoms_.empty()) {
      std::set<std::string> all;
      for (const auto& s : sequents_)
        for (const auto& a : atoms_of(s)) all.insert(a);
      atoms_.assign(all.begin(), all.end());
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) atom_index_[atoms_[i]] = i;
    for (const auto& s : sequents_) {
      Compiled c;
      for (const auto& f : s.ante) c.ante.push_back(intern(f));
      for (const auto& f : s.succ) c.succ.push_back(intern(f));
      compiled_.push_back(std::move(c));
    }
    model_count(max_worlds, true, atoms_.size());
  }

  /// First witness per sequent in enumeration order (nullopt: none found).
  std::vector<std::optional<Witness>> run() {
    std::vector<std::optional<Witness>> out(sequents_.size());
    std::size_t open = sequents_.size();
    for (int n = 1; n <= max_worlds_ && open > 0; ++n) {
      const auto choices = neighbourhood_choices(n, true);
      const std::uint64_t vals = std::uint64_t{1} << (n * atoms_.size());
      const std::uint64_t blocks = (vals + 63) / 64;
      const std::uint64_t live = vals >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vals) - 1;
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      std::vector<std::uint32_t> nb(static_cast<std::size_t>(n));
      std::vector<std::array<std::uint64_t, 3>> ext(nodes_.size());
      while (open > 0) {
        for (int w = 0; w < n; ++w) nb[w] = choices[idx[w]];
        for (std::uint64_t b = 0; b < blocks && open > 0; ++b) {
          evaluate(n, nb, b, ext);
          for (std::size_t k = 0; k < compiled_.size(); ++k) {
            if (out[k]) continue;
            std::uint64_t bad = 0;
            for (int w = 0; w < n; ++w) {
              std::uint64_t a = live;
              for (auto i : compiled_[k].ante) a &= ext[i][w];
              for (auto i : compiled_[k].succ) a &= ~ext[i][w];
              bad |= a;
            }
            if (bad) {
              out[k] = Witness{n, nb, b * 64 + static_cast<std::uint64_t>(std::countr_zero(bad))};
              --open;
            }
          }
        }
        int w = n - 1;
        while (w >= 0 && ++idx[w] == choices.size()) idx[w--] = 0;
        if (w < 0) break;
      }
    }
    return out;
  }

  Model to_model(const Witness& wit) const {
    Model m;
    m.worlds = wit.worlds;
    m.nbhd = wit.nbhd;
    m.superset_closed = true;
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      m.valuation[atoms_[a]] = static_cast<std::uint32_t>((wit.valuation_index >> (a * wit.worlds)) & m.full());
    return m;
  }

  const std::vector<std::string>& atoms() const { return atoms_; }

 private:
  struct NodeRec {
    Kind kind;
    std::size_t atom = 0, l = 0, r = 0;
  };
  struct Compiled {
    std::vector<std::size_t> ante, succ;
  };

  std::size_t intern(const Formula& f) {
    if (auto it = index_.find(f.key()); it != index_.end()) return it->second;
    NodeRec rec{f.kind()};
    switch (f.kind()) {
      case Kind::Atom: rec.atom = atom_index_.at(f.name()); break;
      case Kind::Bottom: break;
      case Kind::And:
      case Kind::Or:
      case Kind::StrictImp:
        rec.l = intern(f.lhs());
        rec.r = intern(f.rhs());
        break;
      default:
        throw SemanticsError("no world semantics for '" + print_formula(f) + "' (only Frm formulas are evaluated)");
    }
    nodes_.push_back(rec);
    index_.emplace(f.key(), nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  // Lane j of block b is valuation b*64+j; bit a*n+i of it says whether atom a holds at world i.
  static std::uint64_t lane_mask(std::size_t bit, std::uint64_t block) {
    static constexpr std::uint64_t pattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                                 0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    if (bit < 6) return pattern[bit];
    return ((block >> (bit - 6)) & 1u) ? ~std::uint64_t{0} : 0;
  }

  void evaluate(int n, const std::vector<std::uint32_t>& nb, std::uint64_t block,
                std::vector<std::array<std::uint64_t, 3>>& ext) const {
    const std::uint32_t subsets = 1u << n;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const NodeRec& r = nodes_[k];
      auto& e = ext[k];
      for (int w = 0; w < n; ++w) {
        switch (r.kind) {
          case Kind::Atom: e[w] = lane_mask(r.atom * n + w, block); break;
          case Kind::Bottom: e[w] = 0; break;
          case Kind::And: e[w] = ext[r.l][w] & ext[r.r][w]; break;
          case Kind::Or: e[w] = ext[r.l][w] | ext[r.r][w]; break;
          default: break;
        }
      }
      if (r.kind != Kind::StrictImp) continue;
      // Per lane, the set {i : world i forces A => B} as n bit-planes; then test
      // membership of that set in N(w) by summing minterms.
      std::array<std::uint64_t, 3> plane{};
      for (int i = 0; i < n; ++i) plane[i] = ~ext[r.l][i] | ext[r.r][i];
      std::array<std::uint64_t, 8> minterm{};
      for (std::uint32_t x = 0; x < subsets; ++x) {
        std::uint64_t t = ~std::uint64_t{0};
        for (int i = 0; i < n; ++i) t &= ((x >> i) & 1u) ? plane[i] : ~plane[i];
        minterm[x] = t;
      }
      for (int w = 0; w < n; ++w) {
        std::uint64_t acc = 0;
        for (std::uint32_t x = 0; x < subsets; ++x)
          if ((nb[w] >> x) & 1u) acc |= minterm[x];
        e[w] = acc;
      }
    }
  }

  std::vector<Sequent> sequents_;
  int max_worlds_;
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> atom_index_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<NodeRec> nodes_;
  std::vector<Compiled> compiled_;
};

/// First superset-closed model (fewest worlds first) refuting s, or nullopt
/// ("exhausted": inconclusive, no finite model property is assumed).
inline std::optional<Model> countermodel(const Sequent& s, int max_worlds) {
  RefutationOracle oracle({s}, max_worlds);
  auto r = oracle.run();
  if (!r[0]) return std::nullopt;
  return oracle.to_model(*r[0]);
}

/// Human-readable table: worlds, neighbourhoods, valuation.
inline std::string print_model(const Model& m) {
  auto set_text = [&](std::uint32_t x) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < m.worlds; ++i)
      if ((x >> i) & 1u) {
        out += (first ? "w" : ",w") + std::to_string(i);
        first = false;
      }
    return out + "}";
  };
  std::string out = "worlds: " + set_text(m.full()) + "\n";
  for (int w = 0; w < m.worlds; ++w) {
    out += "N(w" + std::to_string(w) + ") = {";
    bool first = true;
    for (std::uint32_t x = 0; x < (1u << m.worlds); ++x)
      if ((m.nbhd[w] >> x) & 1u) {
        out += (first ? "" : ", ") + set_text(x);
        first = false;
      }
    out += "}\n";
  }
  for (const auto& [a, v] : m.valuation) out += "V(" + a + ") = " + set_text(v) + "\n";
  return out;
}

}  // namespace subseq
