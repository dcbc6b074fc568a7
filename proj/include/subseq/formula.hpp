#pragma once

// Formula AST shared by every calculus in the toolkit.
//
// One node type covers the base language Frm (atoms, bot, &, |, strict ->),
// its extensions Frm1/Frm2 (top-level material =>) and the modal language
// (bot, &, |, =>, []). Each node caches its stratum at construction, so an
// ill-formed tree can be built but is rejected by classify().

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subseq {

enum class Stratum { Frm, Frm1, Frm2, Modal };

inline const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Frm: return "Frm";
    case Stratum::Frm1: return "Frm1";
    case Stratum::Frm2: return "Frm2";
    case Stratum::Modal: return "Modal";
  }
  return "?";
}

/// Frm < Frm1 < Frm2; Modal is incomparable with the rest.
inline bool stratum_leq(Stratum a, Stratum b) {
  if (a == Stratum::Modal || b == Stratum::Modal) return a == b;
  return static_cast<int>(a) <= static_cast<int>(b);
}

enum class Kind { Atom, Bottom, And, Or, StrictImp, MatImp, Box };

class IllFormed : public std::runtime_error {
 public:
  IllFormed(std::string path, std::string reason)
      : std::runtime_error("ill-formed formula at " + (path.empty() ? std::string("root") : path) +
                           ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

class Formula;

namespace detail {
struct Node;
}

class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula strict(Formula l, Formula r);
  static Formula material(Formula l, Formula r);
  static Formula box(Formula body);
  static Formula binary(Kind k, Formula l, Formula r);

  bool valid_handle() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const { return lhs(); }

  bool is(Kind k) const { return kind() == k; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_bottom() const { return kind() == Kind::Bottom; }

  /// Cached stratum; nullopt when the tree is ill-formed somewhere.
  std::optional<Stratum> stratum() const;
  bool has_strict() const;
  bool has_box() const;
  /// Injective prefix encoding; used for ordering, hashing and memo keys.
  const std::string& key() const;
  std::size_t hash() const;
  /// Node count.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.hash() == b.hash() && a.key() == b.key();
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) { return a.key() < b.key(); }

 private:
  explicit Formula(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

namespace detail {

struct Node {
  Kind kind;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::optional<Stratum> stratum;
  std::string error;
  bool has_strict = false;
  bool has_box = false;
  std::string key;
  std::size_t hash = 0;
  std::size_t size = 1;
};

inline std::optional<Stratum> combine(Kind k, const Formula* l, const Formula* r, std::string& err) {
  auto st = [](const Formula& f) { return f.stratum(); };
  if (k == Kind::Atom || k == Kind::Bottom) return Stratum::Frm;
  if (!st(*l) || (r && !st(*r))) {
    err = "ill-formed operand";
    return std::nullopt;
  }
  const bool any_box = l->has_box() || (r && r->has_box());
  const bool any_strict = l->has_strict() || (r && r->has_strict());
  switch (k) {
    case Kind::Box:
      if (l->has_strict()) {
        err = "[] applied to a formula containing ->";
        return std::nullopt;
      }
      return Stratum::Modal;
    case Kind::StrictImp:
      if (*st(*l) != Stratum::Frm || *st(*r) != Stratum::Frm) {
        err = "operands of -> must be in Frm (no =>, no [])";
        return std::nullopt;
      }
      return Stratum::Frm;
    case Kind::MatImp:
      if (any_box) {
        if (any_strict) {
          err = "[] mixed with ->";
          return std::nullopt;
        }
        return Stratum::Modal;
      }
      if (*st(*l) != Stratum::Frm || *st(*r) != Stratum::Frm) {
        err = "nested material implication";
        return std::nullopt;
      }
      return Stratum::Frm1;
    case Kind::And:
    case Kind::Or:
      if (any_box) {
        if (any_strict) {
          err = "[] mixed with ->";
          return std::nullopt;
        }
        return Stratum::Modal;
      }
      if (*st(*l) == Stratum::Frm && *st(*r) == Stratum::Frm) return Stratum::Frm;
      return Stratum::Frm2;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace detail

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->lhs; }
inline const Formula& Formula::rhs() const { return node_->rhs; }
inline std::optional<Stratum> Formula::stratum() const { return node_->stratum; }
inline bool Formula::has_strict() const { return node_->has_strict; }
inline bool Formula::has_box() const { return node_->has_box; }
inline const std::string& Formula::key() const { return node_->key; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }

inline Formula Formula::atom(std::string name) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Atom;
  n->key = name + ".";
  n->name = std::move(name);
  n->stratum = Stratum::Frm;
  n->hash = std::hash<std::string>{}(n->key);
  return Formula(std::move(n));
}

inline Formula Formula::bottom() {
  static const Formula b = [] {
    auto n = std::make_shared<detail::Node>();
    n->kind = Kind::Bottom;
    n->key = "#";
    n->stratum = Stratum::Frm;
    n->hash = std::hash<std::string>{}(n->key);
    return Formula(std::move(n));
  }();
  return b;
}

inline Formula Formula::binary(Kind k, Formula l, Formula r) {
  auto n = std::make_shared<detail::Node>();
  n->kind = k;
  n->stratum = detail::combine(k, &l, &r, n->error);
  n->has_strict = k == Kind::StrictImp || l.has_strict() || r.has_strict();
  n->has_box = l.has_box() || r.has_box();
  char tag = '?';
  switch (k) {
    case Kind::And: tag = '&'; break;
    case Kind::Or: tag = '|'; break;
    case Kind::StrictImp: tag = '>'; break;
    case Kind::MatImp: tag = '='; break;
    default: throw std::invalid_argument("Formula::binary: not a binary connective");
  }
  n->key.reserve(1 + l.key().size() + r.key().size());
  n->key.push_back(tag);
  n->key += l.key();
  n->key += r.key();
  n->hash = std::hash<std::string>{}(n->key);
  n->size = 1 + l.size() + r.size();
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return Formula(std::move(n));
}

inline Formula Formula::conj(Formula l, Formula r) { return binary(Kind::And, std::move(l), std::move(r)); }
inline Formula Formula::disj(Formula l, Formula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
inline Formula Formula::strict(Formula l, Formula r) {
  return binary(Kind::StrictImp, std::move(l), std::move(r));
}
inline Formula Formula::material(Formula l, Formula r) {
  return binary(Kind::MatImp, std::move(l), std::move(r));
}

inline Formula Formula::box(Formula body) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Box;
  n->stratum = detail::combine(Kind::Box, &body, nullptr, n->error);
  n->has_strict = body.has_strict();
  n->has_box = true;
  n->key = "[" + body.key();
  n->hash = std::hash<std::string>{}(n->key);
  n->size = 1 + body.size();
  n->lhs = std::move(body);
  return Formula(std::move(n));
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// --- stratum ---------------------------------------------------------------

namespace detail {
inline void find_ill_formed(const Formula& f, std::string& path, std::string& reason) {
  if (f.stratum()) return;
  const bool binary = f.kind() != Kind::Box;
  if (!f.lhs().stratum()) {
    path += path.empty() ? "l" : ".l";
    if (f.kind() == Kind::Box) path.back() = 'b';
    find_ill_formed(f.lhs(), path, reason);
    return;
  }
  if (binary && !f.rhs().stratum()) {
    path += path.empty() ? "r" : ".r";
    find_ill_formed(f.rhs(), path, reason);
    return;
  }
  // Children fine, the node itself is the culprit: recompute its reason.
  std::string err;
  combine(f.kind(), &f.lhs(), binary ? &f.rhs() : nullptr, err);
  reason = err;
}
}  // namespace detail

/// Least stratum containing f. Throws IllFormed naming the offending node by
/// its path from the root ("l"/"r"/"b" steps).
inline Stratum classify(const Formula& f) {
  if (auto s = f.stratum()) return *s;
  std::string path, reason;
  detail::find_ill_formed(f, path, reason);
  throw IllFormed(path, reason);
}

/// True for formulas usable in GWF_N2 / GWF^s_N2 sequents.
inline bool in_frm2(const Formula& f) {
  auto s = f.stratum();
  return s && *s != Stratum::Modal;
}
inline bool in_frm(const Formula& f) { return f.stratum() == Stratum::Frm; }
/// True for formulas usable in G3M_Nec sequents (modal language, no ->).
inline bool in_modal_language(const Formula& f) { return f.stratum().has_value() && !f.has_strict(); }

// --- measures ----------------------------------------------------------------

/// Atoms and bot weigh 0; -> adds 2; every other connective (including []) adds 1.
inline int weight(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return 0;
    case Kind::StrictImp: return weight(f.lhs()) + weight(f.rhs()) + 2;
    case Kind::Box: return weight(f.body()) + 1;
    default: return weight(f.lhs()) + weight(f.rhs()) + 1;
  }
}

namespace detail {
inline void ext_sub(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return;
    case Kind::StrictImp: ext_sub(Formula::material(f.lhs(), f.rhs()), out); return;
    case Kind::Box: ext_sub(f.body(), out); return;
    default:
      ext_sub(f.lhs(), out);
      ext_sub(f.rhs(), out);
  }
}
}  // namespace detail

/// Extended subformulas: ordinary subformulas, plus A=>B (and its closure) for
/// every A->B.
inline std::set<Formula> ext_subformulas(const Formula& f) {
  std::set<Formula> out;
  detail::ext_sub(f, out);
  return out;
}

// --- box translation -----------------------------------------------------------

class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A^[]: homomorphic on atoms, bot, &, |, =>; (A->B)^[] = [](A^[] => B^[]).
/// Defined on the whole non-modal language (Frm2 is built from the same connectives).
inline Formula box_translate(const Formula& f) {
  if (!in_frm2(f)) throw TranslationError("box_translate: formula is not in Frm2");
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return f;
    case Kind::StrictImp:
      return Formula::box(Formula::material(box_translate(f.lhs()), box_translate(f.rhs())));
    default: return Formula::binary(f.kind(), box_translate(f.lhs()), box_translate(f.rhs()));
  }
}

namespace detail {
// inside_frm: the result must lie in Frm (operand of -> or of a top-level =>).
inline std::optional<Formula> untranslate(const Formula& g, bool inside_frm) {
  switch (g.kind()) {
    case Kind::Atom:
    case Kind::Bottom: return g;
    case Kind::Box: {
      const Formula& b = g.body();
      if (!b.is(Kind::MatImp)) return std::nullopt;
      auto l = untranslate(b.lhs(), true);
      auto r = untranslate(b.rhs(), true);
      if (!l || !r) return std::nullopt;
      return Formula::strict(*l, *r);
    }
    case Kind::MatImp: {
      if (inside_frm) return std::nullopt;
      auto l = untranslate(g.lhs(), true);
      auto r = untranslate(g.rhs(), true);
      if (!l || !r) return std::nullopt;
      return Formula::material(*l, *r);
    }
    case Kind::StrictImp: return std::nullopt;
    default: {
      auto l = untranslate(g.lhs(), inside_frm);
      auto r = untranslate(g.rhs(), inside_frm);
      if (!l || !r) return std::nullopt;
      return Formula::binary(g.kind(), *l, *r);
    }
  }
}
}  // namespace detail

/// Partial inverse of box_translate: nullopt when g is not the image of any Frm2 formula.
inline std::optional<Formula> box_untranslate(const Formula& g) { return detail::untranslate(g, false); }

// --- n-ary helpers -------------------------------------------------------------

/// Right-nested conjunction; requires a non-empty list.
inline Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("big_and of empty list");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::conj(fs[i], acc);
  return acc;
}

/// Right-nested disjunction; requires a non-empty list.
inline Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("big_or of empty list");
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = Formula::disj(fs[i], acc);
  return acc;
}

}  // namespace subseq
