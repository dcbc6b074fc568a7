#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subseq/formula.hpp"

namespace subseq {

using FormulaList = std::vector<Formula>;

/// Gamma => Delta over multisets. Element order is kept for display only;
/// every comparison in the kernel goes through multiset_equal / canonical_key.
struct Sequent {
  FormulaList ante;
  FormulaList succ;

  int weight() const {
    int w = 0;
    for (const auto& f : ante) w += subseq::weight(f);
    for (const auto& f : succ) w += subseq::weight(f);
    return w;
  }
};

enum class Side { Left, Right };

inline const FormulaList& side_of(const Sequent& s, Side side) {
  return side == Side::Left ? s.ante : s.succ;
}
inline FormulaList& side_of(Sequent& s, Side side) { return side == Side::Left ? s.ante : s.succ; }

inline std::vector<std::string> sorted_keys(const FormulaList& fs) {
  std::vector<std::string> keys;
  keys.reserve(fs.size());
  for (const auto& f : fs) keys.push_back(f.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline bool multiset_equal(const FormulaList& a, const FormulaList& b) {
  return a.size() == b.size() && sorted_keys(a) == sorted_keys(b);
}

inline bool multiset_equal(const Sequent& a, const Sequent& b) {
  return multiset_equal(a.ante, b.ante) && multiset_equal(a.succ, b.succ);
}

/// Order-insensitive encoding of the sequent; memo key for proof search.
inline std::string canonical_key(const Sequent& s) {
  std::string out;
  for (const auto& k : sorted_keys(s.ante)) {
    out += k;
    out += ',';
  }
  out += '|';
  for (const auto& k : sorted_keys(s.succ)) {
    out += k;
    out += ',';
  }
  return out;
}

inline std::optional<std::size_t> find_formula(const FormulaList& fs, const Formula& f) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i] == f) return i;
  return std::nullopt;
}

inline std::size_t count_formula(const FormulaList& fs, const Formula& f) {
  return static_cast<std::size_t>(std::count(fs.begin(), fs.end(), f));
}

inline FormulaList erase_at(FormulaList fs, std::size_t i) {
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
  return fs;
}

/// Removes one occurrence of f; returns nullopt when f is absent.
inline std::optional<FormulaList> erase_one(FormulaList fs, const Formula& f) {
  auto i = find_formula(fs, f);
  if (!i) return std::nullopt;
  return erase_at(std::move(fs), *i);
}

/// Multiset difference a - b; nullopt if b is not a sub-multiset of a.
inline std::optional<FormulaList> multiset_minus(FormulaList a, const FormulaList& b) {
  for (const auto& f : b) {
    auto i = find_formula(a, f);
    if (!i) return std::nullopt;
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(*i));
  }
  return a;
}

inline FormulaList concat(FormulaList a, const FormulaList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace subseq
