#pragma once

// ASCII surface syntax.
//
//   atom   := [a-z][a-z0-9_]*        (except the keyword "bot")
//   unary  := atom | "bot" | "[]" unary | "(" formula ")"
//   and    := unary ("&" unary)*     left-assoc
//   or     := and ("|" and)*         left-assoc
//   strict := or ("->" strict)?      right-assoc
//   formula:= strict ("=>" strict)?  non-assoc
//   sequent:= list? "|-" list?       list := formula ("," formula)*

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subseq/formula.hpp"
#include "subseq/sequent.hpp"

namespace subseq {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected)
      : std::runtime_error("parse error at " + std::to_string(span.start) + ".." +
                           std::to_string(span.end) + ": expected " + expected),
        span_(span),
        expected_(std::move(expected)) {}
  SourceSpan span() const { return span_; }
  const std::string& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string expected_;
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula formula() {
    Formula l = strict();
    skip();
    if (lookahead("=>")) {
      pos_ += 2;
      Formula r = strict();
      skip();
      if (lookahead("=>")) fail("no further '=>' (=> is non-associative)");
      return Formula::material(std::move(l), std::move(r));
    }
    return l;
  }

  Sequent sequent() {
    Sequent s;
    skip();
    if (!lookahead("|-")) s.ante = list();
    skip();
    if (!lookahead("|-")) fail("'|-'");
    pos_ += 2;
    skip();
    if (pos_ < text_.size()) s.succ = list();
    return s;
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("end of input");
  }

 private:
  FormulaList list() {
    FormulaList out;
    out.push_back(formula());
    skip();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(formula());
      skip();
    }
    return out;
  }

  Formula strict() {
    Formula l = disj();
    skip();
    if (lookahead("->")) {
      pos_ += 2;
      return Formula::strict(std::move(l), strict());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    skip();
    // "|-" is the sequent separator, not a disjunction.
    while (pos_ < text_.size() && text_[pos_] == '|' && !lookahead("|-")) {
      ++pos_;
      l = Formula::disj(std::move(l), conj());
      skip();
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    skip();
    while (pos_ < text_.size() && text_[pos_] == '&') {
      ++pos_;
      l = Formula::conj(std::move(l), unary());
      skip();
    }
    return l;
  }

  Formula unary() {
    skip();
    if (pos_ >= text_.size()) fail("a formula");
    if (lookahead("[]")) {
      pos_ += 2;
      return Formula::box(unary());
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = formula();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("')'");
      ++pos_;
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "bot") return Formula::bottom();
      return Formula::atom(std::move(name));
    }
    fail("an atom, 'bot', '[]' or '('");
  }

  bool lookahead(std::string_view tok) const { return text_.substr(pos_, tok.size()) == tok; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError({pos_, std::min(pos_ + 1, text_.size())}, expected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::And: return 4;
    case Kind::Or: return 3;
    case Kind::StrictImp: return 2;
    case Kind::MatImp: return 1;
    default: return 5;
  }
}

inline void print_into(const Formula& f, std::string& out);

inline void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(f, out);
  if (parens) out += ')';
}

inline void print_into(const Formula& f, std::string& out) {
  const int p = precedence(f);
  switch (f.kind()) {
    case Kind::Atom: out += f.name(); return;
    case Kind::Bottom: out += "bot"; return;
    case Kind::Box:
      out += "[]";
      print_operand(f.body(), precedence(f.body()) < 5, out);
      return;
    case Kind::And:
    case Kind::Or:
      print_operand(f.lhs(), precedence(f.lhs()) < p, out);
      out += f.is(Kind::And) ? " & " : " | ";
      print_operand(f.rhs(), precedence(f.rhs()) <= p, out);
      return;
    case Kind::StrictImp:
      print_operand(f.lhs(), precedence(f.lhs()) <= p, out);
      out += " -> ";
      print_operand(f.rhs(), precedence(f.rhs()) < p, out);
      return;
    case Kind::MatImp:
      print_operand(f.lhs(), precedence(f.lhs()) <= p, out);
      out += " => ";
      print_operand(f.rhs(), precedence(f.rhs()) <= p, out);
      return;
  }
}

}  // namespace detail

/// Parses and validates a formula; throws ParseError or IllFormed.
inline Formula parse_formula(std::string_view text) {
  detail::Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  classify(f);
  return f;
}

inline Sequent parse_sequent(std::string_view text) {
  detail::Parser p(text);
  Sequent s = p.sequent();
  p.expect_end();
  for (const auto& f : s.ante) classify(f);
  for (const auto& f : s.succ) classify(f);
  return s;
}

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_into(f, out);
  return out;
}

inline std::string print_list(const FormulaList& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(fs[i]);
  }
  return out;
}

inline std::string print_sequent(const Sequent& s) {
  std::string out = print_list(s.ante);
  out += out.empty() ? "|-" : " |-";
  if (!s.succ.empty()) out += " " + print_list(s.succ);
  return out;
}

}  // namespace subseq
