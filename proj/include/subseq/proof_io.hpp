#pragma once

// File formats.
//
//   subseq-proof v1    {"format":"subseq-proof","version":1,"calculus":"gwfn2",
//                       "proof":{"rule":"LR->","conclusion":"p -> q |- p -> q",
//                                "principal":{"left":[0],"right":[0]},"premises":[...]}}
//   subseq-hilbert v1  JSON lines: a header {"format":"subseq-hilbert","version":1,"assumptions":[...]}
//                      then one object per line, numbered from 1:
//                      {"line":3,"formula":"...","just":"rule","rule":10,"refs":[1,2]}
//                      {"line":1,"formula":"...","just":"axiom","axiom":3,"subst":{"A":"p","B":"q"}}
//                      {"line":2,"formula":"...","just":"assumption","index":1}
//
// Sequents and formulas are stored as text in the surface syntax.

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subseq/hilbert.hpp"
#include "subseq/kernel.hpp"
#include "subseq/semantics.hpp"

namespace subseq {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

namespace detail {

inline json node_to_json(const Derivation& d) {
  json j;
  j["rule"] = rule_name(d.rule);
  j["conclusion"] = print_sequent(d.conclusion);
  j["principal"] = {{"left", d.principal.left}, {"right", d.principal.right}};
  json prem = json::array();
  for (const auto& p : d.premises) prem.push_back(node_to_json(p));
  j["premises"] = std::move(prem);
  return j;
}

inline Derivation node_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw FormatError(path + ": node must be an object");
  for (const char* k : {"rule", "conclusion", "principal", "premises"})
    if (!j.contains(k)) throw FormatError(path + ": missing field '" + k + "'");
  Derivation d;
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw FormatError(path + ": unknown rule id '" + j.at("rule").get<std::string>() + "'");
  d.rule = *rule;
  try {
    d.conclusion = parse_sequent(j.at("conclusion").get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(path + ": bad conclusion: " + e.what());
  }
  const json& pr = j.at("principal");
  d.principal.left = pr.at("left").get<std::vector<std::size_t>>();
  d.principal.right = pr.at("right").get<std::vector<std::size_t>>();
  const json& prem = j.at("premises");
  if (!prem.is_array()) throw FormatError(path + ": premises must be an array");
  if (static_cast<int>(prem.size()) != rule_info(d.rule).arity)
    throw FormatError(path + ": rule " + rule_name(d.rule) + " takes " + std::to_string(rule_info(d.rule).arity) +
                      " premise(s), file gives " + std::to_string(prem.size()));
  for (std::size_t k = 0; k < prem.size(); ++k) d.premises.push_back(node_from_json(prem[k], path + "." + std::to_string(k)));
  return d;
}

}  // namespace detail

inline std::string encode_proof(const Derivation& d, Calculus c) {
  json j;
  j["format"] = "subseq-proof";
  j["version"] = 1;
  j["calculus"] = calculus_name(c);
  j["proof"] = detail::node_to_json(d);
  return j.dump(2) + "\n";
}

struct DecodedProof {
  Calculus calculus;
  Derivation proof;
};

/// Parses and re-validates a proof file (cut nodes accepted only with allow_cut).
inline DecodedProof decode_proof(const std::string& text, CheckOptions opt = {}) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed proof file: ") + e.what());
  }
  try {
    if (j.value("format", "") != "subseq-proof") throw FormatError("not a subseq-proof file");
    if (j.value("version", 0) != 1) throw FormatError("unsupported subseq-proof version");
    auto c = calculus_from_name(j.at("calculus").get<std::string>());
    if (!c) throw FormatError("unknown calculus '" + j.at("calculus").get<std::string>() + "'");
    Derivation d = detail::node_from_json(j.at("proof"), "root");
    check_derivation(d, *c, opt);
    return {*c, std::move(d)};
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed proof file: ") + e.what());
  }
}

/// Indented tree, root first: "rule  conclusion".
inline std::string print_derivation(const Derivation& d, int indent = 0) {
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += rule_name(d.rule);
  out += "  ";
  out += print_sequent(d.conclusion);
  out += "\n";
  for (const auto& p : d.premises) out += print_derivation(p, indent + 1);
  return out;
}

// --- Hilbert proofs ------------------------------------------------------------------

inline std::string encode_hilbert(const HilbertProof& p, const FormulaList& assumptions = {}) {
  std::string out;
  json head;
  head["format"] = "subseq-hilbert";
  head["version"] = 1;
  json as = json::array();
  for (const auto& a : assumptions) as.push_back(print_formula(a));
  head["assumptions"] = std::move(as);
  out += head.dump() + "\n";
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    json j;
    j["line"] = i + 1;
    j["formula"] = print_formula(line.formula);
    switch (line.just.kind) {
      case JustKind::Axiom: {
        j["just"] = "axiom";
        j["axiom"] = line.just.number;
        json s = json::object();
        for (const auto& [k, v] : line.just.subst) s[k] = print_formula(v);
        j["subst"] = std::move(s);
        break;
      }
      case JustKind::Rule: {
        j["just"] = "rule";
        j["rule"] = line.just.number;
        json refs = json::array();
        for (auto r : line.just.refs) refs.push_back(r + 1);
        j["refs"] = std::move(refs);
        break;
      }
      case JustKind::Assumption:
        j["just"] = "assumption";
        j["index"] = line.just.assumption + 1;
        break;
    }
    out += j.dump() + "\n";
  }
  return out;
}

/// One line per step: "3. (p & q) -> p   rule 9 (1, 2)".
inline std::string print_hilbert(const HilbertProof& p) {
  std::string out;
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& l = p.lines[i];
    out += std::to_string(i + 1) + ". " + print_formula(l.formula) + "   ";
    switch (l.just.kind) {
      case JustKind::Axiom: out += "axiom " + std::to_string(l.just.number); break;
      case JustKind::Assumption: out += "assumption " + std::to_string(l.just.assumption + 1); break;
      case JustKind::Rule: {
        out += "rule " + std::to_string(l.just.number) + " (";
        for (std::size_t k = 0; k < l.just.refs.size(); ++k) out += (k ? ", " : "") + std::to_string(l.just.refs[k] + 1);
        out += ")";
        break;
      }
    }
    out += "\n";
  }
  return out;
}

struct DecodedHilbert {
  HilbertProof proof;
  FormulaList assumptions;
};

/// Parses a Hilbert proof file. Structural validity only; run check_hilbert after.
inline DecodedHilbert decode_hilbert(const std::string& text) {
  DecodedHilbert out;
  std::istringstream in(text);
  std::string raw;
  bool header = false;
  std::size_t lineno = 0;
  auto formula = [&](const json& v) {
    try {
      return parse_formula(v.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError("hilbert file line " + std::to_string(lineno) + ": " + e.what());
    }
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw FormatError("hilbert file line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      if (!header) {
        if (j.value("format", "") != "subseq-hilbert" || j.value("version", 0) != 1)
          throw FormatError("not a subseq-hilbert v1 file");
        for (const auto& a : j.value("assumptions", json::array())) out.assumptions.push_back(formula(a));
        header = true;
        continue;
      }
      if (j.at("line").get<std::size_t>() != out.proof.lines.size() + 1)
        throw FormatError("hilbert file line " + std::to_string(lineno) + ": lines must be numbered consecutively from 1");
      HilbertLine line{formula(j.at("formula")), {}};
      const std::string just = j.at("just").get<std::string>();
      if (just == "axiom") {
        line.just.kind = JustKind::Axiom;
        line.just.number = j.at("axiom").get<int>();
        const json subst = j.value("subst", json::object());
        for (const auto& [k, v] : subst.items()) line.just.subst.emplace(k, formula(v));
      } else if (just == "rule") {
        line.just.kind = JustKind::Rule;
        line.just.number = j.at("rule").get<int>();
        for (auto r : j.at("refs").get<std::vector<std::size_t>>()) {
          if (r == 0) throw FormatError("hilbert file line " + std::to_string(lineno) + ": references start at 1");
          line.just.refs.push_back(r - 1);
        }
      } else if (just == "assumption") {
        line.just.kind = JustKind::Assumption;
        auto idx = j.at("index").get<std::size_t>();
        if (idx == 0) throw FormatError("hilbert file line " + std::to_string(lineno) + ": assumption indices start at 1");
        line.just.assumption = idx - 1;
      } else {
        throw FormatError("hilbert file line " + std::to_string(lineno) + ": unknown justification '" + just + "'");
      }
      out.proof.lines.push_back(std::move(line));
    } catch (const json::exception& e) {
      throw FormatError("hilbert file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header) throw FormatError("empty hilbert file");
  return out;
}

// --- countermodels ---------------------------------------------------------------------

inline json model_to_json(const Model& m) {
  json j;
  j["worlds"] = m.worlds;
  auto set = [&](std::uint32_t x) {
    std::vector<int> ws;
    for (int i = 0; i < m.worlds; ++i)
      if ((x >> i) & 1u) ws.push_back(i);
    return ws;
  };
  json nb = json::array();
  for (int w = 0; w < m.worlds; ++w) {
    json fam = json::array();
    for (std::uint32_t x = 0; x < (1u << m.worlds); ++x)
      if ((m.nbhd[w] >> x) & 1u) fam.push_back(set(x));
    nb.push_back(std::move(fam));
  }
  j["neighbourhoods"] = std::move(nb);
  json val = json::object();
  for (const auto& [a, v] : m.valuation) val[a] = set(v);
  j["valuation"] = std::move(val);
  j["superset_closed"] = m.superset_closed;
  return j;
}

}  // namespace subseq
