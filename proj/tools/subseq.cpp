// Command-line front end. Exit codes: 0 proved / success, 1 not provable /
// countermodel found / rejected, 2 input error, 3 internal invariant failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "subseq/subseq.hpp"

using namespace subseq;

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kInternal = 3 };

struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Everything printed as a proof goes through the checker first.
void self_check(const Derivation& d, Calculus c) {
  try {
    check_derivation(d, c);
  } catch (const KernelError& e) {
    throw InternalFailure(std::string("produced proof failed re-validation: ") + e.what());
  }
}

void self_check(const HilbertProof& p) {
  try {
    check_hilbert(p);
  } catch (const HilbertError& e) {
    throw InternalFailure(std::string("produced Hilbert proof failed re-validation: ") + e.what());
  }
}

void emit(const Derivation& d, Calculus c, const std::string& format) {
  self_check(d, c);
  if (format == "json") std::cout << encode_proof(d, c);
  else std::cout << print_derivation(d);
}

int cmd_prove(const std::string& text, const std::string& calc_name, const std::string& format) {
  auto calc = calculus_from_name(calc_name);
  if (!calc) throw std::invalid_argument("unknown calculus '" + calc_name + "'");
  Sequent s = parse_sequent(text);
  if (*calc == Calculus::GWFS) {
    SingleOutcome out;
    try {
      out = prove_single(s);
    } catch (const ScopeError& e) {
      std::cerr << e.what() << "\n";
      return kInput;
    }
    if (!out.proved()) {
      std::cout << "not provable\n";
      return kNo;
    }
    emit(*out.proof, *calc, format);
    return kOk;
  }
  auto out = prove(s, *calc);
  if (!out.proved) {
    std::cout << "not provable\n";
    for (const auto& leaf : out.failed_leaves) std::cout << "  open: " << print_sequent(leaf) << "\n";
    return kNo;
  }
  emit(*out.proof, *calc, format);
  return kOk;
}

int cmd_check(const std::string& path, bool allow_cut) {
  std::string text = slurp(path);
  try {
    auto d = decode_proof(text, {allow_cut});
    std::cout << "ok: " << calculus_name(d.calculus) << " derivation of '" << print_sequent(d.proof.conclusion)
              << "', height " << d.proof.height() << "\n";
    return kOk;
  } catch (const KernelError& e) {
    std::cout << "rejected: " << e.what() << "\n";
    return kNo;
  }
}

int cmd_cutelim(const std::string& left, const std::string& right, const std::string& cut, const std::string& format) {
  auto l = decode_proof(slurp(left));
  auto r = decode_proof(slurp(right));
  if (l.calculus != Calculus::GWFN2 || r.calculus != Calculus::GWFN2)
    throw std::invalid_argument("cutelim works on gwfn2 proofs");
  Formula f = parse_formula(cut);
  CutTrace trace;
  Derivation d = eliminate_cut({l.proof, r.proof, f}, &trace);
  if (trace.violations) throw InternalFailure("cut elimination measure did not decrease");
  emit(d, Calculus::GWFN2, format);
  return kOk;
}

int cmd_translate(const std::string& text) {
  Sequent s = parse_sequent(text);
  std::cout << print_sequent(translate_sequent(s).image) << "\n";
  return kOk;
}

int cmd_countermodel(const std::string& text, int max_worlds, const std::string& format) {
  Sequent s = parse_sequent(text);
  auto m = countermodel(s, max_worlds);
  if (!m) {
    std::cout << "exhausted: no countermodel with at most " << max_worlds << " worlds\n";
    return kOk;
  }
  if (sequent_valid(*m, s) || model_violation(*m)) throw InternalFailure("countermodel failed re-validation");
  if (format == "json") std::cout << model_to_json(*m).dump(2) << "\n";
  else std::cout << print_model(*m);
  return kNo;
}

int cmd_companion(const std::string& text) {
  Sequent s = parse_sequent(text);
  auto r = companion_check(s.ante, s.succ);
  std::cout << "gwfn2: " << (r.sequent_provable ? "provable" : "not provable") << "\n";
  std::cout << "mnec:  |- " << print_formula(r.modal_goal) << ": " << (r.modal_provable ? "provable" : "not provable")
            << "\n";
  if (r.sequent_provable != r.modal_provable) throw InternalFailure("companion results disagree");
  return r.sequent_provable ? kOk : kNo;
}

int cmd_hilbert_check(const std::string& path) {
  auto h = decode_hilbert(slurp(path));
  try {
    Formula c = check_hilbert(h.proof, h.assumptions);
    std::cout << "ok: " << print_formula(c) << "\n";
    return kOk;
  } catch (const HilbertError& e) {
    std::cout << "rejected: " << e.what() << "\n";
    return kNo;
  }
}

int cmd_hilbert_from_sequent(const std::string& path, const std::string& format) {
  auto d = decode_proof(slurp(path));
  if (d.calculus != Calculus::GWFN2) throw std::invalid_argument("from-sequent expects a gwfn2 proof");
  HilbertProof h = sequent_to_hilbert(d.proof);
  self_check(h);
  if (format == "json") std::cout << encode_hilbert(h);
  else std::cout << print_hilbert(h);
  return kOk;
}

int cmd_hilbert_to_sequent(const std::string& path, const std::string& sequent, const std::string& format) {
  auto h = decode_hilbert(slurp(path));
  if (!h.assumptions.empty()) throw std::invalid_argument("to-sequent needs an assumption-free proof");
  check_hilbert(h.proof);
  Sequent s;
  if (!sequent.empty()) {
    s = parse_sequent(sequent);
  } else {
    const Formula& last = h.proof.lines.back().formula;
    s = last.is(Kind::StrictImp) ? Sequent{{last.lhs()}, {last.rhs()}} : Sequent{{}, {last}};
  }
  emit(hilbert_to_sequent(h.proof, s.ante, s.succ), Calculus::GWFN2, format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subseq: sequent calculi for WF_N2, their Hilbert system and neighbourhood semantics"};
  app.require_subcommand(1);

  std::string calc = "gwfn2", format = "text", sequent, path, left, right, cut;
  int max_worlds = 3;
  bool allow_cut = false;

  auto* prove_cmd = app.add_subcommand("prove", "decide a sequent and print a proof");
  prove_cmd->add_option("--calculus", calc, "gwfn2 | gwfs | mnec")->check(CLI::IsMember({"gwfn2", "gwfs", "mnec"}));
  prove_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  prove_cmd->add_option("sequent", sequent)->required();

  auto* check_cmd = app.add_subcommand("check", "validate a proof file");
  check_cmd->add_option("file", path)->required();
  check_cmd->add_flag("--allow-cut", allow_cut, "accept Cut nodes");

  auto* cut_cmd = app.add_subcommand("cutelim", "eliminate a cut between two gwfn2 proofs");
  cut_cmd->add_option("left", left, "proof of G |- D, Delta")->required();
  cut_cmd->add_option("right", right, "proof of D, G' |- Delta'")->required();
  cut_cmd->add_option("--cut", cut, "the cut formula D")->required();
  cut_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tr_cmd = app.add_subcommand("translate", "apply the []-translation to a sequent");
  tr_cmd->add_option("sequent", sequent)->required();

  auto* cm_cmd = app.add_subcommand("countermodel", "search superset-closed neighbourhood models");
  cm_cmd->add_option("--max-worlds", max_worlds)->check(CLI::Range(1, 3));
  cm_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cm_cmd->add_option("sequent", sequent)->required();

  auto* comp_cmd = app.add_subcommand("companion", "compare Gamma |- Delta with its modal companion");
  comp_cmd->add_option("sequent", sequent)->required();

  auto* hil = app.add_subcommand("hilbert", "Hilbert-style proofs");
  hil->require_subcommand(1);
  auto* hcheck = hil->add_subcommand("check", "validate a Hilbert proof file");
  hcheck->add_option("file", path)->required();
  auto* hfrom = hil->add_subcommand("from-sequent", "compile a gwfn2 proof file into a Hilbert proof");
  hfrom->add_option("file", path)->required();
  hfrom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* hto = hil->add_subcommand("to-sequent", "compile a Hilbert proof into a gwfn2 proof");
  hto->add_option("file", path)->required();
  hto->add_option("--sequent", sequent, "target sequent (default: read off the last line)");
  hto->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*prove_cmd) return cmd_prove(sequent, calc, format);
    if (*check_cmd) return cmd_check(path, allow_cut);
    if (*cut_cmd) return cmd_cutelim(left, right, cut, format);
    if (*tr_cmd) return cmd_translate(sequent);
    if (*cm_cmd) return cmd_countermodel(sequent, max_worlds, format);
    if (*comp_cmd) return cmd_companion(sequent);
    if (*hcheck) return cmd_hilbert_check(path);
    if (*hfrom) return cmd_hilbert_from_sequent(path, format);
    if (*hto) return cmd_hilbert_to_sequent(path, sequent, format);
  } catch (const InternalFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error but is an input problem.
    if (dynamic_cast<const std::invalid_argument*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kInput;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
