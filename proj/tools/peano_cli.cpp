// peano: command-line front end for the proof kernel, formula builders,
// Goldbach scans and coded-model evaluation.
//
// Exit codes: 0 success, 1 domain failure (rejected proof, undiscoverable
// line, false axiom), 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "peano/io.hpp"
#include "peano/peano.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json_mode = false;

  // Prints one document; the schema version goes first.
  void emit(json body) const {
    json doc = {{"schema", peano::kJsonSchemaVersion}};
    doc.update(body);
    std::cout << doc.dump(2) << '\n';
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text or file contents, exactly one of them.
std::string inline_or_file(const std::string& text, const std::string& path, const char* what) {
  if (!text.empty() && !path.empty()) throw UsageError(std::string("give either an inline ") + what + " or a file, not both");
  if (text.empty() && path.empty()) throw UsageError(std::string("missing ") + what);
  return path.empty() ? text : read_file(path);
}

// "1.5", "3/2", "2".
double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    if (auto slash = s.find('/'); slash != std::string::npos) {
      double num = std::stod(s.substr(0, slash), &used);
      if (used != slash) throw UsageError("bad number " + s);
      std::string den_text = s.substr(slash + 1);
      double den = std::stod(den_text, &used);
      if (used != den_text.size() || den == 0) throw UsageError("bad number " + s);
      return num / den;
    }
    double v = std::stod(s, &used);
    if (used != s.size()) throw UsageError("bad number " + s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad number " + s);
  }
}

// "x1=3,x2=5"
std::map<peano::VarIndex, std::uint64_t> parse_env(const std::string& s) {
  std::map<peano::VarIndex, std::uint64_t> env;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (item.empty() || item[0] != 'x' || eq == std::string::npos) throw UsageError("bad binding '" + item + "'");
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item.substr(1, eq - 1), &used);
      if (used != eq - 1 || v == 0) throw UsageError("bad variable in '" + item + "'");
      std::string value = item.substr(eq + 1);
      unsigned long long n = std::stoull(value, &used);
      if (used != value.size()) throw UsageError("bad value in '" + item + "'");
      env[static_cast<peano::VarIndex>(v)] = n;
    } catch (const std::logic_error&) {
      throw UsageError("bad binding '" + item + "'");
    }
  }
  return env;
}

std::string witness_text(const std::vector<peano::Binding>& ws, const char* label) {
  if (ws.empty()) return {};
  std::string out = std::string(", ") + label + ' ';
  if (ws.size() == 1) return out + std::to_string(ws[0].index);
  out += '(';
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ws[i].index);
  }
  return out + ')';
}

std::string verdict_text(const peano::EvalResult& r) {
  using peano::ThreeValued;
  std::string out(peano::to_string(r.value));
  if (r.value == ThreeValued::True) out += witness_text(r.witnesses, "witness");
  if (r.value == ThreeValued::False) out += witness_text(r.witnesses, "counterexample");
  return out;
}

int run_check(const Output& out, const std::string& path) {
  auto file = peano::parse_proof_file(read_file(path));
  // '?' lines are discovered first; any that stay unjustified fail the check.
  peano::Proof proof(file.theory, peano::discover(file.theory, file.lines).annotated);
  peano::Verdict v = peano::check_proof(proof);
  if (out.json_mode) {
    json body = peano::to_json(v);
    body["theory"] = proof.theory()->name();
    out.emit(body);
  } else {
    for (const auto& l : v.lines)
      std::cout << l.line << ". " << (l.ok ? "ok" : "FAIL: " + l.reason) << '\n';
    if (v.accepted) std::cout << "accepted (" << v.lines.size() << " lines)\n";
    else std::cout << "rejected at line " << *v.first_failure() << '\n';
  }
  return v.accepted ? 0 : 1;
}

int run_discover(const Output& out, const std::string& path) {
  auto file = peano::parse_proof_file(read_file(path));
  peano::Discovery d = peano::discover(file.theory, file.lines);
  if (out.json_mode) {
    json lines = json::array();
    for (std::size_t k = 0; k < d.annotated.size(); ++k)
      lines.push_back({{"line", k + 1},
                       {"wff", peano::print_wff(d.annotated[k].wff)},
                       {"justification", peano::to_string(d.annotated[k].justification)}});
    json failures = json::array();
    for (const auto& f : d.failures) failures.push_back({{"line", f.line}, {"reason", f.reason}});
    out.emit({{"theory", file.theory->name()}, {"complete", d.ok()}, {"lines", lines}, {"failures", failures}});
  } else {
    std::cout << peano::format_proof(*file.theory, d.annotated);
    for (const auto& f : d.failures) std::cerr << "line " << f.line << ": " << f.reason << '\n';
  }
  return d.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order arithmetic workbench"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json_mode, "Emit a single JSON document on stdout");

  std::function<int()> action;

  // parse
  std::string wff_text, wff_file;
  bool sugar = false;
  auto* parse = app.add_subcommand("parse", "Parse a formula and print its canonical core form");
  parse->add_option("wff", wff_text, "Formula text");
  parse->add_option("--file", wff_file, "Read the formula from a file");
  parse->add_flag("--sugar", sugar, "Print with ex, &, | and <-> where they apply");
  parse->callback([&] {
    action = [&] {
      auto surface = peano::parse_wff(inline_or_file(wff_text, wff_file, "formula"));
      peano::Wff w = peano::lower(surface);
      std::string printed = peano::print_wff(w, sugar);
      if (out.json_mode)
        out.emit({{"input", peano::print_wff(surface)}, {"core", peano::print_wff(w)}, {"output", printed},
                  {"free_vars", peano::free_vars(w)}});
      else
        std::cout << printed << '\n';
      return 0;
    };
  });

  // check / discover
  std::string proof_path;
  auto* check = app.add_subcommand("check", "Verify a proof file; '?' lines are discovered first");
  check->add_option("prooffile", proof_path)->required();
  check->callback([&] { action = [&] { return run_check(out, proof_path); }; });
  auto* disc = app.add_subcommand("discover", "Fill in '?' justifications of a proof file");
  disc->add_option("prooffile", proof_path)->required();
  disc->callback([&] { action = [&] { return run_discover(out, proof_path); }; });

  // sentence goldbach
  bool classical = false;
  auto* sentence = app.add_subcommand("sentence", "Print a formal sentence");
  sentence->require_subcommand(1);
  auto* sgold = sentence->add_subcommand("goldbach", "The Goldbach sentence over the restricted set");
  sgold->add_flag("--classical", classical, "Every even number >= 4 instead of the restricted set");
  sgold->add_flag("--sugar", sugar, "Print with abbreviations");
  sgold->callback([&] {
    action = [&] {
      peano::Wff g = classical ? peano::classical_goldbach_sentence() : peano::goldbach_sentence();
      if (out.json_mode)
        out.emit({{"variant", classical ? "classical" : "restricted"},
                  {"sentence", peano::print_wff(g, sugar)},
                  {"closed", peano::is_closed(g)}});
      else
        std::cout << peano::print_wff(g, sugar) << '\n';
      return 0;
    };
  });

  // goldbach scan / partitions
  std::uint64_t limit = 0, alpha = 0;
  unsigned chunks = std::max(1u, std::thread::hardware_concurrency());
  bool csv = false;
  auto* gold = app.add_subcommand("goldbach", "Concrete Goldbach computations");
  gold->require_subcommand(1);
  auto* scan = gold->add_subcommand("scan", "Verify every member of the restricted set up to a limit");
  scan->add_option("--limit", limit)->required();
  scan->add_option("--chunks", chunks, "Parallel chunks")->check(CLI::PositiveNumber);
  scan->add_flag("--csv", csv, "Rows alpha,count");
  scan->callback([&] {
    action = [&] {
      auto report = peano::goldbach::scan(limit, chunks);
      if (out.json_mode) out.emit(peano::to_json(report));
      else if (csv) std::cout << peano::to_csv(report);
      else {
        std::cout << "limit " << limit << ": " << report.members.size() << " members, "
                  << (report.verified ? "verified" : "FAILED at " + std::to_string(*report.first_failure)) << '\n';
      }
      return report.verified ? 0 : 1;
    };
  });
  auto* parts = gold->add_subcommand("partitions", "List Goldbach partitions of an even number");
  parts->add_option("alpha", alpha)->required();
  parts->callback([&] {
    action = [&] {
      if (alpha % 2 != 0 || alpha < 4) throw UsageError("alpha must be even and >= 4");
      auto ps = peano::goldbach::partitions(alpha);
      if (out.json_mode) {
        out.emit({{"alpha", alpha}, {"partitions", ps}});
      } else {
        std::string line;
        for (auto [p, q] : ps) line += (line.empty() ? "" : " ") + ("(" + std::to_string(p) + "," + std::to_string(q) + ")");
        std::cout << line << '\n';
      }
      return 0;
    };
  });

  // model axioms / eval / limits
  std::string u_text = "1", env_text;
  std::uint64_t bound = 0, n_max = 0;
  unsigned steps = 0;
  bool strict = false;
  auto* model = app.add_subcommand("model", "Coded interpretations I_(alpha,u)");
  model->require_subcommand(1);

  auto* axioms = model->add_subcommand("axioms", "Check N1-N6 in I_(alpha,u)");
  axioms->add_option("--alpha", alpha)->required();
  axioms->add_option("--u", u_text)->required();
  axioms->add_option("--bound", bound)->required();
  axioms->callback([&] {
    action = [&] {
      auto m = peano::CodedModel::standard_coded(alpha, parse_real(u_text));
      auto reports = peano::check_axioms(m, bound);
      bool any_false = false;
      for (const auto& r : reports) any_false = any_false || r.result.value == peano::ThreeValued::False;
      if (out.json_mode) {
        out.emit({{"alpha", alpha}, {"u", m.u()}, {"bound", bound}, {"axioms", peano::to_json(reports)}});
      } else {
        for (const auto& r : reports) std::cout << r.axiom << ' ' << verdict_text(r.result) << '\n';
      }
      return any_false ? 1 : 0;
    };
  });

  std::string eval_file;
  auto* eval = model->add_subcommand("eval", "Evaluate a formula in I_(alpha,u)");
  eval->add_option("--alpha", alpha)->required();
  eval->add_option("--u", u_text)->required();
  eval->add_option("--bound", bound)->required();
  eval->add_option("--wff", wff_text, "Formula text");
  eval->add_option("--wff-file", eval_file, "Read the formula from a file");
  eval->add_option("--env", env_text, "Bindings x1=3,x2=5 (indices)");
  eval->add_flag("--strict", strict, "Universal quantifiers never evaluate to True");
  eval->callback([&] {
    action = [&] {
      auto m = peano::CodedModel::standard_coded(alpha, parse_real(u_text));
      peano::Wff w = peano::parse_core(inline_or_file(wff_text, eval_file, "formula"));
      std::map<peano::VarIndex, peano::CodedNat> env;
      if (!env_text.empty())
        for (auto [v, n] : parse_env(env_text)) env[v] = m.encode(n);
      auto r = peano::eval_bounded(m, w, env, bound, peano::EvalOptions{.strict = strict});
      if (out.json_mode) {
        json body = peano::to_json(r);
        body["alpha"] = alpha;
        body["u"] = m.u();
        body["bound"] = bound;
        out.emit(body);
      } else {
        std::cout << verdict_text(r) << '\n';
      }
      return 0;
    };
  });

  auto* limits = model->add_subcommand("limits", "Deviation |psi(n) - n| for u = 1 + 2^-k, k = 1..steps, then u = 1");
  limits->add_option("--alpha", alpha)->required();
  limits->add_option("--nmax", n_max)->required();
  limits->add_option("--steps", steps)->required();
  limits->callback([&] {
    action = [&] {
      auto rows = peano::limit_table(alpha, n_max, peano::halving_sequence(steps));
      if (out.json_mode) {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"u", r.u}, {"n", r.n}, {"psi", r.psi}, {"deviation", r.deviation}});
        out.emit({{"alpha", alpha}, {"rows", arr}});
      } else {
        std::cout << peano::to_csv(alpha, rows);
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const peano::SyntaxError& e) {
    std::cerr << "syntax error " << e.what() << '\n';
  } catch (const peano::ProofFileError& e) {
    std::cerr << "proof file " << e.what() << '\n';
  } catch (const peano::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
  } catch (const peano::EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
