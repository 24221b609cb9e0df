// Line-oriented proof files.
//
//   # comment
//   axiom E: (all x1 (x1 = x1))
//   theory: Nstar extends N
//   1. (all x1 (x1 = x1)) ; AX E
//   2. ((0 = 0) -> ((0 = 0) -> (0 = 0))) ; ?
//
// Justifications: K1..K6, N7, "AX <name>", "MP <i> <j>", "GEN <i> x<v>",
// or "?" to request discovery. The theory is K, N, N-eq, or a new name; a
// new name extends N (or the base given after "extends") with the declared
// axioms.

#ifndef PEANO_PROOF_FILE_HPP
#define PEANO_PROOF_FILE_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "peano/kernel.hpp"
#include "peano/text.hpp"

namespace peano {

class ProofFileError : public std::runtime_error {
 public:
  ProofFileError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ProofFile {
  TheoryPtr theory;
  std::vector<ProofLine> lines;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::size_t> to_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline Wff parse_wff_at(std::string_view text, std::size_t line_no) {
  try {
    return parse_core(text);
  } catch (const SyntaxError& e) {
    throw ProofFileError(line_no, std::string("syntax error ") + e.what());
  }
}

inline Justification parse_justification(std::string_view text, std::size_t line_no) {
  auto w = words(text);
  auto bad = [&]() { return ProofFileError(line_no, "malformed justification '" + std::string(trim(text)) + "'"); };
  if (w.empty()) throw bad();
  if (w.size() == 1 && w[0] == "?") return Unjustified{};
  if (w.size() == 1) {
    if (auto s = scheme_from_string(w[0])) return ByScheme{*s};
    throw bad();
  }
  if (w[0] == "AX" && w.size() == 2) return ByAxiom{std::string(w[1])};
  if (w[0] == "MP" && w.size() == 3) {
    auto i = to_index(w[1]), j = to_index(w[2]);
    if (!i || !j) throw bad();
    return ByModusPonens{*i, *j};
  }
  if (w[0] == "GEN" && w.size() == 3 && w[2].size() > 1 && w[2][0] == 'x') {
    auto i = to_index(w[1]), v = to_index(w[2].substr(1));
    if (!i || !v || *v == 0) throw bad();
    return ByGeneralization{*i, static_cast<VarIndex>(*v)};
  }
  throw bad();
}

}  // namespace detail

inline ProofFile parse_proof_file(std::string_view text) {
  Theory::AxiomTable declared;
  std::optional<std::string> theory_name;
  std::string base_name = "N";
  std::vector<ProofLine> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (raw.empty() || raw.front() == '#') continue;

    if (raw.starts_with("axiom ")) {
      if (theory_name) throw ProofFileError(line_no, "axiom declarations must precede the theory line");
      std::size_t colon = raw.find(':');
      if (colon == std::string_view::npos) throw ProofFileError(line_no, "expected 'axiom <name>: <wff>'");
      std::string name(detail::trim(raw.substr(6, colon - 6)));
      if (name.empty() || detail::words(name).size() != 1) throw ProofFileError(line_no, "bad axiom name");
      declared.emplace_back(name, detail::parse_wff_at(raw.substr(colon + 1), line_no));
      continue;
    }
    if (raw.starts_with("theory:")) {
      if (theory_name) throw ProofFileError(line_no, "duplicate theory line");
      auto w = detail::words(raw.substr(7));
      if (w.size() == 3 && w[1] == "extends") base_name = std::string(w[2]);
      else if (w.size() != 1) throw ProofFileError(line_no, "expected 'theory: <name> [extends <base>]'");
      theory_name = std::string(w[0]);
      continue;
    }

    if (!theory_name) throw ProofFileError(line_no, "missing 'theory:' header before the first proof line");
    std::size_t dot = raw.find('.');
    auto number = dot == std::string_view::npos ? std::nullopt : detail::to_index(detail::trim(raw.substr(0, dot)));
    if (!number) throw ProofFileError(line_no, "expected '<k>. <wff> ; <justification>'");
    if (*number != lines.size() + 1)
      throw ProofFileError(line_no, "expected line number " + std::to_string(lines.size() + 1));
    std::size_t semi = raw.rfind(';');
    if (semi == std::string_view::npos || semi < dot) throw ProofFileError(line_no, "missing '; <justification>'");
    Wff w = detail::parse_wff_at(raw.substr(dot + 1, semi - dot - 1), line_no);
    lines.push_back({std::move(w), detail::parse_justification(raw.substr(semi + 1), line_no)});
  }
  if (!theory_name) throw ProofFileError(line_no, "missing 'theory:' header");
  if (lines.empty()) throw ProofFileError(line_no, "no proof lines");

  TheoryPtr theory = builtin_theory(*theory_name);
  if (theory) {
    if (!declared.empty())
      throw ProofFileError(line_no, "axiom declarations need a new theory name, not builtin " + *theory_name);
  } else {
    TheoryPtr base = builtin_theory(base_name);
    if (!base) throw ProofFileError(line_no, "unknown base theory '" + base_name + "'");
    try {
      theory = extend_theory(base, *theory_name, declared);
    } catch (const TheoryError& e) {
      throw ProofFileError(line_no, e.what());
    }
  }
  return {std::move(theory), std::move(lines)};
}

inline ProofFile load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_proof_file(ss.str());
}

// Writes lines back in file syntax; declarations cover the axioms the
// theory adds on top of its builtin ancestor.
inline std::string format_proof(const Theory& theory, const std::vector<ProofLine>& lines) {
  std::string out;
  const Theory* root = &theory;
  while (root->parent() && !builtin_theory(root->name())) root = root->parent().get();
  if (root != &theory) {
    std::size_t inherited = root->proper_axioms().size();
    for (std::size_t i = inherited; i < theory.proper_axioms().size(); ++i) {
      const auto& [name, w] = theory.proper_axioms()[i];
      out += "axiom " + name + ": " + print_wff(w) + '\n';
    }
    out += "theory: " + theory.name() + " extends " + root->name() + '\n';
  } else {
    out += "theory: " + theory.name() + '\n';
  }
  for (std::size_t k = 0; k < lines.size(); ++k)
    out += std::to_string(k + 1) + ". " + print_wff(lines[k].wff) + " ; " + to_string(lines[k].justification) + '\n';
  return out;
}

inline std::string format_proof(const Proof& p) { return format_proof(*p.theory(), p.lines()); }

}  // namespace peano

#endif  // PEANO_PROOF_FILE_HPP
