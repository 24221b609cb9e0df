// Concrete syntax: parsing and printing of terms and formulas.
//
//   wff  := atom | "~" wff | "(" wff bin wff ")" | "(" q var wff ")"
//   bin  := "->" | "&" | "|" | "<->"          q := "all" | "ex"
//   atom := term "=" term | "(" term "=" term ")" | "A{" k "," n "}(" termlist ")"
//   term := var | const | "0" | "S(" term ")" | "(" term "+" term ")"
//         | "(" term "*" term ")" | "f{" k "," n "}(" termlist ")"
//
// The printer always parenthesizes equations, so printed output reads like
// "(all x1 ((x1 + 0) = x1))".

#ifndef PEANO_TEXT_HPP
#define PEANO_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peano/syntax.hpp"

namespace peano {

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SurfaceWff parse_formula() {
    auto w = wff();
    skip();
    if (!w) fail_hard();
    if (pos_ != text_.size()) {
      note(pos_, "unexpected trailing input");
      fail_hard();
    }
    return *std::move(w);
  }

  Term parse_term() {
    auto t = term();
    skip();
    if (!t) fail_hard();
    if (pos_ != text_.size()) {
      note(pos_, "unexpected trailing input");
      fail_hard();
    }
    return *std::move(t);
  }

 private:
  using K = SurfaceWff::Kind;

  [[noreturn]] void fail_hard() { throw SyntaxError(err_pos_, err_msg_.empty() ? "malformed input" : err_msg_); }

  // Keeps the diagnostic for the furthest position reached.
  void note(std::size_t at, std::string msg) {
    if (err_msg_.empty() || at >= err_pos_) {
      err_pos_ = at;
      err_msg_ = std::move(msg);
    }
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view tok) {
    skip();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    note(pos_, "expected '" + std::string(tok) + "'");
    return false;
  }

  bool peek(std::string_view tok) {
    skip();
    return text_.substr(pos_, tok.size()) == tok;
  }

  std::optional<unsigned> number() {
    skip();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 0xFFFFFFFFull) throw SyntaxError(start, "index too large");
      ++pos_;
    }
    if (pos_ == start) {
      note(start, "expected digits");
      return std::nullopt;
    }
    return static_cast<unsigned>(v);
  }

  std::optional<unsigned> index_after(char prefix) {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != prefix) return std::nullopt;
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      return std::nullopt;
    }
    auto n = number();
    if (*n == 0) throw SyntaxError(start, "index must be >= 1");
    return n;
  }

  // "{k,n}(" after a letter prefix; returns (k, n).
  std::optional<std::pair<unsigned, unsigned>> letter_signature() {
    if (!consume("{")) return std::nullopt;
    std::size_t at = pos_;
    auto k = number();
    if (!k || !consume(",")) return std::nullopt;
    auto n = number();
    if (!n || !consume("}") || !consume("(")) return std::nullopt;
    if (*k == 0 || *n == 0) throw SyntaxError(at, "letter indices must be >= 1");
    return std::pair{*k, *n};
  }

  std::optional<std::vector<Term>> term_list(unsigned arity, std::size_t at) {
    std::vector<Term> out;
    auto first = term();
    if (!first) return std::nullopt;
    out.push_back(*std::move(first));
    while (peek(",")) {
      consume(",");
      auto t = term();
      if (!t) return std::nullopt;
      out.push_back(*std::move(t));
    }
    if (!consume(")")) return std::nullopt;
    if (out.size() != arity)
      throw SyntaxError(at, "arity mismatch: letter declared with arity " + std::to_string(arity) + " applied to " +
                                std::to_string(out.size()) + " arguments");
    return out;
  }

  std::optional<Term> term() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      note(pos_, "unexpected end of input, expected a term");
      return std::nullopt;
    }
    if (auto v = index_after('x')) return Term::var(*v);
    if (auto c = index_after('a')) return Term::constant(*c);
    char c = text_[pos_];
    if (c == '0') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(start, "numerals other than 0 are written with S");
      return Term::zero();
    }
    if (c == 'S') {
      ++pos_;
      if (!consume("(")) return std::nullopt;
      auto t = term();
      if (!t || !consume(")")) return std::nullopt;
      return Term::succ(*std::move(t));
    }
    if (c == 'f') {
      ++pos_;
      auto sig = letter_signature();
      if (!sig) return std::nullopt;
      auto args = term_list(sig->second, start);
      if (!args) return std::nullopt;
      return Term::func(sig->first, *std::move(args));
    }
    if (c == '(') {
      ++pos_;
      auto lhs = term();
      if (!lhs) return std::nullopt;
      bool plus = peek("+");
      if (!plus && !peek("*")) {
        note(pos_, "expected '+' or '*'");
        return std::nullopt;
      }
      ++pos_;
      auto rhs = term();
      if (!rhs || !consume(")")) return std::nullopt;
      return plus ? Term::sum(*std::move(lhs), *std::move(rhs)) : Term::product(*std::move(lhs), *std::move(rhs));
    }
    note(pos_, "expected a term");
    return std::nullopt;
  }

  std::optional<SurfaceWff> equation() {
    auto lhs = term();
    if (!lhs || !consume("=")) return std::nullopt;
    auto rhs = term();
    if (!rhs) return std::nullopt;
    return SurfaceWff::atom(kEqualityPredicate, {*std::move(lhs), *std::move(rhs)});
  }

  std::optional<K> connective() {
    skip();
    if (peek("->")) return pos_ += 2, K::Implies;
    if (peek("<->")) return pos_ += 3, K::Iff;
    if (peek("&")) return pos_ += 1, K::And;
    if (peek("|")) return pos_ += 1, K::Or;
    note(pos_, "expected a connective");
    return std::nullopt;
  }

  std::optional<SurfaceWff> wff() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      note(pos_, "unexpected end of input, expected a formula");
      return std::nullopt;
    }
    if (text_[pos_] == '~') {
      ++pos_;
      auto a = wff();
      if (!a) return std::nullopt;
      return SurfaceWff::unary(K::Not, *std::move(a));
    }
    if (text_[pos_] == 'A' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
      ++pos_;
      auto sig = letter_signature();
      if (!sig) return std::nullopt;
      auto args = term_list(sig->second, start);
      if (!args) return std::nullopt;
      return SurfaceWff::atom(sig->first, *std::move(args));
    }
    if (text_[pos_] == '(') {
      ++pos_;
      skip();
      for (auto [kw, kind] : {std::pair{std::string_view("all"), K::ForAll}, std::pair{std::string_view("ex"), K::Exists}}) {
        if (text_.substr(pos_, kw.size()) != kw) continue;
        pos_ += kw.size();
        auto v = index_after('x');
        if (!v) {
          note(pos_, "expected a variable after quantifier");
          return std::nullopt;
        }
        auto body = wff();
        if (!body || !consume(")")) return std::nullopt;
        return SurfaceWff::quantified(kind, *v, *std::move(body));
      }
      std::size_t inner = pos_;
      if (auto eq = equation(); eq && consume(")")) return eq;
      pos_ = inner;
      if (auto lhs = wff()) {
        if (auto op = connective()) {
          if (auto rhs = wff(); rhs && consume(")")) return SurfaceWff::binary(*op, *std::move(lhs), *std::move(rhs));
        }
      }
      pos_ = start;
    }
    return equation();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t err_pos_ = 0;
  std::string err_msg_;
};

inline void print_term(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += 'x' + std::to_string(t.index()); return;
    case Term::Kind::Const: out += t.index() == kZeroConstant ? "0" : 'a' + std::to_string(t.index()); return;
    case Term::Kind::Func: break;
  }
  auto args = t.args();
  if (t.is_func(kSuccessorLetter, 1)) {
    out += "S(";
    print_term(args[0], out);
    out += ')';
  } else if (t.is_func(kSumLetter, 2) || t.is_func(kProductLetter, 2)) {
    out += '(';
    print_term(args[0], out);
    out += t.index() == kSumLetter ? " + " : " * ";
    print_term(args[1], out);
    out += ')';
  } else {
    out += "f{" + std::to_string(t.index()) + ',' + std::to_string(t.arity()) + "}(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      print_term(args[i], out);
    }
    out += ')';
  }
}

inline void print_formula(const Wff& w, bool resugar, std::string& out) {
  auto binary = [&](const Wff& a, const char* op, const Wff& b) {
    out += '(';
    print_formula(a, resugar, out);
    out += op;
    print_formula(b, resugar, out);
    out += ')';
  };
  switch (w.kind()) {
    case Wff::Kind::Atom: {
      auto ts = w.terms();
      if (w.is_equality()) {
        out += '(';
        print_term(ts[0], out);
        out += " = ";
        print_term(ts[1], out);
        out += ')';
        return;
      }
      out += "A{" + std::to_string(w.predicate()) + ',' + std::to_string(ts.size()) + "}(";
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) out += ", ";
        print_term(ts[i], out);
      }
      out += ')';
      return;
    }
    case Wff::Kind::Not: {
      const Wff& a = w.operand();
      if (resugar) {
        // ~(all x ~B)  ==>  (ex x B)
        if (a.is(Wff::Kind::ForAll) && a.operand().is(Wff::Kind::Not)) {
          out += "(ex x" + std::to_string(a.variable()) + ' ';
          print_formula(a.operand().operand(), resugar, out);
          out += ')';
          return;
        }
        // ~(A -> ~B)  ==>  (A & B), and (A & B) of two converse conditionals is (A <-> B)
        if (a.is(Wff::Kind::Implies) && a.rhs().is(Wff::Kind::Not)) {
          const Wff& l = a.lhs();
          const Wff& r = a.rhs().operand();
          if (l.is(Wff::Kind::Implies) && r.is(Wff::Kind::Implies) && l.lhs() == r.rhs() && l.rhs() == r.lhs())
            return binary(l.lhs(), " <-> ", l.rhs());
          return binary(l, " & ", r);
        }
      }
      out += '~';
      print_formula(a, resugar, out);
      return;
    }
    case Wff::Kind::Implies:
      if (resugar && w.lhs().is(Wff::Kind::Not)) {
        // Keep (A & B) -> C and (ex x A) -> C as conditionals.
        const Wff& n = w.lhs().operand();
        bool conj_like = n.is(Wff::Kind::Implies) && n.rhs().is(Wff::Kind::Not);
        bool exists_like = n.is(Wff::Kind::ForAll) && n.operand().is(Wff::Kind::Not);
        if (!conj_like && !exists_like) return binary(n, " | ", w.rhs());
      }
      return binary(w.lhs(), " -> ", w.rhs());
    case Wff::Kind::ForAll:
      out += "(all x" + std::to_string(w.variable()) + ' ';
      print_formula(w.operand(), resugar, out);
      out += ')';
      return;
  }
}

inline void print_surface(const SurfaceWff& s, std::string& out) {
  using K = SurfaceWff::Kind;
  auto binary = [&](const char* op) {
    out += '(';
    print_surface(s.children[0], out);
    out += op;
    print_surface(s.children[1], out);
    out += ')';
  };
  switch (s.kind) {
    case K::Atom: print_formula(Wff::atom(s.predicate, s.terms), false, out); return;
    case K::Not:
      out += '~';
      print_surface(s.children[0], out);
      return;
    case K::Implies: return binary(" -> ");
    case K::And: return binary(" & ");
    case K::Or: return binary(" | ");
    case K::Iff: return binary(" <-> ");
    case K::ForAll:
    case K::Exists:
      out += s.kind == K::ForAll ? "(all x" : "(ex x";
      out += std::to_string(s.variable) + ' ';
      print_surface(s.children[0], out);
      out += ')';
      return;
  }
}

}  // namespace detail

// Throws SyntaxError with the position of the furthest failure.
inline SurfaceWff parse_wff(std::string_view text) { return detail::Parser(text).parse_formula(); }

inline Term parse_term(std::string_view text) { return detail::Parser(text).parse_term(); }

// parse + lower.
inline Wff parse_core(std::string_view text) { return lower(parse_wff(text)); }

inline std::string print_term(const Term& t) {
  std::string out;
  detail::print_term(t, out);
  return out;
}

// With resugar set, abbreviation patterns print as ex / & / | / <->.
// Either way lower(parse_wff(print_wff(w, r))) == w.
inline std::string print_wff(const Wff& w, bool resugar = false) {
  std::string out;
  detail::print_formula(w, resugar, out);
  return out;
}

inline std::string print_wff(const SurfaceWff& s) {
  std::string out;
  detail::print_surface(s, out);
  return out;
}

}  // namespace peano

#endif  // PEANO_TEXT_HPP
