/*
 * Copyright 2026 The plausikit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "plausikit/syntax.hpp"

#include <vector>

#include "plausikit/errors.hpp"

namespace plausikit {

namespace {

enum class Tok { Ident, Tilde, Amp, Bar, Arrow, LParen, RParen, LBrack, RBrack, Bang, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto isIdentChar = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t pos = i + 1;
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (isIdentChar(c)) {
      std::size_t j = i;
      while (j < s.size() && isIdentChar(s[j])) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", pos});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBrack; break;
      case ']': kind = Tok::RBrack; break;
      case '!': kind = Tok::Bang; break;
      default:
        throw ParseError(pos, {"a formula token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), pos});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

bool isPrefixKeyword(const std::string& s) {
  return s == "K" || s == "Khat" || s == "B" || s == "Bplus" || s == "Gt" || s == "GtDia";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parseAll() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail({"'->'", "'|'", "'&'", "end of input"});
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, std::move(expected), t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  void expect(Tok kind, const char* shown) {
    if (peek().kind != kind) fail({shown});
    next();
  }

  std::string identifier() {
    if (peek().kind != Tok::Ident) fail({"identifier"});
    return next().text;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      next();
      return Implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Bar) {
      next();
      f = Or(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::Amp) {
      next();
      f = And(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        next();
        return Not(unary());
      case Tok::LBrack: {
        next();
        if (peek().kind == Tok::Bang) {
          next();
          Formula pre = implication();
          expect(Tok::RBrack, "']'");
          return Announce(pre, unary());
        }
        if (peek().kind == Tok::Ident && peek().text == "up") {
          next();
          Formula pre = implication();
          expect(Tok::RBrack, "']'");
          return Upgrade(pre, unary());
        }
        fail({"'!'", "'up'"});
      }
      case Tok::Ident:
        if (isPrefixKeyword(t.text) && peek(1).kind == Tok::LBrack) return modal();
        return atomic();
      case Tok::LParen:
        return atomic();
      default:
        fail({"'~'", "'K['", "'Khat['", "'B['", "'Bplus['", "'Gt['", "'GtDia['", "'[!'", "'[up'",
              "'true'", "'false'", "identifier", "'('"});
    }
  }

  Formula modal() {
    const std::string op = next().text;
    next();  // '['
    std::string agent = identifier();
    if (op == "B") {
      expect(Tok::Bar, "'|'");
      Formula condition = implication();
      expect(Tok::RBrack, "']'");
      return CondBelief(agent, condition, unary());
    }
    expect(Tok::RBrack, "']'");
    Formula body = unary();
    if (op == "K") return Know(agent, body);
    if (op == "Khat") return Khat(agent, body);
    if (op == "Bplus") return SafeBelief(agent, body);
    if (op == "Gt") return GtBox(agent, body);
    return GtDia(agent, body);  // GtDia
  }

  Formula atomic() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident) {
      std::string name = next().text;
      if (name == "true") return Top();
      if (name == "false") return Bot();
      return Atom(std::move(name));
    }
    fail({"'true'", "'false'", "identifier", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
enum Level { kImplies = 1, kOr = 2, kAnd = 3, kUnary = 4 };

int level(const Formula& f) {
  switch (f.op()) {
    case Op::Implies: return kImplies;
    case Op::Or: return kOr;
    case Op::And: return kAnd;
    default: return kUnary;
  }
}

void printTo(const Formula& f, std::string& out);

void printWrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  printTo(f, out);
  if (parens) out += ')';
}

// Prefix operator followed by its operand; a space separates them unless the
// operand opens a parenthesis.
void printPrefixed(const std::string& prefix, const Formula& operand, std::string& out) {
  out += prefix;
  const bool parens = level(operand) < kUnary;
  if (!parens) out += ' ';
  printWrapped(operand, parens, out);
}

void printTo(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom: out += f.label(); return;
    case Op::Top: out += "true"; return;
    case Op::Bot: out += "false"; return;
    case Op::Not: {
      const Formula& g = f.child(0);
      if ((g.op() == Op::Know || g.op() == Op::GtBox) && g.child(0).op() == Op::Not) {
        printPrefixed(std::string(g.op() == Op::Know ? "Khat[" : "GtDia[") + g.label() + "]",
                      g.child(0).child(0), out);
        return;
      }
      out += '~';
      printWrapped(g, level(g) < kUnary, out);
      return;
    }
    case Op::And:
    case Op::Or: {
      const int lv = level(f);
      printWrapped(f.child(0), level(f.child(0)) < lv, out);
      out += f.op() == Op::And ? " & " : " | ";
      printWrapped(f.child(1), level(f.child(1)) <= lv, out);
      return;
    }
    case Op::Implies:
      printWrapped(f.child(0), level(f.child(0)) <= kImplies, out);
      out += " -> ";
      printTo(f.child(1), out);
      return;
    case Op::Know: printPrefixed("K[" + f.label() + "]", f.child(0), out); return;
    case Op::SafeBelief: printPrefixed("Bplus[" + f.label() + "]", f.child(0), out); return;
    case Op::GtBox: printPrefixed("Gt[" + f.label() + "]", f.child(0), out); return;
    case Op::CondBelief: {
      std::string prefix = "B[" + f.label() + " | ";
      printTo(f.child(0), prefix);
      printPrefixed(prefix + "]", f.child(1), out);
      return;
    }
    case Op::Announce:
    case Op::Upgrade: {
      std::string prefix = f.op() == Op::Announce ? "[! " : "[up ";
      printTo(f.child(0), prefix);
      printPrefixed(prefix + "]", f.child(1), out);
      return;
    }
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parseAll(); }

std::string print(const Formula& f) {
  std::string out;
  printTo(f, out);
  return out;
}

}  // namespace plausikit
