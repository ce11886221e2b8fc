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

#include "plausikit/formula.hpp"

#include <algorithm>
#include <vector>

#include "plausikit/errors.hpp"
#include "plausikit/model.hpp"

namespace plausikit {

struct Formula::Node {
  Op op;
  std::string label;
  std::vector<Formula> kids;
  std::size_t hash = 0;
  std::uint64_t size = 1;
  unsigned depth = 0;
  std::uint8_t fragmentBits = 0;
};

namespace {

constexpr std::uint64_t kSizeCap = ~std::uint64_t{0} / 4;
constexpr std::uint8_t kDynamicBits = Fragment{Modality::Ann, Modality::Up}.bits();

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::string_view modalityName(Modality m) {
  switch (m) {
    case Modality::K: return "K";
    case Modality::Bc: return "Bc";
    case Modality::Bplus: return "Bplus";
    case Modality::Gt: return "Gt";
    case Modality::Ann: return "Ann";
    case Modality::Up: return "Up";
  }
  return "?";
}

Fragment Fragment::parse(std::string_view csv) {
  Fragment f;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t end = csv.find(',', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      bool found = false;
      for (Modality m : kAllModalities) {
        if (modalityName(m) == item) {
          f = f.with(m);
          found = true;
        }
      }
      if (!found) throw InputError("unknown operator kind '" + std::string(item) +
                                   "' (expected K, Bc, Bplus, Gt, Ann or Up)");
    }
    pos = end + 1;
  }
  return f;
}

std::string Fragment::toString() const {
  std::string out = "{";
  for (Modality m : kAllModalities) {
    if (!contains(m)) continue;
    if (out.size() > 1) out += ", ";
    out += modalityName(m);
  }
  return out + "}";
}

std::string Fragment::toCsv() const {
  std::string out;
  for (Modality m : kAllModalities) {
    if (!contains(m)) continue;
    if (!out.empty()) out += ",";
    out += modalityName(m);
  }
  return out;
}

std::optional<Modality> modalityOf(Op op) {
  switch (op) {
    case Op::Know: return Modality::K;
    case Op::CondBelief: return Modality::Bc;
    case Op::SafeBelief: return Modality::Bplus;
    case Op::GtBox: return Modality::Gt;
    case Op::Announce: return Modality::Ann;
    case Op::Upgrade: return Modality::Up;
    default: return std::nullopt;
  }
}

Formula makeFormula(Op op, std::string label, const Formula* a, const Formula* b) {
  auto node = std::make_shared<Formula::Node>();
  node->op = op;
  node->label = std::move(label);
  std::size_t h = mix(static_cast<std::size_t>(op) + 1, std::hash<std::string>{}(node->label));
  std::uint8_t bits = 0;
  if (auto m = modalityOf(op)) bits = Fragment{*m}.bits();
  for (const Formula* c : {a, b}) {
    if (c == nullptr) continue;
    h = mix(h, c->hash());
    node->size = std::min(kSizeCap, node->size + c->size());
    node->depth = std::max(node->depth, c->depth() + 1);
    bits |= c->node_->fragmentBits;
    node->kids.push_back(*c);
  }
  node->hash = h;
  node->fragmentBits = bits;
  return Formula(std::move(node));
}

Formula::Formula() {
  static const Formula top = makeFormula(Op::Top, {}, nullptr, nullptr);
  node_ = top.node_;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::label() const { return node_->label; }
std::size_t Formula::arity() const { return node_->kids.size(); }
const Formula& Formula::child(std::size_t k) const { return node_->kids.at(k); }
std::size_t Formula::hash() const { return node_->hash; }
std::uint64_t Formula::size() const { return node_->size; }
unsigned Formula::depth() const { return node_->depth; }
bool Formula::isStatic() const { return (node_->fragmentBits & kDynamicBits) == 0; }
Fragment Formula::fragment() const { return Fragment::fromBits(node_->fragmentBits); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.hash != y.hash || x.op != y.op || x.size != y.size || x.kids.size() != y.kids.size() ||
      x.label != y.label)
    return false;
  for (std::size_t k = 0; k < x.kids.size(); ++k)
    if (!(x.kids[k] == y.kids[k])) return false;
  return true;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (auto c = x.op <=> y.op; c != 0) return c;
  if (auto c = x.label <=> y.label; c != 0) return c;
  for (std::size_t k = 0; k < x.kids.size(); ++k)
    if (auto c = x.kids[k] <=> y.kids[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void requireIdentifier(const std::string& name, const char* what) {
  if (!isIdentifier(name)) throw InputError(std::string("invalid ") + what + " name '" + name + "'");
}

}  // namespace

Formula Atom(std::string name) {
  requireIdentifier(name, "atom");
  if (name == "true" || name == "false") throw InputError("'" + name + "' is a keyword, not an atom");
  return makeFormula(Op::Atom, std::move(name), nullptr, nullptr);
}

Formula Top() { return Formula(); }

Formula Bot() {
  static const Formula bot = makeFormula(Op::Bot, {}, nullptr, nullptr);
  return bot;
}

Formula Not(Formula f) { return makeFormula(Op::Not, {}, &f, nullptr); }
Formula And(Formula a, Formula b) { return makeFormula(Op::And, {}, &a, &b); }
Formula Or(Formula a, Formula b) { return makeFormula(Op::Or, {}, &a, &b); }
Formula Implies(Formula a, Formula b) { return makeFormula(Op::Implies, {}, &a, &b); }
Formula Iff(Formula a, Formula b) { return And(Implies(a, b), Implies(b, a)); }

Formula Know(std::string agent, Formula f) {
  requireIdentifier(agent, "agent");
  return makeFormula(Op::Know, std::move(agent), &f, nullptr);
}

Formula CondBelief(std::string agent, Formula condition, Formula body) {
  requireIdentifier(agent, "agent");
  return makeFormula(Op::CondBelief, std::move(agent), &condition, &body);
}

Formula SafeBelief(std::string agent, Formula f) {
  requireIdentifier(agent, "agent");
  return makeFormula(Op::SafeBelief, std::move(agent), &f, nullptr);
}

Formula GtBox(std::string agent, Formula f) {
  requireIdentifier(agent, "agent");
  return makeFormula(Op::GtBox, std::move(agent), &f, nullptr);
}

Formula Announce(Formula pre, Formula body) { return makeFormula(Op::Announce, {}, &pre, &body); }
Formula Upgrade(Formula pre, Formula body) { return makeFormula(Op::Upgrade, {}, &pre, &body); }

Formula Khat(std::string agent, Formula f) { return Not(Know(std::move(agent), Not(std::move(f)))); }
Formula GtDia(std::string agent, Formula f) { return Not(GtBox(std::move(agent), Not(std::move(f)))); }

Fragment fragmentOf(const Formula& f) { return f.fragment(); }

}  // namespace plausikit
