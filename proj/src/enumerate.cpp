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

#include "plausikit/enumerate.hpp"

#include "plausikit/errors.hpp"

namespace plausikit {

namespace {

// Emits one constructor application; returns false when the visitor stops.
class Layer {
 public:
  Layer(const std::function<bool(const Formula&)>& visit, std::vector<Formula>& next)
      : visit_(visit), next_(next) {}
  bool emit(Formula f) {
    next_.push_back(f);
    return visit_(f);
  }

 private:
  const std::function<bool(const Formula&)>& visit_;
  std::vector<Formula>& next_;
};

}  // namespace

void enumerate(const Signature& sig, Fragment fragment, unsigned depth,
               const std::function<bool(const Formula&)>& visit) {
  std::vector<Formula> all;
  for (const auto& p : sig.atoms) {
    all.push_back(Atom(p));
    if (!visit(all.back())) return;
  }
  all.push_back(Top());
  if (!visit(all.back())) return;

  std::size_t prevStart = 0;  // first index of depth d-1 formulas in `all`
  for (unsigned d = 1; d <= depth; ++d) {
    const std::size_t size = all.size();
    std::vector<Formula> fresh;
    Layer layer(visit, fresh);
    auto unary = [&](auto make) {
      for (std::size_t x = prevStart; x < size; ++x)
        if (!layer.emit(make(all[x]))) return false;
      return true;
    };
    auto binary = [&](auto make) {
      for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) {
          if (x < prevStart && y < prevStart) continue;
          if (!layer.emit(make(all[x], all[y]))) return false;
        }
      return true;
    };

    if (!unary([](const Formula& f) { return Not(f); })) return;
    if (!binary([](const Formula& a, const Formula& b) { return And(a, b); })) return;
    for (const auto& agent : sig.agents)
      if (fragment.contains(Modality::K) && !unary([&](const Formula& f) { return Know(agent, f); })) return;
    for (const auto& agent : sig.agents)
      if (fragment.contains(Modality::Bc) &&
          !binary([&](const Formula& a, const Formula& b) { return CondBelief(agent, a, b); }))
        return;
    for (const auto& agent : sig.agents)
      if (fragment.contains(Modality::Bplus) && !unary([&](const Formula& f) { return SafeBelief(agent, f); }))
        return;
    for (const auto& agent : sig.agents)
      if (fragment.contains(Modality::Gt) && !unary([&](const Formula& f) { return GtBox(agent, f); })) return;
    if (fragment.contains(Modality::Ann) &&
        !binary([](const Formula& a, const Formula& b) { return Announce(a, b); }))
      return;
    if (fragment.contains(Modality::Up) &&
        !binary([](const Formula& a, const Formula& b) { return Upgrade(a, b); }))
      return;

    prevStart = size;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
}

std::vector<Formula> enumerate(const Signature& sig, Fragment fragment, unsigned depth) {
  std::vector<Formula> out;
  enumerate(sig, fragment, depth, [&](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t enumerationCount(const Signature& sig, Fragment fragment, unsigned depth) {
  const std::uint64_t agents = sig.agents.size();
  std::uint64_t unaryKinds = 1, binaryKinds = 1;
  if (fragment.contains(Modality::K)) unaryKinds += agents;
  if (fragment.contains(Modality::Bplus)) unaryKinds += agents;
  if (fragment.contains(Modality::Gt)) unaryKinds += agents;
  if (fragment.contains(Modality::Bc)) binaryKinds += agents;
  if (fragment.contains(Modality::Ann)) binaryKinds += 1;
  if (fragment.contains(Modality::Up)) binaryKinds += 1;

  std::uint64_t before = 0;                    // formulas of depth < d-1
  std::uint64_t upto = sig.atoms.size() + 1;  // formulas of depth <= d-1
  for (unsigned d = 1; d <= depth; ++d) {
    const std::uint64_t exact = unaryKinds * (upto - before) + binaryKinds * (upto * upto - before * before);
    before = upto;
    upto += exact;
  }
  return upto;
}

Formula sampleFormula(Rng& rng, const Signature& sig, Fragment fragment, unsigned depth) {
  auto leaf = [&]() -> Formula {
    const std::uint64_t k = rng.below(sig.atoms.size() + 2);
    if (k < sig.atoms.size()) return Atom(sig.atoms[k]);
    return k == sig.atoms.size() ? Top() : Bot();
  };
  if (depth == 0 || rng.chance(1, 4)) return leaf();

  std::vector<Op> ops = {Op::Not, Op::And, Op::Or, Op::Implies};
  if (!sig.agents.empty()) {
    if (fragment.contains(Modality::K)) ops.push_back(Op::Know);
    if (fragment.contains(Modality::Bc)) ops.push_back(Op::CondBelief);
    if (fragment.contains(Modality::Bplus)) ops.push_back(Op::SafeBelief);
    if (fragment.contains(Modality::Gt)) ops.push_back(Op::GtBox);
  }
  if (fragment.contains(Modality::Ann)) ops.push_back(Op::Announce);
  if (fragment.contains(Modality::Up)) ops.push_back(Op::Upgrade);
  // Modal operators are drawn as often as all Boolean connectives together.
  const std::size_t modal = ops.size() - 4;
  Op op = modal > 0 && rng.chance(1, 2) ? ops[4 + rng.below(modal)] : ops[rng.below(4)];

  auto sub = [&] { return sampleFormula(rng, sig, fragment, depth - 1); };
  auto agent = [&] { return sig.agents[rng.below(sig.agents.size())]; };
  switch (op) {
    case Op::Not: return Not(sub());
    case Op::And: { Formula a = sub(); return And(a, sub()); }
    case Op::Or: { Formula a = sub(); return Or(a, sub()); }
    case Op::Implies: { Formula a = sub(); return Implies(a, sub()); }
    case Op::Know: { auto i = agent(); return Know(i, sub()); }
    case Op::SafeBelief: { auto i = agent(); return SafeBelief(i, sub()); }
    case Op::GtBox: { auto i = agent(); return GtBox(i, sub()); }
    case Op::CondBelief: {
      auto i = agent();
      Formula a = sub();
      return CondBelief(i, a, sub());
    }
    case Op::Announce: { Formula a = sub(); return Announce(a, sub()); }
    case Op::Upgrade: { Formula a = sub(); return Upgrade(a, sub()); }
    default: return leaf();
  }
}

}  // namespace plausikit
