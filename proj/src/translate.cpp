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

#include "plausikit/translate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "plausikit/errors.hpp"

namespace plausikit {

namespace {

bool isDynamic(Op op) { return op == Op::Announce || op == Op::Upgrade; }

// Post-order search: the first dynamic node met has static children.
bool findRedex(const Formula& f, Position& pos) {
  for (std::size_t k = 0; k < f.arity(); ++k) {
    if (f.child(k).isStatic()) continue;
    pos.push_back(k);
    if (findRedex(f.child(k), pos)) return true;
    pos.pop_back();
  }
  return isDynamic(f.op());
}

Formula rebuild(const Formula& f, std::size_t k, const Formula& kid) {
  switch (f.op()) {
    case Op::Not: return Not(kid);
    case Op::And: return k == 0 ? And(kid, f.child(1)) : And(f.child(0), kid);
    case Op::Or: return k == 0 ? Or(kid, f.child(1)) : Or(f.child(0), kid);
    case Op::Implies: return k == 0 ? Implies(kid, f.child(1)) : Implies(f.child(0), kid);
    case Op::Know: return Know(f.label(), kid);
    case Op::SafeBelief: return SafeBelief(f.label(), kid);
    case Op::GtBox: return GtBox(f.label(), kid);
    case Op::CondBelief:
      return k == 0 ? CondBelief(f.label(), kid, f.child(1)) : CondBelief(f.label(), f.child(0), kid);
    case Op::Announce: return k == 0 ? Announce(kid, f.child(1)) : Announce(f.child(0), kid);
    case Op::Upgrade: return k == 0 ? Upgrade(kid, f.child(1)) : Upgrade(f.child(0), kid);
    default: throw InputError("position descends into a leaf");
  }
}

Formula replaceFrom(const Formula& f, const Position& pos, std::size_t at, const Formula& replacement) {
  if (at == pos.size()) return replacement;
  if (pos[at] >= f.arity()) throw InputError("invalid formula position");
  return rebuild(f, pos[at], replaceFrom(f.child(pos[at]), pos, at + 1, replacement));
}

std::pair<std::string, Formula> announcementStep(const Formula& phi, const Formula& body) {
  auto in = [&](const Formula& g) { return Announce(phi, g); };
  switch (body.op()) {
    case Op::Atom: return {"ann-atom", Implies(phi, body)};
    case Op::Top: return {"ann-top", Top()};
    case Op::Bot: return {"ann-bot", Not(phi)};
    case Op::Not: return {"ann-not", Implies(phi, Not(in(body.child(0))))};
    case Op::And: return {"ann-and", And(in(body.child(0)), in(body.child(1)))};
    case Op::Or: return {"ann-or", Or(in(body.child(0)), in(body.child(1)))};
    case Op::Implies: return {"ann-implies", Implies(in(body.child(0)), in(body.child(1)))};
    case Op::Know: return {"ann-K", Implies(phi, Know(body.label(), in(body.child(0))))};
    case Op::SafeBelief: return {"ann-Bplus", Implies(phi, SafeBelief(body.label(), in(body.child(0))))};
    case Op::GtBox: return {"ann-Gt", Implies(phi, GtBox(body.label(), in(body.child(0))))};
    case Op::CondBelief:
      return {"ann-Bc",
              Implies(phi, CondBelief(body.label(), And(phi, in(body.child(0))), in(body.child(1))))};
    default: throw Error("announcement redex with a dynamic body");
  }
}

// The safe-belief and strict-plausibility clauses share one shape.
Formula upgradedBelowBox(const Formula& phi, const Formula& psiUp, const std::string& agent,
                         Formula (*box)(std::string, Formula)) {
  const Formula promoted = Implies(phi, box(agent, Implies(phi, psiUp)));
  const Formula demoted = Implies(Not(phi), And(box(agent, Implies(Not(phi), psiUp)),
                                                Know(agent, Implies(phi, psiUp))));
  return And(promoted, demoted);
}

std::pair<std::string, Formula> upgradeStep(const Formula& phi, const Formula& body) {
  auto in = [&](const Formula& g) { return Upgrade(phi, g); };
  switch (body.op()) {
    case Op::Atom: return {"up-atom", body};
    case Op::Top: return {"up-top", Top()};
    case Op::Bot: return {"up-bot", Bot()};
    case Op::Not: return {"up-not", Not(in(body.child(0)))};
    case Op::And: return {"up-and", And(in(body.child(0)), in(body.child(1)))};
    case Op::Or: return {"up-or", Or(in(body.child(0)), in(body.child(1)))};
    case Op::Implies: return {"up-implies", Implies(in(body.child(0)), in(body.child(1)))};
    case Op::Know: return {"up-K", Know(body.label(), in(body.child(0)))};
    case Op::SafeBelief:
      return {"up-Bplus", upgradedBelowBox(phi, in(body.child(0)), body.label(), &SafeBelief)};
    case Op::GtBox: return {"up-Gt", upgradedBelowBox(phi, in(body.child(0)), body.label(), &GtBox)};
    case Op::CondBelief: {
      const std::string& i = body.label();
      const Formula alphaUp = in(body.child(0));
      const Formula psiUp = in(body.child(1));
      const Formula best = And(phi, alphaUp);
      const Formula reachable = Khat(i, best);
      return {"up-Bc", Or(And(reachable, CondBelief(i, best, psiUp)),
                          And(Not(reachable), CondBelief(i, alphaUp, psiUp)))};
    }
    default: throw Error("upgrade redex with a dynamic body");
  }
}

void measureInto(const Formula& f, ReductionMeasure& m) {
  if (isDynamic(f.op())) {
    if (f.child(0).isStatic() && f.child(1).isStatic())
      m.innerBodies.push_back(f.child(1).size());
    else
      ++m.outer;
  }
  for (std::size_t k = 0; k < f.arity(); ++k)
    if (!f.child(k).isStatic()) measureInto(f.child(k), m);
}

void requireFragment(const Formula& f, Fragment allowed, const char* what) {
  if (!f.fragment().subsetOf(allowed))
    throw InputError(std::string(what) + " expects a formula in " + allowed.toString() + ", got one using " +
                     f.fragment().toString());
}

template <typename Replace>
Formula bottomUp(const Formula& f, const Replace& replaceBc) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot: return f;
    case Op::CondBelief: {
      Formula alpha = bottomUp(f.child(0), replaceBc);
      Formula body = bottomUp(f.child(1), replaceBc);
      return replaceBc(f.label(), alpha, body);
    }
    default: {
      Formula out = f;
      for (std::size_t k = 0; k < f.arity(); ++k) {
        Formula kid = bottomUp(f.child(k), replaceBc);
        if (!(kid == f.child(k))) out = rebuild(out, k, kid);
      }
      return out;
    }
  }
}

}  // namespace

const Formula& subformulaAt(const Formula& f, const Position& pos) {
  const Formula* cur = &f;
  for (std::size_t k : pos) {
    if (k >= cur->arity()) throw InputError("invalid formula position");
    cur = &cur->child(k);
  }
  return *cur;
}

Formula replaceAt(const Formula& f, const Position& pos, const Formula& replacement) {
  return replaceFrom(f, pos, 0, replacement);
}

Reduction reduceDynamic(const Formula& f) {
  Reduction out{f, {}};
  Position pos;
  while (!out.result.isStatic()) {
    pos.clear();
    findRedex(out.result, pos);
    const Formula& redex = subformulaAt(out.result, pos);
    auto [rule, contractum] = redex.op() == Op::Announce ? announcementStep(redex.child(0), redex.child(1))
                                                         : upgradeStep(redex.child(0), redex.child(1));
    out.trace.steps.push_back({pos, rule, redex, contractum});
    out.result = replaceAt(out.result, pos, contractum);
  }
  return out;
}

Formula replay(const Formula& input, const RewriteTrace& trace) {
  Formula cur = input;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const RewriteStep& step = trace.steps[s];
    if (!(subformulaAt(cur, step.position) == step.before))
      throw InputError("trace step " + std::to_string(s) + " (" + step.rule + ") does not match its position");
    cur = replaceAt(cur, step.position, step.after);
  }
  return cur;
}

ReductionMeasure reductionMeasure(const Formula& f) {
  ReductionMeasure m;
  measureInto(f, m);
  std::sort(m.innerBodies.rbegin(), m.innerBodies.rend());
  return m;
}

bool measureDecreases(const ReductionMeasure& before, const ReductionMeasure& after) {
  if (after.outer != before.outer) return after.outer < before.outer;
  std::map<std::uint64_t, long> diff;  // before minus after
  for (auto x : before.innerBodies) ++diff[x];
  for (auto y : after.innerBodies) --diff[y];
  std::optional<std::uint64_t> largestRemoved, largestAdded;
  for (const auto& [size, count] : diff) {
    if (count > 0) largestRemoved = size;
    if (count < 0) largestAdded = size;
  }
  if (!largestRemoved) return false;
  return !largestAdded || *largestAdded < *largestRemoved;
}

Formula translateGt(const Formula& f) {
  requireFragment(f, Fragment{Modality::K, Modality::Bc}, "translate gt");
  return bottomUp(f, [](const std::string& i, const Formula& alpha, const Formula& body) {
    return Know(i, Implies(And(alpha, Not(GtDia(i, alpha))), body));
  });
}

Formula translateSafe(const Formula& f) {
  requireFragment(f, Fragment{Modality::K, Modality::Bc, Modality::Bplus}, "translate safe");
  return bottomUp(f, [](const std::string& i, const Formula& alpha, const Formula& body) {
    return Implies(Khat(i, alpha), Khat(i, And(alpha, SafeBelief(i, Implies(alpha, body)))));
  });
}

}  // namespace plausikit
