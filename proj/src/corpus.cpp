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

#include "plausikit/corpus.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "plausikit/bisim.hpp"
#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/syntax.hpp"

namespace plausikit {

namespace {

using Pairs = std::vector<StatePair>;

// Single-agent model data; `orders` maps each state to its non-reflexive
// plausibility pairs, reflexive pairs are added for every state.
ModelData singleAgent(const std::vector<std::string>& states, const Pairs& epist,
                      const std::map<std::string, Pairs>& orders,
                      const std::map<std::string, std::vector<std::string>>& valuation) {
  ModelData d;
  d.states = states;
  d.agents = {"a"};
  d.epist["a"] = epist;
  for (const auto& s : states) {
    d.epist["a"].emplace_back(s, s);
    auto& rows = d.plaus["a"][s];
    for (const auto& t : states) rows.emplace_back(t, t);
    if (auto it = orders.find(s); it != orders.end()) rows.insert(rows.end(), it->second.begin(), it->second.end());
  }
  d.valuation = valuation;
  return d;
}

Pairs fullClass(const std::vector<std::string>& states) {
  Pairs out;
  for (const auto& x : states)
    for (const auto& y : states)
      if (x != y) out.emplace_back(x, y);
  return out;
}

Verdict verdictOf(Verdict::Kind kind, bool expected) {
  Verdict v;
  v.kind = kind;
  v.expected = expected;
  return v;
}

Verdict bisimulation(Fragment f, bool expected) {
  Verdict v = verdictOf(Verdict::Kind::Bisimulation, expected);
  v.fragment = f;
  return v;
}

Verdict truth(std::string side, std::string state, std::string formula, bool expected) {
  Verdict v = verdictOf(Verdict::Kind::Holds, expected);
  v.side = std::move(side);
  v.state = std::move(state);
  v.formula = std::move(formula);
  return v;
}

Verdict equivalent(Fragment f, std::string w, std::string w2, bool expected) {
  Verdict v = verdictOf(Verdict::Kind::Equivalent, expected);
  v.fragment = f;
  v.state = std::move(w);
  v.state2 = std::move(w2);
  return v;
}

Verdict property(std::string side, std::string name, bool expected) {
  Verdict v = verdictOf(Verdict::Kind::Property, expected);
  v.side = std::move(side);
  v.property = std::move(name);
  return v;
}

constexpr Fragment kK{Modality::K};
constexpr Fragment kBc{Modality::Bc};
constexpr Fragment kKBc{Modality::K, Modality::Bc};
constexpr Fragment kKBplus{Modality::K, Modality::Bplus};
constexpr Fragment kKBplusBc{Modality::K, Modality::Bplus, Modality::Bc};
constexpr Fragment kKGt{Modality::K, Modality::Gt};

CorpusEntry safeBeliefUndefinable() {
  // Both points see the p-state w and the ~p-state v; the left order is
  // discrete, the right one total, so minimal sets coincide with their
  // arguments on both sides while safe belief sees only w on the left.
  CorpusEntry e;
  e.name = "thm15";
  e.summary = "safe belief is not definable from knowledge and conditional belief";
  e.left = singleAgent({"v", "w"}, fullClass({"v", "w"}), {}, {{"p", {"w"}}});
  e.right = singleAgent({"v1", "w1"}, fullClass({"v1", "w1"}), {{"v1", {{"v1", "w1"}, {"w1", "v1"}}}, {"w1", {{"v1", "w1"}, {"w1", "v1"}}}},
                        {{"p", {"w1"}}});
  e.relation = {{"v", "v1"}, {"w", "w1"}};
  e.verdicts = {bisimulation(kK, true),
                bisimulation(kBc, true),
                bisimulation(kKBc, true),
                bisimulation(kKBplus, false),
                truth("left", "w", "Bplus[a] p", true),
                truth("right", "w1", "Bplus[a] p", false),
                equivalent(kKBc, "w", "w1", true),
                equivalent(kKBplus, "w", "w1", false)};
  return e;
}

CorpusEntry strictPlausibilityUndefinable() {
  // p holds everywhere; at w the left model ranks v strictly above w.
  CorpusEntry e;
  e.name = "thm21";
  e.summary = "strict plausibility is not definable from knowledge, safe and conditional belief";
  e.left = singleAgent({"v", "w"}, fullClass({"v", "w"}), {{"w", {{"v", "w"}}}}, {{"p", {"v", "w"}}});
  e.right = singleAgent({"v1", "w1"}, fullClass({"v1", "w1"}), {{"v1", {{"v1", "w1"}, {"w1", "v1"}}}, {"w1", {{"v1", "w1"}, {"w1", "v1"}}}},
                        {{"p", {"v1", "w1"}}});
  e.relation = {{"v", "v1"}, {"v", "w1"}, {"w", "v1"}, {"w", "w1"}};
  e.verdicts = {bisimulation(kKBplus, true),
                bisimulation(kKBplusBc, true),
                bisimulation(kKGt, false),
                equivalent(kKBplusBc, "w", "w1", true),
                truth("left", "w", "GtDia[a] true", true),
                truth("right", "w1", "GtDia[a] true", false),
                equivalent(kKGt, "w", "w1", false),
                property("left", "uniform", false),
                property("right", "uniform", true)};
  return e;
}

CorpusEntry conditionalBeliefUndefinable() {
  // w and v are incomparable p & q states at w, where v is at least as
  // plausible as the p & ~q state u; the right model merges w and v into w1.
  // This is the first witness found by searchSafeBeliefWitness, renamed.
  CorpusEntry e;
  e.name = "thm14";
  e.summary = "conditional belief is not definable from knowledge and safe belief";
  e.left = singleAgent({"u", "v", "w"}, fullClass({"u", "v", "w"}), {{"w", {{"v", "u"}}}},
                       {{"p", {"u", "v", "w"}}, {"q", {"v", "w"}}});
  e.right = singleAgent({"v1", "w1"}, fullClass({"v1", "w1"}), {}, {{"p", {"v1", "w1"}}, {"q", {"w1"}}});
  e.relation = {{"u", "v1"}, {"v", "w1"}, {"w", "w1"}};
  e.verdicts = {bisimulation(kKBplus, true),
                bisimulation(kKBc, false),
                truth("left", "w", "B[a | p] q", true),
                truth("right", "w1", "B[a | p] q", false),
                equivalent(kKBplus, "w", "w1", true),
                equivalent(kKBc, "w", "w1", false),
                property("left", "locally-connected", false)};
  return e;
}

}  // namespace

std::string Verdict::describe() const {
  const std::string no = expected ? "" : "not ";
  switch (kind) {
    case Kind::Bisimulation: return "Z is " + no + "a " + fragment.toString() + "-bisimulation";
    case Kind::Holds: return side + ", " + state + " " + (expected ? "|=" : "|/=") + " " + formula;
    case Kind::Equivalent:
      return state + " and " + state2 + " are " + no + "equivalent for " + fragment.toString();
    case Kind::Property: return side + " model is " + no + property;
  }
  return {};
}

std::vector<CorpusEntry> corpusEntries() {
  return {conditionalBeliefUndefinable(), safeBeliefUndefinable(), strictPlausibilityUndefinable()};
}

std::vector<VerdictOutcome> verifyEntry(const CorpusEntry& entry) {
  const Model left = Model::fromData(entry.left);
  const Model right = Model::fromData(entry.right);
  const Relation z = Relation::fromNames(left, right, entry.relation);
  std::vector<VerdictOutcome> out;
  for (const Verdict& v : entry.verdicts) {
    bool actual = false;
    const Model& side = v.side == "right" ? right : left;
    switch (v.kind) {
      case Verdict::Kind::Bisimulation: actual = checkBisimulation(z, v.fragment).ok; break;
      case Verdict::Kind::Holds: actual = holds(side, v.state, parse(v.formula)); break;
      case Verdict::Kind::Equivalent:
        actual = modalEquiv(left, left.state(v.state), right, right.state(v.state2), v.fragment);
        break;
      case Verdict::Kind::Property:
        actual = v.property == "uniform" ? isUniform(side).uniform : isLocallyConnected(side).connected;
        break;
    }
    out.push_back({entry.name, v.describe(), v.expected, actual});
  }
  return out;
}

std::vector<CorpusEntry> loadCorpus() {
  auto entries = corpusEntries();
  std::string diff;
  for (const auto& e : entries)
    for (const auto& o : verifyEntry(e))
      if (!o.ok())
        diff += "\n  " + o.entry + ": expected \"" + o.description + "\" but the toolkit disagrees";
  if (!diff.empty()) throw Error("corpus verdict mismatch:" + diff);
  return entries;
}

std::vector<TranslationCounterexample> translationCounterexamples() {
  std::vector<TranslationCounterexample> out;
  const Formula alpha = Top();
  const Formula phi = Atom("p");
  {
    TranslationCounterexample c;
    c.name = "gt-needs-uniformity";
    c.missing = "uniform";
    c.model = singleAgent({"v", "w"}, fullClass({"v", "w"}), {{"w", {{"v", "w"}}}}, {{"p", {"v"}}});
    c.state = "v";
    c.biconditional = Iff(CondBelief("a", alpha, phi), Know("a", Implies(And(alpha, Not(GtDia("a", alpha))), phi)));
    out.push_back(c);
  }
  {
    TranslationCounterexample c;
    c.name = "safe-needs-connectedness";
    c.missing = "locally-connected";
    c.model = singleAgent({"v", "w"}, fullClass({"v", "w"}), {}, {{"p", {"w"}}});
    c.state = "w";
    c.biconditional = Iff(CondBelief("a", alpha, phi),
                          Implies(Khat("a", alpha), Khat("a", And(alpha, SafeBelief("a", Implies(alpha, phi))))));
    out.push_back(c);
  }
  return out;
}

bool isSafeBeliefWitness(const Model& left, const Model& right, StateId w, StateId v, StateId w2, StateId v2) {
  if (left.agents() != std::vector<std::string>{"a"} || right.agents() != left.agents()) return false;
  if (w == v || w2 == v2) return false;
  const StateSet pL = left.atom("p"), qL = left.atom("q");
  const StateSet pR = right.atom("p"), qR = right.atom("q");
  if (!left.eqClass(0, w).test(v) || !right.eqClass(0, w2).test(v2)) return false;
  if (!(pL.test(w) && qL.test(w) && pL.test(v) && qL.test(v))) return false;
  if (left.plaus(0, w).contains(w, v) || left.plaus(0, w).contains(v, w)) return false;
  StateSet pair = left.noStates();
  pair.set(w).set(v);
  if (minSet(left, 0, w, pL & left.eqClass(0, w)) != pair) return false;
  StateSet pair2 = right.noStates();
  pair2.set(w2).set(v2);
  if (minSet(right, 0, w2, pR & right.eqClass(0, w2)) != pair2 || qR.test(v2)) return false;
  const Formula b = CondBelief("a", Atom("p"), Atom("q"));
  if (!holds(left, w, b) || holds(right, w2, b)) return false;
  return greatestStructural(left, right, Fragment{Modality::K, Modality::Bplus}).contains(w, w2);
}

std::optional<WitnessSearchResult> searchSafeBeliefWitness(std::size_t maxStatesPerSide) {
  struct Candidate {
    Model model;
    StateId w, v;
  };
  std::size_t examined = 0;
  // Candidates per size for each side, built on first use.
  std::map<std::size_t, std::vector<Candidate>> lefts, rights;
  auto collect = [&](std::size_t n, bool isLeft) -> const std::vector<Candidate>& {
    auto& cache = isLeft ? lefts : rights;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    auto& list = cache[n];
    forEachSmallModel(n, n, 2, {}, [&](const Model& m) {
      ++examined;
      const StateSet p = m.atom("p"), q = m.atom("q");
      for (StateId w = 0; w < n; ++w)
        for (StateId v = 0; v < n; ++v) {
          if (w == v || !m.eqClass(0, w).test(v)) continue;
          StateSet pair = m.noStates();
          pair.set(w).set(v);
          if (minSet(m, 0, w, p & m.eqClass(0, w)) != pair) continue;
          if (isLeft) {
            if (!(q.test(w) && q.test(v))) continue;
            if (m.plaus(0, w).contains(w, v) || m.plaus(0, w).contains(v, w)) continue;
          } else if (q.test(v)) {
            continue;
          }
          list.push_back({m, w, v});
        }
      return true;
    });
    return list;
  };

  for (std::size_t total = 2; total <= 2 * maxStatesPerSide; ++total)
    for (std::size_t nL = 1; nL <= maxStatesPerSide; ++nL) {
      if (total <= nL || total - nL > maxStatesPerSide) continue;
      const auto& ls = collect(nL, true);
      if (ls.empty()) continue;
      const auto& rs = collect(total - nL, false);
      for (const auto& l : ls)
        for (const auto& r : rs)
          if (isSafeBeliefWitness(l.model, r.model, l.w, l.v, r.w, r.v)) {
            WitnessSearchResult out;
            out.left = l.model.toData();
            out.right = r.model.toData();
            out.w = l.model.stateName(l.w);
            out.v = l.model.stateName(l.v);
            out.w2 = r.model.stateName(r.w);
            out.v2 = r.model.stateName(r.v);
            out.relation = greatestStructural(l.model, r.model, Fragment{Modality::K, Modality::Bplus}).namedPairs();
            out.modelsExamined = examined;
            return out;
          }
    }
  return std::nullopt;
}

}  // namespace plausikit
