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

#include "plausikit/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "plausikit/bisim.hpp"
#include "plausikit/corpus.hpp"
#include "plausikit/dynamics.hpp"
#include "plausikit/enumerate.hpp"
#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/model_io.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/syntax.hpp"
#include "plausikit/translate.hpp"

namespace plausikit {

namespace {

constexpr std::size_t kSuiteCap = std::size_t{1} << 14;
constexpr std::size_t kSampledDeep = 32;  // random depth-3 formulas per bisimulation trial

const Signature kSig{{"p", "q"}, {"a", "b"}};

constexpr Fragment kK{Modality::K};
constexpr Fragment kBplus{Modality::Bplus};
constexpr Fragment kBc{Modality::Bc};
constexpr Fragment kGt{Modality::Gt};
constexpr Fragment kKBc{Modality::K, Modality::Bc};
constexpr Fragment kKBplus{Modality::K, Modality::Bplus};
constexpr Fragment kKGt{Modality::K, Modality::Gt};
constexpr Fragment kKBplusBc{Modality::K, Modality::Bplus, Modality::Bc};
constexpr Fragment kStatic{Modality::K, Modality::Bc, Modality::Bplus, Modality::Gt};

GenSpec modelSpec(std::size_t maxStates, bool uniform = false, bool connected = false) {
  GenSpec s;
  s.minStates = 1;
  s.maxStates = maxStates;
  s.agents = 2;
  s.atoms = 2;
  s.uniform = uniform;
  s.locallyConnected = connected;
  return s;
}

class Trial {
 public:
  Trial(SuiteReport& report, std::size_t index, std::uint64_t seed)
      : rng(seed), report_(report), index_(index), seed_(seed) {}

  Rng rng;

  bool failed() const { return failed_; }
  void check() { ++report_.checks; }

  void fail(const std::string& message, std::initializer_list<const Model*> models,
            std::initializer_list<Formula> formulas = {}) {
    if (failed_) return;
    failed_ = true;
    SuiteFailure f;
    f.trial = index_;
    f.seed = seed_;
    f.message = message;
    for (const Model* m : models) f.models.push_back(toJson(m->toData()).dump());
    for (const Formula& g : formulas) f.formulas.push_back(print(g));
    report_.failures.push_back(std::move(f));
  }

  Formula sample(Fragment fragment, unsigned depth) { return sampleFormula(rng, kSig, fragment, depth); }
  std::string agent() { return kSig.agents[rng.below(kSig.agents.size())]; }

 private:
  SuiteReport& report_;
  std::size_t index_;
  std::uint64_t seed_;
  bool failed_ = false;
};

struct Disagreement {
  Formula formula;
  std::string where;
};

// First formula on which some pair of z disagrees.
std::optional<Disagreement> disagreement(Trial& t, const Relation& z, Evaluator& l, Evaluator& r,
                                    const std::vector<Formula>& formulas) {
  const auto pairs = z.pairs();
  for (const Formula& f : formulas) {
    const StateSet& a = l.truthSet(f);
    const StateSet& b = r.truthSet(f);
    for (auto [w, w2] : pairs) {
      t.check();
      if (a.test(w) != b.test(w2))
        return Disagreement{f, "(" + z.left().stateName(w) + ", " + z.right().stateName(w2) + ")"};
    }
  }
  return std::nullopt;
}

std::vector<Formula> withSamples(Trial& t, const std::vector<Formula>& base, Fragment fragment) {
  std::vector<Formula> out = base;
  for (std::size_t k = 0; k < kSampledDeep; ++k) out.push_back(t.sample(fragment, 3));
  return out;
}

// Bisimilarity implies agreement: relations for `relation` must preserve
// every formula of `formulas`.
struct BisimSpec {
  Fragment relation;
  Fragment formulas;
  bool uniform = false;
  bool connected = false;
};

void bisimTrial(Trial& t, const BisimSpec& s, const std::vector<Formula>& enumerated) {
  const GenSpec spec = modelSpec(5, s.uniform, s.connected);
  GenSpec extra = modelSpec(3, s.uniform, s.connected);
  const Model m = generate(spec, t.rng);
  const std::uint64_t kind = t.rng.below(4);
  std::optional<Variant> variant;
  Model partner = m;
  if (kind == 0) {
    partner = generate(spec, t.rng);
  } else {
    variant = bisimilarVariant(m, t.rng, extra);
    partner = variant->model;
    // Knowledge ignores the orders, so redraw them.
    if (kind == 1 && s.relation == kK) partner = withFreshOrders(partner, t.rng, spec);
  }

  const Relation z = greatestBisimulation(m, partner, s.relation, kSuiteCap);
  t.check();
  if (auto c = checkBisimulation(z, s.relation, kSuiteCap); !c.ok) {
    t.fail("greatest relation is not a bisimulation: " + describe(z, *c.violation), {&m, &partner});
    return;
  }
  if (variant) {
    const Relation built = Relation::fromNames(m, partner, variant->pairs);
    t.check();
    if (auto c = checkBisimulation(built, s.relation, kSuiteCap); !c.ok) {
      t.fail("constructed bisimulation rejected: " + describe(built, *c.violation), {&m, &partner});
      return;
    }
    if (!built.subsetOf(z)) {
      t.fail("greatest relation misses constructed pairs", {&m, &partner});
      return;
    }
  }
  Evaluator l(m), r(partner);
  if (auto f = disagreement(t, z, l, r, withSamples(t, enumerated, s.formulas)))
    t.fail("bisimilar states " + f->where + " disagree", {&m, &partner}, {f->formula});
}

void hennessyMilnerTrial(Trial& t) {
  const GenSpec spec = modelSpec(4);
  Model m = generate(spec, t.rng);
  Model partner = m;
  if (t.rng.chance(1, 2)) {
    partner = generate(spec, t.rng);
  } else {
    GenSpec none = spec;
    none.maxStates = 0;
    m = generate(modelSpec(2), t.rng);
    partner = bisimilarVariant(m, t.rng, none).model;
  }
  const auto report = hennessyMilner(m, partner, kSuiteCap);
  t.check();
  if (!report.ok) {
    t.fail("equivalence is not a bisimulation: " + describe(report.equivalence, *report.check.violation),
           {&m, &partner});
    return;
  }
  Evaluator l(m), r(partner);
  std::vector<Formula> sampled;
  for (std::size_t k = 0; k < kSampledDeep; ++k) sampled.push_back(t.sample(kKBc, 3));
  if (auto f = disagreement(t, report.equivalence, l, r, sampled))
    t.fail("equivalent states " + f->where + " disagree", {&m, &partner}, {f->formula});
}

void validityCheck(Trial& t, const Model& m, const Formula& f, const std::string& what) {
  t.check();
  if (auto v = isValidOn(m, f); !v.valid)
    t.fail(what + " fails at " + m.stateName(*v.counterexample), {&m}, {f});
}

void introspectionTrial(Trial& t) {
  const Model m = generate(modelSpec(5, true), t.rng);
  for (int k = 0; k < 8 && !t.failed(); ++k) {
    const std::string i = t.agent();
    const Formula b = CondBelief(i, t.sample(kStatic, 2), t.sample(kStatic, 2));
    validityCheck(t, m, Implies(b, Know(i, b)), "introspection");
  }
}

void robustnessTrial(Trial& t, bool uniform) {
  const Model m = generate(modelSpec(5, uniform, !uniform), t.rng);
  auto holdsProperty = [&](const Model& x) {
    return uniform ? isUniform(x).uniform : isLocallyConnected(x).connected;
  };
  const std::string name = uniform ? "uniformity" : "local connectedness";
  Evaluator eval(m);
  for (int k = 0; k < 8 && !t.failed(); ++k) {
    const Formula f = t.sample(Fragment::all(), 2);
    if (eval.truthSet(f).any()) {
      t.check();
      const Model out = announce(m, f);
      if (!holdsProperty(out)) t.fail(name + " lost by announcement", {&m, &out}, {f});
    }
    t.check();
    const Model up = upgrade(m, f);
    if (!holdsProperty(up)) t.fail(name + " lost by upgrade", {&m, &up}, {f});
  }
}

Formula gtBiconditional(const std::string& i, const Formula& a, const Formula& f) {
  return Iff(CondBelief(i, a, f), Know(i, Implies(And(a, Not(GtDia(i, a))), f)));
}

Formula safeBiconditional(const std::string& i, const Formula& a, const Formula& f) {
  return Iff(CondBelief(i, a, f), Implies(Khat(i, a), Khat(i, And(a, SafeBelief(i, Implies(a, f))))));
}

void translationTrial(Trial& t, bool safe) {
  const Model m = generate(modelSpec(5, true, safe), t.rng);
  for (int k = 0; k < 8 && !t.failed(); ++k) {
    const std::string i = t.agent();
    const Formula a = t.sample(kStatic, 2), f = t.sample(kStatic, 2);
    validityCheck(t, m, safe ? safeBiconditional(i, a, f) : gtBiconditional(i, a, f), "biconditional");
  }
  Evaluator eval(m);
  for (int k = 0; k < 4 && !t.failed(); ++k) {
    const Formula f = t.sample(safe ? kKBplusBc : kKBc, 3);
    const Formula g = safe ? translateSafe(f) : translateGt(f);
    t.check();
    if (eval.truthSet(f) != eval.truthSet(g)) t.fail("translation changes the truth set", {&m}, {f, g});
  }
}

// Exhaustive check over every small single-agent model of the class.
void exhaustiveTranslation(SuiteReport& report, bool safe) {
  const Signature sig{{"p"}, {"a"}};
  const std::vector<Formula> conditions = enumerate(sig, kStatic, 2);
  const std::vector<Formula> inputs = enumerate(sig, safe ? kKBplusBc : kKBc, 2);
  std::size_t index = 0;
  forEachSmallModel(3, 1, {true, safe}, [&](const Model& m) {
    Trial t(report, index++, 0);
    Evaluator eval(m);
    // Truth of the biconditional depends on alpha and phi only through their
    // truth sets, so one representative per truth set suffices.
    std::vector<Formula> reps;
    std::vector<StateSet> seen;
    for (const Formula& f : conditions) {
      const StateSet& s = eval.truthSet(f);
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
        seen.push_back(s);
        reps.push_back(f);
      }
    }
    for (const Formula& a : reps)
      for (const Formula& f : reps)
        if (!t.failed()) validityCheck(t, m, safe ? safeBiconditional("a", a, f) : gtBiconditional("a", a, f),
                                       "biconditional");
    for (const Formula& f : inputs) {
      if (t.failed()) break;
      const Formula g = safe ? translateSafe(f) : translateGt(f);
      t.check();
      if (eval.truthSet(f) != eval.truthSet(g)) t.fail("translation changes the truth set", {&m}, {f, g});
    }
  });
  report.trials = index;

  // The preconditions matter: each stored counterexample must falsify its
  // biconditional.
  for (const auto& c : translationCounterexamples()) {
    if ((c.missing == "uniform") == safe) continue;
    Trial t(report, index, 0);
    const Model m = Model::fromData(c.model);
    t.check();
    if (isValidOn(m, c.biconditional).valid)
      t.fail("counterexample " + c.name + " no longer falsifies the biconditional", {&m}, {c.biconditional});
  }
}

std::vector<std::pair<std::string, Formula>> reductionAxioms(Trial& t, bool strict) {
  const std::string i = t.agent();
  const Formula phi = t.sample(kStatic, 1), alpha = t.sample(kStatic, 1), psi = t.sample(kStatic, 1);
  auto ann = [&](const Formula& g) { return Announce(phi, g); };
  auto up = [&](const Formula& g) { return Upgrade(phi, g); };
  if (strict) {
    return {
        {"[!]Gt", Iff(ann(GtBox(i, psi)), Implies(phi, GtBox(i, ann(psi))))},
        {"[up]Gt", Iff(up(GtBox(i, psi)),
                       And(Implies(phi, GtBox(i, Implies(phi, up(psi)))),
                           Implies(Not(phi), And(GtBox(i, Implies(Not(phi), up(psi))), Know(i, Implies(phi, up(psi)))))))},
    };
  }
  const Formula best = And(phi, up(alpha));
  return {
      {"[!]K", Iff(ann(Know(i, psi)), Implies(phi, Know(i, ann(psi))))},
      {"[!]Bc", Iff(ann(CondBelief(i, alpha, psi)), Implies(phi, CondBelief(i, And(phi, ann(alpha)), ann(psi))))},
      {"[!]Bplus", Iff(ann(SafeBelief(i, psi)), Implies(phi, SafeBelief(i, ann(psi))))},
      {"[up]K", Iff(up(Know(i, psi)), Know(i, up(psi)))},
      {"[up]Bc", Iff(up(CondBelief(i, alpha, psi)),
                     Or(And(Khat(i, best), CondBelief(i, best, up(psi))),
                        And(Not(Khat(i, best)), CondBelief(i, up(alpha), up(psi)))))},
      {"[up]Bplus", Iff(up(SafeBelief(i, psi)),
                        And(Implies(phi, SafeBelief(i, Implies(phi, up(psi)))),
                            Implies(Not(phi), And(SafeBelief(i, Implies(Not(phi), up(psi))),
                                                  Know(i, Implies(phi, up(psi)))))))},
  };
}

void axiomTrial(Trial& t, bool strict) {
  const auto axioms = reductionAxioms(t, strict);
  for (int k = 0; k < 5 && !t.failed(); ++k) {
    const Model m = generate(modelSpec(5), t.rng);
    for (const auto& [name, f] : axioms)
      if (!t.failed()) validityCheck(t, m, f, "reduction axiom " + name);
  }
}

void reductionTrial(Trial& t) {
  const Model m = generate(modelSpec(5), t.rng);
  Formula f = t.sample(Fragment::all(), 3);
  while (f.isStatic()) f = t.sample(Fragment::all(), 3);
  const Reduction red = reduceDynamic(f);
  t.check();
  if (!red.result.isStatic()) return t.fail("reduction left a dynamic operator", {&m}, {f, red.result});
  t.check();
  if (!(replay(f, red.trace) == red.result)) return t.fail("trace does not replay", {&m}, {f, red.result});
  Formula cur = f;
  for (const auto& step : red.trace.steps) {
    Formula next = replaceAt(cur, step.position, step.after);
    t.check();
    if (!measureDecreases(reductionMeasure(cur), reductionMeasure(next)))
      return t.fail("rule " + step.rule + " does not decrease the measure", {&m}, {cur, next});
    cur = next;
  }
  Evaluator eval(m);
  t.check();
  if (eval.truthSet(f) != eval.truthSet(red.result)) t.fail("reduction changes the truth set", {&m}, {f, red.result});
}

// First static formula telling (l, w) from (r, w2).
std::optional<Formula> pointDisagreement(Trial& t, const Model& l, const std::string& w, const Model& r,
                                         const std::string& w2, const std::vector<Formula>& formulas) {
  Evaluator el(l), er(r);
  const StateId a = l.state(w), b = r.state(w2);
  for (const Formula& f : formulas) {
    t.check();
    if (el.truthSet(f).test(a) != er.truthSet(f).test(b)) return f;
  }
  return std::nullopt;
}

void futureTrial(Trial& t, const std::vector<Formula>& statics) {
  const GenSpec spec = modelSpec(4, true, true);
  GenSpec extra = modelSpec(2, true, true);
  const Model m = generate(spec, t.rng);
  const Variant v = bisimilarVariant(m, t.rng, extra);
  const Model& partner = v.model;
  const Relation z = greatestStructural(m, partner, kKBplus);
  t.check();
  if (!Relation::fromNames(m, partner, v.pairs).subsetOf(z))
    return t.fail("greatest relation misses constructed pairs", {&m, &partner});
  const auto pairs = z.namedPairs();
  const auto [w, w2] = pairs[t.rng.below(pairs.size())];

  const Formula phi = t.sample(kKBplusBc, 2);
  const bool hl = holds(m, w, phi), hr = holds(partner, w2, phi);
  t.check();
  if (hl != hr) return t.fail("bisimilar points disagree on " + print(phi) + " at " + w + ", " + w2, {&m, &partner}, {phi});
  if (hl) {
    const Model a = announce(m, phi), b = announce(partner, phi);
    if (auto f = pointDisagreement(t, a, w, b, w2, statics))
      return t.fail("announcement separates " + w + ", " + w2, {&m, &partner}, {phi, *f});
  }
  {
    const Model a = upgrade(m, phi), b = upgrade(partner, phi);
    if (auto f = pointDisagreement(t, a, w, b, w2, statics))
      return t.fail("upgrade separates " + w + ", " + w2, {&m, &partner}, {phi, *f});
  }

  Model a = m, b = partner;
  std::vector<Formula> steps;
  for (int k = 0; k < 3; ++k) {
    const Formula psi = t.sample(kKBplusBc, 2);
    steps.push_back(psi);
    if (t.rng.chance(1, 2)) {
      const bool sl = holds(a, w, psi), sr = holds(b, w2, psi);
      t.check();
      if (sl != sr) return t.fail("points disagree before step " + std::to_string(k), {&m, &partner}, {psi});
      if (!sl) return;  // the points do not survive; nothing left to compare
      a = announce(a, psi);
      b = announce(b, psi);
    } else {
      a = upgrade(a, psi);
      b = upgrade(b, psi);
    }
  }
  if (auto f = pointDisagreement(t, a, w, b, w2, statics))
    t.fail("a three-step update sequence separates " + w + ", " + w2, {&m, &partner}, {steps[0], steps[1], steps[2], *f});
}

using TrialFn = std::function<void(Trial&)>;

struct SuiteDef {
  SuiteInfo info;
  // Builds the per-trial function; runs once per suite invocation.
  std::function<TrialFn()> prepare;
  bool exhaustive = false;
  bool safe = false;
};

TrialFn bisimSuite(BisimSpec s) {
  auto formulas = std::make_shared<std::vector<Formula>>(enumerate(kSig, s.formulas, 2));
  return [s, formulas](Trial& t) { bisimTrial(t, s, *formulas); };
}

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> d;
    auto add = [&](std::string name, std::string description, std::size_t trials, std::function<TrialFn()> prep) {
      d.push_back({{std::move(name), std::move(description), trials}, std::move(prep)});
    };
    add("thm9-K", "K-bisimilar states agree on L(K)", 500, [] { return bisimSuite({kK, kK}); });
    add("thm9-Bplus", "Bplus-bisimilar states agree on L(Bplus)", 500, [] { return bisimSuite({kBplus, kBplus}); });
    add("thm9-Bc", "Bc-bisimilar states agree on L(Bc)", 500, [] { return bisimSuite({kBc, kBc}); });
    add("thm11-KBc", "{K, Bc}-bisimilar states agree on L(K, Bc)", 500, [] { return bisimSuite({kKBc, kKBc}); });
    add("thm11-KBplus", "{K, Bplus}-bisimilar states agree on L(K, Bplus)", 500,
        [] { return bisimSuite({kKBplus, kKBplus}); });
    add("thm24-1", "Gt-bisimilar states agree on L(Gt)", 500, [] { return bisimSuite({kGt, kGt}); });
    add("thm24-2", "{K, Gt}-bisimilar states agree on L(K, Gt)", 500, [] { return bisimSuite({kKGt, kKGt}); });
    add("thm24-3", "on uniform models {K, Gt}-bisimilar states agree on L(K, Bc)", 500,
        [] { return bisimSuite({kKGt, kKBc, true, false}); });
    add("thm28-1", "on uniform, locally connected models {K, Bplus}-bisimilar states agree on L(K, Bplus, Bc)", 500,
        [] { return bisimSuite({kKBplus, kKBplusBc, true, true}); });
    add("thm13", "{K, Bc}-equivalence is a {K, Bc}-bisimulation", 200,
        [] { return TrialFn([](Trial& t) { hennessyMilnerTrial(t); }); });
    add("thm17", "conditional beliefs are known on uniform models", 500,
        [] { return TrialFn([](Trial& t) { introspectionTrial(t); }); });
    add("thm18", "announcement and upgrade preserve uniformity", 500,
        [] { return TrialFn([](Trial& t) { robustnessTrial(t, true); }); });
    add("thm26", "announcement and upgrade preserve local connectedness", 500,
        [] { return TrialFn([](Trial& t) { robustnessTrial(t, false); }); });
    add("thm22", "conditional belief via K and Gt on random uniform models", 500,
        [] { return TrialFn([](Trial& t) { translationTrial(t, false); }); });
    add("thm27", "conditional belief via K and Bplus on random uniform, locally connected models", 500,
        [] { return TrialFn([](Trial& t) { translationTrial(t, true); }); });
    add("thm29", "{K, Bplus}-bisimilar points stay equivalent after announcements and upgrades", 200, [] {
      auto statics = std::make_shared<std::vector<Formula>>(enumerate(kSig, kKBplusBc, 2));
      return TrialFn([statics](Trial& t) { futureTrial(t, *statics); });
    });
    add("fact5", "the announcement and upgrade reduction axioms for K, Bc, Bplus are valid", 100,
        [] { return TrialFn([](Trial& t) { axiomTrial(t, false); }); });
    add("fact30", "the announcement and upgrade reduction axioms for Gt are valid", 100,
        [] { return TrialFn([](Trial& t) { axiomTrial(t, true); }); });
    add("reduce", "reduceDynamic preserves truth sets, replays and terminates", 500,
        [] { return TrialFn([](Trial& t) { reductionTrial(t); }); });
    d.push_back({{"thm22-exhaustive", "Gt translation on every uniform model with at most 3 states", 0}, nullptr, true,
                 false});
    d.push_back({{"thm27-exhaustive",
                  "Bplus translation on every uniform, locally connected model with at most 3 states", 0},
                 nullptr, true, true});
    return d;
  }();
  return defs;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& d : definitions()) v.push_back(d.info);
    return v;
  }();
  return out;
}

std::uint64_t trialSeed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t suiteSeedFromEnvironment() {
  const char* env = std::getenv("PLAUSIKIT_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSuiteSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (*end != '\0') throw InputError(std::string("PLAUSIKIT_SEED is not a number: ") + env);
  return v;
}

SuiteReport runSuite(const std::string& name, const SuiteOptions& options) {
  const auto& defs = definitions();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == name; });
  if (it == defs.end()) throw InputError("unknown suite '" + name + "'");
  SuiteReport report;
  report.name = name;
  report.seed = options.seed;
  const auto start = std::chrono::steady_clock::now();
  if (it->exhaustive) {
    exhaustiveTranslation(report, it->safe);
  } else {
    const TrialFn trial = it->prepare();
    report.trials = options.trials.value_or(it->info.defaultTrials);
    for (std::size_t k = 0; k < report.trials; ++k) {
      const std::uint64_t seed = trialSeed(options.seed, k);
      Trial t(report, k, seed);
      try {
        trial(t);
      } catch (const std::exception& e) {
        t.fail(std::string("exception: ") + e.what(), {});
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string formatReport(const SuiteReport& r, bool verbose) {
  std::ostringstream out;
  out << r.name << ": " << r.trials << " trials, " << r.checks << " checks, " << r.failures.size() << " failures (seed "
      << r.seed << ", " << static_cast<long long>(r.seconds * 1000) << " ms)\n";
  if (!verbose) return out.str();
  for (const auto& f : r.failures) {
    out << "  trial " << f.trial << " (trial seed " << f.seed << "): " << f.message << "\n";
    for (const auto& g : f.formulas) out << "    formula: " << g << "\n";
    for (const auto& m : f.models) out << "    model: " << m << "\n";
  }
  return out.str();
}

}  // namespace plausikit
