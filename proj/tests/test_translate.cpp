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

#include <gtest/gtest.h>

#include "oracles/reference.hpp"
#include "plausikit/corpus.hpp"
#include "plausikit/enumerate.hpp"
#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/syntax.hpp"
#include "plausikit/translate.hpp"

using namespace plausikit;

namespace {

const Signature kSig{{"p", "q"}, {"a", "b"}};
constexpr Fragment kStatic{Modality::K, Modality::Bc, Modality::Bplus, Modality::Gt};

GenSpec small(std::size_t maxStates = 4) {
  GenSpec s;
  s.maxStates = maxStates;
  s.agents = 2;
  s.atoms = 2;
  return s;
}

Formula dynamicSample(Rng& rng, unsigned depth) {
  for (;;) {
    Formula f = sampleFormula(rng, kSig, Fragment::all(), depth);
    if (!f.isStatic()) return f;
  }
}

}  // namespace

TEST(Reduce, StaticInputUnchanged) {
  const Formula f = parse("K[a](p -> B[b | q] p)");
  const Reduction r = reduceDynamic(f);
  EXPECT_EQ(r.result, f);
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(Reduce, AnnouncedKnowledge) {
  const Reduction r = reduceDynamic(parse("[! p] K[a] q"));
  EXPECT_EQ(print(r.result), "p -> K[a](p -> q)");
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].rule, "ann-K");
  EXPECT_EQ(r.trace.steps[0].position, Position{});
  EXPECT_EQ(r.trace.steps[1].rule, "ann-atom");
  EXPECT_EQ(r.trace.steps[1].position, (Position{1, 0}));
}

TEST(Reduce, UpgradedKnowledge) {
  const Formula f = parse("[up p] K[a] q");
  const Reduction r = reduceDynamic(f);
  EXPECT_EQ(print(r.result), "K[a] q");
  // Equivalence on every single-agent model with at most 3 states and 2 atoms.
  std::size_t models = 0;
  forEachSmallModel(1, 3, 2, {false, false}, [&](const Model& m) {
    ++models;
    Evaluator e(m);
    EXPECT_EQ(e.truthSet(f), e.truthSet(r.result));
    return true;
  });
  EXPECT_GT(models, 0u);
}

TEST(Reduce, InnermostFirst) {
  const Reduction r = reduceDynamic(parse("[! p][up q] r"));
  ASSERT_FALSE(r.trace.steps.empty());
  EXPECT_EQ(r.trace.steps[0].rule, "up-atom");
  EXPECT_EQ(r.trace.steps[0].position, Position{1});
  EXPECT_EQ(print(r.result), "p -> r");
}

TEST(Reduce, SoundTerminatingAndReplayable) {
  Rng rng(1);
  for (int t = 0; t < 400; ++t) {
    const Model m = generate(small(), rng);
    const Formula f = dynamicSample(rng, 3);
    const Reduction r = reduceDynamic(f);
    ASSERT_TRUE(r.result.isStatic());
    ASSERT_EQ(replay(f, r.trace), r.result);
    Formula cur = f;
    for (const auto& s : r.trace.steps) {
      ASSERT_EQ(subformulaAt(cur, s.position), s.before);
      const Formula next = replaceAt(cur, s.position, s.after);
      ASSERT_TRUE(measureDecreases(reductionMeasure(cur), reductionMeasure(next))) << s.rule;
      cur = next;
    }
    Evaluator e(m);
    ASSERT_EQ(e.truthSet(f), e.truthSet(r.result)) << print(f);
  }
}

TEST(Reduce, ReplayRejectsForeignTraces) {
  const Reduction r = reduceDynamic(parse("[! p] K[a] q"));
  EXPECT_THROW(replay(parse("[! q] K[a] q"), r.trace), InputError);
  EXPECT_THROW(subformulaAt(parse("p"), Position{0}), InputError);
}

TEST(Measure, Examples) {
  EXPECT_EQ(reductionMeasure(parse("K[a] p")), ReductionMeasure{});
  const ReductionMeasure m = reductionMeasure(parse("[! p][up q] r & [! p] q"));
  EXPECT_EQ(m.outer, 1u);
  EXPECT_EQ(m.innerBodies, (std::vector<std::uint64_t>{1, 1}));
  // Replacing one inner body by two smaller ones decreases the multiset.
  EXPECT_TRUE(measureDecreases({0, {5}}, {0, {4, 4, 4}}));
  EXPECT_FALSE(measureDecreases({0, {4}}, {0, {4}}));
  EXPECT_TRUE(measureDecreases({1, {}}, {0, {50}}));
  EXPECT_FALSE(measureDecreases({0, {3}}, {0, {3, 1}}));
}

// The reduction axioms, written out here and checked with the direct
// evaluator rather than through the rewriter.
TEST(Axioms, ValidOnRandomModels) {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const Model m = generate(small(), rng);
    const oracle::Ref ref(m.toData());
    const std::string i = rng.chance(1, 2) ? "a" : "b";
    const Formula phi = sampleFormula(rng, kSig, kStatic, 1), alpha = sampleFormula(rng, kSig, kStatic, 1),
                  psi = sampleFormula(rng, kSig, kStatic, 1);
    auto ann = [&](const Formula& g) { return Announce(phi, g); };
    auto up = [&](const Formula& g) { return Upgrade(phi, g); };
    const Formula best = And(phi, up(alpha));
    const std::vector<Formula> axioms = {
        Iff(ann(Know(i, psi)), Implies(phi, Know(i, ann(psi)))),
        Iff(ann(CondBelief(i, alpha, psi)), Implies(phi, CondBelief(i, And(phi, ann(alpha)), ann(psi)))),
        Iff(ann(SafeBelief(i, psi)), Implies(phi, SafeBelief(i, ann(psi)))),
        Iff(up(Know(i, psi)), Know(i, up(psi))),
        Iff(up(CondBelief(i, alpha, psi)), Or(And(Khat(i, best), CondBelief(i, best, up(psi))),
                                              And(Not(Khat(i, best)), CondBelief(i, up(alpha), up(psi))))),
        Iff(up(SafeBelief(i, psi)),
            And(Implies(phi, SafeBelief(i, Implies(phi, up(psi)))),
                Implies(Not(phi), And(SafeBelief(i, Implies(Not(phi), up(psi))), Know(i, Implies(phi, up(psi))))))),
        Iff(ann(GtBox(i, psi)), Implies(phi, GtBox(i, ann(psi)))),
        Iff(up(GtBox(i, psi)),
            And(Implies(phi, GtBox(i, Implies(phi, up(psi)))),
                Implies(Not(phi), And(GtBox(i, Implies(Not(phi), up(psi))), Know(i, Implies(phi, up(psi))))))),
    };
    for (const auto& ax : axioms)
      for (const auto& s : m.states()) ASSERT_TRUE(oracle::eval(ref, s, ax)) << print(ax) << " at " << s;
  }
}

TEST(TranslateGt, Examples) {
  EXPECT_EQ(translateGt(parse("B[a | p] q")), parse("K[a]((p & ~GtDia[a]p) -> q)"));
  EXPECT_EQ(translateGt(parse("K[a] p")), parse("K[a] p"));
  const Formula inner = translateGt(parse("B[a|p]q"));
  EXPECT_EQ(translateGt(parse("B[a | B[a|p]q] r")),
            Know("a", Implies(And(inner, Not(GtDia("a", inner))), Atom("r"))));
}

TEST(TranslateGt, NestedEquivalentOnSmallUniformModels) {
  const Formula f = parse("B[a | B[a|p]q] r");
  const Formula g = translateGt(f);
  std::size_t models = 0;
  forEachSmallModel(1, 3, 3, {true, false}, [&](const Model& m) {
    ++models;
    Evaluator e(m);
    EXPECT_EQ(e.truthSet(f), e.truthSet(g));
    return true;
  });
  EXPECT_EQ(models, 1u * 8 + 5u * 64 + 42u * 512);
}

TEST(TranslateGt, RejectsOtherFragments) {
  EXPECT_THROW(translateGt(parse("Bplus[a] p")), InputError);
  EXPECT_THROW(translateGt(parse("[! p] B[a|p] q")), InputError);
  EXPECT_THROW(translateGt(parse("Gt[a] p")), InputError);
}

TEST(TranslateSafe, Examples) {
  EXPECT_EQ(translateSafe(parse("B[a | p] q")), parse("Khat[a]p -> Khat[a](p & Bplus[a](p -> q))"));
  EXPECT_EQ(translateSafe(parse("Bplus[a] p")), parse("Bplus[a] p"));
  EXPECT_EQ(translateSafe(parse("B[a | true] q")), parse("Khat[a]true -> Khat[a](true & Bplus[a](true -> q))"));
  EXPECT_THROW(translateSafe(parse("Gt[a] p")), InputError);
  EXPECT_THROW(translateSafe(parse("[up p] q")), InputError);
}

TEST(TranslateSafe, PlainBeliefOnSmallConnectedModels) {
  const Formula g = translateSafe(parse("B[a | true] q"));
  std::size_t models = 0;
  forEachSmallModel(1, 3, 2, {true, true}, [&](const Model& m) {
    ++models;
    const StateSet got = truthSet(m, g), q = m.atom("q");
    for (StateId w = 0; w < m.stateCount(); ++w)
      EXPECT_EQ(got.test(w), minSet(m, 0, w, m.eqClass(0, w)).is_subset_of(q));
    return true;
  });
  EXPECT_EQ(models, 1u * 4 + 4u * 16 + 23u * 64);
}

TEST(Translate, RandomEquivalenceUnderPreconditions) {
  Rng rng(3);
  GenSpec u = small(5);
  u.uniform = true;
  GenSpec ulc = u;
  ulc.locallyConnected = true;
  for (int t = 0; t < 200; ++t) {
    const Model m = generate(u, rng);
    const Formula f = sampleFormula(rng, kSig, Fragment{Modality::K, Modality::Bc}, 3);
    ASSERT_EQ(truthSet(m, f), truthSet(m, translateGt(f))) << print(f);
    const Model c = generate(ulc, rng);
    const Formula h = sampleFormula(rng, kSig, Fragment{Modality::K, Modality::Bc, Modality::Bplus}, 3);
    ASSERT_EQ(truthSet(c, h), truthSet(c, translateSafe(h))) << print(h);
  }
}

TEST(Translate, StoredCounterexamplesFalsifyTheBiconditionals) {
  const auto cs = translationCounterexamples();
  ASSERT_EQ(cs.size(), 2u);
  for (const auto& c : cs) {
    const Model m = Model::fromData(c.model);
    const auto r = isValidOn(m, c.biconditional);
    EXPECT_FALSE(r.valid) << c.name;
    EXPECT_FALSE(holds(m, c.state, c.biconditional)) << c.name;
    if (c.missing == "uniform") {
      EXPECT_FALSE(isUniform(m).uniform);
    } else {
      EXPECT_TRUE(isUniform(m).uniform);
      EXPECT_FALSE(isLocallyConnected(m).connected);
    }
  }
}
