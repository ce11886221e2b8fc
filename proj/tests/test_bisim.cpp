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

#include "oracles/pair_closure.hpp"
#include "plausikit/bisim.hpp"
#include "plausikit/enumerate.hpp"
#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/syntax.hpp"
#include "support.hpp"

using namespace plausikit;
using namespace testing_support;

namespace {

constexpr Fragment kK{Modality::K};
constexpr Fragment kKBc{Modality::K, Modality::Bc};
constexpr Fragment kKBplus{Modality::K, Modality::Bplus};
constexpr Fragment kKGt{Modality::K, Modality::Gt};

struct Pair {
  Model left, right;
  Relation z() const { return Relation::fromNames(left, right, relation); }
  std::vector<StatePair> relation;
};

Pair corpusPair(const std::string& name) {
  const auto& e = corpus(name);
  return {Model::fromData(e.left), Model::fromData(e.right), e.relation};
}

GenSpec small(std::size_t maxStates, std::size_t agents = 2, std::size_t atoms = 2) {
  GenSpec s;
  s.maxStates = maxStates;
  s.agents = agents;
  s.atoms = atoms;
  return s;
}

const std::vector<Fragment> kStructural = {
    kK, Fragment{Modality::Bplus}, Fragment{Modality::Gt}, kKBplus, kKGt,
    Fragment{Modality::K, Modality::Bplus, Modality::Gt}};

}  // namespace

TEST(Structural, IdentityIsABisimulation) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Model m = generate(small(5), rng);
    for (Fragment f : kStructural) ASSERT_TRUE(checkStructural(Relation::identity(m), f).ok);
    ASSERT_TRUE(checkBc(Relation::identity(m), kKBc).ok);
  }
}

TEST(Structural, CorpusRelations) {
  const Pair p15 = corpusPair("thm15");
  EXPECT_TRUE(checkStructural(p15.z(), kK).ok);
  const Pair p14 = corpusPair("thm14");
  EXPECT_TRUE(checkStructural(p14.z(), kKBplus).ok);
}

TEST(Structural, ViolationNamesTheClause) {
  const Pair p15 = corpusPair("thm15");
  const Relation z = p15.z();
  const CheckResult r = checkStructural(z, kKBplus);
  ASSERT_FALSE(r.ok);
  EXPECT_TRUE(r.violation->clause.starts_with("Bplus-"));
  EXPECT_FALSE(describe(z, *r.violation).empty());
  EXPECT_THROW(checkStructural(z, kKBc), InputError);
}

TEST(Greatest, Examples) {
  Rng rng(2);
  const Model m = generate(small(4), rng);
  EXPECT_TRUE(Relation::identity(m).subsetOf(greatestStructural(m, m, kKBplus)));

  ModelData l = oneClass({"w"}, {{"w", "w"}}, {{"p", {"w"}}});
  ModelData r = oneClass({"w"}, {{"w", "w"}});
  EXPECT_TRUE(greatestStructural(Model::fromData(l), Model::fromData(r), kK).empty());

  const Pair p15 = corpusPair("thm15");
  const Relation g = greatestStructural(p15.left, p15.right, kKBplus);
  EXPECT_FALSE(g.contains(p15.left.state("w"), p15.right.state("w1")));
}

TEST(Greatest, SoundAndMaximal) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Model a = generate(small(4), rng), b = generate(small(4), rng);
    for (Fragment f : kStructural) {
      const Relation g = greatestStructural(a, b, f);
      ASSERT_TRUE(checkStructural(g, f).ok);
      const Relation atoms = Relation::atomRespecting(a, b);
      for (auto [w, w2] : atoms.pairs()) {
        if (g.contains(w, w2)) continue;
        Relation more = g;
        more.insert(w, w2);
        ASSERT_FALSE(checkStructural(more, f).ok);
      }
    }
  }
}

// On tiny models the greatest relation is the union of every relation that
// passes the check.
TEST(Greatest, UnionOfAllBisimulations) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const Model a = generate(small(3, 1, 1), rng), b = generate(small(2, 1, 1), rng);
    const std::size_t n = a.stateCount(), n2 = b.stateCount();
    for (Fragment f : kStructural) {
      Relation all(a, b);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n2)); ++mask) {
        Relation z(a, b);
        for (std::size_t k = 0; k < n * n2; ++k)
          if (mask >> k & 1) z.insert(k / n2, k % n2);
        if (!checkStructural(z, f).ok) continue;
        for (auto [w, w2] : z.pairs()) all.insert(w, w2);
      }
      ASSERT_EQ(greatestStructural(a, b, f), all);
    }
  }
}

TEST(Family, OneStateSameAtom) {
  const Model l = Model::fromData(oneClass({"w"}, {{"w", "w"}}, {{"p", {"w"}}}));
  const Model r = Model::fromData(oneClass({"x"}, {{"x", "x"}}, {{"p", {"x"}}}));
  const PairFamily fam = definablePairs(l, r, kKBc);
  EXPECT_EQ(fam.size(), 2u);
  EXPECT_TRUE(fam.contains(l.allStates(), r.allStates()));
  EXPECT_TRUE(fam.contains(l.noStates(), r.noStates()));
  EXPECT_FALSE(fam.contains(l.allStates(), r.noStates()));
}

TEST(Family, NoAtoms) {
  const Model l = Model::fromData(oneClass({"v", "w"}, identity({"v", "w"})));
  const Model r = Model::fromData(oneClass({"x"}, {{"x", "x"}}));
  const PairFamily fam = definablePairs(l, r, Fragment{Modality::K, Modality::Bc, Modality::Bplus, Modality::Gt});
  EXPECT_EQ(fam.blockCount(), 1u);
  EXPECT_EQ(fam.members().size(), 2u);
}

// Every enumerated formula's truth-set pair lies in the family.
TEST(Family, ContainsEveryEnumeratedPair) {
  const Pair p15 = corpusPair("thm15");
  const PairFamily fam = definablePairs(p15.left, p15.right, kKBc);
  Evaluator l(p15.left), r(p15.right);
  std::size_t n = 0;
  enumerate(Signature{{"p"}, {"a"}}, kKBc, 3, [&](const Formula& f) {
    ++n;
    EXPECT_TRUE(fam.contains(l.truthSet(f), r.truthSet(f))) << print(f);
    return true;
  });
  EXPECT_EQ(n, enumerationCount(Signature{{"p"}, {"a"}}, kKBc, 3));
}

TEST(Family, EqualsEnumerationClosureAndReplays) {
  Rng rng(5);
  const std::vector<Fragment> fragments = {Fragment{Modality::Bc}, kKBc, Fragment{Modality::K, Modality::Bplus, Modality::Bc},
                                           kK, Fragment{Modality::Gt, Modality::Bc}};
  for (int t = 0; t < 60; ++t) {
    const Model a = generate(small(3), rng), b = generate(small(3), rng);
    const Fragment f = fragments[t % fragments.size()];
    const PairFamily fam = definablePairs(a, b, f);
    const oracle::Closure c = oracle::closeByEnumeration(a, b, f);
    std::set<oracle::Masks> got;
    for (const auto& [x, y] : fam.members()) got.insert({oracle::maskOf(x), oracle::maskOf(y)});
    std::set<oracle::Masks> want;
    for (const auto& [k, formula] : c.representative) want.insert(k);
    ASSERT_EQ(got, want);
    Evaluator el(a), er(b);
    for (std::uint64_t mask = 0; mask < fam.size(); ++mask) {
      const auto [x, y] = fam.member(mask);
      const Formula g = fam.formulaFor(mask);
      ASSERT_EQ(el.truthSet(g), x);
      ASSERT_EQ(er.truthSet(g), y);
    }
    for (const auto& step : fam.log()) {
      ASSERT_EQ(el.truthSet(step.formula), step.left) << step.source;
      ASSERT_EQ(er.truthSet(step.formula), step.right) << step.source;
    }
  }
}

TEST(Family, CapRaisesResourceError) {
  Rng rng(6);
  GenSpec spec = small(5);
  spec.minStates = 5;
  const Model a = generate(spec, rng), b = generate(spec, rng);
  try {
    definablePairs(a, b, kKBc, 2);
    FAIL() << "cap not enforced";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 2u);
  }
  EXPECT_THROW(definablePairs(a, b, Fragment{Modality::Ann}), InputError);
}

TEST(CheckBc, CorpusRelations) {
  const Pair p15 = corpusPair("thm15");
  EXPECT_TRUE(checkBc(p15.z(), kKBc).ok);
  EXPECT_TRUE(checkBc(p15.z(), Fragment{Modality::Bc}).ok);

  const Pair p14 = corpusPair("thm14");
  const Relation z = p14.z();
  const CheckResult r = checkBc(z, kKBc);
  ASSERT_FALSE(r.ok);
  const Violation& v = *r.violation;
  EXPECT_TRUE(v.clause.starts_with("Bc-"));
  ASSERT_TRUE(v.condition.has_value());
  ASSERT_TRUE(v.conditionSets.has_value());
  EXPECT_EQ(truthSet(p14.left, *v.condition), v.conditionSets->first);
  EXPECT_EQ(truthSet(p14.right, *v.condition), v.conditionSets->second);
}

// Shrinking a failing relation while keeping the violating pair cannot repair
// the reported clause.
TEST(CheckBc, WitnessSurvivesShrinking) {
  Rng rng(7);
  int failing = 0;
  for (int t = 0; t < 200 && failing < 40; ++t) {
    const Model a = generate(small(4), rng), b = generate(small(4), rng);
    Relation z = Relation::atomRespecting(a, b);
    const CheckResult r = checkBc(z, Fragment{Modality::Bc});
    if (r.ok) continue;
    ++failing;
    const Violation v = *r.violation;
    Relation sub = z;
    for (auto [w, w2] : z.pairs())
      if (!(w == v.left && w2 == v.right) && rng.chance(1, 2)) sub.erase(w, w2);
    ASSERT_FALSE(checkBc(sub, Fragment{Modality::Bc}).ok);
  }
  EXPECT_GT(failing, 0);
}

TEST(Equiv, Examples) {
  Rng rng(8);
  const Model m = generate(small(4), rng);
  EXPECT_TRUE(modalEquiv(m, 0, m, 0, kKBc));
  const Pair p21 = corpusPair("thm21");
  const StateId w = p21.left.state("w"), w1 = p21.right.state("w1");
  EXPECT_TRUE(modalEquiv(p21.left, w, p21.right, w1, Fragment{Modality::K, Modality::Bplus, Modality::Bc}));
  EXPECT_FALSE(modalEquiv(p21.left, w, p21.right, w1, kKGt));
}

TEST(HennessyMilner, Examples) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const Model m = generate(small(4), rng), n = generate(small(4), rng);
    ASSERT_TRUE(hennessyMilner(m, m).ok);
    ASSERT_TRUE(hennessyMilner(m, n).ok);
  }
  const Pair p15 = corpusPair("thm15");
  const auto r = hennessyMilner(p15.left, p15.right);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.equivalence.contains(p15.left.state("w"), p15.right.state("w1")));
}

// Stronger structural relations are conditional-belief bisimulations under
// the order constraints.
TEST(Containment, StructuralInsideConditionalBelief) {
  Rng rng(10);
  GenSpec u = small(4);
  u.uniform = true;
  GenSpec ulc = u;
  ulc.locallyConnected = true;
  for (int t = 0; t < 150; ++t) {
    const Model a = generate(u, rng), b = generate(u, rng);
    ASSERT_TRUE(checkBc(greatestStructural(a, b, kKGt), kKBc).ok);
    const Model c = generate(ulc, rng), d = generate(ulc, rng);
    ASSERT_TRUE(checkBc(greatestStructural(c, d, kKBplus), kKBc).ok);
  }
}

TEST(Relation, FromNamesRejectsUnknownStates) {
  const Pair p15 = corpusPair("thm15");
  EXPECT_THROW(Relation::fromNames(p15.left, p15.right, {{"w", "nope"}}), InputError);
}
