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

#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/model.hpp"
#include "plausikit/model_io.hpp"
#include "support.hpp"

using namespace plausikit;
using namespace testing_support;

namespace {

bool mentions(const std::vector<std::string>& problems, const std::string& text) {
  for (const auto& p : problems)
    if (p.find(text) != std::string::npos) return true;
  return false;
}

ModelData single() { return oneClass({"w"}, {{"w", "w"}}); }

Model corpusLeft(const std::string& name) { return Model::fromData(corpus(name).left); }

}  // namespace

TEST(Validate, MinimalModelIsLegal) { EXPECT_TRUE(validate(single()).empty()); }

TEST(Validate, MissingEpistemicLoop) {
  ModelData d = single();
  d.epist["a"].clear();
  const auto problems = validate(d);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("not reflexive at w"), std::string::npos);
}

TEST(Validate, UnknownStateInOrder) {
  ModelData d = oneClass({"v", "w"}, plus(identity({"v", "w"}), {{"w", "v"}}));
  d.plaus["a"]["w"].emplace_back("v", "u");
  EXPECT_TRUE(mentions(validate(d), "unknown state 'u'"));
}

TEST(Validate, OrderMustBeTransitiveAndEpistemicSymmetric) {
  ModelData d = oneClass({"u", "v", "w"}, plus(identity({"u", "v", "w"}), {{"u", "v"}, {"v", "w"}}));
  d.epist["a"] = plus(identity(d.states), {{"u", "v"}});
  const auto problems = validate(d);
  EXPECT_TRUE(mentions(problems, "not transitive"));
  EXPECT_TRUE(mentions(problems, "not symmetric"));
  EXPECT_THROW(Model::fromData(d), ModelError);
}

TEST(Validate, OrderMustBeReflexiveOnEveryState) {
  ModelData d = oneClass({"v", "w"}, identity({"v", "w"}));
  d.epist["a"] = identity(d.states);
  d.plaus["a"]["w"] = {{"w", "w"}};
  EXPECT_TRUE(mentions(validate(d), "plaus(a,w) not reflexive at v"));
}

TEST(Validate, MissingOrderEntry) {
  ModelData d = oneClass({"v", "w"}, identity({"v", "w"}));
  d.plaus["a"].erase("v");
  EXPECT_TRUE(mentions(validate(d), "missing plaus entry for (a, v)"));
}

TEST(EqClass, TotalIdentityAndSplit) {
  const Model total = Model::fromData(oneClass({"v", "w"}, identity({"v", "w"})));
  EXPECT_EQ(stateNames(total, eqClass(total, "a", "w")), (std::vector<std::string>{"v", "w"}));

  ModelData d = oneClass({"v", "w"}, identity({"v", "w"}));
  d.epist["a"] = identity(d.states);
  const Model id = Model::fromData(d);
  EXPECT_EQ(stateNames(id, eqClass(id, "a", "w")), (std::vector<std::string>{"w"}));

  ModelData three = oneClass({"u", "v", "w"}, identity({"u", "v", "w"}));
  three.epist["a"] = plus(identity(three.states), {{"v", "w"}, {"w", "v"}});
  const Model m3 = Model::fromData(three);
  EXPECT_EQ(stateNames(m3, eqClass(m3, "a", "u")), (std::vector<std::string>{"u"}));
  EXPECT_EQ(stateNames(m3, eqClass(m3, "a", "v")), (std::vector<std::string>{"v", "w"}));
  EXPECT_THROW(eqClass(m3, "a", "x"), InputError);
  EXPECT_THROW(eqClass(m3, "b", "u"), InputError);
}

TEST(MinSet, Examples) {
  const Model m = Model::fromData(oneClass({"v", "w"}, plus(identity({"v", "w"}), {{"v", "w"}})));
  EXPECT_EQ(stateNames(m, minSet(m, "a", "w", {"w"})), (std::vector<std::string>{"w"}));
  EXPECT_EQ(stateNames(m, minSet(m, "a", "w", {"v", "w"})), (std::vector<std::string>{"v"}));
  EXPECT_EQ(stateNames(m, minSet(m, "a", "w", {})), (std::vector<std::string>{}));

  const Model incomparable = Model::fromData(oneClass({"v", "w"}, identity({"v", "w"})));
  EXPECT_EQ(stateNames(incomparable, minSet(incomparable, "a", "w", {"v", "w"})),
            (std::vector<std::string>{"v", "w"}));
}

// The "no element strictly below" definition against the strict-order characterization, and
// non-emptiness, over every subset of random models.
TEST(MinSet, AgreesWithStrictCharacterization) {
  Rng rng(7);
  GenSpec spec;
  spec.maxStates = 5;
  spec.agents = 2;
  for (int t = 0; t < 200; ++t) {
    const Model m = generate(spec, rng);
    const StrictOrders so = strict(m);
    const std::size_t n = m.stateCount();
    for (AgentId i = 0; i < m.agentCount(); ++i)
      for (StateId w = 0; w < n; ++w)
        for (std::uint64_t mask = 1; mask < (1u << n); ++mask) {
          StateSet x(n);
          for (std::size_t k = 0; k < n; ++k) x[k] = mask >> k & 1;
          StateSet expected(n);
          for (std::size_t v = 0; v < n; ++v) {
            if (!x.test(v)) continue;
            bool better = false;
            for (std::size_t y = 0; y < n; ++y)
              if (x.test(y) && so.lt[i][w].contains(y, v)) better = true;
            expected[v] = !better;
          }
          const StateSet got = minSet(m, i, w, x);
          ASSERT_EQ(got, expected);
          ASSERT_TRUE(got.any());
        }
  }
}

TEST(Strict, Examples) {
  const Model discrete = Model::fromData(oneClass({"v", "w"}, identity({"v", "w"})));
  const StrictOrders d = strict(discrete);
  EXPECT_TRUE(d.lt[0][0].empty());
  EXPECT_TRUE(d.lt[0][1].empty());

  const Model total = Model::fromData(oneClass({"v", "w"}, full({"v", "w"})));
  const StrictOrders t = strict(total);
  EXPECT_TRUE(t.lt[0][1].empty());
  EXPECT_EQ(t.eqv[0][1], BinaryRelation::full(2));

  const Model chain = Model::fromData(oneClass({"v", "w"}, plus(identity({"v", "w"}), {{"v", "w"}})));
  const StrictOrders c = strict(chain);
  BinaryRelation expected(2);
  expected.insert(chain.state("v"), chain.state("w"));
  EXPECT_EQ(c.lt[0][chain.state("w")], expected);
}

TEST(Strict, PartitionsTheOrder) {
  Rng rng(11);
  GenSpec spec;
  spec.maxStates = 5;
  spec.agents = 2;
  for (int t = 0; t < 200; ++t) {
    const Model m = generate(spec, rng);
    const StrictOrders so = strict(m);
    for (AgentId i = 0; i < m.agentCount(); ++i)
      for (StateId w = 0; w < m.stateCount(); ++w)
        for (StateId x = 0; x < m.stateCount(); ++x)
          for (StateId y = 0; y < m.stateCount(); ++y) {
            const bool lt = so.lt[i][w].contains(x, y), eq = so.eqv[i][w].contains(x, y);
            ASSERT_FALSE(lt && eq);
            ASSERT_EQ(lt || eq, m.plaus(i, w).contains(x, y));
            ASSERT_FALSE(so.lt[i][w].contains(x, x));
          }
  }
}

TEST(Uniform, Examples) {
  EXPECT_TRUE(isUniform(Model::fromData(oneClass({"v", "w"}, full({"v", "w"})))).uniform);

  const Model left = corpusLeft("thm21");
  const auto r = isUniform(left);
  ASSERT_FALSE(r.uniform);
  EXPECT_EQ(left.stateName(r.witness->w), "v");
  EXPECT_EQ(left.stateName(r.witness->v), "w");

  ModelData d = oneClass({"v", "w"}, identity({"v", "w"}));
  d.epist["a"] = identity(d.states);
  d.plaus["a"]["w"] = plus(identity(d.states), {{"v", "w"}});
  EXPECT_TRUE(isUniform(Model::fromData(d)).uniform);
}

TEST(LocallyConnected, Examples) {
  EXPECT_TRUE(isLocallyConnected(Model::fromData(oneClass({"v", "w"}, full({"v", "w"})))).connected);

  const Model left = corpusLeft("thm14");
  const auto r = isLocallyConnected(left);
  ASSERT_FALSE(r.connected);
  EXPECT_FALSE(describe(left, *r.witness).empty());

  ModelData d = oneClass({"v", "w"}, identity({"v", "w"}));
  d.epist["a"] = identity(d.states);
  EXPECT_TRUE(isLocallyConnected(Model::fromData(d)).connected);
}

// Exhaustive double loop over (i, w, v) as an independent check of both
// property deciders.
TEST(Properties, AgreeWithDirectLoops) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    GenSpec spec;
    spec.maxStates = 4;
    spec.agents = 2;
    spec.uniform = rng.chance(1, 2);
    spec.locallyConnected = rng.chance(1, 2);
    const Model m = generate(spec, rng);
    const ModelData d = m.toData();
    bool uniform = true, connected = true;
    for (const auto& a : d.agents)
      for (const auto& [w, v] : d.epist.at(a)) {
        auto sorted = [](std::vector<StatePair> p) {
          std::sort(p.begin(), p.end());
          return p;
        };
        if (sorted(d.plaus.at(a).at(w)) != sorted(d.plaus.at(a).at(v))) uniform = false;
        const auto& le = d.plaus.at(a).at(w);
        auto has = [&](const StatePair& p) { return std::find(le.begin(), le.end(), p) != le.end(); };
        if (!has({w, v}) && !has({v, w})) connected = false;
      }
    ASSERT_EQ(isUniform(m).uniform, uniform);
    ASSERT_EQ(isLocallyConnected(m).connected, connected);
    ASSERT_TRUE(isImageFinite(m));
  }
}

TEST(ImageFinite, AlwaysTrue) {
  EXPECT_TRUE(isImageFinite(Model::fromData(single())));
  EXPECT_TRUE(isImageFinite(corpusLeft("thm14")));
}

TEST(ModelIo, SerializationIsSortedAndRoundTrips) {
  ModelData d;
  d.states = {"w", "v"};
  d.agents = {"a"};
  d.epist["a"] = {{"w", "w"}, {"v", "v"}, {"w", "v"}, {"v", "w"}};
  d.plaus["a"]["w"] = {{"w", "w"}, {"v", "v"}, {"v", "w"}};
  d.plaus["a"]["v"] = {{"w", "w"}, {"v", "v"}, {"v", "w"}};
  d.valuation["p"] = {"w"};
  const Model m = Model::fromData(d);
  const std::string text = serialize(m);
  const std::string expected =
      "{\n"
      "  \"agents\": [\n    \"a\"\n  ],\n"
      "  \"epist\": {\n    \"a\": [\n"
      "      [\n        \"v\",\n        \"v\"\n      ],\n"
      "      [\n        \"v\",\n        \"w\"\n      ],\n"
      "      [\n        \"w\",\n        \"v\"\n      ],\n"
      "      [\n        \"w\",\n        \"w\"\n      ]\n"
      "    ]\n  },\n";
  EXPECT_EQ(text.substr(0, expected.size()), expected);
  EXPECT_EQ(text.back(), '\n');
  const Model back = Model::fromData(modelDataFromJson(nlohmann::json::parse(text)));
  EXPECT_EQ(back, m);
  EXPECT_EQ(serialize(back), text);
}

TEST(ModelIo, RejectsMalformedDocuments) {
  EXPECT_THROW(modelDataFromJson(nlohmann::json::parse(R"({"states": "w"})")), InputError);
  EXPECT_THROW(modelDataFromJson(nlohmann::json::parse(R"([1, 2])")), InputError);
  EXPECT_THROW(modelDataFromJson(nlohmann::json::parse(
                   R"({"states": ["w"], "agents": ["a"], "epist": {"a": [["w"]]}, "plaus": {}, "valuation": {}})")),
               InputError);
}

TEST(ModelIo, AbsentAtomIsEmpty) {
  const Model m = Model::fromData(single());
  EXPECT_FALSE(m.atom("zz").any());
}
