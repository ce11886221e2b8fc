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

#include "plausikit/bisim.hpp"
#include "plausikit/corpus.hpp"
#include "support.hpp"

using namespace plausikit;

// The stored knowledge/safe-belief witness is what the bounded search finds,
// and no smaller pair of models qualifies.
TEST(WitnessSearch, FindsTheStoredEntry) {
  ASSERT_FALSE(searchSafeBeliefWitness(2).has_value());
  const auto found = searchSafeBeliefWitness(3);
  ASSERT_TRUE(found.has_value());
  const Model l = Model::fromData(found->left), r = Model::fromData(found->right);
  EXPECT_EQ(l.stateCount() + r.stateCount(), 5u);
  EXPECT_EQ(l.stateCount(), 3u);
  EXPECT_TRUE(isSafeBeliefWitness(l, r, l.state(found->w), l.state(found->v), r.state(found->w2), r.state(found->v2)));

  const Relation z = Relation::fromNames(l, r, found->relation);
  EXPECT_TRUE(checkStructural(z, Fragment{Modality::K, Modality::Bplus}).ok);
  EXPECT_EQ(z, greatestStructural(l, r, Fragment{Modality::K, Modality::Bplus}));

  // Same shape as the corpus entry up to state names.
  const auto& e = testing_support::corpus("thm14");
  EXPECT_EQ(e.left.states.size(), found->left.states.size());
  EXPECT_EQ(e.right.states.size(), found->right.states.size());
  EXPECT_EQ(e.relation.size(), found->relation.size());
}
