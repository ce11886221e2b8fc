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

#include "plausikit/dynamics.hpp"

#include "plausikit/errors.hpp"
#include "plausikit/semantics.hpp"

namespace plausikit {

Model restrictTo(const Model& m, const StateSet& survivors) {
  if (survivors.none()) throw EmptyAnnouncementError("announcement holds at no state; the result would be empty");
  std::vector<StateId> keep;
  for (auto w = survivors.find_first(); w != StateSet::npos; w = survivors.find_next(w)) keep.push_back(w);
  const std::size_t k = keep.size();

  auto restrict = [&](const BinaryRelation& r) {
    BinaryRelation out(k);
    for (StateId a = 0; a < k; ++a)
      for (StateId b = 0; b < k; ++b)
        if (r.contains(keep[a], keep[b])) out.insert(a, b);
    return out;
  };
  auto restrictSet = [&](const StateSet& s) {
    StateSet out(k);
    for (StateId a = 0; a < k; ++a)
      if (s.test(keep[a])) out.set(a);
    return out;
  };

  std::vector<std::string> states;
  for (StateId w : keep) states.push_back(m.stateName(w));
  std::vector<BinaryRelation> epist;
  std::vector<std::vector<BinaryRelation>> plaus;
  for (AgentId i = 0; i < m.agentCount(); ++i) {
    epist.push_back(restrict(m.epist(i)));
    std::vector<BinaryRelation> orders;
    for (StateId w : keep) orders.push_back(restrict(m.plaus(i, w)));
    plaus.push_back(std::move(orders));
  }
  std::map<std::string, StateSet> valuation;
  for (const auto& [p, ext] : m.valuation()) valuation.emplace(p, restrictSet(ext));
  return Model(std::move(states), m.agents(), std::move(epist), std::move(plaus), std::move(valuation));
}

Model upgradeBy(const Model& m, const StateSet& promoted) {
  const std::size_t n = m.stateCount();
  const StateSet demoted = ~promoted;
  std::vector<std::vector<BinaryRelation>> plaus;
  for (AgentId i = 0; i < m.agentCount(); ++i) {
    std::vector<BinaryRelation> orders;
    for (StateId w = 0; w < n; ++w) {
      const BinaryRelation& le = m.plaus(i, w);
      BinaryRelation out(n);
      for (StateId x = 0; x < n; ++x) {
        // Same zone: keep the old comparison. Promoted x: below every demoted y.
        StateSet row = le.successors(x) & (promoted.test(x) ? promoted : demoted);
        if (promoted.test(x)) row |= demoted;
        for (auto y = row.find_first(); y != StateSet::npos; y = row.find_next(y)) out.insert(x, y);
      }
      orders.push_back(std::move(out));
    }
    plaus.push_back(std::move(orders));
  }
  std::vector<BinaryRelation> epist;
  for (AgentId i = 0; i < m.agentCount(); ++i) epist.push_back(m.epist(i));
  return Model(m.states(), m.agents(), std::move(epist), std::move(plaus), m.valuation());
}

Model announce(const Model& m, const Formula& f) { return restrictTo(m, truthSet(m, f)); }

Model upgrade(const Model& m, const Formula& f) { return upgradeBy(m, truthSet(m, f)); }

}  // namespace plausikit
