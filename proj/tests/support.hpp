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

#ifndef PLAUSIKIT_TESTS_SUPPORT_HPP
#define PLAUSIKIT_TESTS_SUPPORT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plausikit/corpus.hpp"
#include "plausikit/model.hpp"

namespace testing_support {

using plausikit::ModelData;
using plausikit::StatePair;

inline std::vector<StatePair> identity(const std::vector<std::string>& states) {
  std::vector<StatePair> out;
  for (const auto& s : states) out.emplace_back(s, s);
  return out;
}

inline std::vector<StatePair> full(const std::vector<std::string>& states) {
  std::vector<StatePair> out;
  for (const auto& s : states)
    for (const auto& t : states) out.emplace_back(s, t);
  return out;
}

inline std::vector<StatePair> plus(std::vector<StatePair> a, const std::vector<StatePair>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Single agent "a", one epistemic class, every state's order `order`.
inline ModelData oneClass(const std::vector<std::string>& states, const std::vector<StatePair>& order,
                          std::map<std::string, std::vector<std::string>> valuation = {}) {
  ModelData d;
  d.states = states;
  d.agents = {"a"};
  d.epist["a"] = full(states);
  for (const auto& s : states) d.plaus["a"][s] = order;
  d.valuation = std::move(valuation);
  return d;
}

inline const plausikit::CorpusEntry& corpus(const std::string& name) {
  static const auto entries = plausikit::corpusEntries();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace testing_support

#endif  // PLAUSIKIT_TESTS_SUPPORT_HPP
