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

#ifndef PLAUSIKIT_CORPUS_HPP
#define PLAUSIKIT_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plausikit/formula.hpp"
#include "plausikit/model.hpp"

namespace plausikit {

/// One expected fact about a corpus entry.
///   Bisimulation: the stored relation is a `fragment` bisimulation.
///   Holds:        `formula` is true at `state` of the `side` model.
///   Equivalent:   `state` (left) and `state2` (right) agree on `fragment`.
///   Property:     the `side` model is uniform / locally connected.
struct Verdict {
  enum class Kind { Bisimulation, Holds, Equivalent, Property };
  Kind kind = Kind::Holds;
  bool expected = true;
  Fragment fragment{};
  std::string side;  // "left" or "right"
  std::string state;
  std::string state2;
  std::string formula;
  std::string property;  // "uniform" or "locally-connected"

  std::string describe() const;
};

struct CorpusEntry {
  std::string name;
  std::string summary;
  ModelData left;
  ModelData right;
  std::vector<StatePair> relation;
  std::vector<Verdict> verdicts;
};

struct VerdictOutcome {
  std::string entry;
  std::string description;
  bool expected;
  bool actual;
  bool ok() const { return expected == actual; }
};

/// The stored entries, unchecked.
std::vector<CorpusEntry> corpusEntries();

/// Re-derives every verdict of an entry with the live toolkit.
std::vector<VerdictOutcome> verifyEntry(const CorpusEntry& entry);

/// The stored entries after verification; throws Error listing every
/// mismatch.
std::vector<CorpusEntry> loadCorpus();

/// Models on which a conditional-belief translation is unsound because its
/// precondition fails.
struct TranslationCounterexample {
  std::string name;
  std::string missing;  // "uniform" or "locally-connected"
  ModelData model;
  std::string state;
  Formula biconditional;
};

std::vector<TranslationCounterexample> translationCounterexamples();

/// Smallest pair of single-agent models (by total size, then left size, then
/// enumeration order) realizing the safe-belief undefinability witness:
/// left states w != v, both p & q, in one class, incomparable at w, and
/// exactly the minimal p-states of that class at w; right states w' != v'
/// in one class, exactly the minimal p-states there at w', with v' not q;
/// (w, w') in the greatest {K, Bplus}-bisimulation; and B[a | p] q true at
/// w but false at w'.
struct WitnessSearchResult {
  ModelData left;
  ModelData right;
  std::string w, v, w2, v2;
  std::vector<StatePair> relation;  // greatest {K, Bplus}-bisimulation
  std::size_t modelsExamined = 0;
};

std::optional<WitnessSearchResult> searchSafeBeliefWitness(std::size_t maxStatesPerSide);

/// True iff the pair meets the constraints searchSafeBeliefWitness looks for,
/// with the given state names.
bool isSafeBeliefWitness(const Model& left, const Model& right, StateId w, StateId v, StateId w2, StateId v2);

}  // namespace plausikit

#endif  // PLAUSIKIT_CORPUS_HPP
