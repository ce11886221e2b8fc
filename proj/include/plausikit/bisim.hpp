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

#ifndef PLAUSIKIT_BISIM_HPP
#define PLAUSIKIT_BISIM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plausikit/formula.hpp"
#include "plausikit/model.hpp"

namespace plausikit {

/// Pairs between the states of a left and a right model. Holds references;
/// both models must outlive the relation.
class Relation {
 public:
  Relation(const Model& left, const Model& right);

  static Relation identity(const Model& m);
  /// Pairs agreeing on every atom of either model.
  static Relation atomRespecting(const Model& left, const Model& right);
  static Relation fromNames(const Model& left, const Model& right,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

  const Model& left() const { return *left_; }
  const Model& right() const { return *right_; }

  bool contains(StateId w, StateId w2) const { return rows_[w].test(w2); }
  void insert(StateId w, StateId w2) { rows_[w].set(w2); }
  void erase(StateId w, StateId w2) { rows_[w].reset(w2); }
  const StateSet& image(StateId w) const { return rows_[w]; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool subsetOf(const Relation& other) const;
  /// Pairs in lexicographic order of (left name, right name).
  std::vector<std::pair<StateId, StateId>> pairs() const;
  std::vector<std::pair<std::string, std::string>> namedPairs() const;

  bool operator==(const Relation& other) const { return rows_ == other.rows_; }

 private:
  const Model* left_;
  const Model* right_;
  std::vector<StateSet> rows_;
};

/// A failed bisimulation clause. `clause` is one of "atoms", "K-zig",
/// "K-zag", "Bplus-zig", "Bplus-zag", "Gt-zig", "Gt-zag", "Bc-zig",
/// "Bc-zag". For zig clauses `unmatched` is a left state, for zag a right
/// state.
struct Violation {
  std::string clause;
  StateId left = 0;
  StateId right = 0;
  std::optional<AgentId> agent;
  std::optional<StateId> unmatched;
  std::optional<std::string> atom;
  std::optional<Formula> condition;  // Bc clauses: formula defining the alpha pair
  std::optional<std::pair<StateSet, StateSet>> conditionSets;
};

struct CheckResult {
  bool ok = true;
  std::optional<Violation> violation;
  explicit operator bool() const { return ok; }
};

std::string describe(const Relation& z, const Violation& v);

/// Atom clause plus the zig/zag clauses of every operator in `fragment`,
/// which must be a subset of {K, Bplus, Gt}.
CheckResult checkStructural(const Relation& z, Fragment fragment);

/// Largest relation passing checkStructural.
Relation greatestStructural(const Model& left, const Model& right, Fragment fragment);

inline constexpr std::size_t kDefaultFamilyCap = 4096;

/// One formula used to split the joint state space while building a family.
struct GeneratorStep {
  std::string source;  // "atom p", "K[a]", "Bplus[a]", "Gt[a]", "B[a | ...]"
  Formula formula;
  StateSet left;
  StateSet right;
};

/// All simultaneously definable truth-set pairs of a static fragment over
/// two models. The pairs form a Boolean algebra whose atoms are the blocks
/// of a partition of the disjoint union; members are indexed by a bitmask
/// over the blocks.
class PairFamily {
 public:
  const Model& left() const { return *left_; }
  const Model& right() const { return *right_; }
  Fragment fragment() const { return fragment_; }

  std::size_t blockCount() const { return blocks_.size(); }
  /// Number of members, i.e. 2^blockCount().
  std::uint64_t size() const { return std::uint64_t{1} << blocks_.size(); }

  std::size_t blockOfLeft(StateId w) const { return blockOfLeft_[w]; }
  std::size_t blockOfRight(StateId w) const { return blockOfRight_[w]; }
  bool sameBlock(StateId w, StateId w2) const { return blockOfLeft_[w] == blockOfRight_[w2]; }

  std::pair<StateSet, StateSet> member(std::uint64_t mask) const;
  std::vector<std::pair<StateSet, StateSet>> members() const;
  bool contains(const StateSet& x, const StateSet& x2) const;

  /// A formula whose truth sets in the two models are member(mask).
  Formula formulaFor(std::uint64_t mask) const;
  const Formula& blockFormula(std::size_t b) const { return blockFormulas_[b]; }
  const std::vector<GeneratorStep>& log() const { return log_; }

  /// Pairs (w, w2) lying in the same block: fragment equivalence.
  Relation sameBlockRelation() const;

 private:
  friend PairFamily definablePairs(const Model&, const Model&, Fragment, std::size_t);
  PairFamily(const Model& left, const Model& right, Fragment fragment)
      : left_(&left), right_(&right), fragment_(fragment) {}

  const Model* left_;
  const Model* right_;
  Fragment fragment_;
  std::vector<std::pair<StateSet, StateSet>> blocks_;
  std::vector<Formula> blockFormulas_;
  std::vector<std::size_t> blockOfLeft_;
  std::vector<std::size_t> blockOfRight_;
  std::vector<GeneratorStep> log_;
};

/// Least family containing the atom pairs and (W, W'), closed under
/// complement, intersection and the truth-set operators of `fragment` (a
/// static subset of {K, Bc, Bplus, Gt}; B[i|a] takes its conditions from
/// the family itself). Throws ResourceError when the family would exceed
/// `cap` members.
PairFamily definablePairs(const Model& left, const Model& right, Fragment fragment,
                          std::size_t cap = kDefaultFamilyCap);

/// Conditional-belief bisimulation check with conditions ranging over the
/// definable pairs of `fragment`, plus the structural clauses of its K,
/// Bplus and Gt members. `fragment` must contain Bc and be static.
CheckResult checkBc(const Relation& z, Fragment fragment, std::size_t cap = kDefaultFamilyCap);
CheckResult checkBc(const Relation& z, const PairFamily& family);

/// Dispatches to checkStructural or checkBc.
CheckResult checkBisimulation(const Relation& z, Fragment fragment, std::size_t cap = kDefaultFamilyCap);

/// Largest bisimulation for any static fragment. Structural fragments use
/// the deletion fixpoint; fragments with Bc use fragment equivalence, which
/// is itself a bisimulation on finite models.
Relation greatestBisimulation(const Model& left, const Model& right, Fragment fragment,
                              std::size_t cap = kDefaultFamilyCap);

/// Agreement of two pointed models on every formula of a static fragment.
bool modalEquiv(const Model& left, StateId w, const Model& right, StateId w2, Fragment fragment,
                std::size_t cap = kDefaultFamilyCap);

struct HennessyMilnerReport {
  bool ok;
  Relation equivalence;  // the {K, Bc}-equivalence relation
  CheckResult check;
  explicit operator bool() const { return ok; }
};

/// Computes {K, Bc}-equivalence between the two models and checks that it is
/// a {K, Bc}-bisimulation.
HennessyMilnerReport hennessyMilner(const Model& left, const Model& right, std::size_t cap = kDefaultFamilyCap);

}  // namespace plausikit

#endif  // PLAUSIKIT_BISIM_HPP
