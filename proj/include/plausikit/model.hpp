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

#ifndef PLAUSIKIT_MODEL_HPP
#define PLAUSIKIT_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace plausikit {

using StateSet = boost::dynamic_bitset<std::uint64_t>;
using StateId = std::size_t;
using AgentId = std::size_t;

/// True iff `s` is a nonempty string over [A-Za-z0-9_].
bool isIdentifier(std::string_view s);

/// Dense relation over {0..n-1}; contains(x, y) reads "x R y".
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t n);

  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t n);

  std::size_t size() const { return succ_.size(); }
  bool contains(StateId x, StateId y) const { return succ_[x].test(y); }
  void insert(StateId x, StateId y);
  void erase(StateId x, StateId y);

  const StateSet& successors(StateId x) const { return succ_[x]; }
  const StateSet& predecessors(StateId y) const { return pred_[y]; }

  bool empty() const;
  std::size_t pairCount() const;

  /// Smallest transitive relation containing this one.
  BinaryRelation transitiveClosure() const;

  bool operator==(const BinaryRelation& other) const { return succ_ == other.succ_; }

 private:
  std::vector<StateSet> succ_;
  std::vector<StateSet> pred_;
};

using StatePair = std::pair<std::string, std::string>;

/// String-keyed model description; mirrors the JSON model file one-to-one and
/// may describe an illegal model (see validate).
struct ModelData {
  std::vector<std::string> states;
  std::vector<std::string> agents;
  std::map<std::string, std::vector<StatePair>> epist;
  std::map<std::string, std::map<std::string, std::vector<StatePair>>> plaus;
  std::map<std::string, std::vector<std::string>> valuation;

  bool operator==(const ModelData&) const = default;
};

/// Every violated axiom of a finite epistemic plausibility model, with the
/// offending agent/state/pair. Empty iff the data describes a legal model.
std::vector<std::string> validate(const ModelData& data);

/// Immutable, validated epistemic plausibility model. States and agents are
/// kept in lexicographic order; indices follow that order.
class Model {
 public:
  /// Builds from indexed components; throws ModelError on any axiom violation.
  Model(std::vector<std::string> states, std::vector<std::string> agents,
        std::vector<BinaryRelation> epist, std::vector<std::vector<BinaryRelation>> plaus,
        std::map<std::string, StateSet> valuation);

  static Model fromData(const ModelData& data);
  ModelData toData() const;

  std::size_t stateCount() const { return states_.size(); }
  std::size_t agentCount() const { return agents_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::string& stateName(StateId w) const { return states_[w]; }
  const std::string& agentName(AgentId i) const { return agents_[i]; }

  std::optional<StateId> findState(std::string_view name) const;
  std::optional<AgentId> findAgent(std::string_view name) const;
  /// Like find*, but unknown names raise InputError.
  StateId state(std::string_view name) const;
  AgentId agent(std::string_view name) const;

  const BinaryRelation& epist(AgentId i) const { return epist_[i]; }
  /// [w]_{~i}
  const StateSet& eqClass(AgentId i, StateId w) const { return epist_[i].successors(w); }
  /// <=_{i,w}; contains(x, y) means x is at least as plausible as y.
  const BinaryRelation& plaus(AgentId i, StateId w) const { return plaus_[i][w]; }

  /// V(p); atoms absent from the valuation denote the empty set.
  StateSet atom(std::string_view name) const;
  const std::map<std::string, StateSet>& valuation() const { return valuation_; }

  StateSet noStates() const { return StateSet(stateCount()); }
  StateSet allStates() const { return ~StateSet(stateCount()); }

  bool operator==(const Model&) const = default;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> agents_;
  std::vector<BinaryRelation> epist_;
  std::vector<std::vector<BinaryRelation>> plaus_;
  std::map<std::string, StateSet> valuation_;
};

/// Names of the states in `set`, in index order.
std::vector<std::string> stateNames(const Model& m, const StateSet& set);
StateSet stateSetOf(const Model& m, const std::vector<std::string>& names);

StateSet eqClass(const Model& m, std::string_view agent, std::string_view state);

/// Min_{<=_{i,w}}(X): members of X with nothing in X strictly more plausible.
StateSet minSet(const Model& m, AgentId i, StateId w, const StateSet& x);
StateSet minSet(const Model& m, std::string_view agent, std::string_view state,
                const std::vector<std::string>& x);

/// Strict part and indifference part of every plausibility order.
struct StrictOrders {
  std::vector<std::vector<BinaryRelation>> lt;   // x <_{i,w} y
  std::vector<std::vector<BinaryRelation>> eqv;  // x ~=_{i,w} y
};

StrictOrders strict(const Model& m);

/// {v in [w]_i | v <=_{i,w} w}
StateSet safeSet(const Model& m, AgentId i, StateId w);
/// {v in [w]_i | v <_{i,w} w}
StateSet strictlyBetterSet(const Model& m, AgentId i, StateId w);

struct UniformityWitness {
  AgentId agent;
  StateId w;
  StateId v;
  /// A pair in exactly one of <=_{i,w} and <=_{i,v}.
  StateId x;
  StateId y;
};

struct UniformityResult {
  bool uniform;
  std::optional<UniformityWitness> witness;
  explicit operator bool() const { return uniform; }
};

/// w ~i v implies <=_{i,w} == <=_{i,v}.
UniformityResult isUniform(const Model& m);

struct ConnectednessWitness {
  AgentId agent;
  StateId w;
  StateId v;
};

struct ConnectednessResult {
  bool connected;
  std::optional<ConnectednessWitness> witness;
  explicit operator bool() const { return connected; }
};

/// w ~i v implies w <=_{i,w} v or v <=_{i,w} w.
ConnectednessResult isLocallyConnected(const Model& m);

/// Every epistemic class is finite. Always true here: models are finite.
bool isImageFinite(const Model& m);

std::string describe(const Model& m, const UniformityWitness& w);
std::string describe(const Model& m, const ConnectednessWitness& w);

}  // namespace plausikit

#endif  // PLAUSIKIT_MODEL_HPP
