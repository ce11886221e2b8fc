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

#ifndef PLAUSIKIT_GENERATE_HPP
#define PLAUSIKIT_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plausikit/model.hpp"
#include "plausikit/random.hpp"

namespace plausikit {

struct GenSpec {
  std::size_t minStates = 1;
  std::size_t maxStates = 4;
  std::size_t agents = 1;
  std::size_t atoms = 1;
  bool uniform = false;
  bool locallyConnected = false;
  bool totalPreorders = false;
  bool discretePreorders = false;
  std::uint64_t seed = 0;
};

/// Reads the JSON form; every field is optional and defaults as above.
GenSpec genSpecFromJson(const nlohmann::json& doc);
nlohmann::json toJson(const GenSpec& spec);

/// Identifier helpers used for generated models: a, b, c...; p, q, r...;
/// s0, s1... (zero-padded so that name order is index order).
std::vector<std::string> agentNames(std::size_t n);
std::vector<std::string> atomNames(std::size_t n);
std::vector<std::string> generatedStateNames(std::size_t n);

/// A random model meeting every constraint in the spec, deterministic in
/// spec.seed. Plausibility orders are the identity plus pairs drawn inside
/// epistemic classes.
/// Discrete orders combined with connectedness or totality force singleton
/// classes.
Model generate(const GenSpec& spec);
Model generate(const GenSpec& spec, Rng& rng);

/// A model bisimilar to `m` together with the bisimulation (pairs of names
/// from `m` to the variant). It duplicates random states as exact ties,
/// renames everything, and may add a disjoint random component. The pairs
/// form a bisimulation for every structural operator and preserve
/// uniformity and local connectedness. The extra component is drawn from
/// `extra` (its agents and atoms are taken from `m`); maxStates == 0 turns
/// it off.
struct Variant {
  Model model;
  std::vector<std::pair<std::string, std::string>> pairs;
};

Variant bisimilarVariant(const Model& m, Rng& rng, const GenSpec& extra);

/// Same states, classes and valuation as `m` with freshly drawn plausibility
/// orders; bisimilar to `m` for knowledge alone.
Model withFreshOrders(const Model& m, Rng& rng, const GenSpec& spec);

/// Every preorder on {0..n-1}.
std::vector<BinaryRelation> allPreorders(std::size_t n);
/// Every partition of {0..n-1} as block labels in restricted-growth form.
std::vector<std::vector<std::size_t>> allPartitions(std::size_t n);

struct ModelClass {
  bool uniform = false;
  bool locallyConnected = false;
};

/// Every single-agent model with 1..maxStates states and the given number of
/// atoms in the class, with non-reflexive plausibility pairs restricted to
/// epistemic classes (pairs outside a class never affect truth).
void forEachSmallModel(std::size_t maxStates, std::size_t atoms, ModelClass cls,
                       const std::function<void(const Model&)>& visit);

/// Same enumeration restricted to minStates..maxStates states; the visitor
/// returns false to stop. Returns false if stopped early.
bool forEachSmallModel(std::size_t minStates, std::size_t maxStates, std::size_t atoms, ModelClass cls,
                       const std::function<bool(const Model&)>& visit);

}  // namespace plausikit

#endif  // PLAUSIKIT_GENERATE_HPP
