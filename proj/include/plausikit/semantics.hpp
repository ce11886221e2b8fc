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

#ifndef PLAUSIKIT_SEMANTICS_HPP
#define PLAUSIKIT_SEMANTICS_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "plausikit/formula.hpp"
#include "plausikit/model.hpp"

namespace plausikit {

/// Bottom-up truth-set computation for one model. Subformula results and the
/// models produced by [!phi] / [up phi] are memoized for the lifetime of the
/// evaluator, so keep one around when checking many related formulas on the
/// same model. Not thread-safe; use one evaluator per thread.
class Evaluator {
 public:
  explicit Evaluator(const Model& m);
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  const Model& model() const { return model_; }

  /// [[f]]^M. Unknown agents raise InputError.
  const StateSet& truthSet(const Formula& f);

 private:
  struct Updated;

  StateSet compute(const Formula& f);
  Updated& updated(const Formula& pre, bool announcement, const StateSet& preSet);

  const Model& model_;
  // Keyed by node identity; the stored Formula keeps the node alive.
  std::unordered_map<const void*, std::pair<Formula, StateSet>> cache_;
  std::unordered_map<const void*, std::unique_ptr<Updated>> announced_;
  std::unordered_map<const void*, std::unique_ptr<Updated>> upgraded_;
};

StateSet truthSet(const Model& m, const Formula& f);
bool holds(const Model& m, StateId w, const Formula& f);
bool holds(const Model& m, std::string_view state, const Formula& f);

struct ValidityResult {
  bool valid;
  /// Least falsifying state when not valid.
  std::optional<StateId> counterexample;
  explicit operator bool() const { return valid; }
};

ValidityResult isValidOn(const Model& m, const Formula& f);
ValidityResult isValidOn(Evaluator& eval, const Formula& f);

}  // namespace plausikit

#endif  // PLAUSIKIT_SEMANTICS_HPP
