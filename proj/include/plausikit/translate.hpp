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

#ifndef PLAUSIKIT_TRANSLATE_HPP
#define PLAUSIKIT_TRANSLATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plausikit/formula.hpp"

namespace plausikit {

/// Child-index path from the root; child 0 of a dynamic node is its
/// precondition, child 1 its body, child 0 of B[i|a] b is the condition.
using Position = std::vector<std::size_t>;

struct RewriteStep {
  Position position;
  std::string rule;  // e.g. "ann-K", "up-Bc", "ann-atom"
  Formula before;
  Formula after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct Reduction {
  Formula result;
  RewriteTrace trace;
};

/// Eliminates every [!phi] and [up phi] node by the reduction axioms,
/// always rewriting the innermost-leftmost redex (a dynamic node whose two
/// children are static).
Reduction reduceDynamic(const Formula& f);

/// Re-applies a trace to its input. Throws InputError if some step's `before`
/// is not found at its position.
Formula replay(const Formula& input, const RewriteTrace& trace);

/// Subformula at a position; throws InputError for an invalid path.
const Formula& subformulaAt(const Formula& f, const Position& pos);
Formula replaceAt(const Formula& f, const Position& pos, const Formula& replacement);

/// Well-founded measure that every reduction step decreases: the number of
/// dynamic nodes having a dynamic descendant, then the multiset of body sizes
/// of the innermost dynamic nodes (sorted descending), compared
/// lexicographically.
struct ReductionMeasure {
  std::uint64_t outer = 0;
  std::vector<std::uint64_t> innerBodies;

  auto operator<=>(const ReductionMeasure&) const = default;
};

ReductionMeasure reductionMeasure(const Formula& f);

/// Strict multiset-order comparison of the measures (Dershowitz-Manna on the
/// body sizes after comparing `outer`).
bool measureDecreases(const ReductionMeasure& before, const ReductionMeasure& after);

/// B[i|a] f  =>  K[i]((a & ~GtDia[i] a) -> f), bottom-up. Input must lie in
/// {K, Bc}; sound on uniform models.
Formula translateGt(const Formula& f);

/// B[i|a] f  =>  Khat[i] a -> Khat[i](a & Bplus[i](a -> f)), bottom-up.
/// Input must lie in {K, Bc, Bplus}; sound on uniform, locally connected
/// models.
Formula translateSafe(const Formula& f);

}  // namespace plausikit

#endif  // PLAUSIKIT_TRANSLATE_HPP
