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

#ifndef PLAUSIKIT_ENUMERATE_HPP
#define PLAUSIKIT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plausikit/formula.hpp"
#include "plausikit/random.hpp"

namespace plausikit {

struct Signature {
  std::vector<std::string> atoms;
  std::vector<std::string> agents;
};

/// Every formula of depth <= `depth` over the signature whose operator kinds
/// lie in `fragment`, built from atoms, `true`, ~ and & plus the fragment's
/// operators. No formula is produced twice.
///
/// Order: by depth; depth 0 is the atoms in the given order then `true`.
/// Depth d > 0 lists, in this constructor order, ~, &, K, B, Bplus, Gt, [!],
/// [up]; agents in the given order; argument tuples in lexicographic order of
/// the arguments' positions in the depth < d listing, keeping only tuples
/// with at least one argument of depth d - 1.
std::vector<Formula> enumerate(const Signature& sig, Fragment fragment, unsigned depth);

/// Streaming form; the callback returns false to stop early.
void enumerate(const Signature& sig, Fragment fragment, unsigned depth,
               const std::function<bool(const Formula&)>& visit);

/// Number of formulas enumerate() would produce, computed without building them.
std::uint64_t enumerationCount(const Signature& sig, Fragment fragment, unsigned depth);

/// A random formula of depth <= `depth` over the same constructors as
/// enumerate(), plus `false`, |, -> for variety.
Formula sampleFormula(Rng& rng, const Signature& sig, Fragment fragment, unsigned depth);

}  // namespace plausikit

#endif  // PLAUSIKIT_ENUMERATE_HPP
