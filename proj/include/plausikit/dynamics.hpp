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

#ifndef PLAUSIKIT_DYNAMICS_HPP
#define PLAUSIKIT_DYNAMICS_HPP

#include "plausikit/formula.hpp"
#include "plausikit/model.hpp"

namespace plausikit {

/// M!phi: keeps exactly the phi-states and restricts every relation and the
/// valuation to them. Throws EmptyAnnouncementError when phi holds nowhere.
Model announce(const Model& m, const Formula& f);

/// M(up phi): same states, knowledge and valuation; every plausibility order
/// keeps its pairs inside the phi-zone and inside the not-phi-zone and ranks
/// every phi-state at least as plausible as every not-phi-state.
Model upgrade(const Model& m, const Formula& f);

/// announce() with the surviving states given directly.
Model restrictTo(const Model& m, const StateSet& survivors);
/// upgrade() with the promoted states given directly.
Model upgradeBy(const Model& m, const StateSet& promoted);

}  // namespace plausikit

#endif  // PLAUSIKIT_DYNAMICS_HPP
