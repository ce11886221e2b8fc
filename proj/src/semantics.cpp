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

#include "plausikit/semantics.hpp"

#include "plausikit/dynamics.hpp"
#include "plausikit/errors.hpp"

namespace plausikit {

struct Evaluator::Updated {
  Model model;
  // Parent-model indices of the child's states, in order.
  StateSet survivors;
  Evaluator eval;

  Updated(Model m, StateSet s) : model(std::move(m)), survivors(std::move(s)), eval(model) {}
};

Evaluator::Evaluator(const Model& m) : model_(m) {}
Evaluator::~Evaluator() = default;

const StateSet& Evaluator::truthSet(const Formula& f) {
  if (auto it = cache_.find(f.id()); it != cache_.end()) return it->second.second;
  StateSet result = compute(f);
  return cache_.emplace(f.id(), std::make_pair(f, std::move(result))).first->second.second;
}

Evaluator::Updated& Evaluator::updated(const Formula& pre, bool announcement, const StateSet& preSet) {
  auto& table = announcement ? announced_ : upgraded_;
  auto it = table.find(pre.id());
  if (it == table.end()) {
    Model next = announcement ? restrictTo(model_, preSet) : upgradeBy(model_, preSet);
    StateSet survivors = announcement ? preSet : model_.allStates();
    // The key formula is kept alive by cache_, which already holds `pre`.
    it = table.emplace(pre.id(), std::make_unique<Updated>(std::move(next), std::move(survivors))).first;
  }
  return *it->second;
}

StateSet Evaluator::compute(const Formula& f) {
  const Model& m = model_;
  const std::size_t n = m.stateCount();
  switch (f.op()) {
    case Op::Atom: return m.atom(f.label());
    case Op::Top: return m.allStates();
    case Op::Bot: return m.noStates();
    case Op::Not: return ~truthSet(f.child(0));
    case Op::And: {
      StateSet a = truthSet(f.child(0));
      return a & truthSet(f.child(1));
    }
    case Op::Or: {
      StateSet a = truthSet(f.child(0));
      return a | truthSet(f.child(1));
    }
    case Op::Implies: {
      StateSet a = ~truthSet(f.child(0));
      return a | truthSet(f.child(1));
    }
    case Op::Know:
    case Op::SafeBelief:
    case Op::GtBox: {
      const AgentId i = m.agent(f.label());
      const StateSet body = truthSet(f.child(0));
      StateSet out(n);
      for (StateId w = 0; w < n; ++w) {
        const StateSet scope = f.op() == Op::Know         ? m.eqClass(i, w)
                               : f.op() == Op::SafeBelief ? safeSet(m, i, w)
                                                          : strictlyBetterSet(m, i, w);
        if (scope.is_subset_of(body)) out.set(w);
      }
      return out;
    }
    case Op::CondBelief: {
      const AgentId i = m.agent(f.label());
      const StateSet condition = truthSet(f.child(0));
      const StateSet body = truthSet(f.child(1));
      StateSet out(n);
      for (StateId w = 0; w < n; ++w)
        if (minSet(m, i, w, condition & m.eqClass(i, w)).is_subset_of(body)) out.set(w);
      return out;
    }
    case Op::Announce: {
      const Formula& pre = f.child(0);
      const StateSet preSet = truthSet(pre);
      // Vacuously true wherever the announcement cannot be made.
      StateSet out = ~preSet;
      if (preSet.none()) return out;
      Updated& u = updated(pre, true, preSet);
      const StateSet& inner = u.eval.truthSet(f.child(1));
      StateId k = 0;
      for (auto w = preSet.find_first(); w != StateSet::npos; w = preSet.find_next(w), ++k)
        if (inner.test(k)) out.set(w);
      return out;
    }
    case Op::Upgrade: {
      const Formula& pre = f.child(0);
      const StateSet preSet = truthSet(pre);
      Updated& u = updated(pre, false, preSet);
      return u.eval.truthSet(f.child(1));
    }
  }
  return m.noStates();
}

StateSet truthSet(const Model& m, const Formula& f) {
  Evaluator eval(m);
  return eval.truthSet(f);
}

bool holds(const Model& m, StateId w, const Formula& f) {
  if (w >= m.stateCount()) throw InputError("state index out of range");
  return truthSet(m, f).test(w);
}

bool holds(const Model& m, std::string_view state, const Formula& f) {
  return holds(m, m.state(state), f);
}

ValidityResult isValidOn(Evaluator& eval, const Formula& f) {
  const StateSet& set = eval.truthSet(f);
  if (set.all()) return {true, std::nullopt};
  return {false, (~set).find_first()};
}

ValidityResult isValidOn(const Model& m, const Formula& f) {
  Evaluator eval(m);
  return isValidOn(eval, f);
}

}  // namespace plausikit
