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

#include "plausikit/model.hpp"

#include <algorithm>
#include <set>

#include "plausikit/errors.hpp"

namespace plausikit {

bool isIdentifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// ---------------------------------------------------------------------------
// BinaryRelation

BinaryRelation::BinaryRelation(std::size_t n) : succ_(n, StateSet(n)), pred_(n, StateSet(n)) {}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n);
  for (StateId x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (StateId x = 0; x < n; ++x) {
    r.succ_[x].set();
    r.pred_[x].set();
  }
  return r;
}

void BinaryRelation::insert(StateId x, StateId y) {
  succ_[x].set(y);
  pred_[y].set(x);
}

void BinaryRelation::erase(StateId x, StateId y) {
  succ_[x].reset(y);
  pred_[y].reset(x);
}

bool BinaryRelation::empty() const {
  return std::none_of(succ_.begin(), succ_.end(), [](const StateSet& s) { return s.any(); });
}

std::size_t BinaryRelation::pairCount() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.count();
  return n;
}

BinaryRelation BinaryRelation::transitiveClosure() const {
  BinaryRelation r = *this;
  const std::size_t n = size();
  // Warshall: after round k, paths through {0..k} are closed.
  for (StateId k = 0; k < n; ++k) {
    for (StateId x = 0; x < n; ++x) {
      if (!r.succ_[x].test(k)) continue;
      StateSet add = r.succ_[k] - r.succ_[x];
      for (auto y = add.find_first(); y != StateSet::npos; y = add.find_next(y)) r.insert(x, y);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string pairText(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

// Equivalence / preorder checks shared by validate(ModelData) and the Model
// constructor. `what` names the relation in messages.
void checkReflexive(const BinaryRelation& r, const std::vector<std::string>& names,
                    const std::string& what, std::vector<std::string>& out) {
  for (StateId w = 0; w < r.size(); ++w)
    if (!r.contains(w, w)) out.push_back(what + " not reflexive at " + names[w]);
}

void checkSymmetric(const BinaryRelation& r, const std::vector<std::string>& names,
                    const std::string& what, std::vector<std::string>& out) {
  for (StateId x = 0; x < r.size(); ++x)
    for (StateId y = 0; y < r.size(); ++y)
      if (r.contains(x, y) && !r.contains(y, x))
        out.push_back(what + " not symmetric: " + pairText(names[x], names[y]) + " without " +
                      pairText(names[y], names[x]));
}

void checkTransitive(const BinaryRelation& r, const std::vector<std::string>& names,
                     const std::string& what, std::vector<std::string>& out) {
  const std::size_t n = r.size();
  for (StateId x = 0; x < n; ++x)
    for (StateId z = 0; z < n; ++z) {
      if (r.contains(x, z)) continue;
      StateSet via = r.successors(x) & r.predecessors(z);
      if (via.none()) continue;
      StateId y = via.find_first();
      out.push_back(what + " not transitive: " + pairText(names[x], names[y]) + " and " +
                    pairText(names[y], names[z]) + " without " + pairText(names[x], names[z]));
    }
}

}  // namespace

std::vector<std::string> validate(const ModelData& data) {
  std::vector<std::string> out;

  if (data.states.empty()) out.push_back("model has no states");
  if (data.agents.empty()) out.push_back("model has no agents");

  std::map<std::string, StateId> index;
  std::vector<std::string> names = data.states;
  std::sort(names.begin(), names.end());
  for (const auto& s : names) {
    if (!isIdentifier(s)) out.push_back("invalid state identifier '" + s + "'");
    if (index.count(s) != 0) {
      out.push_back("duplicate state '" + s + "'");
      continue;
    }
    const auto id = index.size();
    index.emplace(s, id);
  }
  names.clear();
  names.resize(index.size());
  for (const auto& [s, id] : index) names[id] = s;
  const std::size_t n = names.size();

  std::set<std::string> agents;
  for (const auto& a : data.agents) {
    if (!isIdentifier(a)) out.push_back("invalid agent identifier '" + a + "'");
    if (!agents.insert(a).second) out.push_back("duplicate agent '" + a + "'");
  }

  // Converts pairs to a relation, reporting unknown endpoints.
  auto toRelation = [&](const std::vector<StatePair>& pairs, const std::string& what) {
    BinaryRelation r(n);
    for (const auto& [x, y] : pairs) {
      auto ix = index.find(x);
      auto iy = index.find(y);
      if (ix == index.end()) out.push_back("unknown state '" + x + "' in " + what);
      if (iy == index.end()) out.push_back("unknown state '" + y + "' in " + what);
      if (ix != index.end() && iy != index.end()) r.insert(ix->second, iy->second);
    }
    return r;
  };

  for (const auto& [a, pairs] : data.epist) {
    if (agents.count(a) == 0) out.push_back("epist entry for unknown agent '" + a + "'");
  }
  for (const auto& a : agents) {
    auto it = data.epist.find(a);
    if (it == data.epist.end()) {
      out.push_back("missing epist relation for agent " + a);
      continue;
    }
    const std::string what = "epist(" + a + ")";
    BinaryRelation r = toRelation(it->second, what);
    checkReflexive(r, names, what, out);
    checkSymmetric(r, names, what, out);
    checkTransitive(r, names, what, out);
  }

  for (const auto& [a, perState] : data.plaus) {
    if (agents.count(a) == 0) out.push_back("plaus entry for unknown agent '" + a + "'");
    for (const auto& [w, pairs] : perState)
      if (index.count(w) == 0) out.push_back("plaus entry for unknown state '" + w + "' of agent " + a);
  }
  for (const auto& a : agents) {
    auto it = data.plaus.find(a);
    for (const auto& w : names) {
      const std::vector<StatePair>* pairs = nullptr;
      if (it != data.plaus.end()) {
        auto jt = it->second.find(w);
        if (jt != it->second.end()) pairs = &jt->second;
      }
      if (pairs == nullptr) {
        out.push_back("missing plaus entry for (" + a + ", " + w + ")");
        continue;
      }
      const std::string what = "plaus(" + a + "," + w + ")";
      BinaryRelation r = toRelation(*pairs, what);
      checkReflexive(r, names, what, out);
      checkTransitive(r, names, what, out);
    }
  }

  for (const auto& [p, ext] : data.valuation) {
    if (!isIdentifier(p)) out.push_back("invalid atom identifier '" + p + "'");
    for (const auto& s : ext)
      if (index.count(s) == 0) out.push_back("unknown state '" + s + "' in valuation of " + p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Model

Model::Model(std::vector<std::string> states, std::vector<std::string> agents,
             std::vector<BinaryRelation> epist, std::vector<std::vector<BinaryRelation>> plaus,
             std::map<std::string, StateSet> valuation)
    : states_(std::move(states)),
      agents_(std::move(agents)),
      epist_(std::move(epist)),
      plaus_(std::move(plaus)),
      valuation_(std::move(valuation)) {
  std::vector<std::string> out;
  const std::size_t n = states_.size();
  if (n == 0) out.push_back("model has no states");
  if (agents_.empty()) out.push_back("model has no agents");
  for (StateId w = 0; w < n; ++w) {
    if (!isIdentifier(states_[w])) out.push_back("invalid state identifier '" + states_[w] + "'");
    if (w > 0 && !(states_[w - 1] < states_[w])) out.push_back("states not strictly sorted at '" + states_[w] + "'");
  }
  for (AgentId i = 0; i < agents_.size(); ++i) {
    if (!isIdentifier(agents_[i])) out.push_back("invalid agent identifier '" + agents_[i] + "'");
    if (i > 0 && !(agents_[i - 1] < agents_[i])) out.push_back("agents not strictly sorted at '" + agents_[i] + "'");
  }
  if (epist_.size() != agents_.size() || plaus_.size() != agents_.size()) {
    out.push_back("relation families do not match the agent count");
    throw ModelError(out);
  }
  for (AgentId i = 0; i < agents_.size(); ++i) {
    const std::string what = "epist(" + agents_[i] + ")";
    if (epist_[i].size() != n || plaus_[i].size() != n) {
      out.push_back("relations of agent " + agents_[i] + " have the wrong size");
      continue;
    }
    checkReflexive(epist_[i], states_, what, out);
    checkSymmetric(epist_[i], states_, what, out);
    checkTransitive(epist_[i], states_, what, out);
    for (StateId w = 0; w < n; ++w) {
      const std::string pw = "plaus(" + agents_[i] + "," + states_[w] + ")";
      if (plaus_[i][w].size() != n) {
        out.push_back(pw + " has the wrong size");
        continue;
      }
      checkReflexive(plaus_[i][w], states_, pw, out);
      checkTransitive(plaus_[i][w], states_, pw, out);
    }
  }
  for (const auto& [p, ext] : valuation_) {
    if (!isIdentifier(p)) out.push_back("invalid atom identifier '" + p + "'");
    if (ext.size() != n) out.push_back("valuation of " + p + " has the wrong size");
  }
  if (!out.empty()) throw ModelError(out);
}

Model Model::fromData(const ModelData& data) {
  if (auto violations = validate(data); !violations.empty()) throw ModelError(violations);

  std::vector<std::string> states = data.states;
  std::sort(states.begin(), states.end());
  std::vector<std::string> agents = data.agents;
  std::sort(agents.begin(), agents.end());
  std::map<std::string, StateId> index;
  for (StateId w = 0; w < states.size(); ++w) index.emplace(states[w], w);
  const std::size_t n = states.size();

  auto toRelation = [&](const std::vector<StatePair>& pairs) {
    BinaryRelation r(n);
    for (const auto& [x, y] : pairs) r.insert(index.at(x), index.at(y));
    return r;
  };

  std::vector<BinaryRelation> epist;
  std::vector<std::vector<BinaryRelation>> plaus;
  for (const auto& a : agents) {
    epist.push_back(toRelation(data.epist.at(a)));
    std::vector<BinaryRelation> orders;
    for (const auto& w : states) orders.push_back(toRelation(data.plaus.at(a).at(w)));
    plaus.push_back(std::move(orders));
  }
  std::map<std::string, StateSet> valuation;
  for (const auto& [p, ext] : data.valuation) {
    StateSet set(n);
    for (const auto& s : ext) set.set(index.at(s));
    valuation.emplace(p, std::move(set));
  }
  return Model(std::move(states), std::move(agents), std::move(epist), std::move(plaus),
               std::move(valuation));
}

ModelData Model::toData() const {
  ModelData data;
  data.states = states_;
  data.agents = agents_;
  auto toPairs = [&](const BinaryRelation& r) {
    std::vector<StatePair> pairs;
    for (StateId x = 0; x < r.size(); ++x)
      for (StateId y = 0; y < r.size(); ++y)
        if (r.contains(x, y)) pairs.emplace_back(states_[x], states_[y]);
    return pairs;
  };
  for (AgentId i = 0; i < agents_.size(); ++i) {
    data.epist[agents_[i]] = toPairs(epist_[i]);
    auto& perState = data.plaus[agents_[i]];
    for (StateId w = 0; w < states_.size(); ++w) perState[states_[w]] = toPairs(plaus_[i][w]);
  }
  for (const auto& [p, ext] : valuation_) data.valuation[p] = stateNames(*this, ext);
  return data;
}

std::optional<StateId> Model::findState(std::string_view name) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), name);
  if (it == states_.end() || *it != name) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

std::optional<AgentId> Model::findAgent(std::string_view name) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), name);
  if (it == agents_.end() || *it != name) return std::nullopt;
  return static_cast<AgentId>(it - agents_.begin());
}

StateId Model::state(std::string_view name) const {
  if (auto w = findState(name)) return *w;
  throw InputError("unknown state '" + std::string(name) + "'");
}

AgentId Model::agent(std::string_view name) const {
  if (auto i = findAgent(name)) return *i;
  throw InputError("unknown agent '" + std::string(name) + "'");
}

StateSet Model::atom(std::string_view name) const {
  auto it = valuation_.find(std::string(name));
  return it == valuation_.end() ? noStates() : it->second;
}

// ---------------------------------------------------------------------------
// Queries

std::vector<std::string> stateNames(const Model& m, const StateSet& set) {
  std::vector<std::string> out;
  for (auto w = set.find_first(); w != StateSet::npos; w = set.find_next(w)) out.push_back(m.stateName(w));
  return out;
}

StateSet stateSetOf(const Model& m, const std::vector<std::string>& names) {
  StateSet set = m.noStates();
  for (const auto& s : names) set.set(m.state(s));
  return set;
}

StateSet eqClass(const Model& m, std::string_view agent, std::string_view state) {
  return m.eqClass(m.agent(agent), m.state(state));
}

StateSet minSet(const Model& m, AgentId i, StateId w, const StateSet& x) {
  const BinaryRelation& le = m.plaus(i, w);
  StateSet out = m.noStates();
  for (auto v = x.find_first(); v != StateSet::npos; v = x.find_next(v)) {
    // Every y in X with y <= v must also satisfy v <= y.
    if ((le.predecessors(v) & x).is_subset_of(le.successors(v))) out.set(v);
  }
  return out;
}

StateSet minSet(const Model& m, std::string_view agent, std::string_view state,
                const std::vector<std::string>& x) {
  return minSet(m, m.agent(agent), m.state(state), stateSetOf(m, x));
}

StrictOrders strict(const Model& m) {
  StrictOrders out;
  const std::size_t n = m.stateCount();
  for (AgentId i = 0; i < m.agentCount(); ++i) {
    std::vector<BinaryRelation> lt, eqv;
    for (StateId w = 0; w < n; ++w) {
      const BinaryRelation& le = m.plaus(i, w);
      BinaryRelation l(n), e(n);
      for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y) {
          if (!le.contains(x, y)) continue;
          if (le.contains(y, x))
            e.insert(x, y);
          else
            l.insert(x, y);
        }
      lt.push_back(std::move(l));
      eqv.push_back(std::move(e));
    }
    out.lt.push_back(std::move(lt));
    out.eqv.push_back(std::move(eqv));
  }
  return out;
}

StateSet safeSet(const Model& m, AgentId i, StateId w) {
  return m.eqClass(i, w) & m.plaus(i, w).predecessors(w);
}

StateSet strictlyBetterSet(const Model& m, AgentId i, StateId w) {
  const BinaryRelation& le = m.plaus(i, w);
  return (m.eqClass(i, w) & le.predecessors(w)) - le.successors(w);
}

UniformityResult isUniform(const Model& m) {
  const std::size_t n = m.stateCount();
  for (AgentId i = 0; i < m.agentCount(); ++i)
    for (StateId w = 0; w < n; ++w)
      for (StateId v = 0; v < n; ++v) {
        if (v == w || !m.epist(i).contains(w, v)) continue;
        const BinaryRelation& a = m.plaus(i, w);
        const BinaryRelation& b = m.plaus(i, v);
        if (a == b) continue;
        for (StateId x = 0; x < n; ++x) {
          StateSet diff = a.successors(x) ^ b.successors(x);
          if (diff.any()) return {false, UniformityWitness{i, w, v, x, diff.find_first()}};
        }
      }
  return {true, std::nullopt};
}

ConnectednessResult isLocallyConnected(const Model& m) {
  const std::size_t n = m.stateCount();
  for (AgentId i = 0; i < m.agentCount(); ++i)
    for (StateId w = 0; w < n; ++w) {
      const BinaryRelation& le = m.plaus(i, w);
      StateSet cls = m.eqClass(i, w);
      StateSet comparable = le.successors(w) | le.predecessors(w);
      StateSet bad = cls - comparable;
      if (bad.any()) return {false, ConnectednessWitness{i, w, bad.find_first()}};
    }
  return {true, std::nullopt};
}

bool isImageFinite(const Model&) { return true; }

std::string describe(const Model& m, const UniformityWitness& u) {
  const bool inW = m.plaus(u.agent, u.w).contains(u.x, u.y);
  const std::string pair = pairText(m.stateName(u.x), m.stateName(u.y));
  return "agent " + m.agentName(u.agent) + ": " + m.stateName(u.w) + " ~ " + m.stateName(u.v) +
         " but " + pair + " is in plaus(" + m.stateName(inW ? u.w : u.v) + ") only";
}

std::string describe(const Model& m, const ConnectednessWitness& c) {
  return "agent " + m.agentName(c.agent) + ": " + m.stateName(c.w) + " ~ " + m.stateName(c.v) +
         " but they are incomparable at plaus(" + m.stateName(c.w) + ")";
}

}  // namespace plausikit
