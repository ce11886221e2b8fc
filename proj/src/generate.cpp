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

#include "plausikit/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "plausikit/errors.hpp"

namespace plausikit {

using nlohmann::json;

namespace {

std::vector<std::vector<StateId>> classesOf(const BinaryRelation& epist) {
  std::vector<std::vector<StateId>> out;
  StateSet seen(epist.size());
  for (StateId w = 0; w < epist.size(); ++w) {
    if (seen.test(w)) continue;
    const StateSet& cls = epist.successors(w);
    seen |= cls;
    std::vector<StateId> members;
    for (auto v = cls.find_first(); v != StateSet::npos; v = cls.find_next(v)) members.push_back(v);
    out.push_back(members);
  }
  return out;
}

// Rank-monotone relation: every pair goes from a lower or equal rank to a
// higher or equal one, so its transitive closure is a preorder.
class OrderDraw {
 public:
  OrderDraw(const std::vector<StateId>& cls, std::size_t n, Rng& rng) : cls_(cls), rank_(n) {
    for (StateId x : cls) rank_[x] = rng.below(cls.size());
  }

  BinaryRelation draw(const GenSpec& spec, Rng& rng) const {
    BinaryRelation r = BinaryRelation::identity(rank_.size());
    if (spec.discretePreorders) return r;
    for (StateId x : cls_)
      for (StateId y : cls_) {
        if (x >= y) continue;
        if (spec.totalPreorders) {
          link(r, x, y);
        } else if (rank_[x] == rank_[y]) {
          if (rng.chance(1, 2)) link(r, x, y);
        } else if (rng.chance(2, 3)) {
          link(r, x, y);
        }
      }
    return r.transitiveClosure();
  }

  // Makes x and y comparable without breaking rank monotonicity.
  void link(BinaryRelation& r, StateId x, StateId y) const {
    if (rank_[x] <= rank_[y]) r.insert(x, y);
    if (rank_[y] <= rank_[x]) r.insert(y, x);
  }

  void connect(BinaryRelation& r, StateId w) const {
    for (StateId v : cls_)
      if (!r.contains(w, v) && !r.contains(v, w)) link(r, w, v);
  }

 private:
  const std::vector<StateId>& cls_;
  std::vector<std::uint64_t> rank_;
};

std::vector<std::vector<BinaryRelation>> drawPlaus(const std::vector<BinaryRelation>& epist, std::size_t n,
                                                   const GenSpec& spec, Rng& rng) {
  std::vector<std::vector<BinaryRelation>> plaus(epist.size(), std::vector<BinaryRelation>(n));
  for (std::size_t i = 0; i < epist.size(); ++i)
    for (const auto& cls : classesOf(epist[i])) {
      const OrderDraw ranks(cls, n, rng);
      if (spec.uniform) {
        BinaryRelation r = ranks.draw(spec, rng);
        if (spec.locallyConnected) {
          for (StateId w : cls) ranks.connect(r, w);
          r = r.transitiveClosure();
        }
        for (StateId w : cls) plaus[i][w] = r;
      } else {
        for (StateId w : cls) {
          BinaryRelation r = ranks.draw(spec, rng);
          if (spec.locallyConnected) {
            ranks.connect(r, w);
            r = r.transitiveClosure();
          }
          plaus[i][w] = r;
        }
      }
    }
  return plaus;
}

std::size_t getSize(const json& doc, const char* key, std::size_t fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_unsigned()) throw InputError(std::string("gen spec: ") + key + " must be a non-negative integer");
  return it->get<std::size_t>();
}

bool getFlag(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) return false;
  if (!it->is_boolean()) throw InputError(std::string("gen spec: ") + key + " must be a boolean");
  return it->get<bool>();
}

void addLifted(ModelData& out, const Model& m, const std::vector<std::string>& names,
               const std::vector<StateId>& orig, const std::vector<std::string>& agentNamesOut) {
  for (AgentId i = 0; i < m.agentCount(); ++i) {
    const std::string& a = agentNamesOut[i];
    for (std::size_t x = 0; x < names.size(); ++x) {
      for (std::size_t y = 0; y < names.size(); ++y)
        if (m.epist(i).contains(orig[x], orig[y])) out.epist[a].emplace_back(names[x], names[y]);
      auto& rows = out.plaus[a][names[x]];
      const BinaryRelation& le = m.plaus(i, orig[x]);
      for (std::size_t y = 0; y < names.size(); ++y)
        for (std::size_t z = 0; z < names.size(); ++z)
          if (le.contains(orig[y], orig[z])) rows.emplace_back(names[y], names[z]);
    }
  }
}

// Every order is reflexive on all of W, including states of other components.
void addMissingLoops(ModelData& data) {
  for (auto& [agent, rows] : data.plaus)
    for (const auto& s : data.states) {
      auto& row = rows[s];
      std::set<std::string> looped;
      for (const auto& [x, y] : row)
        if (x == y) looped.insert(x);
      for (const auto& t : data.states)
        if (!looped.count(t)) row.emplace_back(t, t);
    }
}

}  // namespace

GenSpec genSpecFromJson(const json& doc) {
  if (!doc.is_object()) throw InputError("gen spec must be a JSON object");
  GenSpec s;
  s.minStates = getSize(doc, "minStates", s.minStates);
  s.maxStates = getSize(doc, "maxStates", std::max(s.maxStates, s.minStates));
  s.agents = getSize(doc, "agents", s.agents);
  s.atoms = getSize(doc, "atoms", s.atoms);
  s.uniform = getFlag(doc, "uniform");
  s.locallyConnected = getFlag(doc, "locallyConnected");
  s.totalPreorders = getFlag(doc, "totalPreorders");
  s.discretePreorders = getFlag(doc, "discretePreorders");
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw InputError("gen spec: seed must be a non-negative integer");
    s.seed = it->get<std::uint64_t>();
  }
  return s;
}

json toJson(const GenSpec& s) {
  return json{{"minStates", s.minStates},
              {"maxStates", s.maxStates},
              {"agents", s.agents},
              {"atoms", s.atoms},
              {"uniform", s.uniform},
              {"locallyConnected", s.locallyConnected},
              {"totalPreorders", s.totalPreorders},
              {"discretePreorders", s.discretePreorders},
              {"seed", s.seed}};
}

std::vector<std::string> agentNames(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(k < 26 ? std::string(1, static_cast<char>('a' + k)) : "agent" + std::to_string(k));
  return out;
}

std::vector<std::string> atomNames(std::size_t n) {
  static const char* letters[] = {"p", "q", "r"};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(k < 3 ? letters[k] : "p" + std::to_string(k));
  return out;
}

std::vector<std::string> generatedStateNames(std::size_t n) {
  const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::string digits = std::to_string(k);
    out.push_back("s" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

Model generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  return generate(spec, rng);
}

Model generate(const GenSpec& spec, Rng& rng) {
  if (spec.minStates == 0 || spec.minStates > spec.maxStates)
    throw InputError("gen spec needs 1 <= minStates <= maxStates");
  const std::size_t n = rng.between(spec.minStates, spec.maxStates);
  const bool singletons = spec.discretePreorders && (spec.locallyConnected || spec.totalPreorders);

  std::vector<BinaryRelation> epist;
  for (std::size_t i = 0; i < spec.agents; ++i) {
    std::vector<std::uint64_t> label(n);
    for (std::size_t x = 0; x < n; ++x) label[x] = singletons ? x : rng.below(n);
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (label[x] == label[y]) r.insert(x, y);
    epist.push_back(r);
  }
  auto plaus = drawPlaus(epist, n, spec, rng);

  std::map<std::string, StateSet> valuation;
  for (const auto& p : atomNames(spec.atoms)) {
    StateSet s(n);
    for (std::size_t x = 0; x < n; ++x)
      if (rng.chance(1, 2)) s.set(x);
    valuation[p] = s;
  }
  return Model(generatedStateNames(n), agentNames(spec.agents), std::move(epist), std::move(plaus),
               std::move(valuation));
}

Variant bisimilarVariant(const Model& m, Rng& rng, const GenSpec& extra) {
  std::vector<std::string> names;
  std::vector<StateId> orig;
  Variant out{m, {}};
  for (StateId w = 0; w < m.stateCount(); ++w) {
    names.push_back(m.stateName(w) + "_0");
    orig.push_back(w);
    out.pairs.emplace_back(m.stateName(w), names.back());
    if (rng.chance(1, 2)) {
      names.push_back(m.stateName(w) + "_1");
      orig.push_back(w);
      out.pairs.emplace_back(m.stateName(w), names.back());
    }
  }

  ModelData data;
  data.agents = m.agents();
  data.states = names;
  addLifted(data, m, names, orig, m.agents());
  for (const auto& [p, set] : m.valuation()) {
    auto& ext = data.valuation[p];
    for (std::size_t x = 0; x < names.size(); ++x)
      if (set.test(orig[x])) ext.push_back(names[x]);
  }

  if (extra.maxStates > 0 && rng.chance(1, 2)) {
    GenSpec spec = extra;
    spec.agents = m.agentCount();
    spec.atoms = m.valuation().size();
    const Model other = generate(spec, rng);
    std::vector<std::string> otherNames;
    std::vector<StateId> id;
    for (StateId w = 0; w < other.stateCount(); ++w) {
      otherNames.push_back(other.stateName(w) + "_2");
      id.push_back(w);
    }
    data.states.insert(data.states.end(), otherNames.begin(), otherNames.end());
    addLifted(data, other, otherNames, id, m.agents());
    // Atoms are matched by position in name order.
    auto mine = m.valuation().begin();
    for (auto theirs = other.valuation().begin(); theirs != other.valuation().end() && mine != m.valuation().end();
         ++theirs, ++mine)
      for (std::size_t x = 0; x < otherNames.size(); ++x)
        if (theirs->second.test(x)) data.valuation[mine->first].push_back(otherNames[x]);
    addMissingLoops(data);
  }
  out.model = Model::fromData(data);
  return out;
}

Model withFreshOrders(const Model& m, Rng& rng, const GenSpec& spec) {
  std::vector<BinaryRelation> epist;
  for (AgentId i = 0; i < m.agentCount(); ++i) epist.push_back(m.epist(i));
  auto plaus = drawPlaus(epist, m.stateCount(), spec, rng);
  return Model(m.states(), m.agents(), std::move(epist), std::move(plaus), m.valuation());
}

std::vector<BinaryRelation> allPreorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offDiagonal;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) offDiagonal.emplace_back(x, y);
  std::vector<BinaryRelation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offDiagonal.size()); ++mask) {
    BinaryRelation r = BinaryRelation::identity(n);
    for (std::size_t k = 0; k < offDiagonal.size(); ++k)
      if (mask >> k & 1) r.insert(offDiagonal[k].first, offDiagonal[k].second);
    if (r.transitiveClosure() == r) out.push_back(r);
  }
  return out;
}

std::vector<std::vector<std::size_t>> allPartitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t x, std::size_t blocks) {
    if (x == n) {
      out.push_back(label);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[x] = b;
      extend(x + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return {{}};
  label[0] = 0;
  extend(1, 1);
  return out;
}

void forEachSmallModel(std::size_t maxStates, std::size_t atoms, ModelClass cls,
                       const std::function<void(const Model&)>& visit) {
  forEachSmallModel(1, maxStates, atoms, cls, [&](const Model& m) {
    visit(m);
    return true;
  });
}

bool forEachSmallModel(std::size_t minStates, std::size_t maxStates, std::size_t atoms, ModelClass cls,
                       const std::function<bool(const Model&)>& visit) {
  const auto atomList = atomNames(atoms);
  bool going = true;
  for (std::size_t n = std::max<std::size_t>(minStates, 1); going && n <= maxStates; ++n) {
    const auto names = generatedStateNames(n);
    for (const auto& label : allPartitions(n)) {
      BinaryRelation epist(n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (label[x] == label[y]) epist.insert(x, y);
      const auto classes = classesOf(epist);

      // Candidate orders per class, lifted onto the class members.
      std::vector<std::vector<BinaryRelation>> candidates;
      for (const auto& members : classes) {
        auto& list = candidates.emplace_back();
        for (const auto& r : allPreorders(members.size())) {
          BinaryRelation lifted = BinaryRelation::identity(n);
          for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = 0; b < members.size(); ++b)
              if (r.contains(a, b)) lifted.insert(members[a], members[b]);
          list.push_back(lifted);
        }
      }
      auto comparable = [&](const BinaryRelation& r, StateId w, const std::vector<StateId>& members) {
        return std::all_of(members.begin(), members.end(),
                           [&](StateId v) { return r.contains(w, v) || r.contains(v, w); });
      };

      // One slot per class when uniform, else one per state.
      struct Slot {
        std::vector<StateId> owners;
        std::vector<const BinaryRelation*> options;
      };
      std::vector<Slot> slots;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& members = classes[c];
        auto keep = [&](const BinaryRelation& r, const std::vector<StateId>& owners) {
          if (!cls.locallyConnected) return true;
          return std::all_of(owners.begin(), owners.end(), [&](StateId w) { return comparable(r, w, members); });
        };
        if (cls.uniform) {
          Slot s{members, {}};
          for (const auto& r : candidates[c])
            if (keep(r, members)) s.options.push_back(&r);
          slots.push_back(s);
        } else {
          for (StateId w : members) {
            Slot s{{w}, {}};
            for (const auto& r : candidates[c])
              if (keep(r, {w})) s.options.push_back(&r);
            slots.push_back(s);
          }
        }
      }

      std::vector<std::vector<BinaryRelation>> plaus(1, std::vector<BinaryRelation>(n));
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (!going) return;
        if (k == slots.size()) {
          for (std::uint64_t v = 0; going && v < (std::uint64_t{1} << (n * atoms)); ++v) {
            std::map<std::string, StateSet> valuation;
            for (std::size_t a = 0; a < atoms; ++a) {
              StateSet s(n);
              for (std::size_t x = 0; x < n; ++x)
                if (v >> (a * n + x) & 1) s.set(x);
              valuation[atomList[a]] = s;
            }
            going = visit(Model(names, {"a"}, {epist}, plaus, std::move(valuation)));
          }
          return;
        }
        for (const BinaryRelation* r : slots[k].options) {
          for (StateId w : slots[k].owners) plaus[0][w] = *r;
          fill(k + 1);
        }
      };
      fill(0);
      if (!going) break;
    }
  }
  return going;
}

}  // namespace plausikit
