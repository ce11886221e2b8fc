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

#include "plausikit/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "plausikit/errors.hpp"

namespace plausikit {

namespace {

constexpr Modality kStructural[] = {Modality::K, Modality::Bplus, Modality::Gt};
constexpr Fragment kStructuralFragment{Modality::K, Modality::Bplus, Modality::Gt};

void requireSameAgents(const Model& left, const Model& right) {
  if (left.agents() != right.agents())
    throw InputError("bisimulation needs both models to have the same agents");
}

std::vector<std::string> atomsOf(const Model& left, const Model& right) {
  std::set<std::string> names;
  for (const auto& [p, set] : left.valuation()) names.insert(p);
  for (const auto& [p, set] : right.valuation()) names.insert(p);
  return {names.begin(), names.end()};
}

StateSet scopeOf(const Model& m, Modality mod, AgentId i, StateId w) {
  switch (mod) {
    case Modality::K: return m.eqClass(i, w);
    case Modality::Bplus: return safeSet(m, i, w);
    case Modality::Gt: return strictlyBetterSet(m, i, w);
    default: throw Error("not a structural modality");
  }
}

std::string modName(Modality m) { return std::string(modalityName(m)); }

Violation violationAt(std::string clause, StateId w, StateId w2, std::optional<AgentId> agent = std::nullopt) {
  Violation v;
  v.clause = std::move(clause);
  v.left = w;
  v.right = w2;
  v.agent = agent;
  return v;
}

// Accessibility sets of both models for the structural modalities in a
// fragment: scopes[side][modality][agent][state].
struct Scopes {
  std::vector<Modality> mods;
  std::vector<std::vector<std::vector<StateSet>>> side[2];

  Scopes(const Model& left, const Model& right, Fragment fragment) {
    for (Modality m : kStructural)
      if (fragment.contains(m)) mods.push_back(m);
    const Model* models[2] = {&left, &right};
    for (int s = 0; s < 2; ++s)
      for (Modality mod : mods) {
        auto& perAgent = side[s].emplace_back(models[s]->agentCount());
        for (AgentId i = 0; i < models[s]->agentCount(); ++i)
          for (StateId w = 0; w < models[s]->stateCount(); ++w)
            perAgent[i].push_back(scopeOf(*models[s], mod, i, w));
      }
  }
};

class ClauseChecker {
 public:
  ClauseChecker(const Relation& z, const Scopes& scopes, std::vector<std::string> atoms)
      : z_(z), scopes_(scopes), atoms_(std::move(atoms)) {
    for (const auto& p : atoms_) {
      leftAtoms_.push_back(z.left().atom(p));
      rightAtoms_.push_back(z.right().atom(p));
    }
    refreshColumns();
  }

  void refreshColumns() {
    cols_.assign(z_.right().stateCount(), StateSet(z_.left().stateCount()));
    for (auto [w, w2] : z_.pairs()) cols_[w2].set(w);
  }

  std::optional<Violation> atomsAt(StateId w, StateId w2) const {
    for (std::size_t k = 0; k < atoms_.size(); ++k)
      if (leftAtoms_[k].test(w) != rightAtoms_[k].test(w2)) {
        Violation v = violationAt("atoms", w, w2);
        v.atom = atoms_[k];
        return v;
      }
    return std::nullopt;
  }

  // Zig: every v in `scope` has a partner in `scope2`; zag the converse.
  std::optional<Violation> matchSets(const std::string& name, StateId w, StateId w2, AgentId i,
                                     const StateSet& scope, const StateSet& scope2) const {
    for (auto v = scope.find_first(); v != StateSet::npos; v = scope.find_next(v))
      if (!z_.image(v).intersects(scope2)) {
        Violation out = violationAt(name + "-zig", w, w2, i);
        out.unmatched = v;
        return out;
      }
    for (auto v2 = scope2.find_first(); v2 != StateSet::npos; v2 = scope2.find_next(v2))
      if (!cols_[v2].intersects(scope)) {
        Violation out = violationAt(name + "-zag", w, w2, i);
        out.unmatched = v2;
        return out;
      }
    return std::nullopt;
  }

  std::optional<Violation> structuralAt(StateId w, StateId w2) const {
    if (auto v = atomsAt(w, w2)) return v;
    for (std::size_t k = 0; k < scopes_.mods.size(); ++k)
      for (AgentId i = 0; i < z_.left().agentCount(); ++i)
        if (auto v = matchSets(modName(scopes_.mods[k]), w, w2, i, scopes_.side[0][k][i][w],
                               scopes_.side[1][k][i][w2]))
          return v;
    return std::nullopt;
  }

 private:
  const Relation& z_;
  const Scopes& scopes_;
  std::vector<std::string> atoms_;
  std::vector<StateSet> leftAtoms_, rightAtoms_;
  std::vector<StateSet> cols_;
};

std::string setText(const Model& m, const StateSet& s) {
  std::string out = "{";
  for (const auto& name : stateNames(m, s)) out += (out.size() > 1 ? ", " : "") + name;
  return out + "}";
}

}  // namespace

Relation::Relation(const Model& left, const Model& right)
    : left_(&left), right_(&right), rows_(left.stateCount(), StateSet(right.stateCount())) {}

Relation Relation::identity(const Model& m) {
  Relation z(m, m);
  for (StateId w = 0; w < m.stateCount(); ++w) z.insert(w, w);
  return z;
}

Relation Relation::atomRespecting(const Model& left, const Model& right) {
  Relation z(left, right);
  for (auto& row : z.rows_) row.set();
  for (const auto& p : atomsOf(left, right)) {
    const StateSet l = left.atom(p), r = right.atom(p);
    for (StateId w = 0; w < left.stateCount(); ++w) z.rows_[w] &= l.test(w) ? r : ~r;
  }
  return z;
}

Relation Relation::fromNames(const Model& left, const Model& right,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
  Relation z(left, right);
  for (const auto& [a, b] : pairs) z.insert(left.state(a), right.state(b));
  return z;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

bool Relation::subsetOf(const Relation& other) const {
  for (std::size_t w = 0; w < rows_.size(); ++w)
    if (!rows_[w].is_subset_of(other.rows_[w])) return false;
  return true;
}

std::vector<std::pair<StateId, StateId>> Relation::pairs() const {
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId w = 0; w < rows_.size(); ++w)
    for (auto w2 = rows_[w].find_first(); w2 != StateSet::npos; w2 = rows_[w].find_next(w2)) out.emplace_back(w, w2);
  return out;
}

std::vector<std::pair<std::string, std::string>> Relation::namedPairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [w, w2] : pairs()) out.emplace_back(left_->stateName(w), right_->stateName(w2));
  return out;
}

std::string describe(const Relation& z, const Violation& v) {
  const Model& l = z.left();
  const Model& r = z.right();
  std::string out = v.clause + " fails at (" + l.stateName(v.left) + ", " + r.stateName(v.right) + ")";
  if (v.atom) return out + ": atom " + *v.atom + " differs";
  if (v.agent) out += " for agent " + l.agentName(*v.agent);
  if (v.conditionSets)
    out += " under condition pair (" + setText(l, v.conditionSets->first) + ", " +
           setText(r, v.conditionSets->second) + ")";
  if (v.unmatched) {
    const bool zig = v.clause.ends_with("zig");
    out += zig ? ": left state " + l.stateName(*v.unmatched) + " has no partner"
               : ": right state " + r.stateName(*v.unmatched) + " has no partner";
  }
  return out;
}

CheckResult checkStructural(const Relation& z, Fragment fragment) {
  if (!fragment.subsetOf(kStructuralFragment))
    throw InputError("structural bisimulation is defined for subsets of {K, Bplus, Gt}, not " +
                     fragment.toString());
  requireSameAgents(z.left(), z.right());
  const Scopes scopes(z.left(), z.right(), fragment);
  const ClauseChecker checker(z, scopes, atomsOf(z.left(), z.right()));
  for (auto [w, w2] : z.pairs())
    if (auto v = checker.structuralAt(w, w2)) return {false, v};
  return {};
}

Relation greatestStructural(const Model& left, const Model& right, Fragment fragment) {
  if (!fragment.subsetOf(kStructuralFragment))
    throw InputError("structural bisimulation is defined for subsets of {K, Bplus, Gt}, not " +
                     fragment.toString());
  requireSameAgents(left, right);
  Relation z = Relation::atomRespecting(left, right);
  const Scopes scopes(left, right, fragment);
  ClauseChecker checker(z, scopes, {});
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [w, w2] : z.pairs())
      if (checker.structuralAt(w, w2)) {
        z.erase(w, w2);
        changed = true;
      }
    checker.refreshColumns();
  }
  return z;
}

std::pair<StateSet, StateSet> PairFamily::member(std::uint64_t mask) const {
  std::pair<StateSet, StateSet> out{left_->noStates(), right_->noStates()};
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (mask >> b & 1) {
      out.first |= blocks_[b].first;
      out.second |= blocks_[b].second;
    }
  return out;
}

std::vector<std::pair<StateSet, StateSet>> PairFamily::members() const {
  std::vector<std::pair<StateSet, StateSet>> out;
  for (std::uint64_t mask = 0; mask < size(); ++mask) out.push_back(member(mask));
  return out;
}

bool PairFamily::contains(const StateSet& x, const StateSet& x2) const {
  if (x.size() != left_->stateCount() || x2.size() != right_->stateCount()) return false;
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].first.intersects(x) || blocks_[b].second.intersects(x2)) mask |= std::uint64_t{1} << b;
  return member(mask) == std::make_pair(x, x2);
}

Formula PairFamily::formulaFor(std::uint64_t mask) const {
  if (mask == 0) return Bot();
  if (mask == size() - 1) return Top();
  std::optional<Formula> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (mask >> b & 1) out = out ? Or(*out, blockFormulas_[b]) : blockFormulas_[b];
  return *out;
}

Relation PairFamily::sameBlockRelation() const {
  Relation z(*left_, *right_);
  for (StateId w = 0; w < left_->stateCount(); ++w)
    for (StateId w2 = 0; w2 < right_->stateCount(); ++w2)
      if (sameBlock(w, w2)) z.insert(w, w2);
  return z;
}

PairFamily definablePairs(const Model& left, const Model& right, Fragment fragment, std::size_t cap) {
  if (!fragment.isStatic())
    throw InputError("definable pairs need a static fragment, not " + fragment.toString() +
                     "; reduce dynamic operators first");
  requireSameAgents(left, right);
  PairFamily fam(left, right, fragment);
  const std::size_t n = left.stateCount();
  const std::size_t total = n + right.stateCount();
  const std::size_t agents = left.agentCount();
  auto sideOf = [&](std::size_t x) -> const Model& { return x < n ? left : right; };
  auto local = [&](std::size_t x) { return x < n ? x : x - n; };
  auto checkCap = [&](std::size_t blocks) {
    if (blocks >= 63 || (std::uint64_t{1} << blocks) > cap)
      throw ResourceError("definable pair family would exceed its size cap", cap);
  };

  // Initial partition by valuation.
  std::vector<std::size_t> blockOf(total);
  std::vector<Formula> chi;
  {
    const auto atoms = atomsOf(left, right);
    std::vector<std::pair<StateSet, StateSet>> sets;
    for (const auto& p : atoms) {
      sets.emplace_back(left.atom(p), right.atom(p));
      fam.log_.push_back({"atom " + p, Atom(p), sets.back().first, sets.back().second});
    }
    std::map<std::vector<bool>, std::size_t> ids;
    for (std::size_t x = 0; x < total; ++x) {
      std::vector<bool> key;
      for (const auto& s : sets) key.push_back(x < n ? s.first.test(x) : s.second.test(x - n));
      auto [it, fresh] = ids.emplace(key, ids.size());
      blockOf[x] = it->second;
      if (fresh) {
        std::optional<Formula> f;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          Formula lit = key[k] ? Atom(atoms[k]) : Not(Atom(atoms[k]));
          f = f ? And(*f, lit) : lit;
        }
        chi.push_back(f ? *f : Top());
      }
    }
  }
  checkCap(chi.size());

  std::vector<Modality> unary;
  for (Modality m : kStructural)
    if (fragment.contains(m)) unary.push_back(m);
  const bool bc = fragment.contains(Modality::Bc);

  // Scopes for the unary operators, fixed across rounds.
  std::vector<std::vector<std::vector<StateSet>>> scope(unary.size(),
                                                        std::vector<std::vector<StateSet>>(agents));
  for (std::size_t k = 0; k < unary.size(); ++k)
    for (AgentId i = 0; i < agents; ++i)
      for (std::size_t x = 0; x < total; ++x) scope[k][i].push_back(scopeOf(sideOf(x), unary[k], i, local(x)));

  // One splitter per (operator, agent, condition mask, target block); the
  // signature bit is set when the scope of x meets the target block.
  struct Splitter {
    std::size_t op;  // index into unary, or unary.size() for Bc
    AgentId agent;
    std::uint64_t condition;
  };

  while (true) {
    const std::size_t blocks = chi.size();
    std::vector<Splitter> splitters;
    std::vector<std::vector<std::uint64_t>> sig(total);
    auto blocksHit = [&](std::size_t x, const StateSet& s) {
      std::uint64_t hit = 0;
      const std::size_t off = x < n ? 0 : n;
      for (auto y = s.find_first(); y != StateSet::npos; y = s.find_next(y)) hit |= std::uint64_t{1} << blockOf[off + y];
      return hit;
    };
    for (std::size_t k = 0; k < unary.size(); ++k)
      for (AgentId i = 0; i < agents; ++i) {
        splitters.push_back({k, i, 0});
        for (std::size_t x = 0; x < total; ++x) sig[x].push_back(blocksHit(x, scope[k][i][x]));
      }
    if (bc) {
      std::vector<StateSet> leftOf(blocks, left.noStates()), rightOf(blocks, right.noStates());
      for (std::size_t x = 0; x < total; ++x) (x < n ? leftOf[blockOf[x]] : rightOf[blockOf[x]]).set(local(x));
      for (AgentId i = 0; i < agents; ++i)
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << blocks); ++mask) {
          StateSet uL = left.noStates(), uR = right.noStates();
          for (std::size_t b = 0; b < blocks; ++b)
            if (mask >> b & 1) {
              uL |= leftOf[b];
              uR |= rightOf[b];
            }
          splitters.push_back({unary.size(), i, mask});
          for (std::size_t x = 0; x < total; ++x) {
            const Model& m = sideOf(x);
            const StateSet& u = x < n ? uL : uR;
            sig[x].push_back(blocksHit(x, minSet(m, i, local(x), u & m.eqClass(i, local(x)))));
          }
        }
    }

    std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::size_t> ids;
    std::vector<std::size_t> next(total);
    std::vector<std::size_t> firstMember;
    for (std::size_t x = 0; x < total; ++x) {
      auto [it, fresh] = ids.emplace(std::make_pair(blockOf[x], sig[x]), ids.size());
      next[x] = it->second;
      if (fresh) firstMember.push_back(x);
    }
    if (ids.size() == blocks) break;
    checkCap(ids.size());

    // Characteristic formulas of the new blocks: the old one plus a literal
    // for each splitter that varies inside the old block.
    auto unionFormula = [&](std::uint64_t mask) {
      if (mask == (std::uint64_t{1} << blocks) - 1) return Top();
      std::optional<Formula> f;
      for (std::size_t b = 0; b < blocks; ++b)
        if (mask >> b & 1) f = f ? Or(*f, chi[b]) : chi[b];
      return *f;
    };
    std::map<std::pair<std::size_t, std::size_t>, Formula> splitterFormula;  // (splitter, target)
    auto formulaOf = [&](std::size_t s, std::size_t target) {
      auto it = splitterFormula.find({s, target});
      if (it != splitterFormula.end()) return it->second;
      const Splitter& sp = splitters[s];
      const std::string& agent = left.agentName(sp.agent);
      Formula avoid = Not(chi[target]);
      Formula f;
      std::string source;
      if (sp.op < unary.size()) {
        switch (unary[sp.op]) {
          case Modality::K: f = Know(agent, avoid); source = "K[" + agent + "]"; break;
          case Modality::Bplus: f = SafeBelief(agent, avoid); source = "Bplus[" + agent + "]"; break;
          default: f = GtBox(agent, avoid); source = "Gt[" + agent + "]"; break;
        }
      } else {
        f = CondBelief(agent, unionFormula(sp.condition), avoid);
        source = "B[" + agent + " | union " + std::to_string(sp.condition) + "]";
      }
      GeneratorStep step{source, f, left.noStates(), right.noStates()};
      for (std::size_t x = 0; x < total; ++x)
        if (!(sig[x][s] >> target & 1)) (x < n ? step.left : step.right).set(local(x));
      fam.log_.push_back(step);
      splitterFormula.emplace(std::make_pair(s, target), f);
      return f;
    };

    std::vector<Formula> nextChi(ids.size());
    for (std::size_t nb = 0; nb < ids.size(); ++nb) {
      const std::size_t rep = firstMember[nb];
      const std::size_t old = blockOf[rep];
      Formula f = chi[old];
      for (std::size_t s = 0; s < splitters.size(); ++s) {
        std::uint64_t varying = 0;
        for (std::size_t x = 0; x < total; ++x)
          if (blockOf[x] == old) varying |= sig[x][s] ^ sig[rep][s];
        for (std::size_t target = 0; target < blocks; ++target)
          if (varying >> target & 1) {
            Formula split = formulaOf(s, target);
            f = And(f, (sig[rep][s] >> target & 1) ? Not(split) : split);
          }
      }
      nextChi[nb] = f;
    }
    chi = std::move(nextChi);
    blockOf = std::move(next);
  }

  fam.blockFormulas_ = chi;
  fam.blocks_.assign(chi.size(), {left.noStates(), right.noStates()});
  for (std::size_t x = 0; x < total; ++x) {
    auto& b = fam.blocks_[blockOf[x]];
    (x < n ? b.first : b.second).set(local(x));
  }
  fam.blockOfLeft_.assign(blockOf.begin(), blockOf.begin() + static_cast<std::ptrdiff_t>(n));
  fam.blockOfRight_.assign(blockOf.begin() + static_cast<std::ptrdiff_t>(n), blockOf.end());
  return fam;
}

CheckResult checkBc(const Relation& z, const PairFamily& family) {
  if (&z.left() != &family.left() || &z.right() != &family.right())
    throw InputError("relation and pair family refer to different models");
  const Fragment fragment = family.fragment();
  if (!fragment.contains(Modality::Bc)) throw InputError("checkBc needs a fragment containing Bc");
  const Model& l = z.left();
  const Model& r = z.right();
  const Scopes scopes(l, r, fragment);
  const ClauseChecker checker(z, scopes, atomsOf(l, r));

  const std::uint64_t members = family.size();
  const std::size_t agents = l.agentCount();
  std::vector<std::pair<StateSet, StateSet>> sets = family.members();
  // minima[agent][state][mask] for one side.
  auto minima = [&](const Model& m, bool isLeft) {
    std::vector<std::vector<std::vector<StateSet>>> out(agents, std::vector<std::vector<StateSet>>(m.stateCount()));
    for (AgentId i = 0; i < agents; ++i)
      for (StateId w = 0; w < m.stateCount(); ++w)
        for (std::uint64_t mask = 0; mask < members; ++mask)
          out[i][w].push_back(minSet(m, i, w, (isLeft ? sets[mask].first : sets[mask].second) & m.eqClass(i, w)));
    return out;
  };
  const auto minL = minima(l, true);
  const auto minR = minima(r, false);
  std::vector<StateSet> cols(r.stateCount(), StateSet(l.stateCount()));
  for (auto [w, w2] : z.pairs()) cols[w2].set(w);

  for (auto [w, w2] : z.pairs()) {
    if (auto v = checker.structuralAt(w, w2)) return {false, v};
    for (AgentId i = 0; i < agents; ++i)
      for (std::uint64_t mask = 1; mask < members; ++mask) {
        const StateSet& a = minL[i][w][mask];
        const StateSet& b = minR[i][w2][mask];
        std::optional<Violation> bad;
        for (auto v = a.find_first(); !bad && v != StateSet::npos; v = a.find_next(v))
          if (!z.image(v).intersects(b)) {
            bad = violationAt("Bc-zig", w, w2, i);
            bad->unmatched = v;
          }
        for (auto v2 = b.find_first(); !bad && v2 != StateSet::npos; v2 = b.find_next(v2))
          if (!cols[v2].intersects(a)) {
            bad = violationAt("Bc-zag", w, w2, i);
            bad->unmatched = v2;
          }
        if (bad) {
          bad->condition = family.formulaFor(mask);
          bad->conditionSets = sets[mask];
          return {false, bad};
        }
      }
  }
  return {};
}

CheckResult checkBc(const Relation& z, Fragment fragment, std::size_t cap) {
  return checkBc(z, definablePairs(z.left(), z.right(), fragment, cap));
}

CheckResult checkBisimulation(const Relation& z, Fragment fragment, std::size_t cap) {
  return fragment.contains(Modality::Bc) ? checkBc(z, fragment, cap) : checkStructural(z, fragment);
}

Relation greatestBisimulation(const Model& left, const Model& right, Fragment fragment, std::size_t cap) {
  if (!fragment.contains(Modality::Bc)) return greatestStructural(left, right, fragment);
  return definablePairs(left, right, fragment, cap).sameBlockRelation();
}

bool modalEquiv(const Model& left, StateId w, const Model& right, StateId w2, Fragment fragment, std::size_t cap) {
  return definablePairs(left, right, fragment, cap).sameBlock(w, w2);
}

HennessyMilnerReport hennessyMilner(const Model& left, const Model& right, std::size_t cap) {
  const PairFamily family = definablePairs(left, right, Fragment{Modality::K, Modality::Bc}, cap);
  Relation eq = family.sameBlockRelation();
  CheckResult check = checkBc(eq, family);
  return {check.ok, std::move(eq), std::move(check)};
}

}  // namespace plausikit
