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

// Direct, unmemoized evaluator over raw model data. Shares nothing with the
// library except the formula tree and the ModelData struct.

#ifndef PLAUSIKIT_TESTS_REFERENCE_HPP
#define PLAUSIKIT_TESTS_REFERENCE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plausikit/formula.hpp"
#include "plausikit/model.hpp"

namespace oracle {

using plausikit::Formula;
using plausikit::ModelData;
using plausikit::Op;

using Pairs = std::set<std::pair<std::string, std::string>>;

struct Ref {
  std::vector<std::string> states;
  std::map<std::string, Pairs> epist;
  std::map<std::string, std::map<std::string, Pairs>> plaus;
  std::map<std::string, std::set<std::string>> val;

  explicit Ref(const ModelData& d) : states(d.states) {
    for (const auto& [a, ps] : d.epist) epist[a] = Pairs(ps.begin(), ps.end());
    for (const auto& [a, rows] : d.plaus)
      for (const auto& [w, ps] : rows) plaus[a][w] = Pairs(ps.begin(), ps.end());
    for (const auto& [p, ss] : d.valuation) val[p] = std::set<std::string>(ss.begin(), ss.end());
  }

  bool sim(const std::string& a, const std::string& x, const std::string& y) const {
    auto it = epist.find(a);
    return it != epist.end() && it->second.count({x, y});
  }
  bool le(const std::string& a, const std::string& w, const std::string& x, const std::string& y) const {
    auto it = plaus.find(a);
    if (it == plaus.end()) return false;
    auto jt = it->second.find(w);
    return jt != it->second.end() && jt->second.count({x, y});
  }
  bool lt(const std::string& a, const std::string& w, const std::string& x, const std::string& y) const {
    return le(a, w, x, y) && !le(a, w, y, x);
  }
};

bool eval(const Ref& m, const std::string& w, const Formula& f);

inline std::vector<std::string> extension(const Ref& m, const Formula& f) {
  std::vector<std::string> out;
  for (const auto& s : m.states)
    if (eval(m, s, f)) out.push_back(s);
  return out;
}

inline Ref refAnnounce(const Ref& m, const Formula& f) {
  const auto keep = extension(m, f);
  const std::set<std::string> k(keep.begin(), keep.end());
  Ref out = m;
  out.states = keep;
  for (auto& [a, ps] : out.epist)
    std::erase_if(ps, [&](const auto& p) { return !k.count(p.first) || !k.count(p.second); });
  for (auto& [a, rows] : out.plaus) {
    std::erase_if(rows, [&](const auto& r) { return !k.count(r.first); });
    for (auto& [w, ps] : rows)
      std::erase_if(ps, [&](const auto& p) { return !k.count(p.first) || !k.count(p.second); });
  }
  for (auto& [p, ss] : out.val) std::erase_if(ss, [&](const auto& s) { return !k.count(s); });
  return out;
}

inline Ref refUpgrade(const Ref& m, const Formula& f) {
  const auto yes = extension(m, f);
  const std::set<std::string> in(yes.begin(), yes.end());
  Ref out = m;
  for (auto& [a, rows] : out.plaus)
    for (auto& [w, ps] : rows) {
      Pairs next;
      for (const auto& [x, y] : ps)
        if (in.count(x) == in.count(y)) next.insert({x, y});
      for (const auto& x : m.states)
        for (const auto& y : m.states)
          if (in.count(x) && !in.count(y)) next.insert({x, y});
      ps = next;
    }
  return out;
}

inline bool eval(const Ref& m, const std::string& w, const Formula& f) {
  const std::string& i = f.label();
  auto cls = [&] {
    std::vector<std::string> out;
    for (const auto& v : m.states)
      if (m.sim(i, w, v)) out.push_back(v);
    return out;
  };
  switch (f.op()) {
    case Op::Atom: {
      auto it = m.val.find(f.label());
      return it != m.val.end() && it->second.count(w);
    }
    case Op::Top:
      return true;
    case Op::Bot:
      return false;
    case Op::Not:
      return !eval(m, w, f.child(0));
    case Op::And:
      return eval(m, w, f.child(0)) && eval(m, w, f.child(1));
    case Op::Or:
      return eval(m, w, f.child(0)) || eval(m, w, f.child(1));
    case Op::Implies:
      return !eval(m, w, f.child(0)) || eval(m, w, f.child(1));
    case Op::Know:
      for (const auto& v : cls())
        if (!eval(m, v, f.child(0))) return false;
      return true;
    case Op::CondBelief: {
      std::vector<std::string> x;
      for (const auto& v : cls())
        if (eval(m, v, f.child(0))) x.push_back(v);
      for (const auto& v : x) {
        bool minimal = true;
        for (const auto& y : x)
          if (m.le(i, w, y, v) && !m.le(i, w, v, y)) minimal = false;
        if (minimal && !eval(m, v, f.child(1))) return false;
      }
      return true;
    }
    case Op::SafeBelief:
      for (const auto& v : cls())
        if (m.le(i, w, v, w) && !eval(m, v, f.child(0))) return false;
      return true;
    case Op::GtBox:
      for (const auto& v : cls())
        if (m.lt(i, w, v, w) && !eval(m, v, f.child(0))) return false;
      return true;
    case Op::Announce:
      return !eval(m, w, f.child(0)) || eval(refAnnounce(m, f.child(0)), w, f.child(1));
    case Op::Upgrade:
      return eval(refUpgrade(m, f.child(0)), w, f.child(1));
  }
  return false;
}

inline bool eval(const ModelData& d, const std::string& w, const Formula& f) { return eval(Ref(d), w, f); }

}  // namespace oracle

#endif  // PLAUSIKIT_TESTS_REFERENCE_HPP
