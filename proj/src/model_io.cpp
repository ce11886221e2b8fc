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

#include "plausikit/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "plausikit/errors.hpp"

namespace plausikit {

using nlohmann::json;

namespace {

std::vector<std::string> stringArray(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<StatePair> pairArray(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of pairs");
  std::vector<StatePair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InputError(where + ": every pair must be a 2-element array of state names");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("model document lacks field \"") + key + "\"");
  return *it;
}

json pairsJson(std::vector<StatePair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  json arr = json::array();
  for (const auto& [x, y] : pairs) arr.push_back(json::array({x, y}));
  return arr;
}

json sortedStrings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return json(v);
}

}  // namespace

ModelData modelDataFromJson(const json& doc) {
  if (!doc.is_object()) throw InputError("model document must be a JSON object");
  ModelData data;
  data.states = stringArray(field(doc, "states"), "states");
  data.agents = stringArray(field(doc, "agents"), "agents");

  const json& epist = field(doc, "epist");
  if (!epist.is_object()) throw InputError("epist: expected an object keyed by agent");
  for (const auto& [a, pairs] : epist.items()) data.epist[a] = pairArray(pairs, "epist." + a);

  const json& plaus = field(doc, "plaus");
  if (!plaus.is_object()) throw InputError("plaus: expected an object keyed by agent");
  for (const auto& [a, perState] : plaus.items()) {
    if (!perState.is_object()) throw InputError("plaus." + a + ": expected an object keyed by state");
    for (const auto& [w, pairs] : perState.items())
      data.plaus[a][w] = pairArray(pairs, "plaus." + a + "." + w);
  }

  if (auto it = doc.find("valuation"); it != doc.end()) {
    if (!it->is_object()) throw InputError("valuation: expected an object keyed by atom");
    for (const auto& [p, ext] : it->items()) data.valuation[p] = stringArray(ext, "valuation." + p);
  }
  return data;
}

json toJson(const ModelData& data) {
  json doc = json::object();
  doc["states"] = sortedStrings(data.states);
  doc["agents"] = sortedStrings(data.agents);
  json epist = json::object();
  for (const auto& [a, pairs] : data.epist) epist[a] = pairsJson(pairs);
  doc["epist"] = epist;
  json plaus = json::object();
  for (const auto& [a, perState] : data.plaus) {
    json inner = json::object();
    for (const auto& [w, pairs] : perState) inner[w] = pairsJson(pairs);
    plaus[a] = inner;
  }
  doc["plaus"] = plaus;
  json valuation = json::object();
  for (const auto& [p, ext] : data.valuation) valuation[p] = sortedStrings(ext);
  doc["valuation"] = valuation;
  return doc;
}

std::string serialize(const ModelData& data) { return toJson(data).dump(2) + "\n"; }

std::string serialize(const Model& m) { return serialize(m.toData()); }

json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ModelData readModelData(const std::filesystem::path& path) {
  return modelDataFromJson(readJsonFile(path));
}

Model readModel(const std::filesystem::path& path) { return Model::fromData(readModelData(path)); }

void writeModel(const std::filesystem::path& path, const Model& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << serialize(m);
}

RelationData relationDataFromJson(const json& doc) {
  if (!doc.is_object()) throw InputError("relation document must be a JSON object");
  RelationData data;
  auto pairs = doc.find("pairs");
  if (pairs == doc.end()) throw InputError("relation document lacks field \"pairs\"");
  data.pairs = pairArray(*pairs, "pairs");
  for (const char* side : {"left", "right"}) {
    auto it = doc.find(side);
    if (it == doc.end()) continue;
    if (!it->is_string()) throw InputError(std::string(side) + ": expected a model file reference");
    (std::string(side) == "left" ? data.left : data.right) = it->get<std::string>();
  }
  return data;
}

json toJson(const RelationData& data) {
  json doc = json::object();
  if (data.left) doc["left"] = *data.left;
  if (data.right) doc["right"] = *data.right;
  doc["pairs"] = pairsJson(data.pairs);
  return doc;
}

RelationData readRelationData(const std::filesystem::path& path) {
  return relationDataFromJson(readJsonFile(path));
}

}  // namespace plausikit
