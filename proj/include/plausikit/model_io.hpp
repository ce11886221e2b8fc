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

#ifndef PLAUSIKIT_MODEL_IO_HPP
#define PLAUSIKIT_MODEL_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "plausikit/model.hpp"

namespace plausikit {

/// Reads the JSON model document. Schema problems (wrong types, pairs that are
/// not 2-element string arrays) raise InputError; axiom violations do not,
/// they are left to validate().
ModelData modelDataFromJson(const nlohmann::json& doc);

/// Canonical document: keys and array elements in lexicographic order.
nlohmann::json toJson(const ModelData& data);

/// Canonical text (two-space indent, trailing newline); stable byte-for-byte.
std::string serialize(const Model& m);
std::string serialize(const ModelData& data);

ModelData readModelData(const std::filesystem::path& path);
Model readModel(const std::filesystem::path& path);
void writeModel(const std::filesystem::path& path, const Model& m);

nlohmann::json readJsonFile(const std::filesystem::path& path);

/// Relation document: {"left": ref, "right": ref, "pairs": [[s, s'], ...]}.
/// The model references are optional and kept verbatim.
struct RelationData {
  std::optional<std::string> left;
  std::optional<std::string> right;
  std::vector<StatePair> pairs;
};

RelationData relationDataFromJson(const nlohmann::json& doc);
nlohmann::json toJson(const RelationData& data);
RelationData readRelationData(const std::filesystem::path& path);

}  // namespace plausikit

#endif  // PLAUSIKIT_MODEL_IO_HPP
