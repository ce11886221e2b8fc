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

#include "plausikit/errors.hpp"

namespace plausikit {

namespace {

std::string describeParseError(std::size_t position, const std::vector<std::string>& expected,
                               const std::string& found) {
  std::string msg = "syntax error at position " + std::to_string(position) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

std::string joinViolations(const std::vector<std::string>& violations) {
  std::string msg = "invalid epistemic plausibility model";
  for (const auto& v : violations) msg += "\n  " + v;
  return msg;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : InputError(describeParseError(position, expected, found)),
      position_(position),
      expected_(std::move(expected)) {}

ModelError::ModelError(std::vector<std::string> violations)
    : InputError(joinViolations(violations)), violations_(std::move(violations)) {}

ResourceError::ResourceError(const std::string& what, std::size_t cap)
    : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

}  // namespace plausikit
