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

#ifndef PLAUSIKIT_ERRORS_HPP
#define PLAUSIKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace plausikit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown agent or state, malformed file, out-of-fragment formula.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  /// 1-based character offset of the offending token.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Raised when model data violates the structural axioms.
class ModelError : public InputError {
 public:
  explicit ModelError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Announcing a formula that holds nowhere would leave no states.
class EmptyAnnouncementError : public Error {
 public:
  using Error::Error;
};

/// A configurable size cap was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace plausikit

#endif  // PLAUSIKIT_ERRORS_HPP
