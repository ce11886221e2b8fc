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

#ifndef PLAUSIKIT_SUITES_HPP
#define PLAUSIKIT_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plausikit {

inline constexpr std::uint64_t kDefaultSuiteSeed = 20260301;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSuiteSeed;
  std::optional<std::size_t> trials;  // overrides the suite default
};

/// Reproduction data for one failed trial.
struct SuiteFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string message;
  std::vector<std::string> models;  // serialized model files
  std::vector<std::string> formulas;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::uint64_t checks = 0;  // individual comparisons or validity checks
  std::vector<SuiteFailure> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::size_t defaultTrials;
};

const std::vector<SuiteInfo>& suites();

/// Runs a named suite; throws InputError for an unknown name.
SuiteReport runSuite(const std::string& name, const SuiteOptions& options = {});

/// PLAUSIKIT_SEED when set to a number, else kDefaultSuiteSeed.
std::uint64_t suiteSeedFromEnvironment();

/// Seed of trial `index` in a suite run with `seed`.
std::uint64_t trialSeed(std::uint64_t seed, std::size_t index);

/// One summary line, plus reproduction data for each failure when verbose.
std::string formatReport(const SuiteReport& report, bool verbose);

}  // namespace plausikit

#endif  // PLAUSIKIT_SUITES_HPP
