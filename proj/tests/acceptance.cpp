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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/pair_closure.hpp"
#include "plausikit/bisim.hpp"
#include "plausikit/cli.hpp"
#include "plausikit/corpus.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/suites.hpp"

using namespace plausikit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [" << why << "]";
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, Outcome& o) {
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " --"
            << o.detail.str() << std::endl;
}

// Runs each suite with its default budget and requires at least `minTrials`.
double runSuites(Outcome& o, const std::vector<std::string>& names, std::size_t minTrials, std::uint64_t seed) {
  double seconds = 0;
  for (const auto& name : names) {
    SuiteOptions opt;
    opt.seed = seed;
    const SuiteReport r = runSuite(name, opt);
    seconds += r.seconds;
    o.detail << " " << name << "=" << r.trials << "/" << r.failures.size();
    o.require(r.trials >= minTrials, name + " ran fewer than " + std::to_string(minTrials) + " trials");
    if (!r.ok()) {
      o.require(false, name + " failed");
      std::cerr << formatReport(r, true);
    }
  }
  return seconds;
}

void criterionSuites(std::uint64_t seed) {
  Outcome o;
  const double s = runSuites(o,
                             {"thm9-K", "thm9-Bplus", "thm9-Bc", "thm11-KBc", "thm11-KBplus", "thm24-1", "thm24-2",
                              "thm24-3", "thm28-1"},
                             500, seed);
  char buf[64];
  std::snprintf(buf, sizeof buf, " total %.1f s", s);
  o.detail << buf;
  o.require(s <= 300, "over the five minute budget");
  report(1, "bisimulation invariance suites (trials/failures)", o);
}

void criterionHennessyMilner(std::uint64_t seed) {
  Outcome o;
  runSuites(o, {"thm13"}, 200, seed);
  report(2, "modal equivalence is a {K, Bc}-bisimulation", o);
}

void criterionReduction(std::uint64_t seed) {
  Outcome o;
  runSuites(o, {"reduce"}, 500, seed);
  runSuites(o, {"fact5", "fact30"}, 100, seed);
  report(3, "reduction soundness and reduction axiom validity", o);
}

void criterionRobustness(std::uint64_t seed) {
  Outcome o;
  runSuites(o, {"thm17", "thm18", "thm26"}, 500, seed);
  report(4, "introspection and preservation of uniformity and local connectedness", o);
}

void criterionTranslation(std::uint64_t seed) {
  Outcome o;
  // Model counts by hand: sum over partitions of 1..3 states of the class
  // preorder choices, times two valuations per state.
  const std::size_t expectedUniform = 1 * 2 + 5 * 4 + 42 * 8;
  const std::size_t expectedConnected = 1 * 2 + 4 * 4 + 23 * 8;
  for (const auto& [name, expected] :
       std::vector<std::pair<std::string, std::size_t>>{{"thm22-exhaustive", expectedUniform},
                                                        {"thm27-exhaustive", expectedConnected}}) {
    SuiteOptions opt;
    opt.seed = seed;
    const SuiteReport r = runSuite(name, opt);
    o.detail << " " << name << "=" << r.trials << " models/" << r.failures.size();
    o.require(r.trials == expected, name + " enumerated " + std::to_string(r.trials) + " models, expected " +
                                        std::to_string(expected));
    if (!r.ok()) {
      o.require(false, name + " failed");
      std::cerr << formatReport(r, true);
    }
  }
  std::set<std::string> guarded;
  for (const auto& c : translationCounterexamples()) {
    const Model m = Model::fromData(c.model);
    const bool uniform = isUniform(m).uniform, connected = isLocallyConnected(m).connected;
    const bool shapeOk = c.missing == "uniform" ? !uniform : (uniform && !connected);
    o.require(shapeOk, c.name + " does not have the advertised shape");
    o.require(!holds(m, c.state, c.biconditional), c.name + " no longer falsifies its biconditional");
    if (shapeOk) guarded.insert(c.missing);
  }
  o.require(guarded.count("uniform") && guarded.count("locally-connected"), "missing a stored counterexample");
  o.detail << " counterexamples=" << guarded.size();
  report(5, "exhaustive translation check with precondition counterexamples", o);
}

void criterionFamily(std::uint64_t seed) {
  Outcome o;
  Rng rng(seed);
  const std::vector<Fragment> fragments = {
      Fragment{Modality::K},
      Fragment{Modality::Bc},
      Fragment{Modality::Bplus},
      Fragment{Modality::Gt},
      Fragment{Modality::K, Modality::Bc},
      Fragment{Modality::K, Modality::Bplus},
      Fragment{Modality::K, Modality::Gt},
      Fragment{Modality::Bplus, Modality::Bc},
      Fragment{Modality::K, Modality::Bplus, Modality::Bc},
      Fragment{Modality::K, Modality::Bplus, Modality::Gt, Modality::Bc},
  };
  const std::size_t pairs = 120;
  std::size_t discrepancies = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    GenSpec spec;
    spec.maxStates = 3;
    spec.atoms = 1 + t % 2;
    spec.agents = 1 + (t / 2) % 2;
    const Model a = generate(spec, rng), b = generate(spec, rng);
    const Fragment f = fragments[t % fragments.size()];
    std::set<oracle::Masks> got, want;
    for (const auto& [x, y] : definablePairs(a, b, f).members()) got.insert({oracle::maskOf(x), oracle::maskOf(y)});
    for (const auto& [k, formula] : oracle::closeByEnumeration(a, b, f).representative) want.insert(k);
    if (got != want) ++discrepancies;
  }
  o.detail << " " << pairs << " pairs, " << discrepancies << " discrepancies";
  o.require(discrepancies == 0, "family differs from the enumerated closure");
  report(6, "definable pair family equals the enumerated closure", o);
}

void criterionCorpus() {
  Outcome o;
  std::ostringstream out, err;
  const int code = runCli({"corpus", "--verify"}, out, err);
  o.require(code == kExitTrue, "corpus --verify exited with " + std::to_string(code));
  std::istringstream lines(out.str());
  std::string line, last;
  std::size_t ok = 0, total = 0;
  std::set<std::string> seen;
  while (std::getline(lines, line)) {
    last = line;
    if (line.find(" verdicts reproduced") != std::string::npos) continue;
    ++total;
    if (line.starts_with("ok   ")) ++ok;
    seen.insert(line.substr(5, line.find(" (expected") - 5));
  }
  o.require(total > 0 && ok == total, "not every verdict reproduced");
  o.require(last == std::to_string(total) + "/" + std::to_string(total) + " verdicts reproduced", "bad summary line");
  for (const char* key : {
           "thm15: Z is a {K, Bc}-bisimulation",
           "thm15: left, w |= Bplus[a] p",
           "thm15: right, w1 |/= Bplus[a] p",
           "thm21: w and w1 are equivalent for {K, Bc, Bplus}",
           "thm21: left, w |= GtDia[a] true",
           "thm21: right, w1 |/= GtDia[a] true",
           "thm14: Z is a {K, Bplus}-bisimulation",
           "thm14: left, w |= B[a | p] q",
           "thm14: right, w1 |/= B[a | p] q",
       })
    o.require(seen.count(key), std::string("missing verdict '") + key + "'");
  o.detail << " " << ok << "/" << total << " verdicts";
  report(7, "corpus verdicts reproduced", o);
}

void criterionFutures(std::uint64_t seed) {
  Outcome o;
  runSuites(o, {"thm29"}, 200, seed);
  report(8, "bisimilar points keep equivalent futures", o);
}

}  // namespace

int main() {
  try {
    const std::uint64_t seed = suiteSeedFromEnvironment();
    std::cout << "seed " << seed << std::endl;
    criterionSuites(seed);
    criterionHennessyMilner(seed);
    criterionReduction(seed);
    criterionRobustness(seed);
    criterionTranslation(seed);
    criterionFamily(seed);
    criterionCorpus();
    criterionFutures(seed);
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance run aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
