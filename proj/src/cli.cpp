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

#include "plausikit/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>

#include "plausikit/bisim.hpp"
#include "plausikit/corpus.hpp"
#include "plausikit/dynamics.hpp"
#include "plausikit/errors.hpp"
#include "plausikit/generate.hpp"
#include "plausikit/model_io.hpp"
#include "plausikit/semantics.hpp"
#include "plausikit/suites.hpp"
#include "plausikit/syntax.hpp"
#include "plausikit/translate.hpp"

namespace plausikit {

Fragment reducedFragment(Fragment fragment) {
  Fragment out = fragment.staticPart();
  const bool belief = out.contains(Modality::Bc) || out.contains(Modality::Bplus) || out.contains(Modality::Gt);
  if (fragment.contains(Modality::Up) && belief) out = out.with(Modality::K);
  return out;
}

namespace {

void writeText(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

Fragment staticFragment(const std::string& csv, std::ostream& err) {
  const Fragment f = Fragment::parse(csv);
  if (f.isStatic()) return f;
  const Fragment r = reducedFragment(f);
  err << "note: dynamic operators reduce away; using fragment " << r.toString() << "\n";
  return r;
}

std::string pairText(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

struct Options {
  std::string model, left, right, state, stateRight, formula, kind, output, relation, specFile, name;
  std::string fragment = "K";
  bool trace = false, greatest = false, list = false, verify = false, verbose = false;
  std::size_t cap = kDefaultFamilyCap;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
};

int cmdCheck(const Options& o, std::ostream& out) {
  const Model m = readModel(o.model);
  const bool v = holds(m, m.state(o.state), parse(o.formula));
  out << (v ? "true" : "false") << "\n";
  return v ? kExitTrue : kExitFalse;
}

int cmdValidity(const Options& o, std::ostream& out) {
  const Model m = readModel(o.model);
  const ValidityResult r = isValidOn(m, parse(o.formula));
  if (r.valid) {
    out << "valid\n";
    return kExitTrue;
  }
  out << "invalid: fails at " << m.stateName(*r.counterexample) << "\n";
  return kExitFalse;
}

int cmdTransform(const Options& o, std::ostream& out) {
  const Model m = readModel(o.model);
  const Formula f = parse(o.formula);
  const Model result = o.kind == "announce" ? announce(m, f) : upgrade(m, f);
  writeText(o.output, serialize(result), out);
  return kExitTrue;
}

std::string positionText(const Position& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s + "]";
}

int cmdRewrite(const Options& o, std::ostream& out) {
  const Reduction r = reduceDynamic(parse(o.formula));
  out << print(r.result) << "\n";
  if (o.trace) {
    std::size_t n = 0;
    for (const auto& s : r.trace.steps)
      out << "  " << ++n << ". " << s.rule << " at " << positionText(s.position) << ": " << print(s.before)
          << "  =>  " << print(s.after) << "\n";
  }
  return kExitTrue;
}

int cmdTranslate(const Options& o, std::ostream& out) {
  const Formula f = parse(o.formula);
  out << print(o.kind == "gt" ? translateGt(f) : translateSafe(f)) << "\n";
  return kExitTrue;
}

void printRelation(const Relation& z, std::ostream& out) {
  for (const auto& [a, b] : z.namedPairs()) out << pairText(a, b) << "\n";
}

int cmdBisim(const Options& o, std::ostream& out, std::ostream& err) {
  const Model left = readModel(o.left), right = readModel(o.right);
  const Fragment fragment = staticFragment(o.fragment, err);
  if (o.greatest) {
    const Relation z = greatestBisimulation(left, right, fragment, o.cap);
    out << "greatest " << fragment.toString() << "-bisimulation: " << z.size() << (z.size() == 1 ? " pair" : " pairs")
        << "\n";
    printRelation(z, out);
    return kExitTrue;
  }
  const RelationData data = readRelationData(o.relation);
  const Relation z = Relation::fromNames(left, right, data.pairs);
  const CheckResult r = checkBisimulation(z, fragment, o.cap);
  if (r.ok) {
    out << fragment.toString() << "-bisimulation: yes\n";
    return kExitTrue;
  }
  out << fragment.toString() << "-bisimulation: no\n" << describe(z, *r.violation) << "\n";
  return kExitFalse;
}

int cmdEquiv(const Options& o, std::ostream& out, std::ostream& err) {
  const Model left = readModel(o.left), right = readModel(o.right);
  const Fragment fragment = staticFragment(o.fragment, err);
  const StateId w = left.state(o.state), w2 = right.state(o.stateRight);
  const PairFamily family = definablePairs(left, right, fragment, o.cap);
  if (family.sameBlock(w, w2)) {
    out << "equivalent\n";
    return kExitTrue;
  }
  out << "not equivalent\n"
      << "distinguished by: " << print(family.blockFormula(family.blockOfLeft(w))) << "\n";
  return kExitFalse;
}

int cmdProps(const Options& o, std::ostream& out) {
  const ModelData data = readModelData(o.model);
  const auto problems = validate(data);
  if (!problems.empty()) {
    out << "valid: no\n";
    for (const auto& p : problems) out << "  " << p << "\n";
    return kExitFalse;
  }
  const Model m = Model::fromData(data);
  out << "valid: yes\n";
  const auto u = isUniform(m);
  out << "uniform: " << (u.uniform ? "yes" : "no (" + describe(m, *u.witness) + ")") << "\n";
  const auto c = isLocallyConnected(m);
  out << "locally-connected: " << (c.connected ? "yes" : "no (" + describe(m, *c.witness) + ")") << "\n";
  out << "image-finite: " << (isImageFinite(m) ? "yes" : "no") << "\n";
  return kExitTrue;
}

int cmdGen(const Options& o, std::ostream& out) {
  GenSpec spec = genSpecFromJson(readJsonFile(o.specFile));
  if (o.seed) spec.seed = *o.seed;
  writeText(o.output, serialize(generate(spec)), out);
  return kExitTrue;
}

int cmdSuite(const Options& o, std::ostream& out) {
  if (o.list || o.name.empty()) {
    for (const auto& s : suites()) out << s.name << ": " << s.description << "\n";
    return kExitTrue;
  }
  SuiteOptions opts;
  opts.seed = o.seed ? *o.seed : suiteSeedFromEnvironment();
  opts.trials = o.trials;
  std::vector<std::string> names;
  if (o.name == "all")
    for (const auto& s : suites()) names.push_back(s.name);
  else
    names.push_back(o.name);
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport r = runSuite(n, opts);
    out << formatReport(r, o.verbose || !r.ok()) << std::flush;
    ok = ok && r.ok();
  }
  return ok ? kExitTrue : kExitFalse;
}

int cmdCorpus(const Options& o, std::ostream& out) {
  const auto entries = corpusEntries();
  if (!o.output.empty()) {
    const std::filesystem::path dir(o.output);
    std::filesystem::create_directories(dir);
    for (const auto& e : entries) {
      const std::string l = e.name + "L.json", r = e.name + "R.json";
      writeText((dir / l).string(), serialize(e.left), out);
      writeText((dir / r).string(), serialize(e.right), out);
      RelationData z{l, r, e.relation};
      writeText((dir / (e.name + "Z.json")).string(), toJson(z).dump(2) + "\n", out);
      out << "wrote " << l << ", " << r << ", " << e.name << "Z.json\n";
    }
    return kExitTrue;
  }
  if (!o.verify) {
    for (const auto& e : entries) out << e.name << ": " << e.summary << "\n";
    return kExitTrue;
  }
  std::size_t good = 0, total = 0;
  for (const auto& e : entries)
    for (const auto& v : verifyEntry(e)) {
      ++total;
      good += v.ok();
      out << (v.ok() ? "ok   " : "FAIL ") << v.entry << ": " << v.description << " (expected "
          << (v.expected ? "true" : "false") << ", got " << (v.actual ? "true" : "false") << ")\n";
    }
  out << good << "/" << total << " verdicts reproduced\n";
  return good == total ? kExitTrue : kExitFalse;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite epistemic plausibility models: evaluation, updates, reduction, bisimulation.", "plausikit"};
  app.require_subcommand(1, 1);
  Options o;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "truth of a formula at a state");
  check->add_option("model", o.model)->required();
  check->add_option("state", o.state)->required();
  check->add_option("formula", o.formula)->required();
  check->callback([&] { action = [&] { return cmdCheck(o, out); }; });

  auto* validity = app.add_subcommand("validity", "truth of a formula at every state");
  validity->add_option("model", o.model)->required();
  validity->add_option("formula", o.formula)->required();
  validity->callback([&] { action = [&] { return cmdValidity(o, out); }; });

  auto* transform = app.add_subcommand("transform", "apply an announcement or upgrade");
  transform->add_option("model", o.model)->required();
  transform->add_option("kind", o.kind)->required()->check(CLI::IsMember({"announce", "upgrade"}));
  transform->add_option("formula", o.formula)->required();
  transform->add_option("-o,--output", o.output, "output file (default stdout)");
  transform->callback([&] { action = [&] { return cmdTransform(o, out); }; });

  auto* rewrite = app.add_subcommand("rewrite", "eliminate announcement and upgrade operators");
  rewrite->add_option("formula", o.formula)->required();
  rewrite->add_flag("--trace", o.trace, "print every rewrite step");
  rewrite->callback([&] { action = [&] { return cmdRewrite(o, out); }; });

  auto* translate = app.add_subcommand("translate", "express conditional belief by other operators");
  translate->add_option("target", o.kind)->required()->check(CLI::IsMember({"gt", "safe"}));
  translate->add_option("formula", o.formula)->required();
  translate->callback([&] { action = [&] { return cmdTranslate(o, out); }; });

  auto* bisim = app.add_subcommand("bisim", "check or compute a bisimulation");
  bisim->add_option("left", o.left)->required();
  bisim->add_option("right", o.right)->required();
  bisim->add_option("--fragment", o.fragment, "operators, e.g. K,Bc")->capture_default_str();
  auto* rel = bisim->add_option("--relation", o.relation, "relation file to check");
  auto* great = bisim->add_flag("--greatest", o.greatest, "print the largest bisimulation");
  rel->excludes(great);
  bisim->add_option("--cap", o.cap, "family size cap")->capture_default_str();
  bisim->callback([&] {
    if (o.relation.empty() && !o.greatest) throw CLI::RequiredError("--relation or --greatest");
    action = [&] { return cmdBisim(o, out, err); };
  });

  auto* equiv = app.add_subcommand("equiv", "modal equivalence of two pointed models");
  equiv->add_option("left", o.left)->required();
  equiv->add_option("stateL", o.state)->required();
  equiv->add_option("right", o.right)->required();
  equiv->add_option("stateR", o.stateRight)->required();
  equiv->add_option("--fragment", o.fragment, "operators, e.g. K,Bc")->capture_default_str();
  equiv->add_option("--cap", o.cap, "family size cap")->capture_default_str();
  equiv->callback([&] { action = [&] { return cmdEquiv(o, out, err); }; });

  auto* props = app.add_subcommand("props", "validity and structural properties of a model");
  props->add_option("model", o.model)->required();
  props->callback([&] { action = [&] { return cmdProps(o, out); }; });

  auto* gen = app.add_subcommand("gen", "generate a random model from a spec file");
  gen->add_option("specfile", o.specFile)->required();
  gen->add_option("-o,--output", o.output, "output file (default stdout)");
  gen->add_option("--seed", o.seed, "override the spec seed");
  gen->callback([&] { action = [&] { return cmdGen(o, out); }; });

  auto* suite = app.add_subcommand("suite", "run a property suite (\"all\" runs every suite)");
  suite->add_option("name", o.name);
  suite->add_flag("--list", o.list, "list suites");
  suite->add_option("--trials", o.trials, "override the trial count");
  suite->add_option("--seed", o.seed, "base seed (default PLAUSIKIT_SEED or built in)");
  suite->add_flag("-v,--verbose", o.verbose, "print failure details even on success");
  suite->callback([&] { action = [&] { return cmdSuite(o, out); }; });

  auto* corpus = app.add_subcommand("corpus", "the stored witness models");
  auto* list = corpus->add_flag("--list", o.list, "list entries");
  auto* verify = corpus->add_flag("--verify", o.verify, "re-derive every stored verdict");
  auto* exportDir = corpus->add_option("--export", o.output, "write every entry's models and relation into DIR");
  list->excludes(verify);
  exportDir->excludes(list)->excludes(verify);
  corpus->callback([&] { action = [&] { return cmdCorpus(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInput;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace plausikit
