// Copyright 2026 The Choquet Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// `choquet`: one binary for evaluation, index reports, structural checks,
// lattice extraction, learning, synthesis, axiom scans, and experiments.
//
// Exit codes: 0 success/OK, 1 usage or input error, 2 infeasible model or
// violations found, 3 internal consistency failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choquet/axioms.hpp"
#include "choquet/capacity.hpp"
#include "choquet/errors.hpp"
#include "choquet/integral.hpp"
#include "choquet/io.hpp"
#include "choquet/joint.hpp"
#include "choquet/lattice.hpp"
#include "choquet/learn.hpp"
#include "choquet/values.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolations = 2;
constexpr int kExitInternal = 3;

struct GlobalOptions {
  unsigned long seed = 0;
  double tolerance = 1e-6;
  std::string format = "text";

  bool machine() const { return format == "machine"; }
};

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", x);
  return buffer;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const std::string item = text.substr(begin, end - begin);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": \"" + item + "\" is not a number");
    }
    begin = end + 1;
  }
  return values;
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& flag) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument(flag + ": expected two criteria as i,j");
  }
  try {
    std::size_t used = 0;
    const int i = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const int j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {i, j};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(flag + ": expected two criteria as i,j");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(flag + ": criterion index out of range");
  }
}

// `additive`, `full`, or `groups=0,1;2` (blocks split by ';', members by ',').
void parse_synth_kind(const std::string& text, choquet::SynthSpec& spec) {
  if (text == "additive") {
    spec.kind = choquet::SynthKind::Additive;
    return;
  }
  if (text == "full") {
    spec.kind = choquet::SynthKind::FullInteraction;
    return;
  }
  if (text.rfind("groups=", 0) == 0) {
    spec.kind = choquet::SynthKind::Groups;
    spec.groups.clear();
    const std::string body = text.substr(7);
    std::size_t begin = 0;
    while (begin <= body.size()) {
      const std::size_t end = std::min(body.find(';', begin), body.size());
      choquet::mask_t block = 0;
      for (const double member :
           parse_real_list(body.substr(begin, end - begin), "--spec groups")) {
        const int i = static_cast<int>(member);
        if (i < 0 || i != member || i >= choquet::kMaxCriteria) {
          throw std::invalid_argument("--spec: group member must be a criterion index");
        }
        block |= choquet::bit(i);
      }
      spec.groups.push_back(block);
      begin = end + 1;
    }
    return;
  }
  throw std::invalid_argument("--spec: expected additive, full, or groups=...");
}

choquet::Capacity load_capacity(const std::string& path) {
  return choquet::parse_capacity(choquet::read_text_file(path), path);
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.
// ---------------------------------------------------------------------------

int run_eval(const GlobalOptions& global, const std::string& capacity_path,
             const std::string& profile_text) {
  const choquet::Capacity capacity = load_capacity(capacity_path);
  choquet::require_valid(capacity);
  const std::vector<double> profile = parse_real_list(profile_text, "--profile");
  const double score = choquet::choquet(capacity, profile);
  if (global.machine()) {
    std::cout << choquet::evaluation_record(score) << "\n";
  } else {
    std::cout << "score " << fmt(score) << "\n";
  }
  return kExitOk;
}

int run_indices(const GlobalOptions& global, const std::string& capacity_path) {
  const choquet::Capacity capacity = load_capacity(capacity_path);
  const choquet::IndexReport report = choquet::indices(capacity);
  if (global.machine()) {
    std::cout << choquet::index_record(report) << "\n";
    return kExitOk;
  }
  std::cout << "shapley\n";
  for (std::size_t i = 0; i < report.shapley.size(); ++i) {
    std::cout << "  x" << i << " " << fmt(report.shapley[i]) << "\n";
  }
  std::cout << "interactions\n";
  for (const auto& pair : report.pairwise) {
    std::cout << "  I(x" << pair.i << ",x" << pair.j << ") " << fmt(pair.value) << "\n";
  }
  return kExitOk;
}

int run_check(const GlobalOptions& global, const std::string& capacity_path) {
  const choquet::Capacity capacity = load_capacity(capacity_path);
  const std::vector<choquet::CapacityViolation> defects = choquet::validate(capacity);
  const bool convex = defects.empty() ? choquet::is_convex(capacity) : false;
  if (global.machine()) {
    std::cout << choquet::check_record(defects, convex) << "\n";
  } else if (defects.empty()) {
    std::cout << "OK\nconvex " << (convex ? "yes" : "no") << "\n";
  } else {
    for (const choquet::CapacityViolation& defect : defects) {
      std::cout << defect.describe() << "\n";
    }
  }
  return defects.empty() ? kExitOk : kExitViolations;
}

int run_lattice(const GlobalOptions& global, const std::string& capacity_path) {
  const choquet::Capacity capacity = load_capacity(capacity_path);
  const choquet::LatticePolynomial dnf = choquet::extract_dnf(capacity);
  const choquet::LatticePolynomial cnf = choquet::dualize(dnf);
  if (global.machine()) {
    std::cout << choquet::lattice_record(dnf, cnf) << "\n";
  } else {
    std::cout << "dnf " << choquet::render_dnf(dnf) << "\n"
              << "cnf " << choquet::render_cnf(cnf) << "\n";
  }
  return kExitOk;
}

int run_learn(const GlobalOptions& global, const std::string& data_path, int k_additive,
              const std::string& objective, const std::string& out_path) {
  const choquet::NumericDataset dataset =
      choquet::parse_dataset(choquet::read_text_file(data_path), data_path);
  choquet::IdentificationConfig config;
  config.k_additive = k_additive;
  config.objective = objective == "feasibility" ? choquet::IdentificationObjective::Feasibility
                                                : choquet::IdentificationObjective::MinTotalSlack;
  const choquet::IdentificationResult result = choquet::identify(dataset, config);
  if (!out_path.empty()) {
    choquet::write_text_file(out_path, choquet::capacity_to_text(result.capacity) + "\n");
  }
  const bool exact = result.status == choquet::IdentificationStatus::FeasibleExact;
  if (global.machine()) {
    std::cout << choquet::identification_record(result) << "\n";
  } else {
    std::cout << (exact ? "exact fit" : "infeasible, least-slack repair") << "\n"
              << "total slack " << fmt(result.total_slack) << "\n";
    for (const choquet::StatementFit& fit : result.fits) {
      if (!fit.satisfied) std::cout << "  unmet: " << fit.description << "\n";
    }
  }
  return exact ? kExitOk : kExitViolations;
}

int run_learn_joint(const GlobalOptions& global, const std::string& data_path, int restarts,
                    std::optional<unsigned long> seed, const std::string& out_capacity,
                    const std::string& out_values) {
  const choquet::CategoricalDataset dataset =
      choquet::parse_categorical(choquet::read_text_file(data_path), data_path);
  choquet::JointLearnOptions options;
  options.restarts = restarts;
  options.seed = seed.value_or(global.seed);
  const choquet::JointLearnResult result = choquet::learn_joint(dataset, options);
  if (!out_capacity.empty()) {
    choquet::write_text_file(out_capacity,
                             choquet::capacity_to_text(result.model.capacity) + "\n");
  }
  if (!out_values.empty()) {
    choquet::LabeledValues labeled{dataset.level_labels, result.model.values};
    choquet::write_text_file(out_values, choquet::values_to_text(labeled) + "\n");
  }
  if (global.machine()) {
    std::cout << choquet::joint_record(result, dataset.level_labels) << "\n";
  } else {
    std::cout << "violations " << result.violations << "\n"
              << "total slack " << fmt(result.total_slack) << "\n"
              << "best restart " << result.best_restart << "\n";
  }
  return result.violations == 0 ? kExitOk : kExitViolations;
}

int run_synth(const GlobalOptions& global, int n, int levels, const std::string& kind,
              std::optional<unsigned long> seed, const std::string& out_path) {
  choquet::SynthSpec spec;
  spec.n = n;
  spec.levels = levels;
  spec.seed = seed.value_or(global.seed);
  parse_synth_kind(kind, spec);
  const choquet::GroundTruthModel model = choquet::synth_model(spec);
  const std::string text = choquet::model_to_text(model);
  choquet::write_text_file(out_path, text + "\n");
  if (global.machine()) {
    std::cout << text << "\n";
  } else {
    std::cout << "model with " << spec.n << " criteria, " << spec.levels
              << " levels written to " << out_path << "\n";
  }
  return kExitOk;
}

int run_identifiability(const GlobalOptions& global, int n, int levels, const std::string& kind,
                        std::optional<unsigned long> seed, int pairs,
                        const std::string& report_path) {
  choquet::SynthSpec spec;
  spec.n = n;
  spec.levels = levels;
  spec.seed = seed.value_or(global.seed);
  parse_synth_kind(kind, spec);
  choquet::SampleSpec sample;
  sample.seed = spec.seed;
  if (pairs > 0) {
    sample.mode = choquet::SampleSpec::Mode::RandomPairs;
    sample.count = pairs;
  }
  const choquet::IdentifiabilityReport report =
      choquet::identifiability_experiment(spec, sample);
  const std::string record = choquet::identifiability_record(report);
  if (!report_path.empty()) choquet::write_text_file(report_path, record + "\n");
  const bool exact =
      report.identification.status == choquet::IdentificationStatus::FeasibleExact;
  if (global.machine()) {
    std::cout << record << "\n";
  } else {
    std::cout << "statements " << report.statements << "\n"
              << "identification " << (exact ? "exact" : "infeasible") << "\n"
              << "max pair interval width " << fmt(report.max_pair_width) << "\n"
              << "max cross-group interaction " << fmt(report.max_cross_group_interaction)
              << "\n";
  }
  return exact ? kExitOk : kExitViolations;
}

int run_check_axiom(const GlobalOptions& global, const std::string& model_path,
                    const std::string& values_path, const std::string& grid_path,
                    const std::string& axiom, const std::string& pair_text) {
  const choquet::Capacity capacity = load_capacity(model_path);
  if (values_path.empty() == grid_path.empty()) {
    throw std::invalid_argument("check-axiom: give exactly one of --values or --grid");
  }
  choquet::ValueFunctionSet values;
  if (!values_path.empty()) {
    values = choquet::parse_values(choquet::read_text_file(values_path), values_path).values;
  } else {
    values = choquet::parse_grid(choquet::read_text_file(grid_path), grid_path);
  }
  const choquet::FiniteRelation relation = choquet::induce_relation(capacity, values);

  std::optional<std::pair<int, int>> pair;
  if (!pair_text.empty()) pair = parse_pair(pair_text, "--pair");

  choquet::ScanReport report;
  if (axiom == "max" || axiom == "min" || axiom == "second-highest") {
    const choquet::OrdinalAxiom kind = axiom == "max"   ? choquet::OrdinalAxiom::Max
                                       : axiom == "min" ? choquet::OrdinalAxiom::Min
                                                        : choquet::OrdinalAxiom::SecondHighest;
    report = choquet::check_ordinal_axiom(relation, kind);
  } else if (axiom == "lattice") {
    const choquet::LatticePolynomial dnf = choquet::extract_dnf(capacity);
    const choquet::LatticePolynomial cnf = choquet::dualize(dnf);
    report = choquet::check_lattice_axiom(relation, cnf.terms, dnf.terms);
  } else if (axiom == "convexity") {
    const int i = pair ? pair->first : -1;
    const int j = pair ? pair->second : -1;
    report = choquet::check_convexity_axiom(relation, values, i, j);
  } else if (axiom == "triple-cancellation") {
    if (!pair) throw std::invalid_argument("check-axiom: --axiom triple-cancellation needs --pair");
    report = choquet::triple_cancellation_violations(relation, pair->first, pair->second);
  } else {
    throw std::invalid_argument("--axiom: expected max, min, second-highest, lattice, "
                                "convexity, or triple-cancellation");
  }

  if (global.machine()) {
    std::cout << choquet::scan_record(axiom, report) << "\n";
  } else if (report.holds()) {
    std::cout << "OK\n";
  } else {
    for (const choquet::ViolationWitness& witness : report.witnesses) {
      std::cout << witness.detail << "\n";
    }
  }
  return report.holds() ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Choquet capacity toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for randomized subcommands");
  app.add_option("--tolerance", global.tolerance, "Numeric tolerance for reports");
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string capacity_path;
  std::string profile_text;
  auto* eval = app.add_subcommand("eval", "Evaluate the integral on a profile");
  eval->fallthrough();
  eval->add_option("--capacity", capacity_path, "Capacity file")->required();
  eval->add_option("--profile", profile_text, "Comma-separated profile values")->required();

  auto* indices = app.add_subcommand("indices", "Importance and interaction indices");
  indices->fallthrough();
  indices->add_option("--capacity", capacity_path, "Capacity file")->required();

  auto* check = app.add_subcommand("check", "Validate a capacity and test convexity");
  check->fallthrough();
  check->add_option("--capacity", capacity_path, "Capacity file")->required();

  auto* lattice = app.add_subcommand("lattice", "Extract the lattice polynomial of a 0-1 capacity");
  lattice->fallthrough();
  lattice->add_option("--capacity", capacity_path, "Capacity file")->required();

  std::string data_path;
  std::string out_path;
  int k_additive = 0;
  std::string objective = "min-slack";
  auto* learn = app.add_subcommand("learn", "Identify a capacity from preference statements");
  learn->fallthrough();
  learn->add_option("--data", data_path, "Preference dataset file")->required();
  learn->add_option("--k-additive", k_additive, "Limit interaction coefficients to this order");
  learn->add_option("--objective", objective, "Identification objective")
      ->check(CLI::IsMember({"feasibility", "min-slack"}));
  learn->add_option("--out", out_path, "Write the learned capacity here");

  int restarts = 10;
  std::optional<unsigned long> seed_flag;
  std::string out_capacity;
  std::string out_values;
  auto* joint = app.add_subcommand("learn-joint",
                                   "Learn capacity and value functions from ordinal data");
  joint->fallthrough();
  joint->add_option("--data", data_path, "Categorical dataset file")->required();
  joint->add_option("--restarts", restarts, "Number of seeded restarts");
  joint->add_option("--seed", seed_flag, "Run seed");
  joint->add_option("--out-capacity", out_capacity, "Write the learned capacity here");
  joint->add_option("--out-values", out_values, "Write the learned value functions here");

  int synth_n = 3;
  int synth_levels = 4;
  std::string synth_kind = "full";
  auto* synth = app.add_subcommand("synth", "Generate a ground-truth model");
  synth->fallthrough();
  synth->add_option("--n", synth_n, "Number of criteria");
  synth->add_option("--levels", synth_levels, "Levels per criterion");
  synth->add_option("--spec", synth_kind, "additive | full | groups=0,1;2");
  synth->add_option("--seed", seed_flag, "Model seed");
  synth->add_option("--out", out_path, "Write the model here")->required();

  auto* experiment = app.add_subcommand("experiment", "Run a study pipeline");
  experiment->require_subcommand(1);
  std::string report_path;
  int pairs = 0;
  auto* ident = experiment->add_subcommand(
      "identifiability", "Synthesize, sample, identify, and probe coefficient bounds");
  ident->fallthrough();
  ident->add_option("--n", synth_n, "Number of criteria");
  ident->add_option("--levels", synth_levels, "Levels per criterion");
  ident->add_option("--spec", synth_kind, "additive | full | groups=0,1;2");
  ident->add_option("--seed", seed_flag, "Experiment seed");
  ident->add_option("--pairs", pairs, "Sample this many random tuples (0 = full grid)");
  ident->add_option("--report", report_path, "Write the report record here");

  std::string values_path;
  std::string grid_path;
  std::string axiom;
  std::string pair_text;
  auto* check_axiom = app.add_subcommand("check-axiom", "Scan a finite grid for axiom violations");
  check_axiom->fallthrough();
  check_axiom->add_option("--model", capacity_path, "Capacity file")->required();
  check_axiom->add_option("--values", values_path, "Value functions file");
  check_axiom->add_option("--grid", grid_path, "Grid file (levels double as their own worth)");
  check_axiom
      ->add_option("--axiom", axiom,
                   "max | min | second-highest | lattice | convexity | triple-cancellation")
      ->required()
      ->check(CLI::IsMember(
          {"max", "min", "second-highest", "lattice", "convexity", "triple-cancellation"}));
  check_axiom->add_option("--pair", pair_text, "Criterion pair i,j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(global, capacity_path, profile_text);
    if (indices->parsed()) return run_indices(global, capacity_path);
    if (check->parsed()) return run_check(global, capacity_path);
    if (lattice->parsed()) return run_lattice(global, capacity_path);
    if (learn->parsed()) return run_learn(global, data_path, k_additive, objective, out_path);
    if (joint->parsed()) {
      return run_learn_joint(global, data_path, restarts, seed_flag, out_capacity, out_values);
    }
    if (synth->parsed()) {
      return run_synth(global, synth_n, synth_levels, synth_kind, seed_flag, out_path);
    }
    if (experiment->parsed() && ident->parsed()) {
      return run_identifiability(global, synth_n, synth_levels, synth_kind, seed_flag, pairs,
                                 report_path);
    }
    if (check_axiom->parsed()) {
      return run_check_axiom(global, capacity_path, values_path, grid_path, axiom, pair_text);
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const choquet::internal_consistency_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  } catch (const choquet::resource_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
