/*
 * Copyright 2026 The chainchaos Authors
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

/*
 * Copyright 2026 The chainchaos Authors
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

// Command-line front end.  Every run is a pure function of (config, flags):
// all randomness flows from the single seed, artifacts embed the spec
// digest, and identical invocations produce byte-identical files.
//
// Exit status: 0 success, 1 validation or domain failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainchaos/chainchaos.hpp"

namespace {

using namespace chainchaos;

/// CHAINCHAOS_ENUM_BUDGET caps every exhaustive enumeration; useful both
/// for tightening CI runs and for loosening one-off deep certifications.
std::size_t enumeration_budget() {
  const char* text = std::getenv("CHAINCHAOS_ENUM_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultEnumerationBudget;
  try {
    std::size_t parsed = 0;
    const unsigned long long value = std::stoull(text, &parsed);
    if (parsed != std::string(text).size() || value == 0) {
      throw std::invalid_argument("trailing characters");
    }
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw Error(errc::usage_error,
                std::string("CHAINCHAOS_ENUM_BUDGET is not a positive integer: ") + text);
  }
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(errc::invalid_argument, "cannot open output file " + path);
  }
  out << content;
  if (!out) {
    throw Error(errc::invalid_argument, "failed writing output file " + path);
  }
}

std::vector<int> parse_initial_labels(const StateSpace& space, const std::string& text) {
  std::vector<int> block;
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, ',')) {
    const auto idx = space.index_of(label);
    if (!idx) {
      throw Error(errc::invalid_argument, "unknown state label '" + label + "'");
    }
    block.push_back(*idx);
  }
  if (block.empty()) {
    throw Error(errc::invalid_argument, "initial block is empty");
  }
  return block;
}

/**
 * Shared realization recipe.  An explicit initial block uses the seed
 * directly, so paths match published reference streams.  Without one, the
 * initial block and the path consume independent derived streams, keeping
 * the two choices statistically decoupled while staying reproducible.
 */
Realization realize(const TransitionModel& model, const StateSpace& space,
                    const std::string& initial_labels, std::size_t length,
                    std::uint64_t seed) {
  if (!initial_labels.empty()) {
    return simulate(model, parse_initial_labels(space, initial_labels), length, seed);
  }
  const auto block = random_initial(model, derive_seed(seed, 0));
  return simulate(model, block, length, derive_seed(seed, 1));
}

struct CommonFlags {
  std::string spec_path;
  std::string initial;
  std::string output;
  std::size_t length = 0;
  std::uint64_t seed = 0;
};

void add_realization_flags(CLI::App* sub, CommonFlags* flags) {
  sub->add_option("--length", flags->length, "path length override (>= 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", flags->seed, "seed override");
  sub->add_option("--initial", flags->initial,
                  "initial block as comma-separated state labels");
}

ChainSpec walk_chain_spec(std::uint64_t seed, std::size_t length) {
  ChainSpec spec;
  spec.states = {"1", "2", "3", "4"};
  std::vector<std::vector<double>> metric(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::abs(i - j);
    }
  }
  spec.metric = metric;
  spec.transitions = {
      {0.0, 1.0, 0.0, 0.0},
      {0.5, 0.0, 0.5, 0.0},
      {0.0, 0.5, 0.0, 0.5},
      {0.0, 0.0, 1.0, 0.0},
  };
  spec.seed = seed;
  spec.length = length;
  return spec;
}

int run(int argc, char** argv) {
  CLI::App app{
      "chainchaos: finite-state chain simulation and shift-space chaos certification"};
  app.require_subcommand(1);

  CommonFlags flags;
  flags.seed = kWalkSeed;  // defaults only reach the example-walk subcommand
  flags.length = 601;
  std::string input_csv;
  std::size_t window = kDefaultWitnessWindow;
  double epsilon0 = 0.0;
  std::size_t max_witnesses = 0;
  int depth = 3;
  int truncation = kDefaultTruncationDepth;
  int word_length = 0;
  std::string out_dir = ".";
  bool no_connectors = false;

  auto* validate = app.add_subcommand("validate", "check a chain config and exit");
  validate->add_option("--spec", flags.spec_path, "chain config (JSON)")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "emit a seeded path CSV");
  simulate_cmd->add_option("--spec", flags.spec_path, "chain config (JSON)")->required();
  add_realization_flags(simulate_cmd, &flags);
  simulate_cmd->add_option("--output", flags.output, "path CSV destination (default stdout)");

  auto* analyze = app.add_subcommand(
      "analyze", "search a realization for unpredictability witnesses");
  analyze->add_option("--spec", flags.spec_path, "chain config (JSON)")->required();
  add_realization_flags(analyze, &flags);
  analyze->add_option("--input", input_csv, "analyze this path CSV instead of simulating");
  analyze->add_option("--window", window, "recurrence window (>= 1)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--epsilon0", epsilon0,
                      "divergence threshold (default: min pairwise distance / 2)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--max-witnesses", max_witnesses, "stop after this many (0 = all)");
  analyze->add_option("--output", flags.output, "report JSON destination (default stdout)");

  auto* certify = app.add_subcommand(
      "certify", "emit diameter, separation, coverage and Devaney certificates");
  certify->add_option("--spec", flags.spec_path, "chain config (JSON)")->required();
  certify->add_option("--depth", depth, "certificate depth (>= 1)")
      ->check(CLI::PositiveNumber);
  certify->add_option("--truncation", truncation, "sequence truncation depth")
      ->check(CLI::Range(2, kMaxTruncationDepth));
  certify->add_option("--output", flags.output, "certificate JSON destination");

  auto* coverage = app.add_subcommand("coverage", "emit an arc-coverage census CSV");
  coverage->add_option("--spec", flags.spec_path, "chain config (JSON)")->required();
  add_realization_flags(coverage, &flags);
  coverage->add_option("--word-length", word_length, "census word length (default order+1)")
      ->check(CLI::PositiveNumber);
  coverage->add_option("--output", flags.output, "census CSV destination");

  auto* example = app.add_subcommand(
      "example-walk", "reproduce the bundled reflecting-walk example artifacts");
  example->add_option("--out-dir", out_dir, "artifact directory (default .)");
  example->add_option("--seed", flags.seed, "walk seed")->capture_default_str();
  example->add_option("--length", flags.length, "walk path length (>= horizon/dt + 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  example->add_flag("--no-connectors", no_connectors,
                    "omit vertical connectors in the SVG plot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (*validate) {
    const auto spec = load_chain_spec(flags.spec_path);
    const auto space = spec.build_space();
    const auto model = spec.build_model();
    std::cout << "valid: " << space.size() << " states, order " << model.order() << "\n";
    std::cout << "spec-digest: " << spec.digest() << "\n";
    return 0;
  }

  if (*example) {
    const auto chain = build_walk_chain();
    const auto spec = walk_chain_spec(flags.seed, flags.length);
    const ArtifactMeta meta{spec.digest(), flags.seed};
    const auto real = simulate(chain.raw_model, {1}, flags.length, flags.seed);
    const auto trace = step_function_export(real, WalkConfig{});

    std::filesystem::create_directories(out_dir);
    std::ostringstream path_csv;
    write_path_csv(path_csv, real, chain.raw_space, meta);
    write_text(out_dir + "/walk_path.csv", path_csv.str());

    Realization events;
    events.path = encode_walk_to_events(real.path);
    events.seed = flags.seed;
    events.model_digest = chain.event_model.digest();
    events.initial = {events.path.front()};
    std::ostringstream events_csv;
    write_path_csv(events_csv, events, chain.event_space, meta);
    write_text(out_dir + "/walk_events.csv", events_csv.str());

    std::ostringstream step_csv;
    write_step_csv(step_csv, trace, meta);
    write_text(out_dir + "/walk_step_function.csv", step_csv.str());

    std::ostringstream svg;
    write_step_svg(svg, trace, !no_connectors, meta);
    write_text(out_dir + "/walk.svg", svg.str());

    for (const char* name :
         {"walk_path.csv", "walk_events.csv", "walk_step_function.csv", "walk.svg"}) {
      std::cout << "wrote " << out_dir << "/" << name << "\n";
    }
    return 0;
  }

  // The remaining subcommands all start from a loaded spec.
  CLI::App* sub = app.get_subcommands().front();
  const auto flag_given = [sub](const std::string& name) {
    const auto* option = sub->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  const auto spec = load_chain_spec(flags.spec_path);
  const auto space = spec.build_space();
  const auto model = spec.build_model();
  const std::uint64_t seed = flag_given("--seed") ? flags.seed : spec.seed;
  const std::size_t length = flag_given("--length") ? flags.length : spec.length;
  const ArtifactMeta meta{spec.digest(), seed};

  if (*simulate_cmd) {
    const auto real = realize(model, space, flags.initial, length, seed);
    std::ostringstream out;
    write_path_csv(out, real, space, meta);
    write_text(flags.output, out.str());
    return 0;
  }

  if (*analyze) {
    Realization real;
    if (!input_csv.empty()) {
      if (!flags.initial.empty() || analyze->count("--length") ||
          analyze->count("--seed")) {
        throw Error(errc::usage_error,
                    "--input cannot be combined with --initial/--length/--seed");
      }
      std::ifstream in(input_csv);
      if (!in) {
        throw Error(errc::config_parse_error, "cannot open path CSV " + input_csv);
      }
      real = external_realization(read_path_csv(in, space), model.order(), seed);
    } else {
      real = realize(model, space, flags.initial, length, seed);
    }
    const double eps =
        analyze->count("--epsilon0") ? epsilon0 : min_pairwise_distance(space) / 2.0;
    const auto report = find_witnesses(real, space, window, eps, max_witnesses);
    write_text(flags.output, witness_report_json(report, meta).dump(2) + "\n");
    return 0;
  }

  if (*certify) {
    const auto budget = enumeration_budget();
    nlohmann::json j;
    j["artifact"] = "certificates";
    j["spec_digest"] = meta.spec_digest;
    j["seed"] = meta.seed;
    j["diameter"] = diameter_report_json(check_diameter_condition(space, depth, truncation));
    auto& separation = j["separation"] = nlohmann::json::array();
    for (int d = 1; d <= depth; ++d) {
      separation.push_back(
          separation_certificate_json(check_separation_condition(space, d, budget), space));
    }
    j["devaney"] =
        devaney_certificate_json(devaney_certificate(space, depth, truncation, budget), space);
    // Coverage enumerates m^(K - depth) members, so it runs at a shallower
    // truncation than the metric analyses to stay within the budget.
    const int coverage_truncation = std::min(truncation, depth + 8);
    j["coverage"] = coverage_report_json(
        similarity_coverage(Cylinder{std::vector<int>(static_cast<std::size_t>(depth), 0)},
                            space, coverage_truncation, budget),
        space);
    write_text(flags.output, j.dump(2) + "\n");
    return 0;
  }

  if (*coverage) {
    const auto budget = enumeration_budget();
    const auto real = realize(model, space, flags.initial, length, seed);
    const int L = coverage->count("--word-length") ? word_length : model.order() + 1;
    const auto report = arc_coverage(real, model, L, budget);
    std::ostringstream out;
    write_arc_coverage_csv(out, report, space, meta);
    write_text(flags.output, out.str());
    return 0;
  }

  throw Error(errc::usage_error, "no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::usage_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
