/**
 * Copyright 2026 The uniaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line surface: augment | sample | stats | sweep | presets.
// Exit codes: 0 success, 1 usage/configuration error, 2 runtime error,
// 3 statistical check failed.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uniaug/codec.hpp"
#include "uniaug/pipeline.hpp"
#include "uniaug/policy.hpp"
#include "uniaug/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitStatsFail = 3;

struct SpaceFlags {
  std::string preset_name;
  std::string config_path;
  int num_ops = -1;  // -1 keeps the space's own value
};

void add_space_flags(CLI::App *cmd, SpaceFlags &flags) {
  auto *p = cmd->add_option("--preset", flags.preset_name,
                            "Stock range preset: narrow, default, or wide");
  auto *c = cmd->add_option("--config", flags.config_path,
                            "JSON augmentation-space file (see README)");
  p->excludes(c);
  c->excludes(p);
  cmd->add_option("--num-ops", flags.num_ops, "Override the number of ops per chain (>= 0)");
}

uniaug::AugmentationSpace resolve_space(const SpaceFlags &flags) {
  uniaug::AugmentationSpace space;
  if (!flags.config_path.empty()) {
    space = uniaug::load_space_file(flags.config_path);
  } else {
    space = uniaug::preset(flags.preset_name.empty() ? "default" : flags.preset_name);
  }
  if (flags.num_ops >= 0) {
    space.num_ops = flags.num_ops;
  } else if (flags.num_ops != -1) {
    throw uniaug::ConfigError("--num-ops must be >= 0");
  }
  return space;
}

uint64_t resolve_seed(uint64_t seed, bool entropy) {
  if (!entropy) {
    return seed;
  }
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::string format_range(const uniaug::TransformSpec &spec) {
  if (spec.binary) {
    return "N/A";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%g, %g]", spec.lo, spec.hi);
  return buf;
}

int cmd_augment(const SpaceFlags &space_flags, const std::string &input,
                const std::string &output, uint64_t seed, bool entropy, int epochs, int workers,
                bool records) {
  uniaug::AugmentOptions options;
  options.space = resolve_space(space_flags);
  options.master_seed = resolve_seed(seed, entropy);
  options.epochs = epochs;
  options.workers = workers;
  options.emit_records = records;

  const auto dataset = uniaug::enumerate_dataset(input);
  const auto start = std::chrono::steady_clock::now();
  const auto manifest = uniaug::augment_dataset(dataset, output, options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  std::printf("augmented %lld file(s) across %d epoch(s) in %.2fs -> %s (%zu failure(s))\n",
              static_cast<long long>(manifest.outputs_written), manifest.epochs, elapsed.count(),
              output.c_str(), manifest.failures.size());
  for (const auto &failure : manifest.failures) {
    std::fprintf(stderr, "  failed [epoch %d] %s: %s\n", failure.epoch,
                 failure.relative_path.c_str(), failure.error.c_str());
  }
  if (manifest.outputs_written == 0) {
    std::fprintf(stderr, "error: no image could be processed\n");
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_sample(const SpaceFlags &space_flags, uint64_t seed, bool entropy, int count) {
  const auto space = resolve_space(space_flags);
  const auto violations = uniaug::validate_space(space);
  if (!violations.empty()) {
    throw uniaug::ConfigError("invalid augmentation space: " + violations.front());
  }
  const uint64_t master = resolve_seed(seed, entropy);
  for (int i = 0; i < count; ++i) {
    uniaug::RngStream stream = uniaug::derive_stream(master, 0, i);
    const auto ops = uniaug::sample_ops(space, stream);
    uniaug::AppliedRecord record;
    record.seed_trace = stream.seed();
    for (const auto &op : ops) {
      uniaug::AppliedOp entry;
      entry.op = op;
      entry.applied = true;  // sample reports the mapped parameter unconditionally
      const auto &spec = space.transforms[static_cast<size_t>(op.transform_index)];
      if (!spec.binary) {
        entry.concrete_param = uniaug::map_magnitude(op.lambda, spec);
      }
      record.ops.push_back(entry);
    }
    std::printf("%s\n", uniaug::applied_record_to_json(record, space).c_str());
  }
  return kExitOk;
}

int cmd_stats(const SpaceFlags &space_flags, uint64_t seed, bool entropy, long long draws,
              const std::string &json_path) {
  const auto space = resolve_space(space_flags);
  const auto violations = uniaug::validate_space(space);
  if (!violations.empty()) {
    throw uniaug::ConfigError("invalid augmentation space: " + violations.front());
  }
  const auto report = uniaug::uniformity_test(space, resolve_seed(seed, entropy), draws);
  std::fputs(uniaug::uniformity_table(report, space).c_str(), stdout);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw uniaug::InputError("cannot write report: " + json_path);
    }
    out << uniaug::uniformity_to_json(report, space);
  }
  return report.pass ? kExitOk : kExitStatsFail;
}

std::vector<int> parse_num_ops_list(const std::string &text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 0) {
      throw uniaug::ConfigError("bad --num-ops-list entry: " + item);
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw uniaug::ConfigError("--num-ops-list is empty");
  }
  return values;
}

int cmd_sweep(const SpaceFlags &space_flags, const std::string &input, const std::string &output,
              const std::string &num_ops_list, bool ranges, uint64_t seed, bool entropy,
              int workers) {
  const auto dataset = uniaug::enumerate_dataset(input);
  const uint64_t master = resolve_seed(seed, entropy);
  if (ranges) {
    const auto results = uniaug::range_ablation(dataset, output, master, workers);
    for (const auto &r : results) {
      std::printf("preset %-8s -> %s\n", std::string(to_string(r.which)).c_str(),
                  r.output_tree.generic_string().c_str());
      std::fputs(uniaug::shift_table(r.report).c_str(), stdout);
    }
  } else {
    const auto space = resolve_space(space_flags);
    const auto values = parse_num_ops_list(num_ops_list);
    const auto results = uniaug::numops_sweep(dataset, output, space, master, values, workers);
    for (const auto &r : results) {
      std::printf("num_ops %d -> %s\n", r.num_ops, r.output_tree.generic_string().c_str());
      std::fputs(uniaug::shift_table(r.report).c_str(), stdout);
    }
  }
  std::printf("shift reports: %s\n", (std::filesystem::path(output) / "shift_reports.json")
                                         .generic_string()
                                         .c_str());
  return kExitOk;
}

int cmd_presets() {
  const auto narrow = uniaug::preset(uniaug::Preset::Narrow);
  const auto stock = uniaug::preset(uniaug::Preset::Default);
  const auto wide = uniaug::preset(uniaug::Preset::Wide);
  std::printf("num_ops: %d (all presets)\n\n", stock.num_ops);
  std::printf("%-14s %-18s %-18s %-18s\n", "Transform", "Narrow", "Default", "Wide");
  for (size_t i = 0; i < stock.transforms.size(); ++i) {
    std::printf("%-14s %-18s %-18s %-18s\n",
                std::string(to_string(stock.transforms[i].id)).c_str(),
                format_range(narrow.transforms[i]).c_str(),
                format_range(stock.transforms[i]).c_str(),
                format_range(wide.transforms[i]).c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Search-free uniform image augmentation engine"};
  app.require_subcommand(1);

  // augment
  auto *augment = app.add_subcommand("augment", "Augment a dataset directory to disk");
  SpaceFlags augment_space;
  std::string augment_input, augment_output;
  uint64_t augment_seed = 0;
  bool augment_entropy = false;
  int augment_epochs = 1;
  int augment_workers = 0;
  bool augment_records = false;
  augment->add_option("--input", augment_input, "Input dataset directory")->required();
  augment->add_option("--output", augment_output, "Output directory")->required();
  add_space_flags(augment, augment_space);
  augment->add_option("--seed", augment_seed, "Master seed (default 0)");
  augment->add_flag("--entropy", augment_entropy, "Seed from system entropy (not reproducible)");
  augment->add_option("--epochs", augment_epochs, "Augmented epochs to materialize (default 1)")
      ->check(CLI::PositiveNumber);
  augment->add_option("--workers", augment_workers, "Worker threads (default: logical CPUs)")
      ->check(CLI::NonNegativeNumber);
  augment->add_flag("--records", augment_records, "Emit per-image records.jsonl");

  // sample
  auto *sample = app.add_subcommand("sample", "Print sampled op chains as JSON lines");
  SpaceFlags sample_space;
  uint64_t sample_seed = 0;
  bool sample_entropy = false;
  int sample_count = 1;
  add_space_flags(sample, sample_space);
  sample->add_option("--seed", sample_seed, "Master seed (default 0)");
  sample->add_flag("--entropy", sample_entropy, "Seed from system entropy (not reproducible)");
  sample->add_option("--count", sample_count, "Records to print (default 1)")
      ->check(CLI::PositiveNumber);

  // stats
  auto *stats = app.add_subcommand("stats", "Run the sampler uniformity test");
  SpaceFlags stats_space;
  uint64_t stats_seed = 0;
  bool stats_entropy = false;
  long long stats_draws = 150000;
  std::string stats_json;
  add_space_flags(stats, stats_space);
  stats->add_option("--seed", stats_seed, "Master seed (default 0)");
  stats->add_flag("--entropy", stats_entropy, "Seed from system entropy (not reproducible)");
  stats->add_option("--draws", stats_draws, "Single-op draws (default 150000)")
      ->check(CLI::PositiveNumber);
  stats->add_option("--json", stats_json, "Also write the report as JSON to this path");

  // sweep
  auto *sweep = app.add_subcommand("sweep", "Materialize epochs across num-ops values or presets");
  SpaceFlags sweep_space;
  std::string sweep_input, sweep_output;
  std::string sweep_list = "1,2,3,4,5,6";
  bool sweep_ranges = false;
  uint64_t sweep_seed = 0;
  bool sweep_entropy = false;
  int sweep_workers = 0;
  sweep->add_option("--input", sweep_input, "Input dataset directory")->required();
  sweep->add_option("--output", sweep_output, "Output directory")->required();
  add_space_flags(sweep, sweep_space);
  sweep->add_option("--num-ops-list", sweep_list,
                    "Comma-separated num-ops values (default 1,2,3,4,5,6)");
  sweep->add_flag("--ranges", sweep_ranges,
                  "Sweep the narrow/default/wide presets instead of num-ops");
  sweep->add_option("--seed", sweep_seed, "Master seed (default 0)");
  sweep->add_flag("--entropy", sweep_entropy, "Seed from system entropy (not reproducible)");
  sweep->add_option("--workers", sweep_workers, "Worker threads (default: logical CPUs)")
      ->check(CLI::NonNegativeNumber);

  // presets
  auto *presets = app.add_subcommand("presets", "Print the three stock range presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (augment->parsed()) {
      return cmd_augment(augment_space, augment_input, augment_output, augment_seed,
                         augment_entropy, augment_epochs, augment_workers, augment_records);
    }
    if (sample->parsed()) {
      return cmd_sample(sample_space, sample_seed, sample_entropy, sample_count);
    }
    if (stats->parsed()) {
      return cmd_stats(stats_space, stats_seed, stats_entropy, stats_draws, stats_json);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_space, sweep_input, sweep_output, sweep_list, sweep_ranges,
                       sweep_seed, sweep_entropy, sweep_workers);
    }
    if (presets->parsed()) {
      return cmd_presets();
    }
  } catch (const uniaug::ConfigError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const uniaug::InputError &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}
