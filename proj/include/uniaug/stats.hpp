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
#ifndef UNIAUG_STATS_HPP_
#define UNIAUG_STATS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "uniaug/dataset.hpp"
#include "uniaug/image.hpp"
#include "uniaug/space.hpp"

namespace uniaug {

/// Pearson chi-square of counts against equiprobable cells.
double chi_square_statistic(const std::vector<int64_t> &counts);

/// Upper-tail chi-square quantile: P(X > value) = alpha at `dof` degrees.
double chi_square_critical(int dof, double alpha);

/// One-sample Kolmogorov-Smirnov statistic against U(0,1).
double ks_statistic(std::vector<double> samples);

/// Asymptotic two-sided KS critical value sqrt(ln(2/alpha)/2) / sqrt(n).
double ks_critical(int64_t n, double alpha);

/// Empirical certificate that the sampler's draws are uniform.
struct UniformityReport {
  int64_t n_draws = 0;
  double alpha = 0.001;
  std::vector<int64_t> counts;  // per transform, sums to n_draws
  double chi_square = 0.0;
  double chi_square_crit = 0.0;
  int dof = 0;
  double ks_lambda = 0.0;
  double ks_p = 0.0;
  double ks_crit = 0.0;
  bool pass = false;
};

/// Draws n_draws single ops through the stock sampler and tests transform
/// counts (chi-square, k-1 dof) and the lambda and p draws (KS against
/// U(0,1)) at alpha = 0.001. Requires n_draws >= 10 * |transforms|.
UniformityReport uniformity_test(const AugmentationSpace &space, uint64_t master_seed,
                                 int64_t n_draws);

std::string uniformity_to_json(const UniformityReport &report, const AugmentationSpace &space);
std::string uniformity_table(const UniformityReport &report, const AugmentationSpace &space);

/// Order-insensitive per-corpus pixel statistics (integer accumulators).
struct CorpusStats {
  int64_t pixel_count = 0;
  std::array<int64_t, 3> sum{};
  std::array<int64_t, 3> sum_sq{};
  std::array<std::array<int64_t, 256>, 3> histogram{};
  int64_t fill_pixels = 0;  // pixels exactly equal to kFillColor

  void add_image(const Image &image);
  void merge(const CorpusStats &other);
  double mean(int channel) const;
  double stddev(int channel) const;
};

/// Decodes every image under `root` (recursively) and accumulates stats.
CorpusStats corpus_stats(const std::filesystem::path &root, int workers = 0);

/// Distribution deltas between an original and an augmented corpus.
/// A corpus compared against itself reports exact zeros everywhere.
struct ShiftReport {
  std::array<double, 3> mean_delta{};
  std::array<double, 3> stddev_delta{};
  std::array<double, 3> histogram_l1{};  // normalized, in [0, 2]
  double fill_fraction_delta = 0.0;
};

ShiftReport shift_report(const CorpusStats &original, const CorpusStats &augmented);
std::string shift_to_json(const ShiftReport &report);
std::string shift_table(const ShiftReport &report);

struct SweepResult {
  int num_ops = 0;
  std::filesystem::path output_tree;
  ShiftReport report;
};

/// One augmented epoch + ShiftReport per num_ops value, under
/// out_root/numops_<v>. Report-only; no pass/fail.
std::vector<SweepResult> numops_sweep(const DatasetRef &input,
                                      const std::filesystem::path &out_root,
                                      const AugmentationSpace &base, uint64_t master_seed,
                                      const std::vector<int> &num_ops_values, int workers = 0);

struct AblationResult {
  Preset which = Preset::Default;
  std::filesystem::path output_tree;
  ShiftReport report;
};

/// One augmented epoch + ShiftReport per range preset, under out_root/<name>.
std::vector<AblationResult> range_ablation(const DatasetRef &input,
                                           const std::filesystem::path &out_root,
                                           uint64_t master_seed, int workers = 0);

}  // namespace uniaug

#endif  // UNIAUG_STATS_HPP_
