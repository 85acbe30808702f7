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
#include "uniaug/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "json.hpp"
#include "parallel.hpp"
#include "uniaug/codec.hpp"
#include "uniaug/pipeline.hpp"
#include "uniaug/policy.hpp"

namespace uniaug {

double chi_square_statistic(const std::vector<int64_t> &counts) {
  if (counts.empty()) {
    return 0.0;
  }
  int64_t n = 0;
  for (const int64_t c : counts) n += c;
  const double expected = static_cast<double>(n) / static_cast<double>(counts.size());
  if (expected <= 0.0) {
    return 0.0;
  }
  double stat = 0.0;
  for (const int64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

double chi_square_critical(int dof, double alpha) {
  if (dof <= 0) {
    return 0.0;
  }
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::quantile(dist, 1.0 - alpha);
}

double ks_statistic(std::vector<double> samples) {
  if (samples.empty()) {
    return 0.0;
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double fi = static_cast<double>(i);
    d = std::max(d, std::max((fi + 1.0) / n - samples[i], samples[i] - fi / n));
  }
  return d;
}

double ks_critical(int64_t n, double alpha) {
  // First-order asymptotic inverse of P(D > x) ~ 2 exp(-2 n x^2).
  return std::sqrt(std::log(2.0 / alpha) / 2.0) / std::sqrt(static_cast<double>(n));
}

UniformityReport uniformity_test(const AugmentationSpace &space, uint64_t master_seed,
                                 int64_t n_draws) {
  const auto k = static_cast<int64_t>(space.transforms.size());
  if (k == 0) {
    throw InputError("uniformity test needs a non-empty transform set");
  }
  if (n_draws < 10 * k) {
    throw InputError("uniformity test needs at least 10 draws per transform");
  }
  UniformityReport report;
  report.n_draws = n_draws;
  report.counts.assign(static_cast<size_t>(k), 0);

  AugmentationSpace single = space;
  single.num_ops = 1;
  RngStream stream = derive_stream(master_seed, 0, 0);
  std::vector<double> lambdas;
  std::vector<double> ps;
  lambdas.reserve(static_cast<size_t>(n_draws));
  ps.reserve(static_cast<size_t>(n_draws));
  for (int64_t i = 0; i < n_draws; ++i) {
    const auto ops = sample_ops(single, stream);
    ++report.counts[static_cast<size_t>(ops[0].transform_index)];
    ps.push_back(ops[0].p);
    lambdas.push_back(ops[0].lambda);
  }

  report.dof = static_cast<int>(k) - 1;
  report.chi_square = chi_square_statistic(report.counts);
  report.chi_square_crit = chi_square_critical(report.dof, report.alpha);
  report.ks_lambda = ks_statistic(std::move(lambdas));
  report.ks_p = ks_statistic(std::move(ps));
  report.ks_crit = ks_critical(n_draws, report.alpha);
  report.pass = report.chi_square <= report.chi_square_crit &&
                report.ks_lambda <= report.ks_crit && report.ks_p <= report.ks_crit;
  return report;
}

std::string uniformity_to_json(const UniformityReport &report, const AugmentationSpace &space) {
  nlohmann::ordered_json j;
  j["n_draws"] = report.n_draws;
  j["alpha"] = report.alpha;
  auto &counts = j["counts"] = nlohmann::ordered_json::object();
  for (size_t i = 0; i < report.counts.size(); ++i) {
    const std::string name = i < space.transforms.size()
                                 ? std::string(to_string(space.transforms[i].id))
                                 : std::to_string(i);
    counts[name] = report.counts[i];
  }
  j["chi_square"] = report.chi_square;
  j["chi_square_critical"] = report.chi_square_crit;
  j["dof"] = report.dof;
  j["ks_lambda"] = report.ks_lambda;
  j["ks_p"] = report.ks_p;
  j["ks_critical"] = report.ks_crit;
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string uniformity_table(const UniformityReport &report, const AugmentationSpace &space) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "uniformity report: n = %lld, alpha = %g\n",
                static_cast<long long>(report.n_draws), report.alpha);
  out << line;
  const double expected =
      static_cast<double>(report.n_draws) / static_cast<double>(report.counts.size());
  for (size_t i = 0; i < report.counts.size(); ++i) {
    const std::string name = i < space.transforms.size()
                                 ? std::string(to_string(space.transforms[i].id))
                                 : std::to_string(i);
    std::snprintf(line, sizeof line, "  %-14s %8lld  (expected %.1f)\n", name.c_str(),
                  static_cast<long long>(report.counts[i]), expected);
    out << line;
  }
  std::snprintf(line, sizeof line, "  chi-square %10.4f  critical %.4f  dof %d  %s\n",
                report.chi_square, report.chi_square_crit, report.dof,
                report.chi_square <= report.chi_square_crit ? "ok" : "FAIL");
  out << line;
  std::snprintf(line, sizeof line, "  ks(lambda) %10.6f  critical %.6f  %s\n", report.ks_lambda,
                report.ks_crit, report.ks_lambda <= report.ks_crit ? "ok" : "FAIL");
  out << line;
  std::snprintf(line, sizeof line, "  ks(p)      %10.6f  critical %.6f  %s\n", report.ks_p,
                report.ks_crit, report.ks_p <= report.ks_crit ? "ok" : "FAIL");
  out << line;
  out << (report.pass ? "  overall: PASS\n" : "  overall: FAIL\n");
  return out.str();
}

void CorpusStats::add_image(const Image &image) {
  const size_t n = image.pixel_count();
  const uint8_t *px = image.data.data();
  for (size_t i = 0; i < n; ++i, px += 3) {
    for (int ch = 0; ch < 3; ++ch) {
      const int v = px[ch];
      sum[ch] += v;
      sum_sq[ch] += static_cast<int64_t>(v) * v;
      ++histogram[ch][v];
    }
    if (px[0] == kFillColor[0] && px[1] == kFillColor[1] && px[2] == kFillColor[2]) {
      ++fill_pixels;
    }
  }
  pixel_count += static_cast<int64_t>(n);
}

void CorpusStats::merge(const CorpusStats &other) {
  pixel_count += other.pixel_count;
  fill_pixels += other.fill_pixels;
  for (int ch = 0; ch < 3; ++ch) {
    sum[ch] += other.sum[ch];
    sum_sq[ch] += other.sum_sq[ch];
    for (int v = 0; v < 256; ++v) {
      histogram[ch][v] += other.histogram[ch][v];
    }
  }
}

double CorpusStats::mean(int channel) const {
  if (pixel_count == 0) return 0.0;
  return static_cast<double>(sum[channel]) / static_cast<double>(pixel_count);
}

double CorpusStats::stddev(int channel) const {
  if (pixel_count == 0) return 0.0;
  const double m = mean(channel);
  const double ex2 = static_cast<double>(sum_sq[channel]) / static_cast<double>(pixel_count);
  return std::sqrt(std::max(0.0, ex2 - m * m));
}

CorpusStats corpus_stats(const std::filesystem::path &root, int workers) {
  const DatasetRef ref = enumerate_dataset(root);
  const auto n = static_cast<int64_t>(ref.entries.size());
  const auto n_threads =
      static_cast<size_t>(std::min<int64_t>(resolve_workers(workers), n));
  // Per-worker accumulators are integer-only, so the merge below is exact
  // and order-insensitive; scheduling cannot change the result.
  std::vector<CorpusStats> locals(n_threads);
  std::mutex failure_mutex;
  std::string first_failure;
  std::atomic<int64_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      for (;;) {
        const int64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        try {
          const Image img =
              load_image((ref.root / ref.entries[static_cast<size_t>(i)].relative_path).string());
          locals[t].add_image(img);
        } catch (const std::exception &e) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (first_failure.empty()) first_failure = e.what();
        }
      }
    });
  }
  for (auto &t : pool) t.join();
  if (!first_failure.empty()) {
    throw DecodeError(root.string(), first_failure);
  }
  CorpusStats total;
  for (const auto &part : locals) {
    total.merge(part);
  }
  return total;
}

ShiftReport shift_report(const CorpusStats &original, const CorpusStats &augmented) {
  ShiftReport report;
  for (int ch = 0; ch < 3; ++ch) {
    report.mean_delta[ch] = augmented.mean(ch) - original.mean(ch);
    report.stddev_delta[ch] = augmented.stddev(ch) - original.stddev(ch);
    double l1 = 0.0;
    for (int v = 0; v < 256; ++v) {
      const double pa = augmented.pixel_count == 0
                            ? 0.0
                            : static_cast<double>(augmented.histogram[ch][v]) /
                                  static_cast<double>(augmented.pixel_count);
      const double po = original.pixel_count == 0
                            ? 0.0
                            : static_cast<double>(original.histogram[ch][v]) /
                                  static_cast<double>(original.pixel_count);
      l1 += std::abs(pa - po);
    }
    report.histogram_l1[ch] = l1;
  }
  const double fill_aug = augmented.pixel_count == 0
                              ? 0.0
                              : static_cast<double>(augmented.fill_pixels) /
                                    static_cast<double>(augmented.pixel_count);
  const double fill_orig = original.pixel_count == 0
                               ? 0.0
                               : static_cast<double>(original.fill_pixels) /
                                     static_cast<double>(original.pixel_count);
  report.fill_fraction_delta = fill_aug - fill_orig;
  return report;
}

std::string shift_to_json(const ShiftReport &report) {
  nlohmann::ordered_json j;
  j["mean_delta"] = report.mean_delta;
  j["stddev_delta"] = report.stddev_delta;
  j["histogram_l1"] = report.histogram_l1;
  j["fill_fraction_delta"] = report.fill_fraction_delta;
  return j.dump();
}

std::string shift_table(const ShiftReport &report) {
  std::ostringstream out;
  char line[200];
  static const char *names[3] = {"R", "G", "B"};
  for (int ch = 0; ch < 3; ++ch) {
    std::snprintf(line, sizeof line,
                  "  %s: mean %+9.4f   stddev %+9.4f   hist L1 %.6f\n", names[ch],
                  report.mean_delta[ch], report.stddev_delta[ch], report.histogram_l1[ch]);
    out << line;
  }
  std::snprintf(line, sizeof line, "  fill fraction delta %+.6f\n", report.fill_fraction_delta);
  out << line;
  return out.str();
}

std::vector<SweepResult> numops_sweep(const DatasetRef &input,
                                      const std::filesystem::path &out_root,
                                      const AugmentationSpace &base, uint64_t master_seed,
                                      const std::vector<int> &num_ops_values, int workers) {
  for (const int v : num_ops_values) {
    if (v < 0) {
      throw InputError("num_ops values must be >= 0");
    }
  }
  const CorpusStats original = corpus_stats(input.root, workers);
  std::vector<SweepResult> results;
  results.reserve(num_ops_values.size());
  for (const int v : num_ops_values) {
    AugmentOptions options;
    options.space = base;
    options.space.num_ops = v;
    options.master_seed = master_seed;
    options.epochs = 1;
    options.workers = workers;
    const std::filesystem::path tree = out_root / ("numops_" + std::to_string(v));
    augment_dataset(input, tree, options);
    const CorpusStats augmented = corpus_stats(tree / "epoch_0", workers);
    results.push_back({v, tree, shift_report(original, augmented)});
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    nlohmann::ordered_json entry;
    entry["num_ops"] = r.num_ops;
    entry["output_tree"] = r.output_tree.generic_string();
    entry["report"] = nlohmann::ordered_json::parse(shift_to_json(r.report));
    j.push_back(std::move(entry));
  }
  std::ofstream out(out_root / "shift_reports.json", std::ios::binary | std::ios::trunc);
  out << j.dump(2) << '\n';
  return results;
}

std::vector<AblationResult> range_ablation(const DatasetRef &input,
                                           const std::filesystem::path &out_root,
                                           uint64_t master_seed, int workers) {
  const CorpusStats original = corpus_stats(input.root, workers);
  std::vector<AblationResult> results;
  for (const Preset which : {Preset::Narrow, Preset::Default, Preset::Wide}) {
    AugmentOptions options;
    options.space = preset(which);
    options.master_seed = master_seed;
    options.epochs = 1;
    options.workers = workers;
    const std::filesystem::path tree = out_root / std::string(to_string(which));
    augment_dataset(input, tree, options);
    const CorpusStats augmented = corpus_stats(tree / "epoch_0", workers);
    results.push_back({which, tree, shift_report(original, augmented)});
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto &r : results) {
    nlohmann::ordered_json entry;
    entry["preset"] = std::string(to_string(r.which));
    entry["output_tree"] = r.output_tree.generic_string();
    entry["report"] = nlohmann::ordered_json::parse(shift_to_json(r.report));
    j.push_back(std::move(entry));
  }
  std::ofstream out(out_root / "shift_reports.json", std::ios::binary | std::ios::trunc);
  out << j.dump(2) << '\n';
  return results;
}

}  // namespace uniaug
