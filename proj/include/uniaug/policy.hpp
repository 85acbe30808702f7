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
#ifndef UNIAUG_POLICY_HPP_
#define UNIAUG_POLICY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniaug/image.hpp"
#include "uniaug/rng.hpp"
#include "uniaug/space.hpp"

namespace uniaug {

/// One sampled op: a transform choice, its gate probability, its magnitude.
struct SampledOp {
  int transform_index = 0;
  double p = 0.0;       // in [0, 1)
  double lambda = 0.0;  // in [0, 1)

  bool operator==(const SampledOp &) const = default;
};

struct AppliedOp {
  SampledOp op;
  bool applied = false;
  std::optional<double> concrete_param;  // present iff applied and non-binary

  bool operator==(const AppliedOp &) const = default;
};

/// Provenance of one augmentation chain.
struct AppliedRecord {
  std::vector<AppliedOp> ops;
  uint64_t seed_trace = 0;  // seed of the stream that produced the chain

  bool operator==(const AppliedRecord &) const = default;
};

/// lo + lambda * (hi - lo), monotone in lambda; integer-parameter transforms
/// round to nearest, ties away from zero. Throws std::invalid_argument for
/// binary specs.
double map_magnitude(double lambda, const TransformSpec &spec);

/// Draws exactly space.num_ops ops; per op the stream is consumed in the
/// fixed order (transform index, p, lambda).
std::vector<SampledOp> sample_ops(const AugmentationSpace &space, RngStream &rng);

/// Applies a sampled chain: per op, in order, draws one gate u and applies
/// the transform iff u < p, with parameter map_magnitude(lambda, spec) for
/// non-binary transforms. Labels ride along unchanged outside this call.
std::pair<Image, AppliedRecord> apply_chain(const Image &image, const std::vector<SampledOp> &ops,
                                            const AugmentationSpace &space, RngStream &rng);

/// Single-line JSON for records.jsonl and the sample command.
std::string applied_record_to_json(const AppliedRecord &record, const AugmentationSpace &space);

}  // namespace uniaug

#endif  // UNIAUG_POLICY_HPP_
