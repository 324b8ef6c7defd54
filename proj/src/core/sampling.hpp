// Copyright 2026 The shadowtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/shadows.hpp"

namespace sht {

struct EstimatorConfig {
    std::uint64_t shots = 1;
    /// 1 = plain mean; otherwise the median of this many consecutive group
    /// means. Groups that do not divide the sample evenly are truncated.
    std::uint32_t median_groups = 1;
    std::uint64_t seed = 0;
};

/// One measurement repetition: the sampled outcome index (0-based) per site.
struct OutcomeRecord {
    std::vector<std::uint32_t> site_outcomes;
};

/// Draws `config.shots` outcome strings from a product state, each site
/// sampled independently with probabilities tr(rho_i E_k). Outcomes are a
/// pure function of (seed, shot, site) via counter-derived substreams, so
/// results do not depend on evaluation order or thread count. Entangled
/// states are handled by passing a single site holding the joint measurement
/// (see tensor_povm) and the joint state.
std::vector<OutcomeRecord> sample_outcomes(std::span<const Povm> povms,
                                           std::span<const HermitianOperator> states,
                                           const EstimatorConfig &config);

/// Product over sites of tr(rho_k X): the single-shot estimate of a product
/// observable. O(sites), never materializes the joint operator.
double single_shot_estimate(
    std::span<const std::shared_ptr<const ClassicalShadowSet>> shadow_sets,
    const OutcomeRecord &record, std::span<const HermitianOperator> factors);

/// Batch form: precomputes the per-site estimate tables once, then maps every
/// record through them.
std::vector<double> single_shot_estimates(std::span<const Povm> povms,
                                          std::span<const HermitianOperator> factors,
                                          std::span<const OutcomeRecord> records);

/// Plain mean (median_groups = 1) or median of consecutive group means.
/// Summation is compensated, so shot counts in the millions do not lose
/// precision to accumulation order.
double estimate_mean(std::span<const double> estimates, const EstimatorConfig &config);

/// Compensated population variance (second moment about the mean).
double empirical_variance(std::span<const double> values);

struct SimulationSummary {
    double estimate;
    double empirical_variance;
};

/// Sample, estimate every shot, and aggregate in one call.
SimulationSummary simulate_estimate(std::span<const Povm> povms,
                                    std::span<const HermitianOperator> states,
                                    std::span<const HermitianOperator> factors,
                                    const EstimatorConfig &config);

}  // namespace sht
