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
#include <utility>
#include <vector>

#include "core/norms.hpp"

namespace sht {

struct AnnealConfig {
    /// Number of measurement outcomes; at least 4 for qubit informational
    /// completeness.
    std::uint32_t outcomes = 6;
    std::uint64_t iterations = 20000;
    /// 0 selects the 90th percentile of |objective change| over 100 probe
    /// moves from the initial state.
    double initial_temperature = 0.0;
    /// Geometric cooling factor, in (0.9, 1).
    double cooling_ratio = 0.995;
    double move_scale = 0.1;
    std::uint32_t restarts = 8;
    std::uint64_t seed = 0;
};

struct RestartSummary {
    std::uint32_t index;
    double best_objective;
    Povm best_povm;
};

struct OptimizationResult {
    Povm best_povm;
    double best_objective;
    /// Running best of the winning restart: (iteration, objective), recorded
    /// at every improvement. Nonincreasing by construction.
    std::vector<std::pair<std::uint64_t, double>> objective_trace;
    std::vector<RestartSummary> restarts;
    /// Set when every target is proportional to the identity; the objective
    /// is then constant and the initial measurement is returned unchanged.
    bool degenerate_targets;
};

/// max_i of the squared shadow norms of the targets.
double objective(const Povm &povm, std::span<const HermitianOperator> observables);

/// Simulated annealing over qubit measurements (weights plus Bloch
/// directions), minimizing the maximal squared shadow norm over the targets.
/// Candidates are repaired to exact feasibility after every move, restarts
/// run on seeds derived from the master seed, and the whole run is
/// reproducible bit-for-bit from (seed, config).
OptimizationResult anneal_single_qubit(std::span<const HermitianOperator> observables,
                                       const AnnealConfig &config);

/// Same search for an n-site product measurement that is identical on every
/// site. Targets are given factorized, one per-site operator list per
/// observable; objectives are products of per-site norms, evaluated in O(n)
/// per observable without any joint operator.
OptimizationResult anneal_factorized(
    std::size_t n_sites, const std::vector<std::vector<HermitianOperator>> &site_factors,
    const AnnealConfig &config);

namespace anneal_detail {

/// Repair step used after every proposal: directions are pulled back to the
/// unit ball, the weighted direction sum is shifted to zero, and weights are
/// renormalized to sum 2. Returns false (reject) when a direction still
/// sticks out of the ball afterwards. Exposed for property tests.
bool repair_candidate(QubitPovmParams &params);

}  // namespace anneal_detail

}  // namespace sht
