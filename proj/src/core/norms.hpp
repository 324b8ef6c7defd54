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

#include <span>
#include <vector>

#include "core/shadows.hpp"

namespace sht {

struct NormReport {
    /// lambda_max of sum_k tr(rho_k X)^2 E_k: the worst-case single-shot
    /// variance bound for estimating X.
    double squared_norm;
    /// Density operator attaining the maximum (top eigenprojector). Ties are
    /// broken toward the lexicographically largest Bloch vector so golden
    /// tests see a deterministic state.
    HermitianOperator worst_state;
    /// tr(rho_k X)^2 per outcome.
    std::vector<double> per_outcome_weights;
};

NormReport squared_shadow_norm(const Povm &povm, const HermitianOperator &x);

/// Variance of the single-shot estimator of X at state rho:
/// sum_k tr(rho_k X)^2 tr(rho E_k) - tr(rho X)^2. Never exceeds the squared
/// shadow norm.
double estimator_variance(const Povm &povm, const HermitianOperator &x,
                          const HermitianOperator &rho);

/// Haar-averaged comparison figure sum_k tr(rho_k X)^2 tr(E_k) for traceless
/// X normalized to tr(X^2) = 1. This is the average variance only up to an
/// additive constant; it orders measurements, it is not an absolute
/// variance.
double average_squared_norm(const Povm &povm, const HermitianOperator &x);

/// Squared shadow norm of a product observable under a product measurement:
/// the product of per-site squared norms, accumulated as a sum of logarithms
/// so 60-site products cannot overflow intermediate terms.
double factorized_squared_norm(std::span<const Povm> povms,
                               std::span<const HermitianOperator> factors);

/// Lower bound (9 + tr H^{-1}) / 12 on the worst projection norm of a
/// uniform-trace qubit measurement; always at least 3/2, with equality for
/// the octahedron.
double octahedron_bound(const Povm &povm);

/// Maximum squared shadow norm over projections onto a quasi-uniform sphere
/// grid, used as a numerical stand-in for the supremum over pure states.
/// Grids are nested across resolutions, so the result never decreases as the
/// resolution grows.
double max_projection_norm_grid(const Povm &povm, int resolution);

}  // namespace sht
