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
#include <memory>
#include <string>
#include <vector>

#include "core/basis.hpp"
#include "core/operators.hpp"

namespace sht {

class ClassicalShadowSet;

/// A generalised measurement: positive effects summing to the identity.
/// Immutable after validation; copies share the underlying effect list and
/// the lazily computed shadow cache, so they are cheap and thread-safe.
class Povm {
   public:
    static Povm validate(std::vector<HermitianOperator> effects,
                         std::vector<std::string> labels = {});

    int dim() const;
    std::size_t size() const;
    const std::vector<HermitianOperator> &effects() const;
    const HermitianOperator &effect(std::size_t k) const;
    const std::vector<std::string> &labels() const;

    bool is_informationally_complete() const;

    /// True when all effect traces agree within the uniformity tolerance.
    bool is_uniform_trace() const;

    /// Identity of the shared state; used to detect equal inputs in
    /// factorized evaluations.
    const void *id() const;

   private:
    struct Impl;
    explicit Povm(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const ClassicalShadowSet> cached_shadows() const;
    std::shared_ptr<const ClassicalShadowSet> store_shadows(
        std::shared_ptr<const ClassicalShadowSet> shadows) const;

    std::shared_ptr<const Impl> impl_;

    friend std::shared_ptr<const ClassicalShadowSet> classical_shadows(const Povm &povm);
};

/// Weighted-direction parametrization of a qubit measurement with effects
/// E_k = (w_k / 2)(1 + v_k . sigma).
struct QubitPovmParams {
    std::vector<double> weights;
    std::vector<std::array<double, 3>> directions;
};

Povm qubit_povm(const QubitPovmParams &params, std::vector<std::string> labels = {});
QubitPovmParams qubit_params(const Povm &povm);

/// Trace moments of a uniform measurement and the closed-form inverse-channel
/// coefficients derived from them.
struct SymmetryCoefficients {
    double alpha = 0.0;  // tr(E_k)
    double beta = 0.0;   // tr(E_k^2)
    double gamma = 0.0;  // sum_l tr(E_k E_l)^2
    double a = 0.0;
    double b = 0.0;
};

bool is_informationally_complete(const Povm &povm);

/// Reflects every effect through the centre of the Bloch sphere. Qubit only.
Povm inverted(const Povm &povm);

/// Mixes each effect with white noise: E_k -> (1-p) tr(E_k) 1/D + p E_k.
/// p = 1 is the noiseless measurement, p = 0 pure noise.
Povm depolarize(const Povm &povm, double p);

/// Splits each effect into identical copies so all traces become equal,
/// using the best rational approximation of the traces with a common
/// denominator bounded by `denominator_cap`.
Povm uniform_trace_split(const Povm &povm, std::uint64_t denominator_cap);

/// The measurement effectively performed by drawing a unitary uniformly from
/// the ensemble and measuring in the computational basis afterwards: effects
/// (1/|U|) U^dagger |b><b| U. With merge_duplicates, effects equal within
/// the merge tolerance are summed into one outcome.
Povm from_unitary_ensemble(const std::vector<Matrix> &unitaries, bool merge_duplicates);

/// Closed-form coefficients (a, b) with rho_k = a E_k + b 1 for uniform,
/// rigidly symmetric measurements, solved from the trace moments:
///   a = (D beta - alpha^2) / (D gamma - alpha^3)
///   b = (gamma - alpha beta) / (D gamma - alpha^3).
/// Whether the closed form actually inverts the frame is not checked here;
/// the shadow construction cross-checks it.
SymmetryCoefficients symmetry_coefficients(const Povm &povm);

/// Joint measurement of independent per-site measurements; one effect per
/// outcome string. Intended for small systems (cross-checks); throws
/// SizeLimitError beyond the dimension or effect-count caps.
Povm tensor_povm(const std::vector<Povm> &sites, int dim_cap = kDefaultDimCap,
                 std::size_t effect_cap = 1 << 16);

/// Frame matrix sum_k vec(E_k) vec(E_k)^T in the given orthonormal basis.
/// Symmetric PSD; positive definite exactly when the measurement is
/// informationally complete.
Eigen::MatrixXd frame_matrix(const Povm &povm, const OperatorBasis &basis);

}  // namespace sht
