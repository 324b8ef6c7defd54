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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>

#include "core/errors.hpp"

namespace sht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tensor products refuse to build operators beyond this dimension.
inline constexpr int kDefaultDimCap = 1 << 12;

/// Coordinates of a qubit operator X in the basis (1, sx, sy, sz) with the
/// convention X = (x0 * 1 + r . sigma) / 2, i.e. x_i = tr(X sigma_i). The
/// identity maps to (2, 0, 0, 0); a density operator has x0 = 1 and |r| <= 1.
struct BlochVector {
    double x0 = 0.0;
    std::array<double, 3> r{0.0, 0.0, 0.0};
};

/// Dense Hermitian matrix of dimension >= 2. Construction symmetrizes the
/// input, absorbing floating-point noise up to 1e-9 and rejecting anything
/// larger, so every instance satisfies A == A^dagger exactly.
class HermitianOperator {
   public:
    explicit HermitianOperator(const Matrix &m);

    static HermitianOperator identity(int dim);
    static HermitianOperator zero(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix &matrix() const { return mat_; }
    double trace() const { return mat_.trace().real(); }
    Complex entry(int i, int j) const { return mat_(i, j); }

    HermitianOperator operator+(const HermitianOperator &other) const;
    HermitianOperator operator-(const HermitianOperator &other) const;
    HermitianOperator operator*(double scale) const;

   private:
    struct Trusted {};
    HermitianOperator(Matrix m, Trusted) : mat_(std::move(m)) {}

    Matrix mat_;

    friend HermitianOperator hermitian_unchecked(Matrix m);
};

/// Wraps a matrix that is Hermitian by construction, skipping the
/// symmetrization pass. Internal use only.
HermitianOperator hermitian_unchecked(Matrix m);

HermitianOperator operator*(double scale, const HermitianOperator &op);

/// sigma_0 = 1, sigma_1 = sx, sigma_2 = sy, sigma_3 = sz.
const HermitianOperator &pauli(int index);

/// Projector onto the spin state along unit direction n: (1 + n . sigma) / 2.
HermitianOperator spin_projector(const std::array<double, 3> &direction);

BlochVector to_bloch(const HermitianOperator &op);
HermitianOperator from_bloch(const BlochVector &bloch);

double max_eigenvalue(const HermitianOperator &op);
double min_eigenvalue(const HermitianOperator &op);

/// Real-valued tr(A B); exact for Hermitian arguments.
double trace_product(const HermitianOperator &a, const HermitianOperator &b);

/// Largest absolute entry of A - B.
double max_abs_diff(const HermitianOperator &a, const HermitianOperator &b);

/// Kronecker product. Throws SizeLimitError when the result dimension would
/// exceed dim_cap.
HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b,
                         int dim_cap = kDefaultDimCap);

/// Rank-1 projector onto a Haar-random pure state of dimension `dim`,
/// deterministic in `seed`: the state vector has one standard complex
/// gaussian amplitude per dimension (two real gaussians), normalized.
HermitianOperator haar_random_projection(std::uint64_t seed, int dim);

}  // namespace sht
