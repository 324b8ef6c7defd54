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

#include "core/operators.hpp"

#include <cmath>

#include "core/rng.hpp"
#include "core/tolerances.hpp"

namespace sht {

namespace {

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(const Matrix &m) {
    require(m.rows() == m.cols(), ErrorKind::Dimension, "operator matrix must be square");
    require(m.rows() >= 2, ErrorKind::Dimension, "operator dimension must be at least 2");
    Matrix sym = (m + m.adjoint()) / 2.0;
    double correction = max_abs(m - sym);
    require(correction <= tol::kHermitianReject, ErrorKind::NotHermitian,
            "matrix deviates from Hermiticity by " + std::to_string(correction));
    mat_ = std::move(sym);
}

HermitianOperator hermitian_unchecked(Matrix m) {
    return HermitianOperator(std::move(m), HermitianOperator::Trusted{});
}

HermitianOperator HermitianOperator::identity(int dim) {
    require(dim >= 2, ErrorKind::Dimension, "operator dimension must be at least 2");
    return hermitian_unchecked(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
    require(dim >= 2, ErrorKind::Dimension, "operator dimension must be at least 2");
    return hermitian_unchecked(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator &other) const {
    require(dim() == other.dim(), ErrorKind::Dimension, "operator dimensions differ");
    return hermitian_unchecked(mat_ + other.mat_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator &other) const {
    require(dim() == other.dim(), ErrorKind::Dimension, "operator dimensions differ");
    return hermitian_unchecked(mat_ - other.mat_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return hermitian_unchecked(mat_ * scale);
}

HermitianOperator operator*(double scale, const HermitianOperator &op) {
    return op * scale;
}

const HermitianOperator &pauli(int index) {
    static const std::array<HermitianOperator, 4> paulis = [] {
        Matrix id = Matrix::Identity(2, 2);
        Matrix sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0, 1, 1, 0;
        sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        sz << 1, 0, 0, -1;
        return std::array<HermitianOperator, 4>{
            hermitian_unchecked(id), hermitian_unchecked(sx),
            hermitian_unchecked(sy), hermitian_unchecked(sz)};
    }();
    require(index >= 0 && index < 4, ErrorKind::Range, "Pauli index out of range");
    return paulis[static_cast<std::size_t>(index)];
}

HermitianOperator spin_projector(const std::array<double, 3> &direction) {
    return from_bloch(BlochVector{1.0, direction});
}

BlochVector to_bloch(const HermitianOperator &op) {
    require(op.dim() == 2, ErrorKind::Dimension, "Bloch representation requires a qubit operator");
    BlochVector b;
    b.x0 = op.trace();
    for (int i = 0; i < 3; ++i) {
        b.r[static_cast<std::size_t>(i)] = trace_product(op, pauli(i + 1));
    }
    return b;
}

HermitianOperator from_bloch(const BlochVector &bloch) {
    Matrix m = Matrix::Zero(2, 2);
    m += 0.5 * bloch.x0 * pauli(0).matrix();
    for (int i = 0; i < 3; ++i) {
        m += 0.5 * bloch.r[static_cast<std::size_t>(i)] * pauli(i + 1).matrix();
    }
    return hermitian_unchecked(std::move(m));
}

double max_eigenvalue(const HermitianOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double min_eigenvalue(const HermitianOperator &op) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double trace_product(const HermitianOperator &a, const HermitianOperator &b) {
    require(a.dim() == b.dim(), ErrorKind::Dimension, "operator dimensions differ");
    return a.matrix().cwiseProduct(b.matrix().transpose()).sum().real();
}

double max_abs_diff(const HermitianOperator &a, const HermitianOperator &b) {
    require(a.dim() == b.dim(), ErrorKind::Dimension, "operator dimensions differ");
    return max_abs(a.matrix() - b.matrix());
}

HermitianOperator tensor(const HermitianOperator &a, const HermitianOperator &b, int dim_cap) {
    long result_dim = static_cast<long>(a.dim()) * b.dim();
    require(result_dim <= dim_cap, ErrorKind::SizeLimit,
            "tensor product dimension " + std::to_string(result_dim) + " exceeds cap " +
                std::to_string(dim_cap));
    int da = a.dim(), db = b.dim();
    Matrix out(result_dim, result_dim);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.entry(i, j) * b.matrix();
        }
    }
    return hermitian_unchecked(std::move(out));
}

HermitianOperator haar_random_projection(std::uint64_t seed, int dim) {
    require(dim >= 2, ErrorKind::Dimension, "operator dimension must be at least 2");
    CounterRng rng(seed);
    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < dim; ++i) {
        double re = rng.next_gaussian();
        double im = rng.next_gaussian();
        psi(i) = Complex(re, im);
    }
    psi.normalize();
    return hermitian_unchecked(psi * psi.adjoint());
}

}  // namespace sht
