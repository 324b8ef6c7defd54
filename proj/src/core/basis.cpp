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

#include "core/basis.hpp"

#include <cmath>

namespace sht {

namespace {

bool power_of_two(int dim, int *n_out) {
    int n = 0;
    int d = dim;
    while (d > 1) {
        if (d % 2 != 0) {
            return false;
        }
        d /= 2;
        ++n;
    }
    *n_out = n;
    return true;
}

std::vector<HermitianOperator> pauli_strings(int dim, int n_qubits) {
    std::vector<HermitianOperator> out;
    out.reserve(static_cast<std::size_t>(dim) * dim);
    double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    int count = dim * dim;  // 4^n
    for (int index = 0; index < count; ++index) {
        Matrix m = Matrix::Identity(1, 1);
        // Big-endian digit order: the first qubit is the most significant.
        for (int q = n_qubits - 1; q >= 0; --q) {
            int digit = (index >> (2 * q)) & 3;
            const Matrix &factor = pauli(digit).matrix();
            Matrix next(m.rows() * 2, m.cols() * 2);
            for (int i = 0; i < m.rows(); ++i) {
                for (int j = 0; j < m.cols(); ++j) {
                    next.block(i * 2, j * 2, 2, 2) = m(i, j) * factor;
                }
            }
            m = std::move(next);
        }
        out.push_back(hermitian_unchecked(m * scale));
    }
    return out;
}

std::vector<HermitianOperator> gell_mann(int dim) {
    std::vector<HermitianOperator> out;
    out.reserve(static_cast<std::size_t>(dim) * dim);
    double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(dim));
    out.push_back(hermitian_unchecked(Matrix::Identity(dim, dim) * inv_sqrt_d));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            Matrix sym = Matrix::Zero(dim, dim);
            sym(i, j) = inv_sqrt2;
            sym(j, i) = inv_sqrt2;
            out.push_back(hermitian_unchecked(std::move(sym)));
            Matrix asym = Matrix::Zero(dim, dim);
            asym(i, j) = Complex(0, -inv_sqrt2);
            asym(j, i) = Complex(0, inv_sqrt2);
            out.push_back(hermitian_unchecked(std::move(asym)));
        }
    }
    for (int l = 1; l < dim; ++l) {
        Matrix diag = Matrix::Zero(dim, dim);
        double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int m = 0; m < l; ++m) {
            diag(m, m) = norm;
        }
        diag(l, l) = -static_cast<double>(l) * norm;
        out.push_back(hermitian_unchecked(std::move(diag)));
    }
    return out;
}

}  // namespace

OperatorBasis OperatorBasis::standard(int dim) {
    require(dim >= 2, ErrorKind::Dimension, "basis dimension must be at least 2");
    int n_qubits = 0;
    if (power_of_two(dim, &n_qubits)) {
        return OperatorBasis(dim, pauli_strings(dim, n_qubits));
    }
    return OperatorBasis(dim, gell_mann(dim));
}

Eigen::VectorXd OperatorBasis::vectorize(const HermitianOperator &op) const {
    require(op.dim() == dim_, ErrorKind::Dimension, "operator dimension does not match basis");
    Eigen::VectorXd coords(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        coords(static_cast<Eigen::Index>(i)) = trace_product(op, elements_[i]);
    }
    return coords;
}

HermitianOperator OperatorBasis::devectorize(const Eigen::VectorXd &coords) const {
    require(coords.size() == static_cast<Eigen::Index>(elements_.size()), ErrorKind::Dimension,
            "coordinate count does not match basis size");
    Matrix m = Matrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        m += coords(static_cast<Eigen::Index>(i)) * elements_[i].matrix();
    }
    return hermitian_unchecked(std::move(m));
}

}  // namespace sht
