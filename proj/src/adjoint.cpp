// Copyright 2026 The luinv Authors
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

#include "luinv/adjoint.hpp"

#include <cmath>
#include <random>
#include <string>

#include "luinv/errors.hpp"
#include "luinv/linalg.hpp"

namespace luinv {

namespace {

constexpr double kAdjointImagTolerance = 1e-11;
constexpr double kOrthogonalityTolerance = 1e-10;
constexpr double kDeterminantTolerance = 1e-8;

}  // namespace

LocalUnitary::LocalUnitary(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 2) {
        throw DomainError("local unitary must be square with side at least 2");
    }
    const auto n = matrix_.rows();
    const double unitarity = (matrix_ * matrix_.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (unitarity > kUnitaryTolerance) {
        throw ValidationError(ValidationKind::Unitarity, unitarity,
                              "matrix is not unitary, deviation " + std::to_string(unitarity));
    }
    const double det_dev = std::abs(matrix_.determinant() - Complex(1.0, 0.0));
    if (det_dev > kUnitaryTolerance) {
        throw ValidationError(ValidationKind::Determinant, det_dev,
                              "determinant is not 1, deviation " + std::to_string(det_dev));
    }
}

AdjointRotation adjoint_of(const LocalUnitary &u, const GeneratorBasis &basis) {
    if (u.dim() != basis.dim()) {
        throw ShapeError("unitary dimension " + std::to_string(u.dim()) + " does not match basis dimension " +
                         std::to_string(basis.dim()));
    }
    const int n = basis.size();
    const CMatrix &um = u.matrix();
    const CMatrix udag = um.adjoint();
    AdjointRotation out{basis.dim(), RMatrix(n, n)};
    for (int i = 0; i < n; ++i) {
        const CMatrix rotated = um * basis[i] * udag;
        for (int j = 0; j < n; ++j) {
            // tr(g_j X) = sum_ab (g_j)_ab X_ba
            const Complex tr = basis[j].cwiseProduct(rotated.transpose()).sum();
            if (std::abs(tr.imag()) > kAdjointImagTolerance) {
                throw NumericalError(std::abs(tr.imag()), "adjoint entry has imaginary residue");
            }
            out.matrix(i, j) = tr.real() / 2.0;
        }
    }
    const double orth = (out.matrix.transpose() * out.matrix - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (orth > kOrthogonalityTolerance) {
        throw NumericalError(orth, "adjoint rotation is not orthogonal, deviation " + std::to_string(orth));
    }
    const double det_dev = std::abs(out.matrix.determinant() - 1.0);
    if (det_dev > kDeterminantTolerance) {
        throw NumericalError(det_dev, "adjoint rotation has determinant off 1 by " + std::to_string(det_dev));
    }
    return out;
}

AdjointRotation adjoint_of(const LocalUnitary &u) { return adjoint_of(u, cached_basis(u.dim())); }

LocalUnitary haar_su(int d, RngSeed seed) {
    if (d < 2) {
        throw DomainError("dimension must be at least 2");
    }
    std::mt19937_64 engine(seed.value);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix z(d, d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const double re = normal(engine);
            const double im = normal(engine);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < d; ++c) {
        const Complex diag = r(c, c);
        const double mag = std::abs(diag);
        const Complex phase = mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
        q.col(c) *= phase;
    }
    // Principal d-th root: arg in (-pi/d, pi/d].
    const double arg = std::arg(q.determinant());
    q *= std::polar(1.0, -arg / d);
    return LocalUnitary(std::move(q));
}

std::vector<LocalUnitary> haar_locals(const Dims &dims, RngSeed seed) {
    std::vector<LocalUnitary> out;
    out.reserve(dims.size());
    for (std::size_t m = 0; m < dims.size(); ++m) {
        out.push_back(haar_su(dims[m], RngSeed{derive_seed(seed.value, m)}));
    }
    return out;
}

DensityMatrix conjugate(const DensityMatrix &state, std::span<const LocalUnitary> locals) {
    if (locals.size() != state.dims().size()) {
        throw ShapeError("expected " + std::to_string(state.dims().size()) + " local unitaries, got " +
                         std::to_string(locals.size()));
    }
    std::vector<CMatrix> factors;
    factors.reserve(locals.size());
    for (std::size_t m = 0; m < locals.size(); ++m) {
        if (locals[m].dim() != state.dims()[m]) {
            throw ShapeError("local unitary " + std::to_string(m + 1) + " has dimension " +
                             std::to_string(locals[m].dim()) + ", party has " + std::to_string(state.dims()[m]));
        }
        factors.push_back(locals[m].matrix());
    }
    const CMatrix u = kron_all(factors);
    CMatrix rotated = u * state.matrix() * u.adjoint();
    return validate(std::move(rotated), state.dims()).with_label(state.label());
}

}  // namespace luinv
