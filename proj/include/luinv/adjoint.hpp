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

#pragma once

#include <span>

#include "luinv/generators.hpp"
#include "luinv/states.hpp"
#include "luinv/types.hpp"

namespace luinv {

inline constexpr double kUnitaryTolerance = 1e-10;

/// A d x d special unitary matrix (U U^dagger = I and det U = 1, both to 1e-10).
class LocalUnitary {
   public:
    /// Throws ValidationError (Unitarity / Determinant) if the checks fail.
    explicit LocalUnitary(CMatrix matrix);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const CMatrix &matrix() const { return matrix_; }

    LocalUnitary operator*(const LocalUnitary &other) const { return LocalUnitary(matrix_ * other.matrix_); }

   private:
    CMatrix matrix_;
};

/// Real rotation O with U g_i U^dagger = sum_j O_ij g_j, an element of SO(d^2 - 1).
struct AdjointRotation {
    int dim = 0;
    RMatrix matrix;
};

/// O_ij = tr(g_j U g_i U^dagger) / 2. Throws ShapeError on dimension mismatch
/// and NumericalError if the result is not orthogonal to 1e-10 or has
/// determinant off 1 by more than 1e-8.
AdjointRotation adjoint_of(const LocalUnitary &u, const GeneratorBasis &basis);
AdjointRotation adjoint_of(const LocalUnitary &u);

/// Haar-random element of SU(d): QR of a complex Ginibre matrix with the
/// diagonal phases of R absorbed into Q, then divided by the principal d-th
/// root of its determinant.
LocalUnitary haar_su(int d, RngSeed seed);

/// One Haar-random local unitary per party, each from its own derived seed.
std::vector<LocalUnitary> haar_locals(const Dims &dims, RngSeed seed);

/// (U_1 (x) ... (x) U_n) rho (U_1 (x) ... (x) U_n)^dagger.
DensityMatrix conjugate(const DensityMatrix &state, std::span<const LocalUnitary> locals);

}  // namespace luinv
