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
#include <vector>

#include "luinv/types.hpp"

namespace luinv {

/// Generalized Gell-Mann matrices of SU(d) in canonical order.
///
/// Order: the d(d-1)/2 symmetric off-diagonal generators E_jk + E_kj (j < k,
/// lexicographic), then the antisymmetric ones -i E_jk + i E_kj in the same
/// order, then the d-1 diagonal ones
/// sqrt(2/(l(l+1))) (E_11 + ... + E_ll - l E_{l+1,l+1}), l = 1..d-1.
/// For d = 2 this is (sigma_x, sigma_y, sigma_z).
///
/// All generators are Hermitian, traceless and satisfy tr(g_i g_j) = 2 delta_ij.
/// Indices are 0-based throughout the library.
class GeneratorBasis {
   public:
    explicit GeneratorBasis(int dim);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(matrices_.size()); }
    const CMatrix &operator[](int index) const { return matrices_[static_cast<std::size_t>(index)]; }
    std::span<const CMatrix> matrices() const { return matrices_; }

   private:
    int dim_;
    std::vector<CMatrix> matrices_;
};

/// Builds the basis for SU(d). Throws DomainError for d < 2.
GeneratorBasis build_basis(int d);

/// Process-wide cached basis; identical to build_basis(d). Thread-safe.
const GeneratorBasis &cached_basis(int d);

/// Expansion coefficient tr(A g_index) / 2 of a Hermitian matrix A.
/// Throws ValidationError if A is not Hermitian to 1e-10 and NumericalError if
/// the trace has an imaginary part above 1e-12.
double expand_coefficient(const CMatrix &a, const GeneratorBasis &basis, int index);

}  // namespace luinv
