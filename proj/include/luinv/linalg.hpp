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

/// Reduced matrix on the parties listed in `keep` (0-based, ascending).
CMatrix partial_trace(const CMatrix &rho, const Dims &dims, const std::vector<int> &keep);

/// Kronecker product of the given factors, left to right.
CMatrix kron_all(std::span<const CMatrix> factors);

/// x^t (A A^t)^p y for p = 0..max_power, by repeated mat-vec products.
/// Requires x.size() == y.size() == A.rows().
std::vector<double> krylov_forms(const RMatrix &a, const RVector &x, const RVector &y, int max_power);

/// The Krylov vectors (A A^t)^p x for p = 0..max_power.
std::vector<RVector> krylov_vectors(const RMatrix &a, const RVector &x, int max_power);

/// sum_i sigma_i^(2 beta) over the singular values of A, for beta = 1..max_beta.
/// Equals tr((A A^t)^beta).
std::vector<double> singular_power_sums(const RMatrix &a, int max_beta);

}  // namespace luinv
