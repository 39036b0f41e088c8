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

#include <optional>
#include <vector>

#include "luinv/bloch.hpp"
#include "luinv/fingerprint.hpp"
#include "luinv/states.hpp"

namespace luinv {

// LU invariants of a bipartite state built from its Bloch blocks S, T, R.
//
//   (i)   S^t (R R^t)^a S  and  S^t (R R^t)^a R T,   a = 0..d1^2 - 2
//   (ii)  T^t (R^t R)^a T,                           a = 0..d2^2 - 2
//   (iii) tr (R R^t)^b,                              b = 1..d1^2 - 1
//   (iv)  det R,                                     only when R is square
//
// Quadratic forms are evaluated by repeated mat-vec products, never by
// forming matrix powers; (iii) goes through the singular values of R.

std::vector<InvariantEntry> family_i(const RVector &s, const RMatrix &r, const RVector &t, int max_alpha);
std::vector<InvariantEntry> family_ii(const RVector &t, const RMatrix &r, int max_alpha);
std::vector<InvariantEntry> family_iii(const RMatrix &r, int max_beta);

/// det R if R is square, otherwise nullopt.
std::optional<InvariantEntry> family_iv(const RMatrix &r);

InvariantFingerprint fingerprint2(const BlochBipartite &bloch, const InvariantSettings &settings = {});
InvariantFingerprint fingerprint2(const DensityMatrix &state, const InvariantSettings &settings = {});

}  // namespace luinv
