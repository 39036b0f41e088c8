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

#include <map>
#include <string>
#include <vector>

#include "luinv/bloch.hpp"
#include "luinv/fingerprint.hpp"
#include "luinv/states.hpp"

namespace luinv {

/// Resolved power ranges for a tripartite fingerprint, keyed "<family>.<tag>"
/// exactly as they appear in FingerprintMetadata::power_limits.
std::map<std::string, int> tripartite_power_limits(const std::array<int, 3> &dims,
                                                   const InvariantSettings &settings);

/// Quadratic forms over the three unfoldings. For pivot m with remaining
/// parties n < p and R = R_{m|np}:
///   S_m^t (R R^t)^a S_m,  S_m^t (R R^t)^a R vec(T_np)   (tags "Sm-Sm", "Sm-RTnp")
///   vec(T_np)^t (R^t R)^a vec(T_np)                      (tag  "Tnp-Tnp")
std::vector<InvariantEntry> theorem2_family_i(const BlochTripartite &bloch, const InvariantSettings &settings = {});

/// Power sums of squared singular values of each unfolding R_{m|np} and of
/// each pair block T_mn viewed as a matrix.
std::vector<InvariantEntry> theorem2_family_ii(const BlochTripartite &bloch, const InvariantSettings &settings = {});

/// S_1^t (T12 T12^t)^a S_1, S_2^t (T23 T23^t)^a S_2, S_3^t (T31 T31^t)^a S_3
/// with T31 = T13^t (family "T3.i"), plus det T_mn for every square block
/// (family "T3.ii").
std::vector<InvariantEntry> theorem3_family(const BlochTripartite &bloch, const InvariantSettings &settings = {});

InvariantFingerprint fingerprint3(const BlochTripartite &bloch, const InvariantSettings &settings = {});
InvariantFingerprint fingerprint3(const DensityMatrix &state, const InvariantSettings &settings = {});

/// Dispatches on the number of parties.
InvariantFingerprint fingerprint(const DensityMatrix &state, const InvariantSettings &settings = {});

}  // namespace luinv
