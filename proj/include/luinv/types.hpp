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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace luinv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Local dimensions (d_1, ..., d_n) of a multipartite system.
using Dims = std::vector<int>;

/// Seed for every random generator in the library. Same seed, same stream.
struct RngSeed {
    std::uint64_t value = 0;
};

/// Mixes a base seed with a stream index (splitmix64 finalizer), used to give
/// each party / trial its own independent-looking stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Product of the local dimensions.
int total_dimension(const Dims &dims);

/// Number of generators of SU(d), d^2 - 1.
inline int generator_count(int d) { return d * d - 1; }

}  // namespace luinv
