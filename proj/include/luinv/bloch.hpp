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

#include <array>
#include <vector>

#include "luinv/states.hpp"
#include "luinv/types.hpp"

namespace luinv {

/// Name of the coefficient normalization used by decompose/reconstruct.
/// Coefficients are raw traces divided by 2 * (product of the untouched local
/// dimensions) per generator slot, so the expansion
///   rho = I/D + sum S g (x) I + sum T I (x) g + sum R g (x) g
/// holds exactly.
inline constexpr const char *kNormalizationTag = "exact-expansion";

/// Residue allowed on the imaginary part of coefficient traces.
inline constexpr double kCoefficientImagTolerance = 1e-11;

/// Bloch coefficients of a bipartite state.
struct BlochBipartite {
    std::array<int, 2> dims{};
    RVector s;  // d1^2 - 1
    RVector t;  // d2^2 - 1
    RMatrix r;  // (d1^2 - 1) x (d2^2 - 1)
};

/// Dense real 3-index array, row-major (first index slowest).
class Tensor3 {
   public:
    Tensor3() = default;
    Tensor3(int n1, int n2, int n3) : shape_{n1, n2, n3}, data_(static_cast<std::size_t>(n1) * n2 * n3, 0.0) {}

    const std::array<int, 3> &shape() const { return shape_; }
    int extent(int axis) const { return shape_[static_cast<std::size_t>(axis)]; }

    double &operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }

    const std::vector<double> &data() const { return data_; }

    friend bool operator==(const Tensor3 &, const Tensor3 &) = default;

   private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * shape_[1] + j) * shape_[2] + k;
    }

    std::array<int, 3> shape_{0, 0, 0};
    std::vector<double> data_;
};

/// Bloch coefficients of a tripartite state. Only T12, T13 and T23 are stored;
/// T31 is the transpose of T13.
struct BlochTripartite {
    std::array<int, 3> dims{};
    std::array<RVector, 3> s;  // s[m] has d_m^2 - 1 entries
    RMatrix t12;
    RMatrix t13;
    RMatrix t23;
    Tensor3 r;

    /// T_mn for 1-based parties m != n; (2,1), (3,1), (3,2) are transposes.
    RMatrix t(int m, int n) const;
};

BlochBipartite decompose2(const DensityMatrix &state);
BlochTripartite decompose3(const DensityMatrix &state);

DensityMatrix reconstruct2(const BlochBipartite &bloch);
DensityMatrix reconstruct3(const BlochTripartite &bloch);

/// Matricization R_{m|np} with party `pivot` (1, 2 or 3) as rows and the
/// remaining two parties in ascending order as Kronecker-ordered columns:
///   pivot 1: column j * n3 + k;  pivot 2: i * n3 + k;  pivot 3: i * n2 + j.
RMatrix unfold(const Tensor3 &r, int pivot);
RMatrix unfold(const BlochTripartite &bloch, int pivot);

/// Inverse of unfold.
Tensor3 refold(const RMatrix &unfolded, int pivot, const std::array<int, 3> &shape);

/// Row-major flattening of a matrix (first index major), the vector view of T_mn.
RVector vec(const RMatrix &m);

}  // namespace luinv
