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

#include "luinv/linalg.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "luinv/errors.hpp"

namespace luinv {

CMatrix partial_trace(const CMatrix &rho, const Dims &dims, const std::vector<int> &keep) {
    const int n = static_cast<int>(dims.size());
    const int side = total_dimension(dims);
    if (rho.rows() != side || rho.cols() != side) {
        throw ShapeError("partial_trace: matrix side does not match dims");
    }
    std::vector<bool> kept(dims.size(), false);
    int kept_side = 1;
    for (int m : keep) {
        if (m < 0 || m >= n || kept[static_cast<std::size_t>(m)]) {
            throw DomainError("partial_trace: invalid party index " + std::to_string(m));
        }
        kept[static_cast<std::size_t>(m)] = true;
        kept_side *= dims[static_cast<std::size_t>(m)];
    }

    // Split a global index into (kept index, traced index), both row-major.
    std::vector<int> kept_index(static_cast<std::size_t>(side));
    std::vector<int> traced_index(static_cast<std::size_t>(side));
    std::vector<int> digits(dims.size());
    for (int x = 0; x < side; ++x) {
        int rem = x;
        for (int m = n - 1; m >= 0; --m) {
            digits[static_cast<std::size_t>(m)] = rem % dims[static_cast<std::size_t>(m)];
            rem /= dims[static_cast<std::size_t>(m)];
        }
        int k = 0;
        int t = 0;
        for (int m = 0; m < n; ++m) {
            const auto um = static_cast<std::size_t>(m);
            if (kept[um]) {
                k = k * dims[um] + digits[um];
            } else {
                t = t * dims[um] + digits[um];
            }
        }
        kept_index[static_cast<std::size_t>(x)] = k;
        traced_index[static_cast<std::size_t>(x)] = t;
    }

    CMatrix out = CMatrix::Zero(kept_side, kept_side);
    for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
            if (traced_index[static_cast<std::size_t>(x)] == traced_index[static_cast<std::size_t>(y)]) {
                out(kept_index[static_cast<std::size_t>(x)], kept_index[static_cast<std::size_t>(y)]) += rho(x, y);
            }
        }
    }
    return out;
}

CMatrix kron_all(std::span<const CMatrix> factors) {
    if (factors.empty()) {
        return CMatrix::Identity(1, 1);
    }
    CMatrix acc = factors.front();
    for (std::size_t m = 1; m < factors.size(); ++m) {
        acc = Eigen::kroneckerProduct(acc, factors[m]).eval();
    }
    return acc;
}

std::vector<double> krylov_forms(const RMatrix &a, const RVector &x, const RVector &y, int max_power) {
    if (x.size() != a.rows() || y.size() != a.rows()) {
        throw ShapeError("krylov_forms: vectors must have length " + std::to_string(a.rows()));
    }
    std::vector<double> out;
    if (max_power < 0) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(max_power) + 1);
    RVector w = y;
    for (int p = 0; p <= max_power; ++p) {
        out.push_back(x.dot(w));
        if (p < max_power) {
            const RVector tmp = a.transpose() * w;
            w = a * tmp;
        }
    }
    return out;
}

std::vector<RVector> krylov_vectors(const RMatrix &a, const RVector &x, int max_power) {
    if (x.size() != a.rows()) {
        throw ShapeError("krylov_vectors: vector must have length " + std::to_string(a.rows()));
    }
    std::vector<RVector> out;
    RVector w = x;
    for (int p = 0; p <= max_power; ++p) {
        out.push_back(w);
        const RVector tmp = a.transpose() * w;
        w = a * tmp;
    }
    return out;
}

std::vector<double> singular_power_sums(const RMatrix &a, int max_beta) {
    std::vector<double> out;
    if (max_beta < 1) {
        return out;
    }
    RVector sq;
    if (a.size() > 0) {
        Eigen::BDCSVD<RMatrix> svd(a);
        sq = svd.singularValues().array().square();
    }
    RVector power = RVector::Ones(sq.size());
    for (int beta = 1; beta <= max_beta; ++beta) {
        power = power.cwiseProduct(sq);
        out.push_back(power.sum());
    }
    return out;
}

}  // namespace luinv
