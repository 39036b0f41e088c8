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

// Reference states and brute-force oracles shared by the test suites. Nothing
// here goes through the library's partial traces, Krylov loops or SVD paths.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "luinv/luinv.hpp"

namespace luinv::testing {

inline CMatrix pauli(int which) {
    CMatrix m = CMatrix::Zero(2, 2);
    const Complex i(0.0, 1.0);
    switch (which) {
        case 0:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case 1:
            m << 0.0, -i, i, 0.0;
            break;
        default:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

inline Eigen::VectorXcd ket(const std::vector<int> &digits, const Dims &dims) {
    int index = 0;
    for (std::size_t m = 0; m < dims.size(); ++m) index = index * dims[m] + digits[m];
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(total_dimension(dims));
    v(index) = 1.0;
    return v;
}

inline DensityMatrix bell_state() {
    const Dims dims = {2, 2};
    return pure_state(ket({0, 0}, dims) + ket({1, 1}, dims), dims);
}

inline DensityMatrix product00() {
    const Dims dims = {2, 2};
    return pure_state(ket({0, 0}, dims), dims);
}

inline DensityMatrix maximally_mixed(const Dims &dims) {
    const int side = total_dimension(dims);
    return validate(CMatrix::Identity(side, side) / static_cast<double>(side), dims);
}

inline DensityMatrix ghz_state() {
    const Dims dims = {2, 2, 2};
    return pure_state(ket({0, 0, 0}, dims) + ket({1, 1, 1}, dims), dims);
}

inline DensityMatrix w_state() {
    const Dims dims = {2, 2, 2};
    return pure_state(ket({0, 0, 1}, dims) + ket({0, 1, 0}, dims) + ket({1, 0, 0}, dims), dims);
}

/// tr(rho (A_1 (x) ... (x) A_n)) with identities where `ops[m]` is null,
/// built as an explicit Kronecker product.
inline Complex brute_trace(const CMatrix &rho, const Dims &dims, const std::vector<const CMatrix *> &ops) {
    CMatrix full = CMatrix::Identity(1, 1);
    for (std::size_t m = 0; m < dims.size(); ++m) {
        const CMatrix factor = ops[m] ? *ops[m] : CMatrix::Identity(dims[m], dims[m]);
        full = Eigen::kroneckerProduct(full, factor).eval();
    }
    return (rho * full).trace();
}

/// Oracle Bloch coefficients from raw traces and the exact-expansion scaling.
struct OracleBipartite {
    RVector s, t;
    RMatrix r;
};

inline OracleBipartite oracle_bloch2(const DensityMatrix &state) {
    const Dims &d = state.dims();
    const GeneratorBasis b1 = build_basis(d[0]);
    const GeneratorBasis b2 = build_basis(d[1]);
    OracleBipartite o{RVector(b1.size()), RVector(b2.size()), RMatrix(b1.size(), b2.size())};
    for (int i = 0; i < b1.size(); ++i) o.s(i) = brute_trace(state.matrix(), d, {&b1[i], nullptr}).real() / (2.0 * d[1]);
    for (int j = 0; j < b2.size(); ++j) o.t(j) = brute_trace(state.matrix(), d, {nullptr, &b2[j]}).real() / (2.0 * d[0]);
    for (int i = 0; i < b1.size(); ++i)
        for (int j = 0; j < b2.size(); ++j) o.r(i, j) = brute_trace(state.matrix(), d, {&b1[i], &b2[j]}).real() / 4.0;
    return o;
}

inline BlochTripartite oracle_bloch3(const DensityMatrix &state) {
    const Dims &d = state.dims();
    const std::array<GeneratorBasis, 3> b = {build_basis(d[0]), build_basis(d[1]), build_basis(d[2])};
    const int side = total_dimension(d);
    BlochTripartite o;
    o.dims = {d[0], d[1], d[2]};
    for (int m = 0; m < 3; ++m) {
        const auto &bm = b[static_cast<std::size_t>(m)];
        RVector s(bm.size());
        for (int i = 0; i < bm.size(); ++i) {
            std::vector<const CMatrix *> ops(3, nullptr);
            ops[static_cast<std::size_t>(m)] = &bm[i];
            s(i) = brute_trace(state.matrix(), d, ops).real() / (2.0 * side / d[static_cast<std::size_t>(m)]);
        }
        o.s[static_cast<std::size_t>(m)] = s;
    }
    auto pair_block = [&](int m, int n) {
        const int rest = 3 - m - n;
        const auto &bm = b[static_cast<std::size_t>(m)];
        const auto &bn = b[static_cast<std::size_t>(n)];
        RMatrix t(bm.size(), bn.size());
        for (int i = 0; i < bm.size(); ++i)
            for (int j = 0; j < bn.size(); ++j) {
                std::vector<const CMatrix *> ops(3, nullptr);
                ops[static_cast<std::size_t>(m)] = &bm[i];
                ops[static_cast<std::size_t>(n)] = &bn[j];
                t(i, j) = brute_trace(state.matrix(), d, ops).real() / (4.0 * d[static_cast<std::size_t>(rest)]);
            }
        return t;
    };
    o.t12 = pair_block(0, 1);
    o.t13 = pair_block(0, 2);
    o.t23 = pair_block(1, 2);
    o.r = Tensor3(b[0].size(), b[1].size(), b[2].size());
    for (int i = 0; i < b[0].size(); ++i)
        for (int j = 0; j < b[1].size(); ++j)
            for (int k = 0; k < b[2].size(); ++k)
                o.r(i, j, k) = brute_trace(state.matrix(), d, {&b[0][i], &b[1][j], &b[2][k]}).real() / 8.0;
    return o;
}

/// Reorders the tensor factors of a state: new party q is old party perm[q].
inline DensityMatrix permute_parties(const DensityMatrix &state, const std::array<int, 3> &perm) {
    const Dims &d = state.dims();
    const Dims nd = {d[perm[0]], d[perm[1]], d[perm[2]]};
    const int side = total_dimension(d);
    auto remap = [&](int x) {
        std::array<int, 3> digits{};
        int rem = x;
        for (int m = 2; m >= 0; --m) {
            digits[m] = rem % d[m];
            rem /= d[m];
        }
        int y = 0;
        for (int q = 0; q < 3; ++q) y = y * nd[q] + digits[perm[q]];
        return y;
    };
    CMatrix out(side, side);
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) out(remap(x), remap(y)) = state.matrix()(x, y);
    return validate(out, nd);
}

/// tr((A A^t)^beta) by explicit matrix powers.
inline double power_trace(const RMatrix &a, int beta) {
    const RMatrix g = a * a.transpose();
    RMatrix p = RMatrix::Identity(g.rows(), g.cols());
    for (int q = 0; q < beta; ++q) p = p * g;
    return p.trace();
}

/// x^t M^p y with M formed explicitly.
inline double explicit_form(const RMatrix &m, const RVector &x, const RVector &y, int p) {
    RMatrix mp = RMatrix::Identity(m.rows(), m.cols());
    for (int q = 0; q < p; ++q) mp = mp * m;
    return x.dot(mp * y);
}

/// Coefficients c_0..c_{n-1} with M^n = sum_k c_k M^k (Cayley-Hamilton), from
/// the Faddeev-LeVerrier recursion.
inline std::vector<double> cayley_hamilton_coefficients(const RMatrix &m) {
    const auto n = m.rows();
    // char poly: x^n + a_{n-1} x^{n-1} + ... + a_0
    std::vector<double> a(static_cast<std::size_t>(n) + 1, 0.0);
    a[static_cast<std::size_t>(n)] = 1.0;
    RMatrix mk = RMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = m * mk + a[static_cast<std::size_t>(n - k + 1)] * RMatrix::Identity(n, n);
        a[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
    }
    std::vector<double> c(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = -a[static_cast<std::size_t>(k)];
    return c;
}

inline double max_abs(const RMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const CMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double tensor_max_diff(const Tensor3 &a, const Tensor3 &b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) out = std::max(out, std::abs(a.data()[i] - b.data()[i]));
    return out;
}

/// Kronecker product of real matrices.
inline RMatrix kron(const RMatrix &a, const RMatrix &b) { return Eigen::kroneckerProduct(a, b).eval(); }

}  // namespace luinv::testing
