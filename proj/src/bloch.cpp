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

#include "luinv/bloch.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "luinv/errors.hpp"
#include "luinv/generators.hpp"
#include "luinv/linalg.hpp"

namespace luinv {

namespace {

// tr(X Y) without forming the product.
Complex trace_of_product(const CMatrix &x, const CMatrix &y) { return x.cwiseProduct(y.transpose()).sum(); }

double real_trace(const CMatrix &reduced, const CMatrix &op, double scale) {
    const Complex tr = trace_of_product(reduced, op);
    if (std::abs(tr.imag()) > kCoefficientImagTolerance) {
        throw NumericalError(std::abs(tr.imag()),
                             "coefficient trace has imaginary residue " + std::to_string(tr.imag()) +
                                 " (input is not Hermitian?)");
    }
    return tr.real() / scale;
}

void require_parties(const DensityMatrix &state, int parties) {
    if (state.parties() != parties) {
        throw ShapeError("expected a " + std::to_string(parties) + "-party state, got " +
                         std::to_string(state.parties()) + " parties");
    }
}

int axis_of_pivot(int pivot) {
    if (pivot < 1 || pivot > 3) {
        throw DomainError("pivot must be 1, 2 or 3, got " + std::to_string(pivot));
    }
    return pivot - 1;
}

void require_vector(const RVector &v, int size, const char *name) {
    if (v.size() != size) {
        throw ShapeError(std::string(name) + " has length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(size));
    }
}

void require_matrix(const RMatrix &m, int rows, int cols, const char *name) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ShapeError(std::string(name) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

RMatrix BlochTripartite::t(int m, int n) const {
    if (m == 1 && n == 2) return t12;
    if (m == 1 && n == 3) return t13;
    if (m == 2 && n == 3) return t23;
    if (m == 2 && n == 1) return t12.transpose();
    if (m == 3 && n == 1) return t13.transpose();
    if (m == 3 && n == 2) return t23.transpose();
    throw DomainError("invalid party pair (" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

BlochBipartite decompose2(const DensityMatrix &state) {
    require_parties(state, 2);
    const Dims &dims = state.dims();
    const int d1 = dims[0];
    const int d2 = dims[1];
    const GeneratorBasis &b1 = cached_basis(d1);
    const GeneratorBasis &b2 = cached_basis(d2);

    const CMatrix rho1 = partial_trace(state.matrix(), dims, {0});
    const CMatrix rho2 = partial_trace(state.matrix(), dims, {1});

    BlochBipartite out;
    out.dims = {d1, d2};
    out.s.resize(b1.size());
    out.t.resize(b2.size());
    out.r.resize(b1.size(), b2.size());
    for (int i = 0; i < b1.size(); ++i) {
        out.s(i) = real_trace(rho1, b1[i], 2.0 * d2);
    }
    for (int j = 0; j < b2.size(); ++j) {
        out.t(j) = real_trace(rho2, b2[j], 2.0 * d1);
    }
    for (int i = 0; i < b1.size(); ++i) {
        for (int j = 0; j < b2.size(); ++j) {
            const CMatrix op = Eigen::kroneckerProduct(b1[i], b2[j]).eval();
            out.r(i, j) = real_trace(state.matrix(), op, 4.0);
        }
    }
    return out;
}

BlochTripartite decompose3(const DensityMatrix &state) {
    require_parties(state, 3);
    const Dims &dims = state.dims();
    const std::array<const GeneratorBasis *, 3> basis = {&cached_basis(dims[0]), &cached_basis(dims[1]),
                                                         &cached_basis(dims[2])};

    BlochTripartite out;
    out.dims = {dims[0], dims[1], dims[2]};

    for (int m = 0; m < 3; ++m) {
        const CMatrix reduced = partial_trace(state.matrix(), dims, {m});
        const double scale = 2.0 * state.dimension() / dims[static_cast<std::size_t>(m)];
        const GeneratorBasis &bm = *basis[static_cast<std::size_t>(m)];
        RVector s(bm.size());
        for (int i = 0; i < bm.size(); ++i) {
            s(i) = real_trace(reduced, bm[i], scale);
        }
        out.s[static_cast<std::size_t>(m)] = std::move(s);
    }

    auto pair_block = [&](int m, int n) {
        const int rest = 3 - m - n;
        const CMatrix reduced = partial_trace(state.matrix(), dims, {m, n});
        const GeneratorBasis &bm = *basis[static_cast<std::size_t>(m)];
        const GeneratorBasis &bn = *basis[static_cast<std::size_t>(n)];
        const double scale = 4.0 * dims[static_cast<std::size_t>(rest)];
        RMatrix t(bm.size(), bn.size());
        for (int i = 0; i < bm.size(); ++i) {
            for (int j = 0; j < bn.size(); ++j) {
                const CMatrix op = Eigen::kroneckerProduct(bm[i], bn[j]).eval();
                t(i, j) = real_trace(reduced, op, scale);
            }
        }
        return t;
    };
    out.t12 = pair_block(0, 1);
    out.t13 = pair_block(0, 2);
    out.t23 = pair_block(1, 2);

    const GeneratorBasis &b1 = *basis[0];
    const GeneratorBasis &b2 = *basis[1];
    const GeneratorBasis &b3 = *basis[2];
    out.r = Tensor3(b1.size(), b2.size(), b3.size());
    for (int j = 0; j < b2.size(); ++j) {
        for (int k = 0; k < b3.size(); ++k) {
            const CMatrix tail = Eigen::kroneckerProduct(b2[j], b3[k]).eval();
            for (int i = 0; i < b1.size(); ++i) {
                const CMatrix op = Eigen::kroneckerProduct(b1[i], tail).eval();
                out.r(i, j, k) = real_trace(state.matrix(), op, 8.0);
            }
        }
    }
    return out;
}

DensityMatrix reconstruct2(const BlochBipartite &bloch) {
    const int d1 = bloch.dims[0];
    const int d2 = bloch.dims[1];
    const GeneratorBasis &b1 = cached_basis(d1);
    const GeneratorBasis &b2 = cached_basis(d2);
    require_vector(bloch.s, b1.size(), "S");
    require_vector(bloch.t, b2.size(), "T");
    require_matrix(bloch.r, b1.size(), b2.size(), "R");

    const CMatrix id1 = CMatrix::Identity(d1, d1);
    const CMatrix id2 = CMatrix::Identity(d2, d2);
    CMatrix local1 = CMatrix::Zero(d1, d1);
    for (int i = 0; i < b1.size(); ++i) {
        local1 += bloch.s(i) * b1[i];
    }
    CMatrix local2 = CMatrix::Zero(d2, d2);
    for (int j = 0; j < b2.size(); ++j) {
        local2 += bloch.t(j) * b2[j];
    }
    CMatrix rho = CMatrix::Identity(d1 * d2, d1 * d2) / static_cast<double>(d1 * d2);
    rho += Eigen::kroneckerProduct(local1, id2);
    rho += Eigen::kroneckerProduct(id1, local2);
    for (int i = 0; i < b1.size(); ++i) {
        CMatrix right = CMatrix::Zero(d2, d2);
        for (int j = 0; j < b2.size(); ++j) {
            right += bloch.r(i, j) * b2[j];
        }
        rho += Eigen::kroneckerProduct(b1[i], right);
    }
    return validate(std::move(rho), {d1, d2});
}

DensityMatrix reconstruct3(const BlochTripartite &bloch) {
    const Dims dims = {bloch.dims[0], bloch.dims[1], bloch.dims[2]};
    std::array<const GeneratorBasis *, 3> basis{};
    std::array<CMatrix, 3> id;
    for (std::size_t m = 0; m < 3; ++m) {
        basis[m] = &cached_basis(dims[m]);
        id[m] = CMatrix::Identity(dims[m], dims[m]);
        require_vector(bloch.s[m], basis[m]->size(), "S");
    }
    require_matrix(bloch.t12, basis[0]->size(), basis[1]->size(), "T12");
    require_matrix(bloch.t13, basis[0]->size(), basis[2]->size(), "T13");
    require_matrix(bloch.t23, basis[1]->size(), basis[2]->size(), "T23");
    if (bloch.r.shape() != std::array<int, 3>{basis[0]->size(), basis[1]->size(), basis[2]->size()}) {
        throw ShapeError("R has the wrong shape for dims");
    }

    // Contracts coefficients against generators: sum_i c_i g_i.
    auto combine = [](const GeneratorBasis &b, auto coefficient) {
        CMatrix acc = CMatrix::Zero(b.dim(), b.dim());
        for (int i = 0; i < b.size(); ++i) {
            acc += coefficient(i) * b[i];
        }
        return acc;
    };
    auto kron3 = [](const CMatrix &a, const CMatrix &b, const CMatrix &c) {
        return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval()).eval();
    };

    const int side = total_dimension(dims);
    CMatrix rho = CMatrix::Identity(side, side) / static_cast<double>(side);

    const std::array<CMatrix, 3> local = {
        combine(*basis[0], [&](int i) { return bloch.s[0](i); }),
        combine(*basis[1], [&](int i) { return bloch.s[1](i); }),
        combine(*basis[2], [&](int i) { return bloch.s[2](i); }),
    };
    rho += kron3(local[0], id[1], id[2]);
    rho += kron3(id[0], local[1], id[2]);
    rho += kron3(id[0], id[1], local[2]);

    for (int i = 0; i < basis[0]->size(); ++i) {
        const CMatrix in2 = combine(*basis[1], [&](int j) { return bloch.t12(i, j); });
        const CMatrix in3 = combine(*basis[2], [&](int k) { return bloch.t13(i, k); });
        rho += kron3((*basis[0])[i], in2, id[2]);
        rho += kron3((*basis[0])[i], id[1], in3);
    }
    for (int j = 0; j < basis[1]->size(); ++j) {
        const CMatrix in3 = combine(*basis[2], [&](int k) { return bloch.t23(j, k); });
        rho += kron3(id[0], (*basis[1])[j], in3);
    }
    for (int i = 0; i < basis[0]->size(); ++i) {
        for (int j = 0; j < basis[1]->size(); ++j) {
            const CMatrix in3 = combine(*basis[2], [&](int k) { return bloch.r(i, j, k); });
            rho += kron3((*basis[0])[i], (*basis[1])[j], in3);
        }
    }
    return validate(std::move(rho), dims);
}

RMatrix unfold(const Tensor3 &r, int pivot) {
    const int axis = axis_of_pivot(pivot);
    const auto [n1, n2, n3] = r.shape();
    RMatrix out;
    switch (axis) {
        case 0:
            out.resize(n1, n2 * n3);
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    for (int k = 0; k < n3; ++k) out(i, j * n3 + k) = r(i, j, k);
            break;
        case 1:
            out.resize(n2, n1 * n3);
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    for (int k = 0; k < n3; ++k) out(j, i * n3 + k) = r(i, j, k);
            break;
        default:
            out.resize(n3, n1 * n2);
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    for (int k = 0; k < n3; ++k) out(k, i * n2 + j) = r(i, j, k);
            break;
    }
    return out;
}

RMatrix unfold(const BlochTripartite &bloch, int pivot) { return unfold(bloch.r, pivot); }

Tensor3 refold(const RMatrix &unfolded, int pivot, const std::array<int, 3> &shape) {
    const int axis = axis_of_pivot(pivot);
    const auto [n1, n2, n3] = shape;
    const std::array<std::array<int, 2>, 3> expected = {{{n1, n2 * n3}, {n2, n1 * n3}, {n3, n1 * n2}}};
    const auto &e = expected[static_cast<std::size_t>(axis)];
    require_matrix(unfolded, e[0], e[1], "unfolded R");
    Tensor3 r(n1, n2, n3);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (int k = 0; k < n3; ++k) {
                switch (axis) {
                    case 0:
                        r(i, j, k) = unfolded(i, j * n3 + k);
                        break;
                    case 1:
                        r(i, j, k) = unfolded(j, i * n3 + k);
                        break;
                    default:
                        r(i, j, k) = unfolded(k, i * n2 + j);
                        break;
                }
            }
    return r;
}

RVector vec(const RMatrix &m) {
    RVector out(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i * m.cols() + j) = m(i, j);
        }
    }
    return out;
}

}  // namespace luinv
