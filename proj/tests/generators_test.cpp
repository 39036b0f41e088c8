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

#include "luinv/generators.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace luinv;
using luinv::testing::max_abs;
using luinv::testing::pauli;

TEST(generators, rejects_small_dimension) {
    EXPECT_THROW(build_basis(1), DomainError);
    EXPECT_THROW(build_basis(0), DomainError);
    try {
        build_basis(1);
    } catch (const DomainError &e) {
        EXPECT_STREQ(e.what(), "dimension must be at least 2");
    }
}

TEST(generators, qubit_basis_is_pauli_xyz) {
    const GeneratorBasis b = build_basis(2);
    ASSERT_EQ(b.size(), 3);
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(max_abs(CMatrix(b[k] - pauli(k))), 0.0) << "generator " << k;
    }
}

TEST(generators, pairwise_hilbert_schmidt_orthogonality) {
    for (int d = 2; d <= 5; ++d) {
        const GeneratorBasis b = build_basis(d);
        ASSERT_EQ(b.size(), d * d - 1);
        for (int i = 0; i < b.size(); ++i) {
            EXPECT_LE(max_abs(CMatrix(b[i] - b[i].adjoint())), 1e-14);
            EXPECT_LE(std::abs(b[i].trace()), 1e-14);
            for (int j = 0; j < b.size(); ++j) {
                const Complex tr = (b[i] * b[j]).trace();
                EXPECT_NEAR(tr.real(), i == j ? 2.0 : 0.0, 1e-13) << "d=" << d << " (" << i << "," << j << ")";
                EXPECT_NEAR(tr.imag(), 0.0, 1e-13);
            }
        }
    }
}

TEST(generators, gell_mann_d3_ordering) {
    const GeneratorBasis b = build_basis(3);
    const Complex i(0.0, 1.0);
    // Symmetric (0,1), (0,2), (1,2); antisymmetric same order; then diagonals.
    EXPECT_EQ(b[0](0, 1), Complex(1.0));
    EXPECT_EQ(b[1](0, 2), Complex(1.0));
    EXPECT_EQ(b[2](1, 2), Complex(1.0));
    EXPECT_EQ(b[3](0, 1), -i);
    EXPECT_EQ(b[3](1, 0), i);
    EXPECT_EQ(b[5](2, 1), i);
    EXPECT_DOUBLE_EQ(b[6](0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(b[6](1, 1).real(), -1.0);
    EXPECT_NEAR(b[7](0, 0).real(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(b[7](2, 2).real(), -2.0 / std::sqrt(3.0), 1e-15);
}

TEST(generators, deterministic_and_cached) {
    for (int d = 2; d <= 4; ++d) {
        const GeneratorBasis a = build_basis(d);
        const GeneratorBasis b = build_basis(d);
        const GeneratorBasis &c = cached_basis(d);
        for (int k = 0; k < a.size(); ++k) {
            EXPECT_TRUE((a[k].array() == b[k].array()).all());
            EXPECT_TRUE((a[k].array() == c[k].array()).all());
        }
    }
}

TEST(generators, expand_coefficient_examples) {
    const GeneratorBasis b = build_basis(3);
    for (int k = 0; k < b.size(); ++k) {
        EXPECT_NEAR(expand_coefficient(b[k], b, k), 1.0, 1e-15);
        EXPECT_EQ(expand_coefficient(CMatrix::Identity(3, 3), b, k), 0.0);
    }
    const GeneratorBasis q = build_basis(2);
    const CMatrix a = pauli(0) + 2.0 * pauli(2);
    EXPECT_DOUBLE_EQ(expand_coefficient(a, q, 2), 2.0);
    EXPECT_DOUBLE_EQ(expand_coefficient(a, q, 0), 1.0);
    EXPECT_DOUBLE_EQ(expand_coefficient(a, q, 1), 0.0);
}

TEST(generators, expand_coefficient_errors) {
    const GeneratorBasis b = build_basis(2);
    CMatrix not_hermitian = CMatrix::Zero(2, 2);
    not_hermitian(0, 1) = 1.0;
    EXPECT_THROW(expand_coefficient(not_hermitian, b, 0), ValidationError);
    EXPECT_THROW(expand_coefficient(pauli(0), b, 3), DomainError);
    EXPECT_THROW(expand_coefficient(pauli(0), b, -1), DomainError);
    EXPECT_THROW(expand_coefficient(CMatrix::Identity(3, 3), b, 0), ShapeError);
}

TEST(generators, expansion_reconstructs_random_hermitian) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal;
    for (int d = 2; d <= 5; ++d) {
        const GeneratorBasis b = build_basis(d);
        for (int trial = 0; trial < 20; ++trial) {
            CMatrix g(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) g(r, c) = Complex(normal(rng), normal(rng));
            const CMatrix a = g + g.adjoint();
            CMatrix rebuilt = a.trace() / static_cast<double>(d) * CMatrix::Identity(d, d);
            for (int k = 0; k < b.size(); ++k) rebuilt += expand_coefficient(a, b, k) * b[k];
            EXPECT_LE(max_abs(CMatrix(rebuilt - a)), 1e-12) << "d=" << d;
        }
    }
}
