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

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "luinv/errors.hpp"

namespace luinv {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kImagResidueTolerance = 1e-12;

}  // namespace

GeneratorBasis::GeneratorBasis(int dim) : dim_(dim) {
    if (dim < 2) {
        throw DomainError("dimension must be at least 2");
    }
    matrices_.reserve(static_cast<std::size_t>(generator_count(dim)));
    const Complex i_unit(0.0, 1.0);

    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            CMatrix g = CMatrix::Zero(dim, dim);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            matrices_.push_back(std::move(g));
        }
    }
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            CMatrix g = CMatrix::Zero(dim, dim);
            g(j, k) = -i_unit;
            g(k, j) = i_unit;
            matrices_.push_back(std::move(g));
        }
    }
    for (int l = 1; l < dim; ++l) {
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        CMatrix g = CMatrix::Zero(dim, dim);
        for (int m = 0; m < l; ++m) {
            g(m, m) = scale;
        }
        g(l, l) = -scale * l;
        matrices_.push_back(std::move(g));
    }
}

GeneratorBasis build_basis(int d) { return GeneratorBasis(d); }

const GeneratorBasis &cached_basis(int d) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const GeneratorBasis>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) {
        it = cache.emplace(d, std::make_unique<const GeneratorBasis>(d)).first;
    }
    return *it->second;
}

double expand_coefficient(const CMatrix &a, const GeneratorBasis &basis, int index) {
    if (a.rows() != basis.dim() || a.cols() != basis.dim()) {
        throw ShapeError("matrix side " + std::to_string(a.rows()) + " does not match basis dimension " +
                         std::to_string(basis.dim()));
    }
    if (index < 0 || index >= basis.size()) {
        throw DomainError("generator index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(basis.size()) + ")");
    }
    const double asym = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw ValidationError(ValidationKind::Hermiticity, asym,
                              "matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    const Complex trace = (a * basis[index]).trace();
    if (std::abs(trace.imag()) > kImagResidueTolerance) {
        throw NumericalError(std::abs(trace.imag()), "imaginary residue in expansion coefficient");
    }
    return trace.real() / 2.0;
}

}  // namespace luinv
