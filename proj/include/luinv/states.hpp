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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "luinv/types.hpp"

namespace luinv {

/// Tolerance for Hermiticity, unit trace and positivity of density matrices.
inline constexpr double kStateTolerance = 1e-10;

/// A validated bi- or tripartite density matrix. Immutable once built; the
/// only way to obtain one is `validate` (or an operation that calls it).
class DensityMatrix {
   public:
    const Dims &dims() const { return dims_; }
    int parties() const { return static_cast<int>(dims_.size()); }
    int dimension() const { return static_cast<int>(data_.rows()); }
    const CMatrix &matrix() const { return data_; }
    const std::string &label() const { return label_; }

    DensityMatrix with_label(std::string label) const;

   private:
    DensityMatrix(Dims dims, CMatrix data) : dims_(std::move(dims)), data_(std::move(data)) {}

    friend DensityMatrix validate(CMatrix matrix, Dims dims);

    Dims dims_;
    CMatrix data_;
    std::string label_;
};

/// Checks shape, Hermiticity, unit trace and positive semidefiniteness (each to
/// kStateTolerance) and wraps the matrix unchanged. Near-valid input is never
/// repaired. Throws DomainError for unsupported dims and ValidationError for
/// everything else, with the measured deviation attached.
DensityMatrix validate(CMatrix matrix, Dims dims);

/// GG^dagger / tr(GG^dagger) with G a D x rank matrix of standard complex
/// Gaussians drawn from `seed`.
DensityMatrix random_density(const Dims &dims, int rank, RngSeed seed);

/// Projector onto a (not necessarily normalized) pure state vector.
DensityMatrix pure_state(const Eigen::VectorXcd &amplitudes, const Dims &dims);

/// The state file is a JSON object {"dims": [...], "matrix": [[[re, im], ...], ...], "label": "..."}.
/// Parsing reports the offending location through ParseError.
DensityMatrix parse_state(std::istream &in);
DensityMatrix read_state(const std::filesystem::path &path);

void write_state(const DensityMatrix &state, std::ostream &out);
void write_state(const DensityMatrix &state, const std::filesystem::path &path);

}  // namespace luinv
