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

#include "luinv/invariants_bipartite.hpp"

#include <string>

#include "luinv/errors.hpp"
#include "luinv/linalg.hpp"
#include "settings.hpp"

namespace luinv {

namespace {

void append_series(std::vector<InvariantEntry> &out, const char *family, const char *tag, const char *power_name,
                   int first_power, const std::vector<double> &values) {
    for (std::size_t p = 0; p < values.size(); ++p) {
        out.push_back({{family, tag, power_name, first_power + static_cast<int>(p)}, values[p]});
    }
}

}  // namespace

std::vector<InvariantEntry> family_i(const RVector &s, const RMatrix &r, const RVector &t, int max_alpha) {
    if (s.size() != r.rows() || t.size() != r.cols()) {
        throw ShapeError("family (i): S, R, T shapes are inconsistent");
    }
    std::vector<InvariantEntry> out;
    append_series(out, "T1.i", "SS", "alpha", 0, krylov_forms(r, s, s, max_alpha));
    const RVector rt = r * t;
    append_series(out, "T1.i", "SRT", "alpha", 0, krylov_forms(r, s, rt, max_alpha));
    return out;
}

std::vector<InvariantEntry> family_ii(const RVector &t, const RMatrix &r, int max_alpha) {
    if (t.size() != r.cols()) {
        throw ShapeError("family (ii): T and R shapes are inconsistent");
    }
    std::vector<InvariantEntry> out;
    const RMatrix rt = r.transpose();
    append_series(out, "T1.ii", "TT", "alpha", 0, krylov_forms(rt, t, t, max_alpha));
    return out;
}

std::vector<InvariantEntry> family_iii(const RMatrix &r, int max_beta) {
    std::vector<InvariantEntry> out;
    append_series(out, "T1.iii", "", "beta", 1, singular_power_sums(r, max_beta));
    return out;
}

std::optional<InvariantEntry> family_iv(const RMatrix &r) {
    if (r.rows() != r.cols()) {
        return std::nullopt;
    }
    return InvariantEntry{{"T1.iv", "det", "", 0}, r.determinant()};
}

InvariantFingerprint fingerprint2(const BlochBipartite &bloch, const InvariantSettings &settings) {
    const int n1 = generator_count(bloch.dims[0]);
    const int n2 = generator_count(bloch.dims[1]);
    const int alpha_i = detail::resolve_alpha(settings, n1 - 1);
    const int alpha_ii = detail::resolve_alpha(settings, n2 - 1);
    const int beta_iii = detail::resolve_beta(settings, n1);

    FingerprintMetadata meta;
    meta.dims = {bloch.dims[0], bloch.dims[1]};
    meta.convention = kNormalizationTag;
    meta.power_limits = {{"T1.i", alpha_i}, {"T1.ii", alpha_ii}, {"T1.iii", beta_iii}};

    std::vector<InvariantEntry> entries = family_i(bloch.s, bloch.r, bloch.t, alpha_i);
    for (auto &e : family_ii(bloch.t, bloch.r, alpha_ii)) entries.push_back(std::move(e));
    for (auto &e : family_iii(bloch.r, beta_iii)) entries.push_back(std::move(e));
    if (auto det = family_iv(bloch.r)) {
        entries.push_back(std::move(*det));
    } else {
        meta.not_applicable.push_back("T1.iv");
    }
    return InvariantFingerprint(std::move(meta), std::move(entries));
}

InvariantFingerprint fingerprint2(const DensityMatrix &state, const InvariantSettings &settings) {
    return fingerprint2(decompose2(state), settings);
}

}  // namespace luinv
