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

#include "luinv/invariants_tripartite.hpp"

#include <string>

#include "luinv/errors.hpp"
#include "luinv/invariants_bipartite.hpp"
#include "luinv/linalg.hpp"
#include "settings.hpp"

namespace luinv {

namespace {

struct Pivot {
    int m;  // 1-based pivot party
    int n;  // remaining parties, ascending
    int p;
};

constexpr std::array<Pivot, 3> kPivots = {{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}}};

std::string party(int m) { return std::to_string(m); }

std::string pair(int m, int n) { return party(m) + party(n); }

std::string unfolding_tag(const Pivot &pv) { return "R" + party(pv.m) + "|" + pair(pv.n, pv.p); }

void append_series(std::vector<InvariantEntry> &out, const std::string &family, const std::string &tag,
                   const char *power_name, int first_power, const std::vector<double> &values) {
    for (std::size_t q = 0; q < values.size(); ++q) {
        out.push_back({{family, tag, power_name, first_power + static_cast<int>(q)}, values[q]});
    }
}

void check_shapes(const BlochTripartite &b) {
    const int n1 = generator_count(b.dims[0]);
    const int n2 = generator_count(b.dims[1]);
    const int n3 = generator_count(b.dims[2]);
    const bool ok = b.s[0].size() == n1 && b.s[1].size() == n2 && b.s[2].size() == n3 && b.t12.rows() == n1 &&
                    b.t12.cols() == n2 && b.t13.rows() == n1 && b.t13.cols() == n3 && b.t23.rows() == n2 &&
                    b.t23.cols() == n3 && b.r.shape() == std::array<int, 3>{n1, n2, n3};
    if (!ok) {
        throw ShapeError("tripartite Bloch blocks do not match dims");
    }
}

int limit(const std::map<std::string, int> &limits, const std::string &key) { return limits.at(key); }

}  // namespace

std::map<std::string, int> tripartite_power_limits(const std::array<int, 3> &dims, const InvariantSettings &settings) {
    const std::array<int, 3> n = {generator_count(dims[0]), generator_count(dims[1]), generator_count(dims[2])};
    auto gens = [&](int m) { return n[static_cast<std::size_t>(m - 1)]; };

    std::map<std::string, int> out;
    for (const Pivot &pv : kPivots) {
        out["T2.i.S" + party(pv.m)] = detail::resolve_alpha(settings, gens(pv.m) - 1);
        out["T2.i.T" + pair(pv.n, pv.p)] = detail::resolve_alpha(settings, gens(pv.n) * gens(pv.p) - 2);
        out["T2.ii." + unfolding_tag(pv)] = detail::resolve_beta(settings, gens(pv.m));
    }
    for (const auto &[m, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        out["T2.ii.T" + pair(m, k)] = detail::resolve_beta(settings, gens(m) * gens(k) - 1);
    }
    out["T3.i.S1-T12"] = detail::resolve_alpha(settings, gens(1) - 1);
    out["T3.i.S2-T23"] = detail::resolve_alpha(settings, gens(2) - 1);
    out["T3.i.S3-T31"] = detail::resolve_alpha(settings, gens(3) - 1);
    return out;
}

std::vector<InvariantEntry> theorem2_family_i(const BlochTripartite &bloch, const InvariantSettings &settings) {
    check_shapes(bloch);
    const auto limits = tripartite_power_limits(bloch.dims, settings);
    std::vector<InvariantEntry> out;
    for (const Pivot &pv : kPivots) {
        const RMatrix r = unfold(bloch, pv.m);
        const RVector &s = bloch.s[static_cast<std::size_t>(pv.m - 1)];
        const RVector t = vec(bloch.t(pv.n, pv.p));
        const std::string sm = "S" + party(pv.m);
        const std::string tnp = "T" + pair(pv.n, pv.p);

        const int alpha_s = limit(limits, "T2.i." + sm);
        append_series(out, "T2.i", sm + "-" + sm, "alpha", 0, krylov_forms(r, s, s, alpha_s));
        const RVector rt = r * t;
        append_series(out, "T2.i", sm + "-R" + tnp, "alpha", 0, krylov_forms(r, s, rt, alpha_s));

        const RMatrix rtr = r.transpose();
        append_series(out, "T2.i", tnp + "-" + tnp, "alpha", 0,
                      krylov_forms(rtr, t, t, limit(limits, "T2.i." + tnp)));
    }
    return out;
}

std::vector<InvariantEntry> theorem2_family_ii(const BlochTripartite &bloch, const InvariantSettings &settings) {
    check_shapes(bloch);
    const auto limits = tripartite_power_limits(bloch.dims, settings);
    std::vector<InvariantEntry> out;
    for (const Pivot &pv : kPivots) {
        const std::string tag = unfolding_tag(pv);
        append_series(out, "T2.ii", tag, "beta", 1,
                      singular_power_sums(unfold(bloch, pv.m), limit(limits, "T2.ii." + tag)));
    }
    for (const auto &[m, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        const std::string tag = "T" + pair(m, k);
        append_series(out, "T2.ii", tag, "beta", 1,
                      singular_power_sums(bloch.t(m, k), limit(limits, "T2.ii." + tag)));
    }
    return out;
}

std::vector<InvariantEntry> theorem3_family(const BlochTripartite &bloch, const InvariantSettings &settings) {
    check_shapes(bloch);
    const auto limits = tripartite_power_limits(bloch.dims, settings);
    std::vector<InvariantEntry> out;
    // S_m paired with T_{m, m+1 mod 3}.
    for (const auto &[m, k] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
        const std::string tag = "S" + party(m) + "-T" + pair(m, k);
        const RVector &s = bloch.s[static_cast<std::size_t>(m - 1)];
        append_series(out, "T3.i", tag, "alpha", 0,
                      krylov_forms(bloch.t(m, k), s, s, limit(limits, "T3.i." + tag)));
    }
    for (const auto &[m, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        const RMatrix t = bloch.t(m, k);
        if (t.rows() == t.cols()) {
            out.push_back({{"T3.ii", "detT" + pair(m, k), "", 0}, t.determinant()});
        }
    }
    return out;
}

InvariantFingerprint fingerprint3(const BlochTripartite &bloch, const InvariantSettings &settings) {
    FingerprintMetadata meta;
    meta.dims = {bloch.dims[0], bloch.dims[1], bloch.dims[2]};
    meta.convention = kNormalizationTag;
    meta.power_limits = tripartite_power_limits(bloch.dims, settings);
    meta.notes = {
        "T2.ii.R3|12 beta runs to d3^2-1",
        "T2.ii.Tmn beta runs to (dm^2-1)(dn^2-1)-1",
        "T3.i alpha defaults to dm^2-2",
        "unfoldings use ascending complement order; T31 = T13^t",
    };

    std::vector<InvariantEntry> entries = theorem2_family_i(bloch, settings);
    for (auto &e : theorem2_family_ii(bloch, settings)) entries.push_back(std::move(e));
    for (auto &e : theorem3_family(bloch, settings)) entries.push_back(std::move(e));
    for (const auto &[m, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        if (bloch.dims[static_cast<std::size_t>(m - 1)] != bloch.dims[static_cast<std::size_t>(k - 1)]) {
            meta.not_applicable.push_back("T3.ii.detT" + pair(m, k));
        }
    }
    return InvariantFingerprint(std::move(meta), std::move(entries));
}

InvariantFingerprint fingerprint3(const DensityMatrix &state, const InvariantSettings &settings) {
    return fingerprint3(decompose3(state), settings);
}

InvariantFingerprint fingerprint(const DensityMatrix &state, const InvariantSettings &settings) {
    if (state.parties() == 2) {
        return fingerprint2(state, settings);
    }
    return fingerprint3(state, settings);
}

}  // namespace luinv
