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

#include "luinv/report.hpp"

#include <cstdio>
#include <sstream>

namespace luinv {

namespace {

using json = nlohmann::ordered_json;

json vector_json(const RVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json matrix_json(const RMatrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

json tensor_json(const Tensor3 &r) {
    json out = json::array();
    for (int i = 0; i < r.extent(0); ++i) {
        json plane = json::array();
        for (int j = 0; j < r.extent(1); ++j) {
            json row = json::array();
            for (int k = 0; k < r.extent(2); ++k) row.push_back(r(i, j, k));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

std::string dims_text(const Dims &dims) {
    std::string out;
    for (std::size_t m = 0; m < dims.size(); ++m) {
        if (m > 0) out += 'x';
        out += std::to_string(dims[m]);
    }
    return out;
}

void vector_text(std::ostringstream &os, const std::string &name, const RVector &v) {
    os << name << ':';
    for (Eigen::Index i = 0; i < v.size(); ++i) os << ' ' << short_number(v(i));
    os << '\n';
}

void matrix_text(std::ostringstream &os, const std::string &name, const RMatrix &m) {
    os << name << ":\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << ' ';
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << ' ' << short_number(m(i, j));
        os << '\n';
    }
}

json bloch_metadata(const Dims &dims) { return json{{"dims", dims}, {"convention", kNormalizationTag}}; }

}  // namespace

std::string short_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

nlohmann::ordered_json to_json(const FingerprintMetadata &metadata) {
    json limits = json::object();
    for (const auto &[key, value] : metadata.power_limits) limits[key] = value;
    return json{{"dims", metadata.dims},
                {"convention", metadata.convention},
                {"power_limits", std::move(limits)},
                {"not_applicable", metadata.not_applicable},
                {"notes", metadata.notes}};
}

nlohmann::ordered_json to_json(const InvariantFingerprint &fp) {
    json entries = json::array();
    for (const auto &e : fp.entries()) entries.push_back(json{{"key", e.key.str()}, {"value", e.value}});
    return json{{"metadata", to_json(fp.metadata())}, {"entries", std::move(entries)}};
}

nlohmann::ordered_json to_json(const Verdict &verdict, const FingerprintMetadata &metadata) {
    json witnesses = json::array();
    for (const auto &w : verdict.witnesses) {
        witnesses.push_back(json{{"key", w.key}, {"a", w.value_a}, {"b", w.value_b}, {"delta", w.delta}});
    }
    return json{{"metadata", to_json(metadata)},
                {"status", to_string(verdict.status)},
                {"tolerance", verdict.tolerance},
                {"witnesses", std::move(witnesses)}};
}

nlohmann::ordered_json to_json(const BlochBipartite &bloch) {
    return json{{"metadata", bloch_metadata({bloch.dims[0], bloch.dims[1]})},
                {"blocks", {{"S", vector_json(bloch.s)}, {"T", vector_json(bloch.t)}, {"R", matrix_json(bloch.r)}}}};
}

nlohmann::ordered_json to_json(const BlochTripartite &bloch, bool with_unfoldings) {
    json blocks{{"S1", vector_json(bloch.s[0])}, {"S2", vector_json(bloch.s[1])}, {"S3", vector_json(bloch.s[2])},
                {"T12", matrix_json(bloch.t12)}, {"T13", matrix_json(bloch.t13)}, {"T23", matrix_json(bloch.t23)},
                {"R", tensor_json(bloch.r)}};
    json out{{"metadata", bloch_metadata({bloch.dims[0], bloch.dims[1], bloch.dims[2]})}, {"blocks", std::move(blocks)}};
    if (with_unfoldings) {
        out["unfoldings"] = json{{"R1|23", matrix_json(unfold(bloch, 1))},
                                 {"R2|13", matrix_json(unfold(bloch, 2))},
                                 {"R3|12", matrix_json(unfold(bloch, 3))}};
    }
    return out;
}

std::string to_text(const InvariantFingerprint &fp) {
    std::ostringstream os;
    const auto &meta = fp.metadata();
    os << "dims " << dims_text(meta.dims) << "  convention " << meta.convention << '\n';
    for (const auto &na : meta.not_applicable) os << "not applicable: " << na << '\n';
    for (const auto &e : fp.entries()) os << e.key.str() << "  " << short_number(e.value) << '\n';
    return os.str();
}

std::string to_text(const Verdict &verdict) {
    std::ostringstream os;
    os << to_string(verdict.status) << "  (tolerance " << short_number(verdict.tolerance) << ")\n";
    if (!verdict.witnesses.empty()) {
        os << "key  a  b  |delta|\n";
        for (const auto &w : verdict.witnesses) {
            os << w.key << "  " << short_number(w.value_a) << "  " << short_number(w.value_b) << "  "
               << short_number(w.delta) << '\n';
        }
    }
    return os.str();
}

std::string to_text(const BlochBipartite &bloch) {
    std::ostringstream os;
    os << "dims " << bloch.dims[0] << 'x' << bloch.dims[1] << "  convention " << kNormalizationTag << '\n';
    vector_text(os, "S", bloch.s);
    vector_text(os, "T", bloch.t);
    matrix_text(os, "R", bloch.r);
    return os.str();
}

std::string to_text(const BlochTripartite &bloch, bool with_unfoldings) {
    std::ostringstream os;
    os << "dims " << bloch.dims[0] << 'x' << bloch.dims[1] << 'x' << bloch.dims[2] << "  convention "
       << kNormalizationTag << '\n';
    vector_text(os, "S1", bloch.s[0]);
    vector_text(os, "S2", bloch.s[1]);
    vector_text(os, "S3", bloch.s[2]);
    matrix_text(os, "T12", bloch.t12);
    matrix_text(os, "T13", bloch.t13);
    matrix_text(os, "T23", bloch.t23);
    matrix_text(os, "R1|23", unfold(bloch, 1));
    if (with_unfoldings) {
        matrix_text(os, "R2|13", unfold(bloch, 2));
        matrix_text(os, "R3|12", unfold(bloch, 3));
    }
    return os.str();
}

}  // namespace luinv
