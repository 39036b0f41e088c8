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

#include "luinv/states.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include <json.hpp>

#include "luinv/errors.hpp"

namespace luinv {

namespace {

using nlohmann::json;

std::string format_deviation(double value) {
    std::ostringstream os;
    os.precision(3);
    os << value;
    return os.str();
}

void check_dims(const Dims &dims) {
    if (dims.size() != 2 && dims.size() != 3) {
        throw DomainError("expected 2 or 3 parties, got " + std::to_string(dims.size()));
    }
    for (int d : dims) {
        if (d < 2) {
            throw DomainError("local dimension must be at least 2, got " + std::to_string(d));
        }
    }
}

std::string index_path(std::size_t row) { return "matrix[" + std::to_string(row) + "]"; }

std::string index_path(std::size_t row, std::size_t col) {
    return "matrix[" + std::to_string(row) + "][" + std::to_string(col) + "]";
}

double parse_number(const json &value, const std::string &where) {
    if (!value.is_number()) {
        throw ParseError(where, "expected a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(where, "non-finite number");
    }
    return x;
}

// Walks the document once to find where the lexer gives up, so that failures
// such as number overflow can name the offending element.
class PathTracker : public json::json_sax_t {
   public:
    bool null() override { return value(); }
    bool boolean(bool) override { return value(); }
    bool number_integer(json::number_integer_t) override { return value(); }
    bool number_unsigned(json::number_unsigned_t) override { return value(); }
    bool number_float(json::number_float_t, const json::string_t &) override { return value(); }
    bool string(json::string_t &) override { return value(); }
    bool binary(json::binary_t &) override { return value(); }
    bool start_object(std::size_t) override { return open(false); }
    bool key(json::string_t &k) override {
        frames_.back().key = k;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override { return open(true); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string &, const nlohmann::detail::exception &e) override {
        throw ParseError(path(), std::string("invalid JSON: ") + e.what());
    }

   private:
    struct Frame {
        bool array;
        std::size_t count = 0;
        std::string key;
    };

    bool value() {
        if (!frames_.empty() && frames_.back().array) ++frames_.back().count;
        return true;
    }
    bool open(bool array) {
        frames_.push_back({array, 0, {}});
        return true;
    }
    bool close() {
        frames_.pop_back();
        return value();
    }
    std::string path() const {
        std::string out;
        for (const Frame &f : frames_) {
            if (f.array) {
                out += "[" + std::to_string(f.count) + "]";
            } else if (!f.key.empty()) {
                out += (out.empty() ? "" : ".") + f.key;
            }
        }
        return out;
    }

    std::vector<Frame> frames_;
};

}  // namespace

DensityMatrix DensityMatrix::with_label(std::string label) const {
    DensityMatrix copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

DensityMatrix validate(CMatrix matrix, Dims dims) {
    check_dims(dims);
    const int side = total_dimension(dims);
    if (matrix.rows() != matrix.cols() || matrix.rows() != side) {
        throw ValidationError(ValidationKind::Dimension, std::abs(static_cast<double>(matrix.rows() - side)),
                              "matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                                  ", dims require side " + std::to_string(side));
    }

    const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kStateTolerance) {
        throw ValidationError(ValidationKind::Hermiticity, asym,
                              "matrix is not Hermitian, deviation " + format_deviation(asym));
    }

    const double trace_dev = std::abs(matrix.trace() - Complex(1.0, 0.0));
    if (trace_dev > kStateTolerance) {
        throw ValidationError(ValidationKind::Trace, trace_dev,
                              "trace is not 1, deviation " + format_deviation(trace_dev));
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kStateTolerance) {
        throw ValidationError(ValidationKind::Positivity, -min_eig,
                              "matrix is not positive semidefinite, deviation " + format_deviation(-min_eig));
    }
    return DensityMatrix(std::move(dims), std::move(matrix));
}

DensityMatrix random_density(const Dims &dims, int rank, RngSeed seed) {
    check_dims(dims);
    const int side = total_dimension(dims);
    if (rank < 1 || rank > side) {
        throw DomainError("rank must be in [1, " + std::to_string(side) + "], got " + std::to_string(rank));
    }
    std::mt19937_64 engine(seed.value);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CMatrix g(side, rank);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < rank; ++c) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(r, c) = Complex(re, im);
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermiticity; the product is Hermitian only up to rounding.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return validate(std::move(rho), dims);
}

DensityMatrix pure_state(const Eigen::VectorXcd &amplitudes, const Dims &dims) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw DomainError("pure state vector is zero");
    }
    const Eigen::VectorXcd psi = amplitudes / norm;
    return validate(psi * psi.adjoint(), dims);
}

DensityMatrix parse_state(std::istream &in) {
    const std::string text(std::istreambuf_iterator<char>(in), {});
    PathTracker tracker;
    json::sax_parse(text, &tracker);
    const json doc = json::parse(text);
    if (!doc.is_object()) {
        throw ParseError("", "state file must be a JSON object");
    }

    if (!doc.contains("dims")) {
        throw ParseError("dims", "missing field");
    }
    const json &jdims = doc.at("dims");
    if (!jdims.is_array() || (jdims.size() != 2 && jdims.size() != 3)) {
        throw ParseError("dims", "expected an array of 2 or 3 integers");
    }
    Dims dims;
    for (std::size_t m = 0; m < jdims.size(); ++m) {
        const json &d = jdims[m];
        if (!d.is_number_integer() || d.get<long long>() < 2 || d.get<long long>() > 64) {
            throw ParseError("dims[" + std::to_string(m) + "]", "expected an integer >= 2");
        }
        dims.push_back(d.get<int>());
    }
    const int side = total_dimension(dims);

    if (!doc.contains("matrix")) {
        throw ParseError("matrix", "missing field");
    }
    const json &jm = doc.at("matrix");
    if (!jm.is_array()) {
        throw ParseError("matrix", "expected an array of rows");
    }
    if (static_cast<int>(jm.size()) != side) {
        throw ParseError("matrix", "matrix side " + std::to_string(jm.size()) + " ≠ " + std::to_string(side));
    }
    CMatrix data(side, side);
    for (std::size_t r = 0; r < jm.size(); ++r) {
        const json &row = jm[r];
        if (!row.is_array() || row.size() != jm.size()) {
            throw ParseError(index_path(r), "ragged row: expected " + std::to_string(side) + " entries");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            const json &entry = row[c];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError(index_path(r, c), "expected [re, im]");
            }
            const double re = parse_number(entry[0], index_path(r, c) + "[0]");
            const double im = parse_number(entry[1], index_path(r, c) + "[1]");
            data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(re, im);
        }
    }

    std::string label;
    if (doc.contains("label")) {
        if (!doc.at("label").is_string()) {
            throw ParseError("label", "expected a string");
        }
        label = doc.at("label").get<std::string>();
    }
    return validate(std::move(data), std::move(dims)).with_label(std::move(label));
}

DensityMatrix read_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), "cannot open file");
    }
    return parse_state(in);
}

void write_state(const DensityMatrix &state, std::ostream &out) {
    json doc;
    doc["dims"] = state.dims();
    json rows = json::array();
    const CMatrix &m = state.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    if (!state.label().empty()) {
        doc["label"] = state.label();
    }
    // nlohmann/json emits the shortest decimal that round-trips a binary64.
    out << doc.dump() << '\n';
}

void write_state(const DensityMatrix &state, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError(path.string(), "cannot open file for writing");
    }
    write_state(state, out);
}

}  // namespace luinv
