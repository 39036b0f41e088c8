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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "luinv/luinv.hpp"

namespace luinv::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
};

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

void emit(const std::string &payload, const OutputOptions &opts, std::ostream &out) {
    if (opts.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(opts.out_path);
    if (!file) {
        throw ParseError(opts.out_path, "cannot open output file");
    }
    file << payload;
}

std::string render(const json &doc) { return doc.dump(2) + "\n"; }

InvariantSettings make_settings(const std::optional<int> &max_alpha, const std::optional<int> &max_beta) {
    InvariantSettings settings;
    settings.max_alpha = max_alpha;
    settings.max_beta = max_beta;
    return settings;
}

// --- decompose -------------------------------------------------------------

struct DecomposeArgs {
    std::string state_file;
    bool unfoldings = false;
    OutputOptions output;
};

int cmd_decompose(const DecomposeArgs &args, std::ostream &out) {
    const DensityMatrix state = read_state(args.state_file);
    std::string payload;
    if (state.parties() == 2) {
        const BlochBipartite bloch = decompose2(state);
        payload = args.output.format == "json" ? render(to_json(bloch)) : to_text(bloch);
    } else {
        const BlochTripartite bloch = decompose3(state);
        payload = args.output.format == "json" ? render(to_json(bloch, args.unfoldings))
                                               : to_text(bloch, args.unfoldings);
    }
    emit(payload, args.output, out);
    return kExitOk;
}

// --- invariants ------------------------------------------------------------

struct InvariantsArgs {
    std::string state_file;
    std::optional<int> max_alpha;
    std::optional<int> max_beta;
    OutputOptions output;
};

int cmd_invariants(const InvariantsArgs &args, std::ostream &out) {
    const DensityMatrix state = read_state(args.state_file);
    const InvariantFingerprint fp = fingerprint(state, make_settings(args.max_alpha, args.max_beta));
    emit(args.output.format == "json" ? render(to_json(fp)) : to_text(fp), args.output, out);
    return kExitOk;
}

// --- compare ---------------------------------------------------------------

struct CompareArgs {
    std::string file_a;
    std::string file_b;
    double tol = kDefaultCompareTolerance;
    OutputOptions output;
};

int cmd_compare(const CompareArgs &args, std::ostream &out) {
    const DensityMatrix a = read_state(args.file_a);
    const DensityMatrix b = read_state(args.file_b);
    if (a.dims() != b.dims()) {
        throw IncomparableError("states have different dims; fingerprints are not comparable");
    }
    const InvariantFingerprint fa = fingerprint(a);
    const InvariantFingerprint fb = fingerprint(b);
    const Verdict verdict = compare(fa, fb, args.tol);
    emit(args.output.format == "json" ? render(to_json(verdict, fa.metadata())) : to_text(verdict), args.output, out);
    return verdict.status == VerdictStatus::Distinct ? kExitDistinct : kExitOk;
}

// --- random ----------------------------------------------------------------

struct RandomArgs {
    std::vector<int> dims;
    std::optional<int> rank;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_random(const RandomArgs &args) {
    if (args.dims.size() != 2 && args.dims.size() != 3) {
        throw UsageError("--dims needs 2 or 3 comma-separated dimensions");
    }
    if (std::any_of(args.dims.begin(), args.dims.end(), [](int d) { return d < 2 || d > 16; })) {
        throw UsageError("--dims entries must be in [2, 16]");
    }
    const int side = total_dimension(args.dims);
    const int rank = args.rank.value_or(side);
    if (rank < 1 || rank > side) {
        throw UsageError("--rank must be in [1, " + std::to_string(side) + "]");
    }
    const DensityMatrix state = random_density(args.dims, rank, RngSeed{args.seed});
    write_state(state, std::filesystem::path(args.out_path));
    return kExitOk;
}

// --- orbit-check -----------------------------------------------------------

struct OrbitArgs {
    std::string state_file;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultCompareTolerance;
    OutputOptions output;
};

int cmd_orbit_check(const OrbitArgs &args, std::ostream &out) {
    const DensityMatrix state = read_state(args.state_file);
    const InvariantFingerprint base = fingerprint(state);

    std::map<std::string, double> max_delta;
    for (const auto &e : base.entries()) max_delta.emplace(e.key.family, 0.0);
    double overall = 0.0;
    std::vector<int> distinct_trials;

    for (int trial = 0; trial < args.trials; ++trial) {
        // Per-trial seeds seed + trial keep any single trial reproducible on its own.
        const auto locals = haar_locals(state.dims(), RngSeed{args.seed + static_cast<std::uint64_t>(trial)});
        const InvariantFingerprint moved = fingerprint(conjugate(state, locals));
        const Verdict verdict = compare(base, moved, args.tol);
        if (verdict.status == VerdictStatus::Distinct) {
            distinct_trials.push_back(trial);
        }
        for (std::size_t i = 0; i < base.entries().size(); ++i) {
            const double delta = std::abs(base.entries()[i].value - moved.entries()[i].value);
            double &slot = max_delta[base.entries()[i].key.family];
            slot = std::max(slot, delta);
            overall = std::max(overall, delta);
        }
    }

    const bool pass = distinct_trials.empty();
    std::string payload;
    if (args.output.format == "json") {
        json families = json::object();
        for (const auto &[family, delta] : max_delta) families[family] = delta;
        json doc{{"metadata", to_json(base.metadata())},
                 {"status", pass ? "INCONCLUSIVE" : "DISTINCT"},
                 {"trials", args.trials},
                 {"seed", args.seed},
                 {"tolerance", args.tol},
                 {"distinct_trials", distinct_trials},
                 {"max_delta", std::move(families)},
                 {"max_delta_overall", overall}};
        payload = render(doc);
    } else {
        std::ostringstream os;
        os << (pass ? "INCONCLUSIVE" : "DISTINCT") << "  trials " << args.trials << "  seed " << args.seed
           << "  tolerance " << short_number(args.tol) << '\n';
        for (const auto &[family, delta] : max_delta) os << family << "  max|delta| " << short_number(delta) << '\n';
        os << "distinct trials: " << distinct_trials.size() << '\n';
        payload = os.str();
    }
    emit(payload, args.output, out);
    return pass ? kExitOk : kExitDistinct;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local-unitary invariants of bipartite and tripartite density matrices", "luinv"};
    app.require_subcommand(1);

    DecomposeArgs decompose_args;
    auto *decompose = app.add_subcommand("decompose", "Print the Bloch coefficients of a state");
    decompose->add_option("state-file", decompose_args.state_file, "State file")->required();
    decompose->add_flag("--unfoldings", decompose_args.unfoldings, "Include all three R unfoldings (tripartite)");
    add_output_options(decompose, decompose_args.output);

    InvariantsArgs invariants_args;
    auto *invariants = app.add_subcommand("invariants", "Print the LU-invariant fingerprint of a state");
    invariants->add_option("state-file", invariants_args.state_file, "State file")->required();
    invariants->add_option("--max-alpha", invariants_args.max_alpha, "Override every alpha range upper bound")
        ->check(CLI::NonNegativeNumber);
    invariants->add_option("--max-beta", invariants_args.max_beta, "Override every beta range upper bound")
        ->check(CLI::PositiveNumber);
    add_output_options(invariants, invariants_args.output);

    CompareArgs compare_args;
    compare_args.output.format = "text";
    auto *compare_cmd = app.add_subcommand("compare", "Compare the fingerprints of two states");
    compare_cmd->add_option("file-a", compare_args.file_a, "First state file")->required();
    compare_cmd->add_option("file-b", compare_args.file_b, "Second state file")->required();
    compare_cmd->add_option("--tol", compare_args.tol, "Mixed absolute/relative tolerance")
        ->check(CLI::NonNegativeNumber);
    add_output_options(compare_cmd, compare_args.output);

    RandomArgs random_args;
    auto *random = app.add_subcommand("random", "Write a random density matrix");
    random->add_option("--dims", random_args.dims, "Local dimensions, e.g. 2,2,3")->required()->delimiter(',');
    random->add_option("--rank", random_args.rank, "Rank (default: full)");
    random->add_option("--seed", random_args.seed, "RNG seed");
    random->add_option("--out", random_args.out_path, "Output state file")->required();

    OrbitArgs orbit_args;
    auto *orbit = app.add_subcommand("orbit-check", "Check fingerprint invariance along random LU orbits");
    orbit->add_option("state-file", orbit_args.state_file, "State file")->required();
    orbit->add_option("--trials", orbit_args.trials, "Number of random local-unitary tuples")
        ->required()
        ->check(CLI::PositiveNumber);
    orbit->add_option("--seed", orbit_args.seed, "Base seed; trial t uses seed + t");
    orbit->add_option("--tol", orbit_args.tol, "Comparison tolerance")->check(CLI::NonNegativeNumber);
    add_output_options(orbit, orbit_args.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decompose) return cmd_decompose(decompose_args, out);
        if (*invariants) return cmd_invariants(invariants_args, out);
        if (*compare_cmd) return cmd_compare(compare_args, out);
        if (*random) return cmd_random(random_args);
        if (*orbit) return cmd_orbit_check(orbit_args, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const luinv::Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsage;
}

}  // namespace luinv::cli
