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

#include <string>
#include <vector>

#include "luinv/fingerprint.hpp"

namespace luinv {

inline constexpr double kDefaultCompareTolerance = 1e-9;

/// Equal invariants are only a necessary condition for LU equivalence, so the
/// best a comparison can say about matching fingerprints is "inconclusive".
enum class VerdictStatus { Distinct, Inconclusive };

const char *to_string(VerdictStatus status);

struct Witness {
    std::string key;
    double value_a = 0.0;
    double value_b = 0.0;
    double delta = 0.0;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<Witness> witnesses;
    double tolerance = kDefaultCompareTolerance;
};

/// Entries a, b agree when |a - b| <= tol * max(1, |a|, |b|). Every entry that
/// does not agree becomes a witness. Throws IncomparableError if the metadata
/// (dims, convention, power ranges) differ.
Verdict compare(const InvariantFingerprint &a, const InvariantFingerprint &b, double tol = kDefaultCompareTolerance);

}  // namespace luinv
