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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "luinv/types.hpp"

namespace luinv {

/// Structured name of one invariant value, e.g. family "T1.iii", no tag,
/// power "beta" = 1, printed as "T1.iii.beta=1".
struct InvariantKey {
    std::string family;
    std::string tag;
    std::string power_name;  // "alpha", "beta" or empty
    int power = 0;

    std::string str() const;

    friend bool operator==(const InvariantKey &, const InvariantKey &) = default;
};

/// Canonical order: family (in the fixed family sequence), then tag, then power.
bool canonical_less(const InvariantKey &a, const InvariantKey &b);

struct InvariantEntry {
    InvariantKey key;
    double value = 0.0;
};

/// Optional power-range overrides. When unset each range takes its default
/// (Cayley-Hamilton bound for alpha, number of singular values for beta).
struct InvariantSettings {
    std::optional<int> max_alpha;
    std::optional<int> max_beta;
};

struct FingerprintMetadata {
    Dims dims;
    std::string convention;
    /// Resolved upper power of every range, keyed "<family>.<tag>".
    std::map<std::string, int> power_limits;
    /// Families skipped because they do not apply to these dims (e.g. det R for d1 != d2).
    std::vector<std::string> not_applicable;
    /// Notes on how ambiguous ranges were read.
    std::vector<std::string> notes;

    friend bool operator==(const FingerprintMetadata &, const FingerprintMetadata &) = default;
};

/// Ordered list of invariant values plus the settings that produced them.
/// Values are raw binary64; tolerances live in compare().
class InvariantFingerprint {
   public:
    InvariantFingerprint(FingerprintMetadata metadata, std::vector<InvariantEntry> entries);

    const FingerprintMetadata &metadata() const { return metadata_; }
    const std::vector<InvariantEntry> &entries() const { return entries_; }

    std::optional<double> find(const std::string &key) const;

   private:
    FingerprintMetadata metadata_;
    std::vector<InvariantEntry> entries_;
};

}  // namespace luinv
