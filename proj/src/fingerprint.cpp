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

#include "luinv/fingerprint.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "luinv/errors.hpp"

namespace luinv {

namespace {

constexpr std::array<const char *, 8> kFamilyOrder = {"T1.i", "T1.ii", "T1.iii", "T1.iv",
                                                      "T2.i", "T2.ii", "T3.i",   "T3.ii"};

std::size_t family_rank(const std::string &family) {
    const auto it = std::find(kFamilyOrder.begin(), kFamilyOrder.end(), family);
    return static_cast<std::size_t>(it - kFamilyOrder.begin());
}

}  // namespace

std::string InvariantKey::str() const {
    std::string out = family;
    if (!tag.empty()) {
        out += '.';
        out += tag;
    }
    if (!power_name.empty()) {
        out += '.';
        out += power_name;
        out += '=';
        out += std::to_string(power);
    }
    return out;
}

bool canonical_less(const InvariantKey &a, const InvariantKey &b) {
    return std::forward_as_tuple(family_rank(a.family), a.family, a.tag, a.power_name, a.power) <
           std::forward_as_tuple(family_rank(b.family), b.family, b.tag, b.power_name, b.power);
}

InvariantFingerprint::InvariantFingerprint(FingerprintMetadata metadata, std::vector<InvariantEntry> entries)
    : metadata_(std::move(metadata)), entries_(std::move(entries)) {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const InvariantEntry &a, const InvariantEntry &b) { return canonical_less(a.key, b.key); });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i - 1].key == entries_[i].key) {
            throw DomainError("duplicate invariant key " + entries_[i].key.str());
        }
    }
}

std::optional<double> InvariantFingerprint::find(const std::string &key) const {
    for (const auto &e : entries_) {
        if (e.key.str() == key) {
            return e.value;
        }
    }
    return std::nullopt;
}

}  // namespace luinv
