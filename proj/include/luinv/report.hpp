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

#include <json.hpp>

#include "luinv/bloch.hpp"
#include "luinv/compare.hpp"
#include "luinv/fingerprint.hpp"

namespace luinv {

// Structured reports are JSON with full binary64 precision (shortest
// round-trip decimals). Text reports are for people: 6 significant digits.

nlohmann::ordered_json to_json(const FingerprintMetadata &metadata);
nlohmann::ordered_json to_json(const InvariantFingerprint &fp);
nlohmann::ordered_json to_json(const Verdict &verdict, const FingerprintMetadata &metadata);
nlohmann::ordered_json to_json(const BlochBipartite &bloch);
nlohmann::ordered_json to_json(const BlochTripartite &bloch, bool with_unfoldings);

std::string to_text(const InvariantFingerprint &fp);
std::string to_text(const Verdict &verdict);
std::string to_text(const BlochBipartite &bloch);
std::string to_text(const BlochTripartite &bloch, bool with_unfoldings);

/// printf("%.6g") of a value.
std::string short_number(double value);

}  // namespace luinv
