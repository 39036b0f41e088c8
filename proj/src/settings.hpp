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

#include "luinv/errors.hpp"
#include "luinv/fingerprint.hpp"

namespace luinv::detail {

inline int resolve_alpha(const InvariantSettings &settings, int fallback) {
    if (!settings.max_alpha) return fallback;
    if (*settings.max_alpha < 0) {
        throw DomainError("max alpha must be >= 0, got " + std::to_string(*settings.max_alpha));
    }
    return *settings.max_alpha;
}

inline int resolve_beta(const InvariantSettings &settings, int fallback) {
    if (!settings.max_beta) return fallback;
    if (*settings.max_beta < 1) {
        throw DomainError("max beta must be >= 1, got " + std::to_string(*settings.max_beta));
    }
    return *settings.max_beta;
}

}  // namespace luinv::detail
