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

#include "luinv/errors.hpp"

#include <utility>

namespace luinv {

const char *to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::Dimension:
            return "dimension";
        case ValidationKind::Hermiticity:
            return "hermiticity";
        case ValidationKind::Trace:
            return "trace";
        case ValidationKind::Positivity:
            return "positivity";
        case ValidationKind::Unitarity:
            return "unitarity";
        case ValidationKind::Determinant:
            return "determinant";
    }
    return "unknown";
}

ValidationError::ValidationError(ValidationKind kind, double deviation, const std::string &what)
    : Error(what), kind_(kind), deviation_(deviation) {}

NumericalError::NumericalError(double residue, const std::string &what) : Error(what), residue_(residue) {}

ParseError::ParseError(std::string location, const std::string &what)
    : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}

}  // namespace luinv
