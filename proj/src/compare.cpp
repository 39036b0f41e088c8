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

#include "luinv/compare.hpp"

#include <algorithm>
#include <cmath>

#include "luinv/errors.hpp"

namespace luinv {

const char *to_string(VerdictStatus status) {
    return status == VerdictStatus::Distinct ? "DISTINCT" : "INCONCLUSIVE";
}

Verdict compare(const InvariantFingerprint &a, const InvariantFingerprint &b, double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a finite non-negative number");
    }
    if (!(a.metadata() == b.metadata())) {
        throw IncomparableError("fingerprints have different metadata (dims, convention or power ranges)");
    }
    const auto &ea = a.entries();
    const auto &eb = b.entries();
    if (ea.size() != eb.size()) {
        throw IncomparableError("fingerprints have different entry counts");
    }

    Verdict verdict;
    verdict.tolerance = tol;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        if (!(ea[i].key == eb[i].key)) {
            throw IncomparableError("fingerprint keys differ at position " + std::to_string(i));
        }
        const double x = ea[i].value;
        const double y = eb[i].value;
        const double delta = std::abs(x - y);
        const double scale = std::max({1.0, std::abs(x), std::abs(y)});
        if (!(delta <= tol * scale)) {
            verdict.witnesses.push_back({ea[i].key.str(), x, y, delta});
        }
    }
    verdict.status = verdict.witnesses.empty() ? VerdictStatus::Inconclusive : VerdictStatus::Distinct;
    return verdict;
}

}  // namespace luinv
