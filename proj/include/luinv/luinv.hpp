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

// Umbrella header.
#pragma once

#include "luinv/adjoint.hpp"
#include "luinv/bloch.hpp"
#include "luinv/compare.hpp"
#include "luinv/errors.hpp"
#include "luinv/fingerprint.hpp"
#include "luinv/generators.hpp"
#include "luinv/invariants_bipartite.hpp"
#include "luinv/invariants_tripartite.hpp"
#include "luinv/linalg.hpp"
#include "luinv/report.hpp"
#include "luinv/states.hpp"
#include "luinv/types.hpp"
