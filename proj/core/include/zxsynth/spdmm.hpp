// Copyright 2026 The zxsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

#include "zxsynth/circuit.hpp"

namespace zxsynth {

/// Circuit mapping |0...0> to psi (global phase included). Requires a
/// unit-norm vector of length 2^n.
Circuit prepare_state(const Vector& psi);

/// C-NOT count of prepare_state, from the even/odd recursion.
std::int64_t nstate_count(int n);

/// Closed-form count; defined for n >= 4.
std::int64_t nstate_count_closed_form(int n);

/// ceil(2^n/2 - 3n/4 - 1/4).
std::int64_t state_prep_lower_bound(int n);

/// State file: first line n, then 2^n lines "re im". ParseError carries the
/// offending line number.
Vector parse_state_text(const std::string& text);
std::string format_state_text(const Vector& psi);

}  // namespace zxsynth
