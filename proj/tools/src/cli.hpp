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
#include <iosfwd>
#include <optional>
#include <string>

namespace zxsynth::cli {

// Stable exit codes.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

enum class Command { State, Unitary, Encode, Tables, Bounds };
enum class Emit { Qasm, Json, Counts };

struct RunConfig {
  Command command = Command::Tables;
  std::string input;
  std::string output;
  std::string save_input;
  Emit emit = Emit::Counts;
  bool verify = false;
  std::optional<double> tol;
  std::uint64_t seed = 7;
  std::optional<int> random_n;
  std::string rank = "auto";
};

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_unitary(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_encode(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out);

/// Deterministic count report; `ok` is false when a hard check fails.
std::string tables_report(std::uint64_t seed, bool& ok);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace zxsynth::cli
