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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "zxsynth/blockzxz.hpp"
#include "zxsynth/siable.hpp"
#include "zxsynth/spdmm.hpp"

namespace zxsynth::cli {

namespace {

// Dense checks beyond this many wires are skipped.
constexpr int kDenseCap = 10;
constexpr int kStateCap = 16;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string need_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error(ErrorKind::InvalidInput, "one of --input or --random is required");
  return read_file(cfg.input);
}

void check_random_n(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorKind::InvalidInput,
                "--random must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

// Writes the circuit where requested and returns the stream for the report:
// the report never interleaves with circuit text on stdout.
std::ostream& emit_circuit(const RunConfig& cfg, const Circuit& c, std::ostream& out, std::ostream& err) {
  if (cfg.emit == Emit::Counts) return out;
  const std::string text = cfg.emit == Emit::Qasm ? emit_qasm(c) : emit_json(c);
  if (!cfg.output.empty()) {
    write_file(cfg.output, text);
    return out;
  }
  out << text;
  return err;
}

double tol_or(const RunConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NumericalFailure ? kExitVerify : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Vector psi;
    if (cfg.random_n) {
      check_random_n(*cfg.random_n, 1, 20);
      Rng rng(cfg.seed);
      psi = random_state(Eigen::Index{1} << *cfg.random_n, rng);
    } else {
      psi = parse_state_text(need_input(cfg));
    }
    if (!cfg.save_input.empty()) write_file(cfg.save_input, format_state_text(psi));
    const Circuit c = prepare_state(psi);
    const int n = c.n_qubits();
    std::ostream& rep = emit_circuit(cfg, c, out, err);
    const int cnots = cnot_count(c);
    const std::int64_t expected = nstate_count(n);
    if (!cfg.verify) {
      rep << "cnots=" << cnots << "\n";
      return kExitOk;
    }
    bool ok = cnots == expected;
    rep << "cnots=" << cnots << " expected=" << expected;
    if (n <= kStateCap) {
      Vector zero = Vector::Zero(psi.size());
      zero[0] = 1.0;
      const double fid = std::abs(psi.dot(zxsynth::apply(c, zero)));
      const double tol = tol_or(cfg, 1e-9);
      ok = ok && 1.0 - fid <= tol;
      rep << " fidelity=" << fmt("%.15f", fid) << (1.0 - fid <= tol ? " >= " : " < ") << "1-" << fmt("%g", tol);
    } else {
      rep << " fidelity=skipped";
    }
    rep << (ok ? " ok" : " FAILED") << "\n";
    return ok ? kExitOk : kExitVerify;
  });
}

int cmd_unitary(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Matrix U;
    if (cfg.random_n) {
      check_random_n(*cfg.random_n, 1, 10);
      Rng rng(cfg.seed);
      U = random_unitary(Eigen::Index{1} << *cfg.random_n, rng);
    } else {
      U = parse_matrix_text(need_input(cfg));
    }
    if (!cfg.save_input.empty()) write_file(cfg.save_input, format_matrix_text(U));
    const Circuit c = synth_unitary_exact(U);
    const int n = c.n_qubits();
    std::ostream& rep = emit_circuit(cfg, c, out, err);
    const int cnots = cnot_count(c);
    const std::int64_t expected = count_unitary_exact(n);
    if (!cfg.verify) {
      rep << "cnots=" << cnots << "\n";
      return kExitOk;
    }
    bool ok = cnots == expected;
    rep << "cnots=" << cnots << " expected=" << expected;
    if (n <= kDenseCap) {
      const double res = (to_unitary(c, kDenseCap) - U).norm();
      ok = ok && res <= tol_or(cfg, 1e-8);
      rep << " residual=" << fmt("%.3e", res);
    } else {
      rep << " residual=skipped";
    }
    rep << (ok ? " ok" : " FAILED") << "\n";
    return ok ? kExitOk : kExitVerify;
  });
}

int cmd_encode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RankMode mode = RankMode::automatic();
    if (cfg.rank == "full") {
      mode = RankMode::full();
    } else if (cfg.rank != "auto") {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(cfg.rank, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cfg.rank.size() || k < 1) throw Error(ErrorKind::InvalidInput, "--rank must be auto, full or K >= 1");
      mode = RankMode::rank(k);
    }
    Matrix A;
    if (cfg.random_n) {
      check_random_n(*cfg.random_n, 2, 11);
      Rng rng(cfg.seed);
      const Eigen::Index h = Eigen::Index{1} << (*cfg.random_n - 1);
      A = mode.kind == RankMode::Kind::Rank ? random_rank_k(h, std::min<Eigen::Index>(mode.K, h), rng)
                                            : random_gaussian(h, h, rng);
    } else {
      A = parse_matrix_text(need_input(cfg));
    }
    if (!cfg.save_input.empty()) write_file(cfg.save_input, format_matrix_text(A));
    const BlockEncodingResult r = block_encode(A, mode);
    const int n = r.circuit.n_qubits();
    std::ostream& rep = emit_circuit(cfg, r.circuit, out, err);
    const int cnots = cnot_count(r.circuit);
    rep << "alpha=" << fmt("%.17g", r.alpha) << " path=" << to_string(r.path) << " rank=" << r.declared_rank;
    if (!cfg.verify) {
      rep << " cnots=" << cnots << "\n";
      return kExitOk;
    }
    const std::int64_t expected = r.path == EncodingPath::Full ? count_block_encode_full(n)
                                                               : count_block_encode_low_rank(n, r.declared_rank);
    bool ok = cnots == expected;
    rep << " cnots=" << cnots << " expected=" << expected;
    if (n <= kDenseCap) {
      const Matrix U = to_unitary(r.circuit, kDenseCap);
      const Eigen::Index h = A.rows();
      const double block = (U.topLeftCorner(h, h) - A / r.alpha).norm();
      ok = ok && block <= tol_or(cfg, 1e-8);
      rep << " block_error=" << fmt("%.3e", block);
    } else {
      rep << " block_error=skipped";
    }
    rep << (ok ? " ok" : " FAILED") << "\n";
    return ok ? kExitOk : kExitVerify;
  });
}

int cmd_bounds(const RunConfig&, std::ostream& out) {
  char line[160];
  out << "# n  state_lb  state_cnots  encode_lb  encode_full  unitary_lb  unitary_cnots\n";
  for (int n = 1; n <= 16; ++n) {
    const long long enc_lb = n >= 2 ? block_encoding_lower_bound(n) : 0;
    const long long enc = n >= 2 ? count_block_encode_full(n) : 0;
    std::snprintf(line, sizeof line, "%4d %9lld %12lld %10lld %12lld %11lld %14lld\n", n,
                  static_cast<long long>(state_prep_lower_bound(n)), static_cast<long long>(nstate_count(n)),
                  enc_lb, enc, static_cast<long long>(unitary_lower_bound(n)),
                  static_cast<long long>(count_unitary_exact(n)));
    out << line;
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool ok = true;
    const std::string report = tables_report(cfg.seed, ok);
    if (!cfg.output.empty()) {
      write_file(cfg.output, report);
    } else {
      out << report;
    }
    if (!ok) err << "tables: hard criteria mismatch (see report)\n";
    return ok ? kExitOk : kExitVerify;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit synthesis: state preparation, unitary synthesis, block encoding", "zxsynth-cli"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Emit> emits{{"qasm", Emit::Qasm}, {"json", Emit::Json}, {"counts", Emit::Counts}};
  auto common = [&](CLI::App* sub, bool synth) {
    sub->add_option("--seed", cfg.seed, "Seed for random instances")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "Write output here instead of stdout");
    if (!synth) return;
    sub->add_option("--input,-i", cfg.input, "Input file");
    sub->add_option("--random", cfg.random_n, "Generate a random instance on this many qubits");
    sub->add_option("--save-input", cfg.save_input, "Write the (random) instance in input-file format");
    sub->add_option("--emit", cfg.emit, "Output format")->transform(CLI::CheckedTransformer(emits, CLI::ignore_case));
    sub->add_flag("--verify", cfg.verify, "Simulate and check the result");
    sub->add_option("--tol", cfg.tol, "Verification tolerance")->check(CLI::PositiveNumber);
  };

  CLI::App* state = app.add_subcommand("state", "Prepare a state vector");
  common(state, true);
  CLI::App* unitary = app.add_subcommand("unitary", "Synthesize a unitary exactly");
  common(unitary, true);
  CLI::App* encode = app.add_subcommand("encode", "Block-encode a matrix with one ancilla");
  common(encode, true);
  encode->add_option("--rank", cfg.rank, "auto, full, or a rank K")->capture_default_str();
  CLI::App* tables = app.add_subcommand("tables", "Regenerate count tables and check pinned values");
  common(tables, false);
  CLI::App* bounds = app.add_subcommand("bounds", "Print count formulas and lower bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (state->parsed()) return cmd_state(cfg, out, err);
  if (unitary->parsed()) return cmd_unitary(cfg, out, err);
  if (encode->parsed()) return cmd_encode(cfg, out, err);
  if (tables->parsed()) return cmd_tables(cfg, out, err);
  if (bounds->parsed()) return cmd_bounds(cfg, out);
  return kExitInput;
}

}  // namespace zxsynth::cli
