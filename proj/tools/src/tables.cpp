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

// The `tables` report: every count is produced by running a synthesizer on a
// seeded random instance and compared against pinned values. Output contains
// no timings, so equal seeds give byte-identical reports.

#include <cstdio>
#include <string>
#include <vector>

#include "cli.hpp"
#include "zxsynth/blockzxz.hpp"
#include "zxsynth/siable.hpp"
#include "zxsynth/spdmm.hpp"

namespace zxsynth::cli {

namespace {

class Report {
 public:
  void line(const std::string& s) { text_ += s + "\n"; }

  void section(const std::string& title) {
    if (!text_.empty()) text_ += "\n";
    line("[" + title + "]");
  }

  // A hard check: prints one row and records the outcome.
  void check(const std::string& label, long long got, long long want) {
    char buf[160];
    const bool ok = got == want;
    std::snprintf(buf, sizeof buf, "  %-34s %10lld  expected %10lld  %s", label.c_str(), got, want,
                  ok ? "ok" : "MISMATCH");
    line(buf);
    if (ok) {
      ++passed_;
    } else {
      ++failed_;
      failures_.push_back(label);
    }
  }

  void check_less(const std::string& label, long long got, long long bound) {
    char buf[160];
    const bool ok = got < bound;
    std::snprintf(buf, sizeof buf, "  %-34s %10lld  < %17lld  %s", label.c_str(), got, bound, ok ? "ok" : "MISMATCH");
    line(buf);
    if (ok) {
      ++passed_;
    } else {
      ++failed_;
      failures_.push_back(label);
    }
  }

  void info(const std::string& label, long long value, const std::string& note = "") {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-34s %10lld  %s", label.c_str(), value, note.c_str());
    line(buf);
  }

  bool ok() const { return failed_ == 0; }

  std::string finish() {
    section("summary");
    line("  hard checks passed: " + std::to_string(passed_));
    line("  hard checks failed: " + std::to_string(failed_));
    for (const std::string& f : failures_) line("  offending cell: " + f);
    return text_;
  }

 private:
  std::string text_;
  int passed_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string cell(const char* what, int n, int k = -1) {
  std::string s = std::string(what) + " n=" + std::to_string(n);
  if (k >= 0) s += " K=" + std::to_string(k);
  return s;
}

// (11/48) 4^n - 2^n + 7/3, exactly.
long long full_encoding_formula(int n) {
  const long long p4 = 1LL << (2 * n), p2 = 1LL << n;
  return (11 * p4 - 48 * p2 + 112) / 48;
}

struct LowRankCell {
  int n, K;
  long long reference;
};

}  // namespace

std::string tables_report(std::uint64_t seed, bool& ok) {
  Report r;
  r.line("# zxsynth count tables, seed " + std::to_string(seed));

  {
    r.section("state preparation");
    Rng rng(seed);
    const int ns[] = {2, 3, 4, 5, 10, 15};
    const long long want[] = {1, 3, 7, 18, 867, 29627};
    const long long bound[] = {1, 2, 5, 12, 505, 16373};
    for (int i = 0; i < 6; ++i) {
      const int n = ns[i];
      const Circuit c = prepare_state(random_state(Eigen::Index{1} << n, rng));
      r.check(cell("emitted", n), cnot_count(c), want[i]);
      r.check(cell("recursion", n), nstate_count(n), want[i]);
      if (n >= 4) r.check(cell("closed form", n), nstate_count_closed_form(n), want[i]);
      r.check(cell("lower bound", n), state_prep_lower_bound(n), bound[i]);
    }
  }

  {
    r.section("block encoding, full rank");
    Rng rng(seed + 1);
    const long long want[] = {9, 45, 205, 877, 3629, 14765, 59565};
    const long long bound[] = {6, 29, 125, 508, 2043};
    for (int n = 3; n <= 9; ++n) {
      const Eigen::Index h = Eigen::Index{1} << (n - 1);
      const BlockEncodingResult e = block_encode_full(random_gaussian(h, h, rng));
      r.check(cell("emitted", n), cnot_count(e.circuit), want[n - 3]);
      r.check(cell("formula", n), full_encoding_formula(n), want[n - 3]);
      if (n <= 7) {
        r.check_less(cell("below unitary lower bound", n), cnot_count(e.circuit), unitary_lower_bound(n));
        r.check(cell("encoding lower bound", n), block_encoding_lower_bound(n), bound[n - 3]);
      }
    }
  }

  {
    r.section("unitary synthesis");
    Rng rng(seed + 2);
    const long long exact[] = {3, 19, 95, 423, 1783, 7319};
    const long long updiag[] = {2, 18, 94, 422};
    const long long iso[] = {2, 13, 69};
    for (int n = 2; n <= 7; ++n) {
      const Matrix U = random_unitary(Eigen::Index{1} << n, rng);
      r.check(cell("exact emitted", n), cnot_count(synth_unitary_exact(U)), exact[n - 2]);
      if (n <= 5) r.check(cell("up to diagonal emitted", n), synth_unitary_up_to_diag(U).cnots, updiag[n - 2]);
      if (n <= 4) {
        const SynthesisResult s = synth_isometry_up_to_diag(U.leftCols(U.cols() / 2));
        r.check(cell("isometry up to diagonal emitted", n), s.cnots, iso[n - 2]);
      }
    }
  }

  {
    r.section("block encoding, low rank");
    r.line("  reference values are a soft target; the hard check is low rank < full rank");
    Rng rng(seed + 3);
    const std::vector<LowRankCell> cells = {
        {3, 1, 6},     {4, 1, 14},    {5, 1, 30},    {6, 1, 68},    {6, 2, 616},   {7, 1, 148},
        {7, 2, 662},   {7, 3, 1098},  {7, 4, 1532},  {7, 5, 1970},  {8, 1, 314},   {8, 2, 1178},
        {8, 3, 1940},  {8, 4, 2700},  {8, 5, 3464},  {8, 10, 7064}, {9, 1, 654},   {9, 2, 2044},
        {9, 3, 3308},  {9, 4, 4570},  {9, 5, 5836},  {9, 10, 11898}};
    for (const LowRankCell& c : cells) {
      const Eigen::Index h = Eigen::Index{1} << (c.n - 1);
      const BlockEncodingResult e = block_encode_low_rank(random_rank_k(h, c.K, rng), c.K);
      const long long got = cnot_count(e.circuit);
      r.check_less(cell("emitted", c.n, c.K), got, count_block_encode_full(c.n));
      r.check(cell("predicted", c.n, c.K), count_block_encode_low_rank(c.n, c.K), got);
      r.info(cell("reference", c.n, c.K), c.reference, got <= c.reference ? "(emitted <= reference)" : "(emitted > reference)");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "  fitted slack constant C = %.6f", fitted_low_rank_constant());
    r.line(buf);
  }

  ok = r.ok();
  return r.finish();
}

}  // namespace zxsynth::cli
