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

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"
#include "zxsynth/spdmm.hpp"

namespace zxsynth {
namespace {

Vector basis(int n, Eigen::Index k) {
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  v[k] = 1.0;
  return v;
}

Vector zero_ket(int n) { return basis(n, 0); }

void expect_prepares(const Vector& psi, double tol = 1e-9) {
  const int n = qubits_for_dim(psi.size());
  const Circuit c = prepare_state(psi);
  EXPECT_EQ(cnot_count(c), nstate_count(n)) << "n=" << n;
  const Vector out = zxsynth::apply(c, zero_ket(n));
  // The global phase is part of the circuit, so compare amplitudes directly.
  EXPECT_LT((out - psi).norm(), std::sqrt(2 * tol)) << "n=" << n;
  EXPECT_GE(testing::overlap(psi, out), 1.0 - tol);
}

TEST(Spdmm, RandomStatesSmallN) {
  Rng rng(51);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) expect_prepares(random_state(Eigen::Index{1} << n, rng));
  }
}

TEST(Spdmm, StructuredStates) {
  for (int n = 2; n <= 8; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    expect_prepares(zero_ket(n));
    expect_prepares(basis(n, dim - 1));
    Vector ghz = Vector::Zero(dim);
    ghz[0] = ghz[dim - 1] = 1.0 / std::sqrt(2.0);
    expect_prepares(ghz);
    expect_prepares(Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
  }
}

TEST(Spdmm, ComplexPhasesAndProductStates) {
  Rng rng(52);
  const Vector a = random_state(8, rng), b = random_state(16, rng);
  Vector prod(128);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 16; ++j) prod[i * 16 + j] = a[i] * b[j];
  expect_prepares(prod);
  expect_prepares(kI * zero_ket(5));
}

TEST(Spdmm, PermutedAmplitudesKeepTheCount) {
  Rng rng(53);
  Vector psi = random_state(64, rng);
  const int base = cnot_count(prepare_state(psi));
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(psi.data(), psi.data() + psi.size(), rng);
    EXPECT_EQ(cnot_count(prepare_state(psi)), base);
  }
}

TEST(Spdmm, CountValues) {
  const std::int64_t expect[] = {0, 0, 1, 3, 7, 18, 42, 93, 199, 418, 867, 1774, 3612, 7303, 14736, 29627};
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(nstate_count(n), expect[n]) << "n=" << n;
}

TEST(Spdmm, ClosedFormMatchesRecursion) {
  for (int n = 4; n <= 30; ++n) EXPECT_EQ(nstate_count_closed_form(n), nstate_count(n)) << "n=" << n;
  EXPECT_THROW(nstate_count_closed_form(3), Error);
}

TEST(Spdmm, CountBounds) {
  for (int n = 1; n <= 30; ++n) {
    EXPECT_LE(static_cast<double>(nstate_count(n)), 11.0 / 12.0 * std::ldexp(1.0, n)) << "n=" << n;
    EXPECT_LE(state_prep_lower_bound(n), nstate_count(n)) << "n=" << n;
  }
  const std::pair<int, std::int64_t> bounds[] = {{2, 1}, {3, 2}, {4, 5}, {5, 12}, {10, 505}, {15, 16373}};
  for (auto [n, v] : bounds) EXPECT_EQ(state_prep_lower_bound(n), v) << "n=" << n;
}

TEST(Spdmm, RejectsBadStates) {
  try {
    prepare_state(2.0 * zero_ket(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNormalized);
  }
  EXPECT_THROW(prepare_state(Vector::Constant(3, 1.0 / std::sqrt(3.0))), Error);
  Vector nan = zero_ket(2);
  nan[1] = std::nan("");
  EXPECT_THROW(prepare_state(nan), Error);
}

TEST(Spdmm, StateTextRoundTrip) {
  Rng rng(54);
  const Vector psi = random_state(16, rng);
  const Vector back = parse_state_text(format_state_text(psi));
  EXPECT_EQ(back, psi);
}

TEST(Spdmm, StateTextErrorsCarryLineNumbers) {
  auto expect_line = [](const std::string& text, const std::string& fragment) {
    try {
      parse_state_text(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_line("1\n1 0\nx 0\n", "line 3");
  expect_line("1\n1 0\n", "line");
  expect_line("1\n1 0\n0 0\n5 5\n", "line 4");
  expect_line("0\n", "line 1");
  expect_line("# only a comment\n", "line");
}

}  // namespace
}  // namespace zxsynth
