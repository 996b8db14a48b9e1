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

#include <vector>

#include "zxsynth/circuit.hpp"

namespace zxsynth {

/// Full: the complete uniformly controlled R_Z.
/// RL:   Full without its trailing CX(wire 1 -> wire 0); as operators Full = CX * RL.
/// RR:   Full without its leading CX(wire 1 -> wire 0);  as operators Full = RR * CX.
enum class UcrzVariant { Full, RL, RR };

struct UcrzSpec {
  int k = 0;                   ///< number of select wires
  std::vector<double> thetas;  ///< 2^k angles, select value j read MSB-first
  UcrzVariant variant = UcrzVariant::Full;
};

/// A1 (+) A2 = (I (x) W) (D (+) D^dagger) (I (x) V^dagger), D = diag(exp(i*d_phases)).
struct DemuxResult {
  Matrix V;
  RealVector d_phases;
  Matrix W;
};

DemuxResult demux(const Matrix& A1, const Matrix& A2);

/// Rotation angles of the Gray-code circuit, solved with a fast
/// Walsh-Hadamard transform.
std::vector<double> ucrz_angles(const std::vector<double>& thetas);

/// Circuit on k+1 wires: rotation on wire 0, selects on wires 1..k. The Full
/// variant implements sum_j R_Z(-2 theta_j) (x) |j><j|.
Circuit synth_ucrz(const UcrzSpec& spec);

/// Dense sum_j R_Z(-2 theta_j) (x) |j><j|.
Matrix ucrz_matrix(const std::vector<double>& thetas);

/// Angles realising D (+) D^dagger for D = diag(exp(i*d_phases)).
std::vector<double> ucrz_thetas_from_demux(const RealVector& d_phases);

/// Largest ||(I (x) Delta) R - R (I (x) Delta)||_F over `trials` random
/// diagonals Delta and random angles, R the dense matrix of the variant.
double diag_commutes_through(UcrzVariant variant, int k, int trials, Rng& rng);

}  // namespace zxsynth
