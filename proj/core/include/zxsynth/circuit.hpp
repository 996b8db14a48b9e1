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

#include <string>
#include <vector>

#include "zxsynth/numerics.hpp"

namespace zxsynth {

using Mat2 = Eigen::Matrix2cd;

/// Unit-modulus diagonal left over by up-to-diagonal synthesis.
using DiagonalPhases = Vector;

struct Gate {
  enum class Kind { SingleQubit, CNOT };

  Kind kind = Kind::SingleQubit;
  int target = 0;
  int control = -1;  ///< CNOT only
  Mat2 matrix = Mat2::Identity();  ///< SingleQubit only

  static Gate single(int target, const Mat2& m);
  static Gate cnot(int control, int target);
  bool is_cnot() const { return kind == Kind::CNOT; }
};

/// Gate list over n wires; gates()[0] is applied first. Wire 0 is the most
/// significant tensor factor.
class Circuit {
 public:
  explicit Circuit(int n_qubits = 1);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }

  void set_global_phase(double phase) { global_phase_ = phase; }
  void add_global_phase(double phase) { global_phase_ += phase; }

  void add_single(int target, const Mat2& m);
  void add_cnot(int control, int target);
  void add(const Gate& g);

  /// Append `other` with its wire i relabelled to wire_map[i]; phases add.
  void append(const Circuit& other, const std::vector<int>& wire_map);
  /// Append a circuit of the same width.
  void append(const Circuit& other);

 private:
  void check_wire(int w) const;

  int n_qubits_;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

int cnot_count(const Circuit& c);

/// Dense matrix of the circuit, including the global phase.
Matrix to_unitary(const Circuit& c, int max_qubits = 14);

/// Statevector simulation of the circuit on `state`.
Vector apply(const Circuit& c, const Vector& state);

/// Apply the circuit to every column of `block` (rows index the basis).
void apply_inplace(const Circuit& c, Matrix& block);

Circuit invert(const Circuit& c);

/// u3 angles with U = exp(i*phase) * u3(theta, phi, lambda).
struct U3Angles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double phase = 0.0;
};
U3Angles u3_angles(const Mat2& U);
Mat2 u3_matrix(double theta, double phi, double lambda);

std::string emit_qasm(const Circuit& c);
std::string emit_json(const Circuit& c);
Circuit parse_json(const std::string& text);

// Common single-qubit matrices. Rotations follow R_a(t) = exp(+i a.sigma t/2).
Mat2 hadamard();
Mat2 pauli_x();
Mat2 pauli_z();
Mat2 rot_x(double t);
Mat2 rot_y(double t);
Mat2 rot_z(double t);

}  // namespace zxsynth
