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

#include "zxsynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace zxsynth {

Gate Gate::single(int target, const Mat2& m) {
  Gate g;
  g.kind = Kind::SingleQubit;
  g.target = target;
  g.matrix = m;
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = Kind::CNOT;
  g.control = control;
  g.target = target;
  return g;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw Error(ErrorKind::InvalidInput, "circuit needs at least one qubit");
}

void Circuit::check_wire(int w) const {
  if (w < 0 || w >= n_qubits_) {
    throw Error(ErrorKind::InvalidInput, "wire index " + std::to_string(w) + " out of range");
  }
}

void Circuit::add_single(int target, const Mat2& m) {
  check_wire(target);
  gates_.push_back(Gate::single(target, m));
}

void Circuit::add_cnot(int control, int target) {
  check_wire(control);
  check_wire(target);
  if (control == target) throw Error(ErrorKind::InvalidInput, "CNOT control equals target");
  gates_.push_back(Gate::cnot(control, target));
}

void Circuit::add(const Gate& g) {
  if (g.is_cnot()) {
    add_cnot(g.control, g.target);
  } else {
    add_single(g.target, g.matrix);
  }
}

void Circuit::append(const Circuit& other, const std::vector<int>& wire_map) {
  if (static_cast<int>(wire_map.size()) != other.n_qubits()) {
    throw Error(ErrorKind::InvalidInput, "append: wire map size mismatch");
  }
  gates_.reserve(gates_.size() + other.gates().size());
  for (const Gate& g : other.gates()) {
    if (g.is_cnot()) {
      add_cnot(wire_map[g.control], wire_map[g.target]);
    } else {
      add_single(wire_map[g.target], g.matrix);
    }
  }
  global_phase_ += other.global_phase();
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits() != n_qubits_) throw Error(ErrorKind::InvalidInput, "append: width mismatch");
  gates_.insert(gates_.end(), other.gates().begin(), other.gates().end());
  global_phase_ += other.global_phase();
}

int cnot_count(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(),
                                        [](const Gate& g) { return g.is_cnot(); }));
}

namespace {

void apply_gate(const Gate& g, int n, Matrix& s) {
  const Eigen::Index dim = s.rows();
  const Eigen::Index tbit = Eigen::Index{1} << (n - 1 - g.target);
  if (g.is_cnot()) {
    const Eigen::Index cbit = Eigen::Index{1} << (n - 1 - g.control);
    for (Eigen::Index col = 0; col < s.cols(); ++col) {
      cplx* v = s.col(col).data();
      // Visit indices with the control set and the target clear.
      const Eigen::Index lo = std::min(cbit, tbit), hi = std::max(cbit, tbit);
      for (Eigen::Index a = 0; a < dim; a += 2 * hi)
        for (Eigen::Index b = a; b < a + hi; b += 2 * lo)
          for (Eigen::Index i = b; i < b + lo; ++i) std::swap(v[i | cbit], v[i | cbit | tbit]);
    }
    return;
  }
  const double ar = g.matrix(0, 0).real(), ai = g.matrix(0, 0).imag();
  const double br = g.matrix(0, 1).real(), bi = g.matrix(0, 1).imag();
  const double cr = g.matrix(1, 0).real(), ci = g.matrix(1, 0).imag();
  const double dr = g.matrix(1, 1).real(), di = g.matrix(1, 1).imag();
  for (Eigen::Index col = 0; col < s.cols(); ++col) {
    double* __restrict v = reinterpret_cast<double*>(s.col(col).data());
    for (Eigen::Index base = 0; base < dim; base += 2 * tbit)
      for (Eigen::Index i = base; i < base + tbit; ++i) {
        double* __restrict p = v + 2 * i;
        double* __restrict q = v + 2 * (i + tbit);
        const double xr = p[0], xi = p[1], yr = q[0], yi = q[1];
        p[0] = ar * xr - ai * xi + br * yr - bi * yi;
        p[1] = ar * xi + ai * xr + br * yi + bi * yr;
        q[0] = cr * xr - ci * xi + dr * yr - di * yi;
        q[1] = cr * xi + ci * xr + dr * yi + di * yr;
      }
  }
}

}  // namespace

void apply_inplace(const Circuit& c, Matrix& block) {
  if (block.rows() != (Eigen::Index{1} << c.n_qubits())) {
    throw Error(ErrorKind::InvalidInput, "apply: dimension mismatch");
  }
  // Runs of single-qubit gates on a wire are fused until a C-NOT touches it.
  const int n = c.n_qubits();
  std::vector<Mat2> pending(n, Mat2::Identity());
  std::vector<char> dirty(n, 0);
  auto flush = [&](int w) {
    if (!dirty[w]) return;
    apply_gate(Gate::single(w, pending[w]), n, block);
    pending[w].setIdentity();
    dirty[w] = 0;
  };
  for (const Gate& g : c.gates()) {
    if (g.is_cnot()) {
      flush(g.control);
      flush(g.target);
      apply_gate(g, n, block);
    } else {
      pending[g.target] = g.matrix * pending[g.target];
      dirty[g.target] = 1;
    }
  }
  for (int w = 0; w < n; ++w) flush(w);
  if (c.global_phase() != 0.0) block *= std::polar(1.0, c.global_phase());
}

Vector apply(const Circuit& c, const Vector& state) {
  Matrix s = state;
  apply_inplace(c, s);
  return s.col(0);
}

Matrix to_unitary(const Circuit& c, int max_qubits) {
  if (c.n_qubits() > max_qubits) {
    throw Error(ErrorKind::TooLarge, "to_unitary: " + std::to_string(c.n_qubits()) +
                                         " qubits exceeds cap " + std::to_string(max_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Matrix U = Matrix::Identity(dim, dim);
  apply_inplace(c, U);
  return U;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    if (it->is_cnot()) {
      out.add_cnot(it->control, it->target);
    } else {
      out.add_single(it->target, it->matrix.adjoint());
    }
  }
  out.set_global_phase(-c.global_phase());
  return out;
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c;
  return m;
}

U3Angles u3_angles(const Mat2& U) {
  constexpr double kTiny = 1e-12;
  U3Angles a;
  const double c = std::abs(U(0, 0)), s = std::abs(U(1, 0));
  a.theta = 2.0 * std::atan2(s, c);
  if (s < kTiny) {
    a.phase = std::arg(U(0, 0));
    a.lambda = std::arg(U(1, 1)) - a.phase;
  } else if (c < kTiny) {
    a.phase = std::arg(-U(0, 1));
    a.phi = std::arg(U(1, 0)) - a.phase;
  } else {
    a.phase = std::arg(U(0, 0));
    a.phi = std::arg(U(1, 0)) - a.phase;
    a.lambda = std::arg(-U(0, 1)) - a.phase;
  }
  return a;
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits() << "];\n";
  double phase = c.global_phase();
  for (const Gate& g : c.gates()) {
    if (g.is_cnot()) {
      os << "cx q[" << g.control << "],q[" << g.target << "];\n";
    } else {
      const U3Angles a = u3_angles(g.matrix);
      phase += a.phase;
      os << "u3(" << fmt_double(a.theta) << "," << fmt_double(a.phi) << "," << fmt_double(a.lambda)
         << ") q[" << g.target << "];\n";
    }
  }
  if (phase != 0.0) os << "// global_phase: " << fmt_double(phase) << "\n";
  return os.str();
}

using ojson = nlohmann::ordered_json;

std::string emit_json(const Circuit& c) {
  ojson root;
  root["n_qubits"] = c.n_qubits();
  root["global_phase"] = c.global_phase();
  ojson gates = ojson::array();
  for (const Gate& g : c.gates()) {
    ojson j;
    if (g.is_cnot()) {
      j["kind"] = "cnot";
      j["control"] = g.control;
      j["target"] = g.target;
    } else {
      j["kind"] = "u";
      j["target"] = g.target;
      ojson m = ojson::array();
      for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) m.push_back({g.matrix(r, k).real(), g.matrix(r, k).imag()});
      j["matrix"] = m;
    }
    gates.push_back(j);
  }
  root["gates"] = gates;
  return root.dump(1) + "\n";
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::ParseError, where + ": " + msg);
}

void require_keys(const ojson& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  for (const char* k : keys) {
    if (!obj.contains(k)) parse_fail(where, std::string("missing field \"") + k + "\"");
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) ==
        keys.end()) {
      parse_fail(where, "unknown field \"" + it.key() + "\"");
    }
  }
}

int as_int(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  return v.get<int>();
}

double as_double(const ojson& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where, "expected a number");
  return v.get<double>();
}

}  // namespace

Circuit parse_json(const std::string& text) {
  ojson root;
  try {
    root = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    parse_fail("line " + std::to_string(line), e.what());
  }
  require_keys(root, {"n_qubits", "global_phase", "gates"}, "circuit");
  const int n = as_int(root["n_qubits"], "n_qubits");
  if (n < 1) parse_fail("n_qubits", "must be positive");
  Circuit c(n);
  c.set_global_phase(as_double(root["global_phase"], "global_phase"));
  if (!root["gates"].is_array()) parse_fail("gates", "expected an array");
  std::size_t idx = 0;
  for (const ojson& g : root["gates"]) {
    const std::string where = "gates[" + std::to_string(idx++) + "]";
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string()) {
      parse_fail(where, "missing or invalid \"kind\"");
    }
    const std::string kind = g["kind"].get<std::string>();
    try {
      if (kind == "cnot") {
        require_keys(g, {"kind", "control", "target"}, where);
        c.add_cnot(as_int(g["control"], where + ".control"), as_int(g["target"], where + ".target"));
      } else if (kind == "u") {
        require_keys(g, {"kind", "target", "matrix"}, where);
        const ojson& m = g["matrix"];
        if (!m.is_array() || m.size() != 4) parse_fail(where + ".matrix", "expected 4 [re,im] pairs");
        Mat2 mat;
        for (int k = 0; k < 4; ++k) {
          const std::string w = where + ".matrix[" + std::to_string(k) + "]";
          if (!m[k].is_array() || m[k].size() != 2) parse_fail(w, "expected [re,im]");
          mat(k / 2, k % 2) = cplx(as_double(m[k][0], w), as_double(m[k][1], w));
        }
        if (unitarity_error(mat) > 1e-9) parse_fail(where + ".matrix", "not unitary");
        c.add_single(as_int(g["target"], where + ".target"), mat);
      } else {
        parse_fail(where + ".kind", "unknown gate kind \"" + kind + "\"");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ParseError) throw;
      parse_fail(where, e.what());
    }
  }
  return c;
}

Mat2 hadamard() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 rot_x(double t) {
  Mat2 m;
  m << std::cos(t / 2), kI * std::sin(t / 2), kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Mat2 rot_y(double t) {
  Mat2 m;
  m << std::cos(t / 2), std::sin(t / 2), -std::sin(t / 2), std::cos(t / 2);
  return m;
}

Mat2 rot_z(double t) {
  Mat2 m;
  m << std::polar(1.0, t / 2), 0, 0, std::polar(1.0, -t / 2);
  return m;
}

}  // namespace zxsynth
