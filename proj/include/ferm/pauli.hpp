// Copyright 2026 The ferm authors
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

#pragma once

#include <complex>
#include <string>

#include "ferm/bits.hpp"
#include "ferm/errors.hpp"

namespace ferm {

using cplx = std::complex<double>;

/// i^k for k mod 4, exact.
inline cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// A phase-tracked Pauli string in binary symplectic form. The represented
/// operator is coeff * i^phase * prod_j X_j^{x_j} Z_j^{z_j}, j ascending,
/// X before Z on each qubit. Qubit indices are 1-based.
struct PauliTerm {
  int n_qubits = 0;
  Bits x, z;
  int phase = 0;  // power of i, mod 4
  cplx coeff{1, 0};

  PauliTerm() = default;
  explicit PauliTerm(int n) : n_qubits(n), x(n), z(n) {
    if (n < 1) throw_dim("PauliTerm: n_qubits must be positive");
  }

  static PauliTerm identity(int n, cplx c = {1, 0}) {
    PauliTerm t(n);
    t.coeff = c;
    return t;
  }

  /// Single-qubit factor: kind in {'X','Y','Z'}; Y is stored as i*X*Z.
  static PauliTerm single(int n, int j, char kind, cplx c = {1, 0}) {
    PauliTerm t(n);
    t.coeff = c;
    if (j < 1 || j > n) throw_dim("PauliTerm: qubit index out of range");
    if (kind == 'X' || kind == 'Y') t.x.set(j - 1);
    if (kind == 'Z' || kind == 'Y') t.z.set(j - 1);
    if (kind == 'Y') t.phase = 1;
    return t;
  }

  bool is_identity_string() const { return x.none() && z.none(); }
  int weight() const { return int((x | z).popcount()); }
  cplx scalar() const { return coeff * ipow(phase); }

  /// Letter at qubit j (1-based): 'I','X','Y','Z'.
  char letter(int j) const {
    bool a = x.get(j - 1), b = z.get(j - 1);
    return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
  }
};

inline PauliTerm pauli_mul(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) throw_dim("pauli_mul: size mismatch");
  PauliTerm r(a.n_qubits);
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  // Commuting Z^{z_a} past X^{x_b} on each qubit gives (-1) per overlap.
  r.phase = int((a.phase + b.phase + 2 * (a.z & b.x).popcount()) % 4);
  r.coeff = a.coeff * b.coeff;
  return r;
}

inline bool pauli_commutes(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) throw_dim("pauli_commutes: size mismatch");
  return (((a.x & b.z).popcount() + (a.z & b.x).popcount()) & 1) == 0;
}

inline bool same_string(const PauliTerm& a, const PauliTerm& b) {
  return a.n_qubits == b.n_qubits && a.x == b.x && a.z == b.z;
}

}  // namespace ferm
