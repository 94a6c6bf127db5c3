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

#include "ferm/opsum.hpp"

namespace ferm {

/// Repetition-code Hamiltonian sum_{i<n} (1 - Z_i Z_{i+1}) / 2 on n qubits.
/// Frustration-free with the two ground states |0..0> and |1..1>.
inline PauliSum repetition_hamiltonian(int n_qubits) {
  if (n_qubits < 2) throw_dim("repetition_hamiltonian: need n >= 2");
  PauliSum h;
  for (int i = 1; i < n_qubits; ++i) {
    h.add(PauliTerm::identity(n_qubits, 0.5));
    PauliTerm zz = pauli_mul(PauliTerm::single(n_qubits, i, 'Z'),
                             PauliTerm::single(n_qubits, i + 1, 'Z'));
    zz.coeff = -0.5;
    h.add(zz);
  }
  h.simplify();
  return h;
}

/// [[7,1,3]] CSS code Hamiltonian sum_checks (1 - S) / 2, with X and Z
/// checks both supported on {4,5,6,7}, {2,3,6,7}, {1,3,5,7}.
inline PauliSum steane_hamiltonian() {
  const int n = 7;
  const std::vector<std::vector<int>> supports = {
      {4, 5, 6, 7}, {2, 3, 6, 7}, {1, 3, 5, 7}};
  PauliSum h;
  for (char kind : {'X', 'Z'}) {
    for (const auto& sup : supports) {
      h.add(PauliTerm::identity(n, 0.5));
      PauliTerm s = PauliTerm::identity(n, -0.5);
      for (int q : sup) s = pauli_mul(s, PauliTerm::single(n, q, kind));
      h.add(s);
    }
  }
  h.simplify();
  return h;
}

}  // namespace ferm
