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

#include "ferm/majorana.hpp"
#include "ferm/pauli.hpp"

namespace ferm {

/// A term on the joint space of n qubits and n/2 auxiliary fermionic modes
/// (Majorana operators c~_1 .. c~_n, in their own index space). The qubit
/// Paulis commute with the auxiliary Majoranas. Represented operator is
/// coeff * (pauli tensor majorana); the member coefficients are folded into
/// coeff and kept at 1.
struct HybridTerm {
  int n_qubits = 0;  // even
  PauliTerm pauli;
  MajoranaTerm majorana;
  cplx coeff{1, 0};

  HybridTerm() = default;
  explicit HybridTerm(int n)
      : n_qubits(n), pauli(n), majorana(n) {
    if (n % 2 != 0) throw_dim("HybridTerm: n_qubits must be even");
  }
  HybridTerm(PauliTerm p, MajoranaTerm m) {
    if (p.n_qubits != m.n_majoranas)
      throw_dim("HybridTerm: pauli/majorana size mismatch");
    if (p.n_qubits % 2 != 0) throw_dim("HybridTerm: n_qubits must be even");
    n_qubits = p.n_qubits;
    coeff = p.coeff * m.coeff;
    p.coeff = {1, 0};
    m.coeff = {1, 0};
    pauli = std::move(p);
    majorana = std::move(m);
  }

  static HybridTerm identity(int n, cplx c = {1, 0}) {
    HybridTerm t(n);
    t.coeff = c;
    return t;
  }

  int weight() const {
    return pauli.weight() + majorana.weight();
  }
  bool is_identity_string() const {
    return pauli.is_identity_string() && majorana.is_identity_string();
  }
};

inline HybridTerm hybrid_mul(const HybridTerm& a, const HybridTerm& b) {
  if (a.n_qubits != b.n_qubits) throw_dim("hybrid_mul: size mismatch");
  HybridTerm r(pauli_mul(a.pauli, b.pauli), majorana_mul(a.majorana, b.majorana));
  r.coeff *= a.coeff * b.coeff;
  return r;
}

inline bool hybrid_commutes(const HybridTerm& a, const HybridTerm& b) {
  if (a.n_qubits != b.n_qubits) throw_dim("hybrid_commutes: size mismatch");
  return pauli_commutes(a.pauli, b.pauli) ==
         majorana_commutes(a.majorana, b.majorana);
}

inline bool same_string(const HybridTerm& a, const HybridTerm& b) {
  return same_string(a.pauli, b.pauli) && same_string(a.majorana, b.majorana);
}

}  // namespace ferm
