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

#include <cmath>

#include "ferm/circuit.hpp"
#include "ferm/mappings.hpp"

namespace ferm {

/// Fermionic lift of a qubit Hamiltonian: each Pauli term is assimilated
/// (with trivial auxiliary part) into the 3n-Majorana space. A weight-w
/// Pauli term becomes a weight-2w Majorana term, and the spectrum of the
/// qubit Hamiltonian is reproduced with a uniform 2^{n/2}-fold extra
/// degeneracy.
inline MajoranaSum construct_nlts(const PauliSum& h) {
  if (h.terms.empty()) throw_dim("construct_nlts: empty Hamiltonian");
  int n = h.terms.front().n_qubits;
  AssimilationLayout layout(n);
  MajoranaSum out;
  for (const auto& t : h.terms)
    out.add(assimilate(HybridTerm(t, MajoranaTerm::identity(n)), layout));
  out.simplify();
  return out;
}

/// Parameters of the circuit-depth bound for spread low-energy states of a
/// local sparse fermionic Hamiltonian.
struct DepthBoundInput {
  int system_modes = 0;          // l >= 1
  int ancilla_modes = 0;         // m >= 0
  double spread_distance = 0.0;  // L >= 0, Hamming scale in bits
  double min_mass = 0.0;         // mu, in (0, 1); mu = 1 is degenerate
};

/// T >= 1/2 * log_3( L^2 / (1600 (l+m) ln(1/mu)) ), clamped at 0.
/// The logarithm of 1/mu is natural.
inline double depth_lower_bound(const DepthBoundInput& in) {
  if (in.system_modes < 1 || in.ancilla_modes < 0 || in.spread_distance < 0)
    throw_dim("depth_lower_bound: bad mode counts or distance");
  if (in.min_mass <= 0 || in.min_mass >= 1)
    throw_dim("depth_lower_bound: min_mass must lie in (0, 1)");
  if (in.spread_distance == 0) return 0.0;
  double denom = 1600.0 * (in.system_modes + in.ancilla_modes) *
                 std::log(1.0 / in.min_mass);
  double t = 0.5 * std::log(in.spread_distance * in.spread_distance / denom) /
             std::log(3.0);
  return std::max(0.0, t);
}

/// Upper bound 3n * 4^T on the number of Majoranas in the backward light
/// cone of one output mode after T non-Gaussian layers on 3n Majoranas.
inline double lightcone_majorana_bound(int n_qubits, int depth_nongaussian) {
  if (n_qubits <= 0 || depth_nongaussian < 0)
    throw_dim("lightcone_majorana_bound: bad parameters");
  return 3.0 * n_qubits * std::pow(4.0, depth_nongaussian);
}

}  // namespace ferm
