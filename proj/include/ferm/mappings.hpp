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

#include <functional>
#include <vector>

#include "ferm/hybrid.hpp"
#include "ferm/opsum.hpp"

namespace ferm {

// ---------------------------------------------------------------------------
// Jordan-Wigner
// ---------------------------------------------------------------------------

/// Image of Majorana c_k (1-based, k in [2 n_modes]) on n_modes qubits:
/// c_{2j-1} -> Z_1..Z_{j-1} X_j, c_{2j} -> Z_1..Z_{j-1} Y_j.
inline PauliTerm jordan_wigner(int k, int n_modes) {
  if (k < 1 || k > 2 * n_modes) throw_dim("jordan_wigner: index out of range");
  int j = (k + 1) / 2;
  PauliTerm t = PauliTerm::single(n_modes, j, (k % 2 == 1) ? 'X' : 'Y');
  for (int i = 1; i < j; ++i) t.z.flip(i - 1);
  return t;
}

/// Extend a generator image c_k -> PauliTerm multiplicatively to a monomial:
/// coeff * C_K = coeff * i^{|K|(|K|-1)/2} c_{k1}..c_{km} -> product of images.
inline PauliTerm map_majorana_term(
    const MajoranaTerm& t, int n_qubits,
    const std::function<PauliTerm(int)>& image_of) {
  PauliTerm r = PauliTerm::identity(n_qubits, t.coeff);
  r.phase = majorana_phase_exp(t.indices.size());
  for (int k : t.indices) r = pauli_mul(r, image_of(k));
  return r;
}

inline PauliTerm jw_map_term(const MajoranaTerm& t) {
  int n_modes = t.n_majoranas / 2;
  return map_majorana_term(t, n_modes,
                           [&](int k) { return jordan_wigner(k, n_modes); });
}

// ---------------------------------------------------------------------------
// Bravyi-Kitaev (Fenwick-tree flavor)
// ---------------------------------------------------------------------------

namespace detail {

// 0-based Fenwick index sets over n elements.
inline std::vector<int> fenwick_update_set(int j, int n) {
  std::vector<int> s;
  for (int k = j | (j + 1); k < n; k = k | (k + 1)) s.push_back(k);
  return s;
}
inline std::vector<int> fenwick_parity_set(int j) {
  std::vector<int> s;
  for (int k = j - 1; k >= 0; k = (k & (k + 1)) - 1) s.push_back(k);
  return s;
}
// Children of node j storing parities of subranges of [0, j).
inline std::vector<int> fenwick_flip_set(int j) {
  std::vector<int> s;
  int lo = j & (j + 1);
  for (int k = j - 1; k >= lo; k = (k & (k + 1)) - 1) s.push_back(k);
  return s;
}

}  // namespace detail

/// Image of Majorana c_k under the Bravyi-Kitaev (binary-tree) encoding on
/// n_modes qubits. Pauli weight is O(log n_modes).
inline PauliTerm bravyi_kitaev(int k, int n_modes) {
  if (k < 1 || k > 2 * n_modes) throw_dim("bravyi_kitaev: index out of range");
  int j = (k - 1) / 2;  // 0-based mode
  PauliTerm t(n_modes);
  auto upd = detail::fenwick_update_set(j, n_modes);
  for (int q : upd) t.x.set(q);
  if (k % 2 == 1) {
    t.x.set(j);
    for (int q : detail::fenwick_parity_set(j)) t.z.set(q);
  } else {
    t.x.set(j);
    t.z.set(j);
    t.phase = 1;  // Y_j = i X_j Z_j
    auto par = detail::fenwick_parity_set(j);
    auto flip = detail::fenwick_flip_set(j);
    for (int q : par)
      if (std::find(flip.begin(), flip.end(), q) == flip.end()) t.z.set(q);
  }
  return t;
}

inline PauliTerm bk_map_term(const MajoranaTerm& t) {
  int n_modes = t.n_majoranas / 2;
  return map_majorana_term(t, n_modes,
                           [&](int k) { return bravyi_kitaev(k, n_modes); });
}

// ---------------------------------------------------------------------------
// Qubit assimilation
// ---------------------------------------------------------------------------

enum class MajoranaLabel { x, y, z };

/// Relabelling of the 3n Majoranas of the assimilated space:
/// c_{y,j} -> 2j-1, c_{x,j} -> 2j, c_{z,j} -> 2n+j.
struct AssimilationLayout {
  int n_qubits = 0;  // even

  explicit AssimilationLayout(int n) : n_qubits(n) {
    if (n < 2 || n % 2 != 0)
      throw_dim("AssimilationLayout: n_qubits must be positive and even");
  }

  int n_majoranas() const { return 3 * n_qubits; }

  int index_of(MajoranaLabel a, int j) const {
    if (j < 1 || j > n_qubits) throw_dim("AssimilationLayout: bad site");
    switch (a) {
      case MajoranaLabel::y: return 2 * j - 1;
      case MajoranaLabel::x: return 2 * j;
      default: return 2 * n_qubits + j;
    }
  }

  std::pair<MajoranaLabel, int> label_of(int idx) const {
    if (idx < 1 || idx > 3 * n_qubits)
      throw_dim("AssimilationLayout: index out of range");
    if (idx <= 2 * n_qubits)
      return {(idx % 2 == 1) ? MajoranaLabel::y : MajoranaLabel::x,
              (idx + 1) / 2};
    return {MajoranaLabel::z, idx - 2 * n_qubits};
  }
};

/// X_j -> i c_{y,j} c_{z,j}, Z_j -> i c_{x,j} c_{y,j},
/// c~_j -> i c_{x,j} c_{y,j} c_{z,j}; extended multiplicatively.
inline MajoranaTerm assimilate(const HybridTerm& t,
                               const AssimilationLayout& layout) {
  if (t.n_qubits != layout.n_qubits) throw_dim("assimilate: layout mismatch");
  int N = layout.n_majoranas();
  MajoranaTerm r =
      MajoranaTerm::identity(N, t.coeff * ipow(t.pauli.phase));
  auto mul_gen = [&](std::initializer_list<int> idx) {
    r = majorana_mul(r, majorana_normalize(N, idx, {0, 1}));
  };
  for (int j = 1; j <= t.n_qubits; ++j) {
    if (t.pauli.x.get(j - 1))
      mul_gen({layout.index_of(MajoranaLabel::y, j),
               layout.index_of(MajoranaLabel::z, j)});
    if (t.pauli.z.get(j - 1))
      mul_gen({layout.index_of(MajoranaLabel::x, j),
               layout.index_of(MajoranaLabel::y, j)});
  }
  r.coeff *= ipow(majorana_phase_exp(t.majorana.indices.size()));
  for (int j : t.majorana.indices)
    mul_gen({layout.index_of(MajoranaLabel::x, j),
             layout.index_of(MajoranaLabel::y, j),
             layout.index_of(MajoranaLabel::z, j)});
  return r;
}

/// c_{x,j} -> X_j c~_j, c_{y,j} -> -Y_j c~_j, c_{z,j} -> Z_j c~_j.
inline HybridTerm assimilate_inverse(const MajoranaTerm& t,
                                     const AssimilationLayout& layout) {
  if (t.n_majoranas != layout.n_majoranas())
    throw_dim("assimilate_inverse: layout mismatch");
  int n = layout.n_qubits;
  HybridTerm r = HybridTerm::identity(
      n, t.coeff * ipow(majorana_phase_exp(t.indices.size())));
  for (int idx : t.indices) {
    auto [a, j] = layout.label_of(idx);
    char kind = (a == MajoranaLabel::x) ? 'X'
                : (a == MajoranaLabel::y) ? 'Y' : 'Z';
    cplx sign = (a == MajoranaLabel::y) ? cplx{-1, 0} : cplx{1, 0};
    HybridTerm gen(PauliTerm::single(n, j, kind, sign),
                   majorana_normalize(n, {j}));
    r = hybrid_mul(r, gen);
  }
  return r;
}

// ---------------------------------------------------------------------------
// OperatorSum-level mapping
// ---------------------------------------------------------------------------

enum class Mapping { jw, bk, assimilate, assimilate_inverse };

inline PauliSum map_opsum(Mapping m, const MajoranaSum& h) {
  if (m != Mapping::jw && m != Mapping::bk)
    throw_dim("map_opsum: majorana input requires jw or bk");
  PauliSum out;
  for (const auto& t : h.terms)
    out.add(m == Mapping::jw ? jw_map_term(t) : bk_map_term(t));
  out.simplify();
  return out;
}

inline MajoranaSum assimilate_opsum(const HybridSum& h,
                                    const AssimilationLayout& layout) {
  MajoranaSum out;
  for (const auto& t : h.terms) out.add(assimilate(t, layout));
  out.simplify();
  return out;
}

inline HybridSum assimilate_inverse_opsum(const MajoranaSum& h,
                                          const AssimilationLayout& layout) {
  HybridSum out;
  for (const auto& t : h.terms) out.add(assimilate_inverse(t, layout));
  out.simplify();
  return out;
}

}  // namespace ferm
