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

#include <algorithm>
#include <vector>

#include "ferm/pauli.hpp"

namespace ferm {

/// A coefficient times the Hermitian-normalized Majorana monomial
/// C_K = i^{|K|(|K|-1)/2} c_{k1} ... c_{k|K|}, K strictly increasing.
/// Majorana indices are 1-based in [n_majoranas].
struct MajoranaTerm {
  int n_majoranas = 0;  // 2x mode count
  std::vector<int> indices;
  cplx coeff{1, 0};

  MajoranaTerm() = default;
  explicit MajoranaTerm(int n) : n_majoranas(n) {
    if (n < 2 || n % 2 != 0)
      throw_dim("MajoranaTerm: n_majoranas must be positive and even");
  }

  static MajoranaTerm identity(int n, cplx c = {1, 0}) {
    MajoranaTerm t(n);
    t.coeff = c;
    return t;
  }

  int weight() const { return int(indices.size()); }
  bool is_identity_string() const { return indices.empty(); }
  int n_modes() const { return n_majoranas / 2; }
};

/// Phase exponent |K|(|K|-1)/2 mod 4 of the C_K convention.
inline int majorana_phase_exp(std::size_t k) {
  return int((k * (k - 1) / 2) % 4);
}

/// Canonicalize raw_coeff * c_{i1} c_{i2} ... into coeff * C_K. Repeated
/// indices are allowed and cancel via c_i^2 = 1; each adjacent swap flips
/// the sign.
inline MajoranaTerm majorana_normalize(int n_majoranas,
                                       std::vector<int> raw_indices,
                                       cplx raw_coeff = {1, 0}) {
  MajoranaTerm t(n_majoranas);
  for (int k : raw_indices)
    if (k < 1 || k > n_majoranas)
      throw_dim("majorana_normalize: index out of range");
  // Insertion sort tracking transposition parity.
  int sign = 1;
  for (std::size_t i = 1; i < raw_indices.size(); ++i) {
    int v = raw_indices[i];
    std::size_t j = i;
    while (j > 0 && raw_indices[j - 1] > v) {
      raw_indices[j] = raw_indices[j - 1];
      sign = -sign;
      --j;
    }
    raw_indices[j] = v;
  }
  // Cancel equal adjacent pairs.
  std::vector<int> out;
  out.reserve(raw_indices.size());
  for (std::size_t i = 0; i < raw_indices.size();) {
    if (i + 1 < raw_indices.size() && raw_indices[i] == raw_indices[i + 1])
      i += 2;
    else
      out.push_back(raw_indices[i++]);
  }
  // raw word = sign * c_{k1}..c_{km} = sign * i^{-p} * C_K.
  t.coeff = raw_coeff * double(sign) * ipow(-majorana_phase_exp(out.size()));
  t.indices = std::move(out);
  return t;
}

inline MajoranaTerm majorana_mul(const MajoranaTerm& a, const MajoranaTerm& b) {
  if (a.n_majoranas != b.n_majoranas) throw_dim("majorana_mul: size mismatch");
  std::vector<int> raw = a.indices;
  raw.insert(raw.end(), b.indices.begin(), b.indices.end());
  cplx rc = a.coeff * b.coeff * ipow(majorana_phase_exp(a.indices.size())) *
            ipow(majorana_phase_exp(b.indices.size()));
  return majorana_normalize(a.n_majoranas, std::move(raw), rc);
}

/// Parity rule: C_A and C_B commute iff |A||B| - |A cap B| is even.
inline bool majorana_commutes(const MajoranaTerm& a, const MajoranaTerm& b) {
  if (a.n_majoranas != b.n_majoranas)
    throw_dim("majorana_commutes: size mismatch");
  std::size_t shared = 0;
  auto it = b.indices.begin();
  for (int k : a.indices) {
    it = std::lower_bound(it, b.indices.end(), k);
    if (it != b.indices.end() && *it == k) ++shared;
  }
  return ((a.indices.size() * b.indices.size() + shared) & 1) == 0;
}

inline bool same_string(const MajoranaTerm& a, const MajoranaTerm& b) {
  return a.n_majoranas == b.n_majoranas && a.indices == b.indices;
}

}  // namespace ferm
