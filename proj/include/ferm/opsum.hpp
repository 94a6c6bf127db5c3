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
#include <map>
#include <tuple>
#include <vector>

#include "ferm/hybrid.hpp"
#include "ferm/majorana.hpp"
#include "ferm/pauli.hpp"

namespace ferm {

namespace detail {

inline std::tuple<int, Bits, Bits> term_key(const PauliTerm& t) {
  return {t.weight(), t.x, t.z};
}
inline std::tuple<int, std::vector<int>> term_key(const MajoranaTerm& t) {
  return {t.weight(), t.indices};
}
inline auto term_key(const HybridTerm& t) {
  return std::tuple(t.weight(), t.pauli.x, t.pauli.z, t.majorana.indices);
}

// Scalar carried by the term beyond its canonical operator string.
inline cplx term_scalar(const PauliTerm& t) { return t.scalar(); }
inline cplx term_scalar(const MajoranaTerm& t) { return t.coeff; }
inline cplx term_scalar(const HybridTerm& t) {
  return t.coeff * ipow(t.pauli.phase);
}

inline void set_term_scalar(PauliTerm& t, cplx c) {
  t.phase = 0;
  t.coeff = c;
}
inline void set_term_scalar(MajoranaTerm& t, cplx c) { t.coeff = c; }
inline void set_term_scalar(HybridTerm& t, cplx c) {
  t.pauli.phase = 0;
  t.coeff = c;
}

inline void touched_sites(const PauliTerm& t, std::vector<int>& out) {
  out.clear();
  for (int j = 1; j <= t.n_qubits; ++j)
    if (t.letter(j) != 'I') out.push_back(j);
}
inline void touched_sites(const MajoranaTerm& t, std::vector<int>& out) {
  out = t.indices;
}
inline void touched_sites(const HybridTerm& t, std::vector<int>& out) {
  touched_sites(t.pauli, out);
  for (int k : t.majorana.indices) out.push_back(t.n_qubits + k);
}

}  // namespace detail

/// A Hamiltonian or observable: a merged, canonically ordered list of terms
/// of one kind.
template <class Term>
struct OperatorSum {
  std::vector<Term> terms;

  OperatorSum() = default;
  explicit OperatorSum(std::vector<Term> ts) : terms(std::move(ts)) {}

  void add(Term t) { terms.push_back(std::move(t)); }

  /// Merge like terms, drop zero coefficients, order deterministically.
  void simplify(double drop_eps = 0.0) {
    std::map<decltype(detail::term_key(std::declval<Term>())),
             std::pair<Term, cplx>>
        merged;
    for (auto& t : terms) {
      auto key = detail::term_key(t);
      auto it = merged.find(key);
      if (it == merged.end())
        merged.emplace(std::move(key),
                       std::pair<Term, cplx>{t, detail::term_scalar(t)});
      else
        it->second.second += detail::term_scalar(t);
    }
    terms.clear();
    for (auto& [key, tc] : merged) {
      if (std::abs(tc.second) <= drop_eps) continue;
      detail::set_term_scalar(tc.first, tc.second);
      terms.push_back(std::move(tc.first));
    }
  }

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

using PauliSum = OperatorSum<PauliTerm>;
using MajoranaSum = OperatorSum<MajoranaTerm>;
using HybridSum = OperatorSum<HybridTerm>;

/// Maximum term weight (0 for the empty/identity sum).
template <class Term>
int opsum_locality(const OperatorSum<Term>& h) {
  int loc = 0;
  for (const auto& t : h.terms) loc = std::max(loc, t.weight());
  return loc;
}

/// Maximum over sites of the number of terms touching that site.
template <class Term>
int opsum_sparsity(const OperatorSum<Term>& h) {
  std::map<int, int> count;
  std::vector<int> sites;
  for (const auto& t : h.terms) {
    detail::touched_sites(t, sites);
    for (int s : sites) ++count[s];
  }
  int sp = 0;
  for (auto& [s, c] : count) sp = std::max(sp, c);
  return sp;
}

}  // namespace ferm
