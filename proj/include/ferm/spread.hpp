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
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ferm/errors.hpp"

namespace ferm {

/// A probability distribution over all 2^{n_bits} outcome strings, indexed
/// with bit 1 as the most significant bit.
struct DistributionTable {
  int n_bits = 0;
  std::vector<double> p;

  DistributionTable() = default;
  DistributionTable(int n, std::vector<double> probs)
      : n_bits(n), p(std::move(probs)) {
    if (n < 1 || n > 30 || p.size() != (std::size_t(1) << n))
      throw_dim("DistributionTable: size mismatch");
    double sum = 0;
    for (double v : p) {
      if (v < -1e-10) throw_dim("DistributionTable: negative probability");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw_dim("DistributionTable: probabilities must sum to 1");
  }
};

struct SpreadnessReport {
  int L = 0;
  double mu_star = 0.0;
  std::vector<std::uint64_t> witness_s1, witness_s2;
  bool exact = true;  // false when the greedy bipartition was used
};

/// Best achievable spread mass at Hamming scale L: support strings whose
/// distance is below L are merged into components (components can never be
/// split across S1/S2); the bipartition of components maximizing
/// min(mass(S1), mass(S2)) is found exactly for up to 22 components and
/// greedily (largest mass first, into the lighter side) beyond that.
inline SpreadnessReport spreadness(const DistributionTable& dist, int L,
                                   double support_eps = 1e-12) {
  if (L < 1) throw_dim("spreadness: L must be >= 1");
  SpreadnessReport rep;
  rep.L = L;
  std::vector<std::uint64_t> support;
  for (std::uint64_t s = 0; s < dist.p.size(); ++s)
    if (dist.p[s] > support_eps) support.push_back(s);
  // Merge support strings at distance < L into components.
  std::vector<int> comp(support.size(), -1);
  int n_comp = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = n_comp;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < support.size(); ++b)
        if (comp[b] < 0 &&
            std::popcount(support[a] ^ support[b]) < L) {
          comp[b] = n_comp;
          stack.push_back(b);
        }
    }
    ++n_comp;
  }
  if (n_comp < 2) return rep;  // mu_star = 0, nothing to separate
  std::vector<double> mass(n_comp, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i)
    mass[comp[i]] += dist.p[support[i]];
  std::vector<char> side(n_comp, 0);
  if (n_comp <= 22) {
    // Exact: enumerate all bipartitions (component 0 fixed to side 0).
    double total = 0;
    for (double m : mass) total += m;
    double best = -1;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n_comp - 1)); ++mask) {
      double m1 = 0;
      for (int c = 1; c < n_comp; ++c)
        if (mask & (1u << (c - 1))) m1 += mass[c];
      double v = std::min(m1, total - m1);
      if (v > best) {
        best = v;
        best_mask = mask;
      }
    }
    rep.mu_star = best;
    for (int c = 1; c < n_comp; ++c)
      side[c] = (best_mask & (1u << (c - 1))) ? 1 : 0;
  } else {
    // Greedy: largest component first, always into the lighter side.
    std::vector<int> order(n_comp);
    for (int c = 0; c < n_comp; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return mass[a] != mass[b] ? mass[a] > mass[b] : a < b;
    });
    double m0 = 0, m1 = 0;
    for (int c : order) {
      if (m1 < m0) {
        side[c] = 1;
        m1 += mass[c];
      } else {
        side[c] = 0;
        m0 += mass[c];
      }
    }
    rep.mu_star = std::min(m0, m1);
    rep.exact = false;
  }
  for (std::size_t i = 0; i < support.size(); ++i)
    (side[comp[i]] ? rep.witness_s2 : rep.witness_s1).push_back(support[i]);
  return rep;
}

}  // namespace ferm
