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
#include <set>
#include <vector>

#include "ferm/majorana.hpp"
#include "ferm/opsum.hpp"

namespace ferm {

/// One elementary gate exp(i * angle * C_K), |K| = 2 (Gaussian rotation)
/// or 4 (non-Gaussian).
struct Gate {
  std::vector<int> indices;  // strictly increasing
  double angle = 0.0;
};

enum class LayerKind { gaussian, nongaussian };

struct Layer {
  LayerKind kind = LayerKind::gaussian;
  std::vector<Gate> gates;  // applied first-to-last
};

/// Layered fermionic circuit: Gaussian layers hold arbitrary lists of
/// two-Majorana rotations; non-Gaussian layers hold pairwise-disjoint
/// gates on 2 or 4 Majoranas.
struct Circuit {
  int n_majoranas = 0;
  std::vector<Layer> layers;

  Circuit() = default;
  explicit Circuit(int n) : n_majoranas(n) {
    if (n < 2 || n % 2 != 0)
      throw_dim("Circuit: n_majoranas must be positive and even");
  }

  void add_layer(Layer layer) {
    std::set<int> used;
    for (auto& gate : layer.gates) {
      auto k = gate.indices;
      std::sort(k.begin(), k.end());
      if (std::adjacent_find(k.begin(), k.end()) != k.end())
        throw_dim("Circuit: repeated index within a gate");
      for (int idx : k)
        if (idx < 1 || idx > n_majoranas)
          throw_dim("Circuit: Majorana index out of range");
      if (layer.kind == LayerKind::gaussian) {
        if (k.size() != 2) throw_dim("Circuit: Gaussian gate needs |K| = 2");
      } else {
        if (k.size() != 2 && k.size() != 4)
          throw_dim("Circuit: non-Gaussian gate needs |K| in {2, 4}");
        for (int idx : k)
          if (!used.insert(idx).second)
            throw_dim("Circuit: overlapping gates in a non-Gaussian layer");
      }
      gate.indices = std::move(k);
    }
    layers.push_back(std::move(layer));
  }

  int depth_total() const { return int(layers.size()); }
  int depth_nongaussian() const {
    int d = 0;
    for (const auto& l : layers) d += (l.kind == LayerKind::nongaussian);
    return d;
  }
  bool gaussian_only() const { return depth_nongaussian() == 0; }
};

/// Exact symbolic conjugation U t U^dag, layer by layer. A gate
/// exp(i a C_K) leaves commuting monomials fixed and maps anticommuting
/// C_{K'} to cos(2a) C_{K'} - i sin(2a) C_{K'} C_K.
inline MajoranaSum conjugate_term(const MajoranaTerm& t, const Circuit& c) {
  if (t.n_majoranas != c.n_majoranas)
    throw_dim("conjugate_term: dimension mismatch");
  MajoranaSum cur;
  cur.add(t);
  for (const auto& layer : c.layers) {
    for (const auto& gate : layer.gates) {
      MajoranaTerm ck = majorana_normalize(c.n_majoranas, gate.indices);
      ck.coeff = 1.0;  // the Hermitian involution C_K, not the plain word
      double co = std::cos(2 * gate.angle), si = std::sin(2 * gate.angle);
      MajoranaSum next;
      for (const auto& term : cur.terms) {
        if (majorana_commutes(term, ck)) {
          next.add(term);
          continue;
        }
        MajoranaTerm branch = majorana_mul(term, ck);
        branch.coeff *= cplx{0, -1} * si;
        MajoranaTerm kept = term;
        kept.coeff *= co;
        next.add(std::move(kept));
        next.add(std::move(branch));
      }
      next.simplify();
      cur = std::move(next);
    }
  }
  return cur;
}

/// Maximum term weight of the conjugated operator; bounded by
/// weight(t) * 3^(number of non-Gaussian layers).
inline int max_weight_after(const MajoranaTerm& t, const Circuit& c) {
  return opsum_locality(conjugate_term(t, c));
}

/// Backward light cone of the given output Majorana indices, by set
/// propagation from the last layer to the first.
inline std::set<int> backward_lightcone(const Circuit& c,
                                        const std::set<int>& outputs) {
  std::set<int> cone = outputs;
  for (auto it = c.layers.rbegin(); it != c.layers.rend(); ++it) {
    for (auto git = it->gates.rbegin(); git != it->gates.rend(); ++git) {
      bool touches = false;
      for (int k : git->indices)
        if (cone.count(k)) {
          touches = true;
          break;
        }
      if (touches) cone.insert(git->indices.begin(), git->indices.end());
    }
  }
  return cone;
}

}  // namespace ferm
