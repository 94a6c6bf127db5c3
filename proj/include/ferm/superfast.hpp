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

#include <deque>
#include <string>
#include <vector>

#include "ferm/graph.hpp"
#include "ferm/mappings.hpp"
#include "ferm/opsum.hpp"

namespace ferm {

/// Vertex operator V_i = c_{2i-1} c_{2i} as a MajoranaTerm (2n Majoranas).
inline MajoranaTerm vertex_operator(int i, int n_modes) {
  return majorana_normalize(2 * n_modes, {2 * i - 1, 2 * i});
}

/// Edge operator E_{i,j} = c_{2i} c_{2j} as a MajoranaTerm.
inline MajoranaTerm edge_operator(int i, int j, int n_modes) {
  return majorana_normalize(2 * n_modes, {2 * i, 2 * j});
}

/// Interaction graph: one vertex per mode; an edge between every pair of
/// modes touched by a common term. Requires every term to be even.
inline Graph interaction_graph(const MajoranaSum& h, int n_modes) {
  Graph g(n_modes);
  std::vector<int> modes;
  for (const auto& t : h.terms) {
    if (t.weight() % 2 != 0)
      throw_dim("interaction_graph: odd-weight term");
    modes.clear();
    for (int k : t.indices) {
      int m = (k + 1) / 2;
      if (modes.empty() || modes.back() != m) modes.push_back(m);
    }
    for (std::size_t a = 0; a < modes.size(); ++a)
      for (std::size_t b = a + 1; b < modes.size(); ++b)
        g.add_edge(modes[a], modes[b]);
  }
  return g;
}

/// One factor of a graph-algebra decomposition.
struct GraphGenerator {
  bool is_vertex = false;
  int i = 0, j = 0;  // vertex i, or directed edge (i, j)
};

struct GraphDecomposition {
  cplx scalar{1, 0};
  std::vector<GraphGenerator> factors;
};

namespace detail {

inline std::vector<int> bfs_path(const Graph& g, int from, int to) {
  std::vector<int> parent(g.n_vertices + 1, -1);
  std::deque<int> q{from};
  parent[from] = from;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) break;
    for (int w : g.adj[v])
      if (parent[w] < 0) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  if (parent[to] < 0) return {};
  std::vector<int> path{to};
  for (int v = to; v != from; v = parent[v]) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Rewrite an even MajoranaTerm exactly as scalar * (ordered product of V/E
/// generators) over the given graph: odd Majoranas are pulled back through
/// c_{2i-1} = V_i c_{2i}, and the residual even Majoranas are paired along
/// graph paths. Re-multiplying the output reproduces the input term.
inline GraphDecomposition edge_vertex_decompose(const MajoranaTerm& t,
                                                const Graph& g) {
  if (t.weight() % 2 != 0)
    throw_dim("edge_vertex_decompose: odd-weight term");
  int n_modes = t.n_modes();
  if (g.n_vertices != n_modes)
    throw_dim("edge_vertex_decompose: graph/mode count mismatch");
  GraphDecomposition dec;
  // GF(2) residual of even Majorana indices after vertex substitutions.
  std::vector<char> residual(n_modes + 1, 0);
  for (int k : t.indices) {
    int m = (k + 1) / 2;
    if (k % 2 == 1) dec.factors.push_back({true, m, 0});
    residual[m] ^= 1;
  }
  std::vector<int> evens;
  for (int m = 1; m <= n_modes; ++m)
    if (residual[m]) evens.push_back(m);
  for (std::size_t p = 0; p + 1 < evens.size(); p += 2) {
    auto path = detail::bfs_path(g, evens[p], evens[p + 1]);
    if (path.empty())
      throw error(errc::verification,
                  "edge_vertex_decompose: no edge path covers mode pair (" +
                      std::to_string(evens[p]) + ", " +
                      std::to_string(evens[p + 1]) + ")");
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
      dec.factors.push_back({false, path[s], path[s + 1]});
  }
  // Fix the scalar by exact re-multiplication.
  MajoranaTerm prod = MajoranaTerm::identity(t.n_majoranas);
  for (const auto& f : dec.factors)
    prod = majorana_mul(prod, f.is_vertex
                                  ? vertex_operator(f.i, n_modes)
                                  : edge_operator(f.i, f.j, n_modes));
  if (prod.indices != t.indices)
    throw error(errc::verification,
                "edge_vertex_decompose: internal support mismatch");
  dec.scalar = t.coeff / prod.coeff;
  return dec;
}

// ---------------------------------------------------------------------------
// Superfast encoding
// ---------------------------------------------------------------------------

/// Qubit images of the graph algebra: one qubit per edge. Image of i*V_i is
/// the product of Z over incident edges; image of i*E_{i,j} is X on the edge
/// qubit dressed with Z on lower-ordered incident edges at both endpoints,
/// with sign eps_{ij} = +1 iff i < j. Cycle-constraint stabilizers are the
/// encoded images of the basis-cycle edge products, rescaled so the code
/// space is their joint +1 eigenspace.
struct SuperfastEncoding {
  Graph graph;
  CycleBasis basis;
  PauliSum stabilizers;

  int n_qubits() const { return int(graph.edges.size()); }
  /// 1-based qubit carrying edge (i, j).
  int qubit_of_edge(int i, int j) const { return graph.edge_id(i, j) + 1; }

  /// Image of V_i (anti-Hermitian; equals -i times a Z product).
  PauliTerm vertex_image(int i) const {
    PauliTerm t = PauliTerm::identity(n_qubits());
    for (int w : graph.adj[i]) t.z.flip(qubit_of_edge(i, w) - 1);
    t.phase = 3;  // -i
    return t;
  }

  /// Image of the directed edge operator E_{i,j}; image(j,i) = -image(i,j).
  PauliTerm edge_image(int i, int j) const {
    if (!graph.has_edge(i, j)) throw_dim("edge_image: no such edge");
    PauliTerm t = PauliTerm::identity(n_qubits());
    t.x.flip(qubit_of_edge(i, j) - 1);
    for (int w : graph.adj[i])
      if (w < j) t.z.flip(qubit_of_edge(i, w) - 1);
    for (int w : graph.adj[j])
      if (w < i) t.z.flip(qubit_of_edge(j, w) - 1);
    t.phase = 3;  // -i
    if (i > j) t.coeff = -t.coeff;
    return t;
  }
};

inline SuperfastEncoding superfast_encode(const Graph& g,
                                          const CycleBasis& basis) {
  if (!g.connected()) throw_dim("superfast_encode: graph must be connected");
  auto rep = verify_cycle_basis(g, basis);
  if (!rep.ok())
    throw error(errc::verification, "superfast_encode: invalid cycle basis");
  SuperfastEncoding enc;
  enc.graph = g;
  enc.basis = basis;
  int n_modes = g.n_vertices;
  for (const auto& c : basis.cycles) {
    // Majorana-side oriented edge product is a scalar sigma * identity.
    MajoranaTerm m = MajoranaTerm::identity(2 * n_modes);
    PauliTerm p = PauliTerm::identity(int(g.edges.size()));
    for (std::size_t s = 0; s < c.size(); ++s) {
      int a = c[s], b = c[(s + 1) % c.size()];
      m = majorana_mul(m, edge_operator(a, b, n_modes));
      p = pauli_mul(p, enc.edge_image(a, b));
    }
    if (!m.indices.empty())
      throw error(errc::verification,
                  "superfast_encode: cycle product is not a scalar");
    p.coeff /= m.coeff;  // stabilizer is +1 exactly when images multiply to sigma
    enc.stabilizers.add(p);
  }
  enc.stabilizers.simplify();
  return enc;
}

/// Encode an even Majorana OperatorSum through the graph algebra.
inline PauliSum superfast_encode_opsum(const MajoranaSum& h,
                                       const SuperfastEncoding& enc) {
  PauliSum out;
  for (const auto& t : h.terms) {
    auto dec = edge_vertex_decompose(t, enc.graph);
    PauliTerm p = PauliTerm::identity(enc.n_qubits(), dec.scalar);
    for (const auto& f : dec.factors)
      p = pauli_mul(p, f.is_vertex ? enc.vertex_image(f.i)
                                   : enc.edge_image(f.i, f.j));
    out.add(p);
  }
  out.simplify();
  return out;
}

}  // namespace ferm
