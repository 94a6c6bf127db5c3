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
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "ferm/bits.hpp"
#include "ferm/errors.hpp"

namespace ferm {

/// Simple undirected graph with 1-based vertices. Edges are stored sorted
/// as (i, j) with i < j; the position in `edges` is the edge id.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;  // adj[v] = sorted neighbor list
  std::map<std::pair<int, int>, int> eid;

  Graph() = default;
  explicit Graph(int n) : n_vertices(n), adj(n + 1) {
    if (n < 1) throw_dim("Graph: n_vertices must be positive");
  }

  void add_edge(int i, int j) {
    if (i < 1 || j < 1 || i > n_vertices || j > n_vertices)
      throw_dim("Graph: vertex out of range");
    if (i == j) throw_dim("Graph: loops not allowed");
    if (i > j) std::swap(i, j);
    if (has_edge(i, j)) return;
    eid[{i, j}] = int(edges.size());
    edges.emplace_back(i, j);
    adj[i].insert(std::upper_bound(adj[i].begin(), adj[i].end(), j), j);
    adj[j].insert(std::upper_bound(adj[j].begin(), adj[j].end(), i), i);
  }

  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(adj[i].begin(), adj[i].end(), j);
  }

  int edge_id(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = eid.find({i, j});
    if (it == eid.end()) throw_dim("Graph: no such edge");
    return it->second;
  }

  int degree(int v) const { return int(adj[v].size()); }
  int max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_vertices; ++v) d = std::max(d, degree(v));
    return d;
  }

  bool connected() const {
    if (n_vertices == 0) return true;
    std::vector<char> seen(n_vertices + 1, 0);
    std::deque<int> q{1};
    seen[1] = 1;
    int cnt = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      ++cnt;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
    return cnt == n_vertices;
  }

  int n_components() const {
    std::vector<char> seen(n_vertices + 1, 0);
    int comps = 0;
    for (int s = 1; s <= n_vertices; ++s) {
      if (seen[s]) continue;
      ++comps;
      std::deque<int> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
      }
    }
    return comps;
  }
};

/// A cycle given as its vertex sequence v1..vm (closing edge vm-v1 implied).
using Cycle = std::vector<int>;

struct CycleBasis {
  std::vector<Cycle> cycles;
};

inline int cycle_space_dimension(const Graph& g) {
  return int(g.edges.size()) - g.n_vertices + g.n_components();
}

namespace detail {

inline Bits cycle_edge_vector(const Graph& g, const Cycle& c) {
  Bits v(g.edges.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    int a = c[i], b = c[(i + 1) % c.size()];
    v.flip(g.edge_id(a, b));
  }
  return v;
}

/// Incremental GF(2) independence: row-reduce against accepted pivots.
class Gf2Basis {
 public:
  /// Returns true (and absorbs the vector) if v is independent of the span.
  bool insert(Bits v) {
    for (;;) {
      std::size_t c = v.lowest();
      if (c == v.size()) return false;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        pivots_.emplace(c, std::move(v));
        return true;
      }
      v ^= it->second;
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Bits> pivots_;
};

}  // namespace detail

struct CycleBasisReport {
  bool all_cycles_simple = false;
  bool all_edges_exist = false;
  bool independent = false;
  bool dimension_ok = false;
  int dimension = 0;
  int expected_dimension = 0;
  int max_cycle_length = 0;
  int max_edge_usage = 0;

  bool ok() const {
    return all_cycles_simple && all_edges_exist && independent && dimension_ok;
  }
};

/// Checks simplicity, GF(2) independence, dimension, and the per-edge usage
/// and length statistics of a claimed cycle basis. Failures are reported,
/// not thrown.
inline CycleBasisReport verify_cycle_basis(const Graph& g,
                                           const CycleBasis& basis) {
  CycleBasisReport rep;
  rep.expected_dimension = cycle_space_dimension(g);
  rep.dimension = int(basis.cycles.size());
  rep.all_cycles_simple = true;
  rep.all_edges_exist = true;
  std::vector<int> usage(g.edges.size(), 0);
  detail::Gf2Basis gf2;
  bool indep = true;
  for (const auto& c : basis.cycles) {
    rep.max_cycle_length = std::max(rep.max_cycle_length, int(c.size()));
    if (c.size() < 3) rep.all_cycles_simple = false;
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      rep.all_cycles_simple = false;
    bool edges_ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > g.n_vertices || b < 1 || b > g.n_vertices ||
          !g.has_edge(a, b)) {
        edges_ok = false;
        continue;
      }
      ++usage[g.edge_id(a, b)];
    }
    if (!edges_ok) {
      rep.all_edges_exist = false;
      continue;
    }
    if (!gf2.insert(detail::cycle_edge_vector(g, c))) indep = false;
  }
  rep.independent = indep && rep.all_edges_exist;
  for (int u : usage) rep.max_edge_usage = std::max(rep.max_edge_usage, u);
  rep.dimension_ok = rep.dimension == rep.expected_dimension;
  return rep;
}

// ---------------------------------------------------------------------------
// Horton minimum cycle basis
// ---------------------------------------------------------------------------

namespace detail {

// BFS tree with deterministic parents (smallest-index parent wins).
struct BfsTree {
  std::vector<int> dist, parent;
};

inline BfsTree bfs_tree(const Graph& g, int root) {
  BfsTree t;
  t.dist.assign(g.n_vertices + 1, -1);
  t.parent.assign(g.n_vertices + 1, 0);
  std::deque<int> q{root};
  t.dist[root] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.adj[v])
      if (t.dist[w] < 0) {
        t.dist[w] = t.dist[v] + 1;
        t.parent[w] = v;
        q.push_back(w);
      }
  }
  return t;
}

// Recover the vertex sequence of a simple cycle from its edge set, or
// nullopt if the edge set is not a single simple cycle.
inline std::optional<Cycle> cycle_from_edges(const Graph& g, const Bits& ev) {
  std::map<int, std::vector<int>> inc;
  int n_edges = 0;
  for (std::size_t e = 0; e < ev.size(); ++e)
    if (ev.get(e)) {
      ++n_edges;
      auto [a, b] = g.edges[e];
      inc[a].push_back(b);
      inc[b].push_back(a);
    }
  if (n_edges < 3) return std::nullopt;
  for (auto& [v, nb] : inc)
    if (nb.size() != 2) return std::nullopt;
  Cycle c;
  int start = inc.begin()->first;
  int prev = 0, cur = start;
  do {
    c.push_back(cur);
    auto& nb = inc[cur];
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  } while (cur != start && int(c.size()) <= n_edges);
  if (int(c.size()) != n_edges) return std::nullopt;  // disconnected union
  return c;
}

}  // namespace detail

/// Horton's minimum cycle basis: candidate cycles are (shortest v-x path) +
/// edge (x,y) + (shortest y-v path); candidates are sorted by length and
/// greedily selected under GF(2) independence.
inline CycleBasis horton_mcb(const Graph& g) {
  if (!g.connected()) throw_dim("horton_mcb: graph must be connected");
  int dim = cycle_space_dimension(g);
  CycleBasis basis;
  if (dim == 0) return basis;

  std::vector<std::pair<int, Bits>> candidates;  // (length, edge vector)
  std::vector<Bits> seen;
  for (int v = 1; v <= g.n_vertices; ++v) {
    auto tree = detail::bfs_tree(g, v);
    for (auto [x, y] : g.edges) {
      if (x == v || y == v) continue;
      Bits ev(g.edges.size());
      for (int u : {x, y})
        for (int w = u; w != v; w = tree.parent[w])
          ev.flip(g.edge_id(w, tree.parent[w]));
      ev.flip(g.edge_id(x, y));
      int len = int(ev.popcount());
      if (len != tree.dist[x] + tree.dist[y] + 1) continue;  // paths overlap
      candidates.emplace_back(len, std::move(ev));
    }
    // Cycles through tree edges incident to v are found from other roots.
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first < b.first
                                        : a.second < b.second;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const auto& a, const auto& b) {
                                 return a.second == b.second;
                               }),
                   candidates.end());

  detail::Gf2Basis gf2;
  for (auto& [len, ev] : candidates) {
    auto cyc = detail::cycle_from_edges(g, ev);
    if (!cyc) continue;
    if (gf2.insert(ev)) {
      basis.cycles.push_back(std::move(*cyc));
      if (int(basis.cycles.size()) == dim) break;
    }
  }
  if (int(basis.cycles.size()) != dim)
    throw error(errc::verification, "horton_mcb: candidate set did not span");
  return basis;
}

// ---------------------------------------------------------------------------
// Stack-and-sew localization
// ---------------------------------------------------------------------------

struct Localization {
  Graph ghat;
  CycleBasis basis_hat;
  std::vector<int> embedding;  // embedding[v] = image of v (copy 1); [0] unused
  std::vector<std::pair<int, int>> chords_in_copy1;  // extra edges among images
};

namespace detail {

// Zigzag sewing of one cycle: chords plus the length<=4 faces they cut.
// Vertices are the cycle's own vertex ids.
struct Sewing {
  std::vector<std::pair<int, int>> chords;
  std::vector<Cycle> faces;
};

inline Sewing sew_cycle(const Cycle& c) {
  Sewing s;
  int m = int(c.size());
  if (m <= 4) {
    s.faces.push_back(c);
    return s;
  }
  auto v = [&](int pos) { return c[pos - 1]; };  // 1-based position
  s.chords.emplace_back(v(2), v(m));
  s.faces.push_back({v(1), v(2), v(m)});
  int i = 2, j = m;
  while (j - i + 1 > 4) {
    s.chords.emplace_back(v(i + 1), v(j - 1));
    s.faces.push_back({v(i), v(i + 1), v(j - 1), v(j)});
    ++i;
    --j;
  }
  Cycle last;
  for (int p = i; p <= j; ++p) last.push_back(v(p));
  s.faces.push_back(std::move(last));
  return s;
}

}  // namespace detail

/// Stack-and-sew localization: one copy of g per basis cycle, vertical joins
/// between consecutive copies, and cycle t sewn into short faces inside
/// copy t. The returned basis consists of all vertical 4-cycles plus the
/// sewn faces.
inline Localization localize(const Graph& g, const CycleBasis& basis) {
  if (!g.connected()) throw_dim("localize: graph must be connected");
  auto rep = verify_cycle_basis(g, basis);
  if (!rep.ok()) throw error(errc::verification, "localize: invalid basis");

  Localization loc;
  int n = g.n_vertices;
  int d = int(basis.cycles.size());
  loc.embedding.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) loc.embedding[v] = v;
  if (d == 0) {
    loc.ghat = g;
    return loc;
  }

  auto vid = [&](int copy, int v) { return (copy - 1) * n + v; };  // copy>=1
  loc.ghat = Graph(n * d);
  for (int t = 1; t <= d; ++t)
    for (auto [a, b] : g.edges) loc.ghat.add_edge(vid(t, a), vid(t, b));
  for (int t = 1; t < d; ++t)
    for (int v = 1; v <= n; ++v)
      loc.ghat.add_edge(vid(t, v), vid(t + 1, v));

  // Vertical 4-cycles, one per (edge, consecutive copy pair).
  for (int t = 1; t < d; ++t)
    for (auto [a, b] : g.edges)
      loc.basis_hat.cycles.push_back(
          {vid(t, a), vid(t, b), vid(t + 1, b), vid(t + 1, a)});

  // Sew cycle t inside copy t.
  for (int t = 1; t <= d; ++t) {
    auto sewing = detail::sew_cycle(basis.cycles[t - 1]);
    for (auto [a, b] : sewing.chords) {
      loc.ghat.add_edge(vid(t, a), vid(t, b));
      if (t == 1) loc.chords_in_copy1.emplace_back(a, b);
    }
    for (auto& face : sewing.faces) {
      Cycle mapped;
      for (int v : face) mapped.push_back(vid(t, v));
      loc.basis_hat.cycles.push_back(std::move(mapped));
    }
  }
  return loc;
}

}  // namespace ferm
