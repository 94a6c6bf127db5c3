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

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ferm/circuit.hpp"
#include "ferm/graph.hpp"
#include "ferm/hybrid.hpp"
#include "ferm/opsum.hpp"
#include "ferm/spread.hpp"

namespace ferm {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_cplx(cplx v) {
  return format_double(v.real()) + " " + format_double(v.imag());
}

inline std::string bitstring_of(std::uint64_t s, int n_bits) {
  std::string out(n_bits, '0');
  for (int j = 0; j < n_bits; ++j)
    if (s & (std::uint64_t(1) << (n_bits - 1 - j))) out[j] = '1';
  return out;
}

namespace detail {

// Lines with '#' comments stripped, blanks skipped; keeps 1-based numbers.
struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
  throw_parse("line " + std::to_string(line) + ": " + msg);
}

inline int parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    parse_fail(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) parse_fail(line, "trailing junk in '" + tok + "'");
  return v;
}

inline double parse_real(const std::string& tok, int line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (...) {
    parse_fail(line, "expected number, got '" + tok + "'");
  }
  if (pos != tok.size()) parse_fail(line, "trailing junk in '" + tok + "'");
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hamiltonian files
// ---------------------------------------------------------------------------
// Grammar: "hamiltonian <pauli|majorana|hybrid> <n>", then per term
// "term <re> <im> <op>..." with ops "X3"/"Y1"/"Z7" (Pauli) and "c4"
// (Majorana). The printed scalar multiplies the plain ordered product of
// the listed operators (Y as the literal Pauli matrix, c's unordered into
// the written order).

enum class HamiltonianKind { pauli, majorana, hybrid };

struct Hamiltonian {
  HamiltonianKind kind = HamiltonianKind::pauli;
  int n = 0;  // qubit count (pauli, hybrid) or Majorana count (majorana)
  PauliSum pauli;
  MajoranaSum majorana;
  HybridSum hybrid;
};

namespace detail {

// Scalar that multiplies the plain letter product: divides out the i per Y
// stored as iXZ.
inline cplx letter_scalar(const PauliTerm& t) {
  return t.scalar() * ipow(-int((t.x & t.z).popcount()));
}

inline std::string pauli_ops(const PauliTerm& t) {
  std::string out;
  for (int j = 1; j <= t.n_qubits; ++j) {
    char l = t.letter(j);
    if (l != 'I') out += std::string(" ") + l + std::to_string(j);
  }
  return out;
}

inline std::string majorana_ops(const MajoranaTerm& t) {
  std::string out;
  for (int k : t.indices) out += " c" + std::to_string(k);
  return out;
}

}  // namespace detail

inline std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out = "hamiltonian ";
  switch (h.kind) {
    case HamiltonianKind::pauli: {
      out += "pauli " + std::to_string(h.n) + "\n";
      PauliSum s = h.pauli;
      s.simplify();
      for (const auto& t : s.terms)
        out += "term " + format_cplx(detail::letter_scalar(t)) +
               detail::pauli_ops(t) + "\n";
      break;
    }
    case HamiltonianKind::majorana: {
      out += "majorana " + std::to_string(h.n) + "\n";
      MajoranaSum s = h.majorana;
      s.simplify();
      for (const auto& t : s.terms)
        out += "term " +
               format_cplx(t.coeff * ipow(majorana_phase_exp(t.weight()))) +
               detail::majorana_ops(t) + "\n";
      break;
    }
    case HamiltonianKind::hybrid: {
      out += "hybrid " + std::to_string(h.n) + "\n";
      HybridSum s = h.hybrid;
      s.simplify();
      for (const auto& t : s.terms)
        out += "term " +
               format_cplx(t.coeff * ipow(t.pauli.phase) *
                           ipow(-int((t.pauli.x & t.pauli.z).popcount())) *
                           ipow(majorana_phase_exp(t.majorana.weight()))) +
               detail::pauli_ops(t.pauli) +
               detail::majorana_ops(t.majorana) + "\n";
      break;
    }
  }
  return out;
}

inline Hamiltonian parse_hamiltonian(const std::string& text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw_parse("empty Hamiltonian file");
  const auto& head = lines[0];
  if (head.tokens.size() != 3 || head.tokens[0] != "hamiltonian")
    detail::parse_fail(head.number,
                       "expected 'hamiltonian <pauli|majorana|hybrid> <n>'");
  Hamiltonian h;
  if (head.tokens[1] == "pauli")
    h.kind = HamiltonianKind::pauli;
  else if (head.tokens[1] == "majorana")
    h.kind = HamiltonianKind::majorana;
  else if (head.tokens[1] == "hybrid")
    h.kind = HamiltonianKind::hybrid;
  else
    detail::parse_fail(head.number, "unknown kind '" + head.tokens[1] + "'");
  h.n = detail::parse_int(head.tokens[2], head.number);
  if (h.n < 1) detail::parse_fail(head.number, "system size must be >= 1");
  if (h.kind != HamiltonianKind::pauli && h.n % 2 != 0)
    detail::parse_fail(head.number, "Majorana/hybrid size must be even");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] != "term" || l.tokens.size() < 3)
      detail::parse_fail(l.number, "expected 'term <re> <im> <op>...'");
    cplx scalar{detail::parse_real(l.tokens[1], l.number),
                detail::parse_real(l.tokens[2], l.number)};
    int nq = (h.kind == HamiltonianKind::majorana) ? 0 : h.n;
    PauliTerm p = (nq > 0) ? PauliTerm::identity(nq) : PauliTerm();
    std::vector<int> maj;
    for (std::size_t k = 3; k < l.tokens.size(); ++k) {
      const auto& op = l.tokens[k];
      char kind = op[0];
      int idx = detail::parse_int(op.substr(1), l.number);
      if (kind == 'c') {
        if (h.kind == HamiltonianKind::pauli)
          detail::parse_fail(l.number, "Majorana op in a pauli Hamiltonian");
        if (idx < 1 || idx > h.n)
          detail::parse_fail(l.number, "Majorana index out of range");
        maj.push_back(idx);
      } else if (kind == 'X' || kind == 'Y' || kind == 'Z') {
        if (h.kind == HamiltonianKind::majorana)
          detail::parse_fail(l.number, "Pauli op in a majorana Hamiltonian");
        if (idx < 1 || idx > h.n)
          detail::parse_fail(l.number, "qubit index out of range");
        p = pauli_mul(p, PauliTerm::single(nq, idx, kind));
      } else {
        detail::parse_fail(l.number, "unknown operator '" + op + "'");
      }
    }
    switch (h.kind) {
      case HamiltonianKind::pauli:
        p.coeff *= scalar;
        h.pauli.add(std::move(p));
        break;
      case HamiltonianKind::majorana:
        h.majorana.add(majorana_normalize(h.n, std::move(maj), scalar));
        break;
      case HamiltonianKind::hybrid: {
        p.coeff *= scalar;
        h.hybrid.add(
            HybridTerm(std::move(p), majorana_normalize(h.n, std::move(maj))));
        break;
      }
    }
  }
  h.pauli.simplify();
  h.majorana.simplify();
  h.hybrid.simplify();
  return h;
}

// ---------------------------------------------------------------------------
// Graph and cycle-basis files
// ---------------------------------------------------------------------------

inline std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.n_vertices) + "\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [i, j] : edges)
    out += "edge " + std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

inline Graph parse_graph(const std::string& text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw_parse("empty graph file");
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "graph")
    detail::parse_fail(head.number, "expected 'graph <n_vertices>'");
  int n = detail::parse_int(head.tokens[1], head.number);
  if (n < 1) detail::parse_fail(head.number, "vertex count must be >= 1");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[0] != "edge")
      detail::parse_fail(l.number, "expected 'edge <i> <j>'");
    int a = detail::parse_int(l.tokens[1], l.number);
    int b = detail::parse_int(l.tokens[2], l.number);
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      detail::parse_fail(l.number, "bad edge endpoints");
    g.add_edge(a, b);
  }
  return g;
}

/// One line per cycle: its vertex sequence.
inline std::string serialize_cycle_basis(const CycleBasis& basis) {
  std::string out;
  for (const auto& c : basis.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i)
      out += (i ? " " : "") + std::to_string(c[i]);
    out += "\n";
  }
  return out;
}

inline CycleBasis parse_cycle_basis(const std::string& text) {
  CycleBasis basis;
  for (const auto& l : detail::tokenize(text)) {
    Cycle c;
    for (const auto& tok : l.tokens) c.push_back(detail::parse_int(tok, l.number));
    if (c.size() < 3) detail::parse_fail(l.number, "cycle needs >= 3 vertices");
    basis.cycles.push_back(std::move(c));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Circuit files
// ---------------------------------------------------------------------------
// "circuit <n_majoranas>", then one line per layer:
// "gaussian (k1 k2 w)..." or "nongaussian (k1 k2 [k3 k4] omega)...".

inline std::string serialize_circuit(const Circuit& c) {
  std::string out = "circuit " + std::to_string(c.n_majoranas) + "\n";
  for (const auto& layer : c.layers) {
    out += layer.kind == LayerKind::gaussian ? "gaussian" : "nongaussian";
    for (const auto& g : layer.gates) {
      out += " (";
      for (int k : g.indices) out += std::to_string(k) + " ";
      out += format_double(g.angle) + ")";
    }
    out += "\n";
  }
  return out;
}

inline Circuit parse_circuit(const std::string& text) {
  // Re-tokenize with parentheses as separate tokens.
  std::string spaced;
  for (char ch : text)
    if (ch == '(' || ch == ')') {
      spaced += ' ';
      spaced += ch;
      spaced += ' ';
    } else {
      spaced += ch;
    }
  auto lines = detail::tokenize(spaced);
  if (lines.empty()) throw_parse("empty circuit file");
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "circuit")
    detail::parse_fail(head.number, "expected 'circuit <n_majoranas>'");
  Circuit c(detail::parse_int(head.tokens[1], head.number));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    Layer layer;
    if (l.tokens[0] == "gaussian")
      layer.kind = LayerKind::gaussian;
    else if (l.tokens[0] == "nongaussian")
      layer.kind = LayerKind::nongaussian;
    else
      detail::parse_fail(l.number, "expected 'gaussian' or 'nongaussian'");
    std::size_t k = 1;
    while (k < l.tokens.size()) {
      if (l.tokens[k] != "(") detail::parse_fail(l.number, "expected '('");
      std::vector<std::string> inner;
      for (++k; k < l.tokens.size() && l.tokens[k] != ")"; ++k)
        inner.push_back(l.tokens[k]);
      if (k == l.tokens.size()) detail::parse_fail(l.number, "missing ')'");
      ++k;
      if (inner.size() != 3 && inner.size() != 5)
        detail::parse_fail(l.number, "gate needs 2 or 4 indices + angle");
      Gate gate;
      for (std::size_t t = 0; t + 1 < inner.size(); ++t)
        gate.indices.push_back(detail::parse_int(inner[t], l.number));
      gate.angle = detail::parse_real(inner.back(), l.number);
      layer.gates.push_back(std::move(gate));
    }
    c.add_layer(std::move(layer));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Distribution files
// ---------------------------------------------------------------------------
// "distribution <n_bits>", then "s p(s)" lines sorted by s; zero entries
// are omitted.

inline std::string serialize_distribution(const DistributionTable& d) {
  std::string out = "distribution " + std::to_string(d.n_bits) + "\n";
  for (std::uint64_t s = 0; s < d.p.size(); ++s)
    if (d.p[s] != 0.0)
      out += bitstring_of(s, d.n_bits) + " " + format_double(d.p[s]) + "\n";
  return out;
}

inline DistributionTable parse_distribution(const std::string& text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw_parse("empty distribution file");
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "distribution")
    detail::parse_fail(head.number, "expected 'distribution <n_bits>'");
  int n = detail::parse_int(head.tokens[1], head.number);
  if (n < 1 || n > 30) detail::parse_fail(head.number, "bad bit count");
  std::vector<double> p(std::size_t(1) << n, 0.0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2 || int(l.tokens[0].size()) != n)
      detail::parse_fail(l.number, "expected '<bitstring> <probability>'");
    std::uint64_t s = 0;
    for (char ch : l.tokens[0]) {
      if (ch != '0' && ch != '1')
        detail::parse_fail(l.number, "bad bitstring");
      s = (s << 1) | std::uint64_t(ch - '0');
    }
    p[s] = detail::parse_real(l.tokens[1], l.number);
  }
  return DistributionTable(n, std::move(p));
}

}  // namespace ferm
