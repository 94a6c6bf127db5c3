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

#include <random>
#include <string>

#include "doctest.h"
#include "ferm/io.hpp"
#include "oracles.hpp"

using namespace ferm;

namespace {

// Serialize -> parse -> serialize must reproduce the bytes exactly; %.17g
// round-trips doubles and both ends run the same canonical simplify.
void check_roundtrip_h(const Hamiltonian& h) {
  std::string first = serialize_hamiltonian(h);
  Hamiltonian back = parse_hamiltonian(first);
  CHECK(back.kind == h.kind);
  CHECK(back.n == h.n);
  CHECK(serialize_hamiltonian(back) == first);
}

std::string category_of(const std::string& text,
                        Hamiltonian (*parser)(const std::string&)) {
  try {
    (void)parser(text);
  } catch (const error& e) {
    CHECK(e.category() == errc::parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("hamiltonian grammar on hand examples") {
  auto h = parse_hamiltonian(
      "# comment\n"
      "hamiltonian pauli 2\n"
      "term 0.5 0 X1 Z2\n"
      "term -1 0\n");
  CHECK(h.kind == HamiltonianKind::pauli);
  REQUIRE(h.pauli.size() == 2);

  // The scalar multiplies the literal operator product: "0 1 Y1" is
  // i * Y = -XZ, so the symplectic scalar (the coefficient on XZ) is -1.
  auto hy = parse_hamiltonian("hamiltonian pauli 1\nterm 0 1 Y1\n");
  REQUIRE(hy.pauli.size() == 1);
  const auto& t = hy.pauli.terms[0];
  CHECK(t.letter(1) == 'Y');
  CHECK(std::abs(t.scalar() - cplx{-1, 0}) < 1e-15);

  // Repeated letters on one qubit multiply: X1 Z1 is the plain word XZ,
  // symplectic scalar +1 (equivalently -i * Y).
  auto hxz = parse_hamiltonian("hamiltonian pauli 1\nterm 1 0 X1 Z1\n");
  REQUIRE(hxz.pauli.size() == 1);
  CHECK(hxz.pauli.terms[0].letter(1) == 'Y');
  CHECK(std::abs(hxz.pauli.terms[0].scalar() - cplx{1, 0}) < 1e-15);

  // Majorana indices keep their written order: c2 c1 = i C_(1,2).
  auto hm = parse_hamiltonian("hamiltonian majorana 4\nterm 1 0 c2 c1\n");
  REQUIRE(hm.majorana.size() == 1);
  CHECK(hm.majorana.terms[0].indices == std::vector<int>{1, 2});
  auto expect = majorana_normalize(4, {2, 1});
  CHECK(std::abs(hm.majorana.terms[0].coeff - expect.coeff) < 1e-15);

  // Hybrid terms mix X/Y/Z and c ops on one line.
  auto hh = parse_hamiltonian("hamiltonian hybrid 2\nterm 2 0 X1 c1 c2\n");
  CHECK(hh.kind == HamiltonianKind::hybrid);
  REQUIRE(hh.hybrid.size() == 1);
  CHECK(hh.hybrid.terms[0].pauli.letter(1) == 'X');
  CHECK(hh.hybrid.terms[0].majorana.indices == std::vector<int>{1, 2});
}

TEST_CASE("hamiltonian round trips") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    int which = trial % 3;
    if (which == 0) {
      int n = 1 + int(rng() % 5);
      Hamiltonian h;
      h.kind = HamiltonianKind::pauli;
      h.n = n;
      int terms = 1 + int(rng() % 6);
      for (int t = 0; t < terms; ++t) h.pauli.add(oracle::random_pauli(rng, n));
      check_roundtrip_h(h);
    } else if (which == 1) {
      int n = 2 * (1 + int(rng() % 4));
      Hamiltonian h;
      h.kind = HamiltonianKind::majorana;
      h.n = n;
      int terms = 1 + int(rng() % 6);
      for (int t = 0; t < terms; ++t)
        h.majorana.add(oracle::random_majorana(rng, n));
      check_roundtrip_h(h);
    } else {
      int n = 2 * (1 + int(rng() % 3));
      Hamiltonian h;
      h.kind = HamiltonianKind::hybrid;
      h.n = n;
      int terms = 1 + int(rng() % 5);
      for (int t = 0; t < terms; ++t)
        h.hybrid.add(HybridTerm(oracle::random_pauli(rng, n),
                                oracle::random_majorana(rng, n)));
      check_roundtrip_h(h);
    }
  }
}

TEST_CASE("hamiltonian parse errors carry line numbers") {
  std::string msg =
      category_of("hamiltonian pauli 2\nterm 1 0 Q3\n", parse_hamiltonian);
  CHECK(msg.find("line 2") != std::string::npos);

  category_of("", parse_hamiltonian);
  category_of("hamiltonian spin 2\n", parse_hamiltonian);
  category_of("hamiltonian pauli 0\n", parse_hamiltonian);
  category_of("hamiltonian majorana 3\n", parse_hamiltonian);
  category_of("hamiltonian pauli 2\nterm 1 0 X5\n", parse_hamiltonian);
  category_of("hamiltonian pauli 2\nterm 1 0 c1\n", parse_hamiltonian);
  category_of("hamiltonian majorana 4\nterm 1 0 X1\n", parse_hamiltonian);
  category_of("hamiltonian majorana 4\nterm 1 c1\n", parse_hamiltonian);
  category_of("hamiltonian pauli 2\nterm 1 0x X1\n", parse_hamiltonian);
}

TEST_CASE("graph round trips and errors") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 8);
    Graph g(n);
    int edges = int(rng() % (2 * n));
    for (int e = 0; e < edges; ++e) {
      int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
      if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
    }
    std::string text = serialize_graph(g);
    Graph back = parse_graph(text);
    CHECK(back.n_vertices == g.n_vertices);
    CHECK(serialize_graph(back) == text);
    for (auto [a, b] : g.edges) CHECK(back.has_edge(a, b));
  }

  CHECK_THROWS_AS(parse_graph(""), error);
  CHECK_THROWS_AS(parse_graph("graph 3\nedge 1 1\n"), error);
  CHECK_THROWS_AS(parse_graph("graph 3\nedge 1 4\n"), error);
  CHECK_THROWS_AS(parse_graph("graph 3\nvertex 1\n"), error);
}

TEST_CASE("cycle basis round trips and errors") {
  CycleBasis b{{{1, 2, 3}, {2, 3, 4, 5}}};
  std::string text = serialize_cycle_basis(b);
  auto back = parse_cycle_basis(text);
  REQUIRE(back.cycles.size() == 2);
  CHECK(back.cycles[0] == Cycle{1, 2, 3});
  CHECK(back.cycles[1] == Cycle{2, 3, 4, 5});
  CHECK(serialize_cycle_basis(back) == text);

  CHECK(parse_cycle_basis("").cycles.empty());
  CHECK_THROWS_AS(parse_cycle_basis("1 2\n"), error);
  CHECK_THROWS_AS(parse_cycle_basis("1 2 x\n"), error);
}

TEST_CASE("circuit round trips and errors") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 * (3 + int(rng() % 4));
    Circuit c(n);
    std::uniform_real_distribution<double> angle(-3.14, 3.14);
    int layers = 1 + int(rng() % 4);
    for (int l = 0; l < layers; ++l) {
      Layer layer;
      layer.kind = (rng() % 2) ? LayerKind::gaussian : LayerKind::nongaussian;
      if (layer.kind == LayerKind::gaussian) {
        for (int ga = 0; ga < 2; ++ga) {
          int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
          if (a != b) layer.gates.push_back({{a, b}, angle(rng)});
        }
      } else {
        layer.gates.push_back({{1, 2, 3, 4}, angle(rng)});
        layer.gates.push_back({{5, 6}, angle(rng)});
      }
      if (layer.gates.empty()) layer.gates.push_back({{1, 2}, angle(rng)});
      c.add_layer(std::move(layer));
    }
    std::string text = serialize_circuit(c);
    Circuit back = parse_circuit(text);
    CHECK(back.n_majoranas == c.n_majoranas);
    CHECK(back.layers.size() == c.layers.size());
    CHECK(serialize_circuit(back) == text);
  }

  CHECK_THROWS_AS(parse_circuit(""), error);
  CHECK_THROWS_AS(parse_circuit("circuit 4\nlayer (1 2 0.5)\n"), error);
  CHECK_THROWS_AS(parse_circuit("circuit 4\ngaussian (1 2 0.5\n"), error);
  CHECK_THROWS_AS(parse_circuit("circuit 4\ngaussian (1 2 3 0.5)\n"), error);
  // Structural rules are enforced on parse as well: gaussian gates must act
  // on pairs, nongaussian gates within a layer must be disjoint.
  CHECK_THROWS_AS(parse_circuit("circuit 4\ngaussian (1 2 3 4 0.5)\n"), error);
  CHECK_THROWS_AS(
      parse_circuit("circuit 8\nnongaussian (1 2 0.5) (2 3 4 5 0.1)\n"), error);
}

TEST_CASE("distribution round trips and errors") {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    int bits = 1 + int(rng() % 8);
    std::vector<double> p(std::size_t(1) << bits, 0.0);
    int support = 1 + int(rng() % 5);
    double left = 1.0;
    for (int i = 0; i < support - 1; ++i) {
      std::uniform_real_distribution<double> part(0.0, left);
      double v = part(rng);
      p[rng() % p.size()] += v;
      left -= v;
    }
    p[rng() % p.size()] += left;
    DistributionTable d(bits, p);
    std::string text = serialize_distribution(d);
    DistributionTable back = parse_distribution(text);
    CHECK(back.n_bits == d.n_bits);
    CHECK(back.p == d.p);
    CHECK(serialize_distribution(back) == text);
  }

  CHECK_THROWS_AS(parse_distribution(""), error);
  CHECK_THROWS_AS(parse_distribution("distribution 0\n"), error);
  CHECK_THROWS_AS(parse_distribution("distribution 2\n0 1\n"), error);
  CHECK_THROWS_AS(parse_distribution("distribution 2\n02 1\n"), error);
  // Probabilities must form a distribution.
  CHECK_THROWS_AS(parse_distribution("distribution 2\n00 0.5\n"), error);
  CHECK_THROWS_AS(parse_distribution("distribution 1\n0 1\n1 -0.1\n"), error);
}

TEST_CASE("bitstring helper") {
  CHECK(bitstring_of(0, 3) == "000");
  CHECK(bitstring_of(5, 3) == "101");
  CHECK(bitstring_of(1, 4) == "0001");
}
