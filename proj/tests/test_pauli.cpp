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

#include "doctest.h"
#include "ferm/opsum.hpp"
#include "oracles.hpp"

using namespace ferm;

namespace {

bool close(const oracle::Mat& a, const oracle::Mat& b, double tol = 1e-12) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("single-qubit products") {
  auto X = PauliTerm::single(1, 1, 'X');
  auto Y = PauliTerm::single(1, 1, 'Y');
  auto Z = PauliTerm::single(1, 1, 'Z');
  auto XZ = pauli_mul(X, Z);
  CHECK(same_string(XZ, Y));
  CHECK(XZ.scalar() == cplx{0, -1} * Y.scalar());  // X Z = -i Y

  auto I = PauliTerm::identity(1);
  for (const auto& p : {X, Y, Z}) {
    auto ip = pauli_mul(I, p);
    CHECK(same_string(ip, p));
    CHECK(ip.scalar() == p.scalar());
  }
}

TEST_CASE("two-qubit product against matrix oracle") {
  auto a = pauli_mul(PauliTerm::single(2, 1, 'X'), PauliTerm::single(2, 2, 'Z'));
  auto b = pauli_mul(PauliTerm::single(2, 1, 'Z'), PauliTerm::single(2, 2, 'X'));
  auto prod = pauli_mul(a, b);
  CHECK(close(oracle::dense_pauli(prod),
              oracle::dense_pauli(a) * oracle::dense_pauli(b)));
  // (X1 Z2)(Z1 X2) = (-i Y1)(+i Y2) = Y1 Y2.
  auto yy =
      pauli_mul(PauliTerm::single(2, 1, 'Y'), PauliTerm::single(2, 2, 'Y'));
  CHECK(same_string(prod, yy));
  CHECK(prod.scalar() == yy.scalar());
}

TEST_CASE("random products and associativity match the oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 4);
    auto a = oracle::random_pauli(rng, n);
    auto b = oracle::random_pauli(rng, n);
    auto c = oracle::random_pauli(rng, n);
    CHECK(close(oracle::dense_pauli(pauli_mul(a, b)),
                oracle::dense_pauli(a) * oracle::dense_pauli(b), 1e-12));
    auto ab_c = pauli_mul(pauli_mul(a, b), c);
    auto a_bc = pauli_mul(a, pauli_mul(b, c));
    CHECK(same_string(ab_c, a_bc));
    CHECK(ab_c.phase == a_bc.phase);  // integer phases associate exactly
    CHECK(std::abs(ab_c.coeff - a_bc.coeff) < 1e-12);
  }
}

TEST_CASE("commutation agrees with the dense commutator") {
  CHECK(!pauli_commutes(PauliTerm::single(1, 1, 'X'),
                        PauliTerm::single(1, 1, 'Z')));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + int(rng() % 4);
    auto a = oracle::random_pauli(rng, n);
    auto b = oracle::random_pauli(rng, n);
    if (std::abs(a.coeff) < 1e-3 || std::abs(b.coeff) < 1e-3) continue;
    auto ma = oracle::dense_pauli(a), mb = oracle::dense_pauli(b);
    bool dense_comm = close(ma * mb, mb * ma, 1e-12);
    CHECK(pauli_commutes(a, b) == dense_comm);
  }
}

TEST_CASE("weight, locality, and sparsity") {
  PauliSum h;
  h.add(pauli_mul(PauliTerm::single(3, 1, 'Z'), PauliTerm::single(3, 2, 'Z')));
  h.add(pauli_mul(PauliTerm::single(3, 2, 'Z'), PauliTerm::single(3, 3, 'Z')));
  CHECK(opsum_locality(h) == 2);
  CHECK(opsum_sparsity(h) == 2);

  PauliSum id;
  id.add(PauliTerm::identity(3));
  CHECK(opsum_locality(id) == 0);
  CHECK(opsum_sparsity(id) == 0);
}

TEST_CASE("operator sums merge like terms") {
  PauliSum h;
  h.add(PauliTerm::single(2, 1, 'X', 0.5));
  h.add(PauliTerm::single(2, 1, 'X', 0.5));
  h.add(PauliTerm::single(2, 2, 'Z', 1.0));
  h.add(PauliTerm::single(2, 2, 'Z', -1.0));
  h.simplify();
  REQUIRE(h.size() == 1);
  CHECK(h.terms[0].letter(1) == 'X');
  CHECK(h.terms[0].scalar() == cplx{1, 0});
}
