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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "ferm/circuit.hpp"
#include "ferm/mappings.hpp"

namespace ferm {

using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Largest qubit count realized densely; override with FERM_DENSE_CAP.
inline int dense_cap() {
  if (const char* s = std::getenv("FERM_DENSE_CAP")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 14;
}

inline void check_dense_cap(int n_qubits) {
  if (n_qubits > dense_cap())
    throw_cap("dense realization exceeds the configured qubit cap");
}

namespace detail {

// Basis convention: qubit 1 is the most significant bit of the basis index.
inline std::uint64_t msb_mask(const Bits& b, int n) {
  std::uint64_t m = 0;
  for (int j = 1; j <= n; ++j)
    if (b.get(j - 1)) m |= std::uint64_t(1) << (n - j);
  return m;
}

}  // namespace detail

/// Dense matrix of a PauliTerm: a signed permutation,
/// M |b> = scalar * (-1)^{popcount(z & b)} |b xor x>.
inline Matrix dense_pauli_term(const PauliTerm& t) {
  check_dense_cap(t.n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << t.n_qubits;
  std::uint64_t xm = detail::msb_mask(t.x, t.n_qubits);
  std::uint64_t zm = detail::msb_mask(t.z, t.n_qubits);
  cplx s = t.scalar();
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    cplx sign = (std::popcount(zm & b) & 1) ? -s : s;
    m(b ^ xm, b) = sign;
  }
  return m;
}

inline Matrix dense_pauli(const PauliSum& h, int n_qubits) {
  check_dense_cap(n_qubits);
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : h.terms) {
    if (t.n_qubits != n_qubits) throw_dim("dense_pauli: size mismatch");
    m += dense_pauli_term(t);
  }
  return m;
}

/// Dense realization of a Majorana term through its Jordan-Wigner image
/// on n_modes qubits.
inline Matrix dense_majorana_term(const MajoranaTerm& t) {
  return dense_pauli_term(jw_map_term(t));
}

inline Matrix dense_majorana(const MajoranaSum& h, int n_modes) {
  check_dense_cap(n_modes);
  const std::uint64_t dim = std::uint64_t(1) << n_modes;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : h.terms) {
    if (t.n_modes() != n_modes) throw_dim("dense_majorana: size mismatch");
    m += dense_majorana_term(t);
  }
  return m;
}

inline double hermiticity_error(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Ascending eigenvalues of a Hermitian matrix.
inline RealVector eigen_spectrum(const Matrix& a) {
  if (hermiticity_error(a) > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw_dim("eigen_spectrum: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// sorted(spec_f) must equal each sorted(spec_q) value repeated `factor`
/// times, elementwise within tol.
inline bool spectrum_match_with_degeneracy(std::vector<double> spec_q,
                                           std::vector<double> spec_f,
                                           int factor, double tol = 1e-9) {
  if (factor < 1 || spec_f.size() != spec_q.size() * std::size_t(factor))
    throw_dim("spectrum_match_with_degeneracy: size mismatch");
  std::sort(spec_q.begin(), spec_q.end());
  std::sort(spec_f.begin(), spec_f.end());
  for (std::size_t i = 0; i < spec_q.size(); ++i)
    for (int r = 0; r < factor; ++r)
      if (std::abs(spec_f[i * factor + r] - spec_q[i]) > tol) return false;
  return true;
}

inline std::vector<double> to_std(const RealVector& v) {
  return {v.data(), v.data() + v.size()};
}

// ---------------------------------------------------------------------------
// Circuits and states
// ---------------------------------------------------------------------------

/// Unitary of one gate exp(i * angle * C_K) in the JW realization;
/// C_K is a Hermitian involution for the even |K| used in circuits.
inline Matrix dense_gate(const Gate& g, int n_majoranas) {
  MajoranaTerm t = majorana_normalize(n_majoranas, g.indices);
  t.coeff = 1.0;  // the Hermitian involution C_K, not the plain word
  Matrix ck = dense_majorana_term(t);
  const auto dim = ck.rows();
  return std::cos(g.angle) * Matrix::Identity(dim, dim) +
         cplx{0, 1} * std::sin(g.angle) * ck;
}

inline Matrix circuit_unitary(const Circuit& c) {
  check_dense_cap(c.n_majoranas / 2);
  const std::uint64_t dim = std::uint64_t(1) << (c.n_majoranas / 2);
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& layer : c.layers)
    for (const auto& g : layer.gates) u = dense_gate(g, c.n_majoranas) * u;
  return u;
}

/// The Gaussian product state (1/2^n) prod_j (1 + i c_{2j-1} c_{2j}).
/// Under this JW convention i c_{2j-1} c_{2j} = -Z_j, so this is the
/// all-ones computational basis state.
inline Matrix gaussian_reference_state(int n_modes) {
  check_dense_cap(n_modes);
  const std::uint64_t dim = std::uint64_t(1) << n_modes;
  Matrix rho = Matrix::Zero(dim, dim);
  rho(dim - 1, dim - 1) = 1;
  return rho;
}

/// Total fermion parity prod_j (i c_{2j-1} c_{2j}) = (-1)^n prod_j Z_j,
/// as diagonal signs over basis index b.
inline double parity_sign(std::uint64_t b, int n_modes) {
  return ((std::popcount(b) + n_modes) % 2 == 0) ? 1.0 : -1.0;
}

/// Partial trace over the trailing n_trace qubits (the least significant
/// bits of the basis index).
inline Matrix partial_trace_trailing(const Matrix& rho, int n_trace) {
  const std::uint64_t dim = std::uint64_t(rho.rows());
  const std::uint64_t inner = std::uint64_t(1) << n_trace;
  if (dim % inner != 0) throw_dim("partial_trace_trailing: bad sizes");
  const std::uint64_t outer = dim / inner;
  Matrix out = Matrix::Zero(outer, outer);
  for (std::uint64_t a = 0; a < outer; ++a)
    for (std::uint64_t b = 0; b < outer; ++b)
      for (std::uint64_t k = 0; k < inner; ++k)
        out(a, b) += rho(a * inner + k, b * inner + k);
  return out;
}

/// rho -> Tr_trailing(U rho U^dag) with U the circuit unitary. The input
/// state must lie in the even total-parity sector.
inline Matrix prepare_state(const Circuit& c, const Matrix& init,
                            int trace_out_modes) {
  int n_modes = c.n_majoranas / 2;
  check_dense_cap(n_modes);
  const std::uint64_t dim = std::uint64_t(1) << n_modes;
  if (init.rows() != Eigen::Index(dim) || init.cols() != Eigen::Index(dim))
    throw_dim("prepare_state: state dimension mismatch");
  if (trace_out_modes < 0 || trace_out_modes > n_modes)
    throw_dim("prepare_state: bad trace_out count");
  double odd_mass = 0;
  for (std::uint64_t b = 0; b < dim; ++b)
    if (parity_sign(b, n_modes) < 0) odd_mass += std::abs(init(b, b));
  if (odd_mass > 1e-10)
    throw_dim("prepare_state: initial state has odd-parity support");
  Matrix u = circuit_unitary(c);
  return partial_trace_trailing(u * init * u.adjoint(), trace_out_modes);
}

// ---------------------------------------------------------------------------
// POVM distributions
// ---------------------------------------------------------------------------

/// R = prod_j exp(i theta_j/2 (sin phi_j X_j - cos phi_j Y_j)), a tensor
/// product of single-qubit unitaries.
inline Matrix pauli_rotation(const std::vector<double>& thetas,
                             const std::vector<double>& phis) {
  if (thetas.size() != phis.size() || thetas.empty())
    throw_dim("pauli_rotation: angle lists must match and be nonempty");
  Matrix r = Matrix::Identity(1, 1);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    double c = std::cos(thetas[j] / 2), s = std::sin(thetas[j] / 2);
    // B = sin(phi) X - cos(phi) Y satisfies B^2 = I.
    Matrix b(2, 2);
    b << 0.0, cplx{std::sin(phis[j]), std::cos(phis[j])},
        cplx{std::sin(phis[j]), -std::cos(phis[j])}, 0.0;
    Matrix u = c * Matrix::Identity(2, 2) + cplx{0, 1} * s * b;
    Matrix out(r.rows() * 2, r.cols() * 2);
    for (Eigen::Index p = 0; p < r.rows(); ++p)
      for (Eigen::Index q = 0; q < r.cols(); ++q)
        out.block(2 * p, 2 * q, 2, 2) = r(p, q) * u;
    r = std::move(out);
  }
  return r;
}

/// p(s) = Tr(pi_R(s) rho) with pi_R(s) = R^dag |s><s| R, s indexed with
/// qubit 1 as the most significant bit.
inline std::vector<double> pauli_povm_distribution(
    const Matrix& rho, const std::vector<double>& thetas,
    const std::vector<double>& phis) {
  Matrix r = pauli_rotation(thetas, phis);
  if (r.rows() != rho.rows()) throw_dim("pauli_povm_distribution: size");
  Matrix rot = r * rho * r.adjoint();
  std::vector<double> p(rho.rows());
  for (Eigen::Index s = 0; s < rho.rows(); ++s) p[s] = rot(s, s).real();
  return p;
}

/// p(s) = Tr(pi_G(s) rho) with
/// pi_G(s) = U^dag prod_j (1 + (-1)^{s_j} i c_{2j-1} c_{2j})/2 U.
/// Since i c_{2j-1} c_{2j} = -Z_j here, outcome s selects the basis state
/// with every bit of s flipped after rotating by U.
inline std::vector<double> gaussian_povm_distribution(const Matrix& rho,
                                                      const Matrix& u) {
  if (u.rows() != rho.rows()) throw_dim("gaussian_povm_distribution: size");
  Matrix rot = u * rho * u.adjoint();
  const std::uint64_t dim = std::uint64_t(rho.rows());
  std::vector<double> p(dim);
  for (std::uint64_t s = 0; s < dim; ++s)
    p[s] = rot((dim - 1) ^ s, (dim - 1) ^ s).real();
  return p;
}

inline std::vector<double> gaussian_povm_distribution(const Matrix& rho,
                                                      const Circuit& g) {
  if (!g.gaussian_only())
    throw_dim("gaussian_povm_distribution: circuit must be Gaussian-only");
  return gaussian_povm_distribution(rho, circuit_unitary(g));
}

// ---------------------------------------------------------------------------
// Fermionic counterparts of qubit states and measurements
// ---------------------------------------------------------------------------

/// Fermionic counterpart of an n-qubit state: the image of
/// rho_q tensor (I / 2^{n/2}) under the assimilation isomorphism, realized
/// on 3n/2 modes. Built by expanding rho_q in the Pauli basis and mapping
/// each string.
inline Matrix assimilated_state(const Matrix& rho_q, int n_qubits) {
  AssimilationLayout layout(n_qubits);
  check_dense_cap(3 * n_qubits / 2);
  const std::uint64_t dim_q = std::uint64_t(1) << n_qubits;
  if (rho_q.rows() != Eigen::Index(dim_q))
    throw_dim("assimilated_state: size mismatch");
  const std::uint64_t dim_f = std::uint64_t(1) << (3 * n_qubits / 2);
  Matrix out = Matrix::Zero(dim_f, dim_f);
  std::vector<char> kinds(n_qubits);
  // Enumerate Pauli strings by base-4 digits per qubit.
  std::uint64_t n_strings = 1;
  for (int j = 0; j < n_qubits; ++j) n_strings *= 4;
  for (std::uint64_t code = 0; code < n_strings; ++code) {
    PauliTerm p = PauliTerm::identity(n_qubits);
    std::uint64_t c = code;
    for (int j = 1; j <= n_qubits; ++j, c /= 4) {
      int d = int(c % 4);
      if (d == 1 || d == 3) p.x.set(j - 1);
      if (d == 2 || d == 3) p.z.set(j - 1);
      if (d == 3) p.phase = (p.phase + 1) % 4;
    }
    cplx alpha = (dense_pauli_term(p).adjoint() * rho_q).trace();
    if (std::abs(alpha) < 1e-15) continue;
    MajoranaTerm image =
        assimilate(HybridTerm(p, MajoranaTerm::identity(n_qubits)), layout);
    image.coeff *= alpha / double(dim_q << (n_qubits / 2));
    out += dense_majorana_term(image);
  }
  return out;
}

/// Fermionic counterpart of the measurement rotation R: the assimilation
/// image G = prod_j exp(i theta_j/2 (sin phi_j M(X_j) - cos phi_j M(Y_j))),
/// a Gaussian unitary on 3n/2 modes. The two bilinears share one Majorana,
/// so the exponent squares to the identity.
inline Matrix assimilated_rotation(const std::vector<double>& thetas,
                                   const std::vector<double>& phis,
                                   int n_qubits) {
  if (thetas.size() != std::size_t(n_qubits) || phis.size() != thetas.size())
    throw_dim("assimilated_rotation: angle lists must have length n");
  AssimilationLayout layout(n_qubits);
  check_dense_cap(3 * n_qubits / 2);
  const std::uint64_t dim = std::uint64_t(1) << (3 * n_qubits / 2);
  Matrix g = Matrix::Identity(dim, dim);
  for (int j = 1; j <= n_qubits; ++j) {
    MajoranaTerm mx = assimilate(
        HybridTerm(PauliTerm::single(n_qubits, j, 'X'),
                   MajoranaTerm::identity(n_qubits)),
        layout);
    MajoranaTerm my = assimilate(
        HybridTerm(PauliTerm::single(n_qubits, j, 'Y'),
                   MajoranaTerm::identity(n_qubits)),
        layout);
    Matrix b = std::sin(phis[j - 1]) * dense_majorana_term(mx) -
               std::cos(phis[j - 1]) * dense_majorana_term(my);
    g = (std::cos(thetas[j - 1] / 2) * Matrix::Identity(dim, dim) +
         cplx{0, 1} * std::sin(thetas[j - 1] / 2) * b) *
        g;
  }
  return g;
}

/// Marginal of the rotated fermionic state over the n/2 auxiliary modes,
/// measuring the assimilation images of Z_j directly. Equals the qubit
/// distribution p_R of the counterpart state exactly; it also equals the
/// occupation-number Gaussian distribution marginalized over its last n/2
/// bits with the first n outcome bits complemented (the image of Z_j is
/// -i c_{2j-1} c_{2j}, which is +Z_j in this JW realization).
inline std::vector<double> lifted_povm_distribution(
    const Matrix& rho_f, const std::vector<double>& thetas,
    const std::vector<double>& phis, int n_qubits) {
  Matrix g = assimilated_rotation(thetas, phis, n_qubits);
  if (g.rows() != rho_f.rows()) throw_dim("lifted_povm_distribution: size");
  Matrix rot = g * rho_f * g.adjoint();
  const std::uint64_t n_out = std::uint64_t(1) << n_qubits;
  const std::uint64_t aux = std::uint64_t(1) << (n_qubits / 2);
  std::vector<double> p(n_out, 0.0);
  for (std::uint64_t s = 0; s < n_out; ++s)
    for (std::uint64_t k = 0; k < aux; ++k)
      p[s] += rot(s * aux + k, s * aux + k).real();
  return p;
}

// ---------------------------------------------------------------------------
// Sector and code-space restrictions
// ---------------------------------------------------------------------------

/// Restriction of h to the joint +1 eigenspace of a commuting set of
/// Hermitian involutions (stabilizers), via the projector's range.
inline Matrix restrict_to_stabilizer_space(const Matrix& h,
                                           const PauliSum& stabilizers,
                                           int n_qubits) {
  const std::uint64_t dim = std::uint64_t(1) << n_qubits;
  Matrix proj = Matrix::Identity(dim, dim);
  for (const auto& s : stabilizers.terms)
    proj = proj * 0.5 * (Matrix::Identity(dim, dim) + dense_pauli_term(s));
  Eigen::SelfAdjointEigenSolver<Matrix> es(proj);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  Matrix basis(dim, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    basis.col(i) = es.eigenvectors().col(keep[i]);
  return basis.adjoint() * h * basis;
}

/// Restriction of a mode-space operator to one total-parity sector
/// (sector = +1 or -1 eigenvalue of prod_j i c_{2j-1} c_{2j}). Requires h
/// block-diagonal in parity, which holds for even Hamiltonians.
inline Matrix parity_sector_block(const Matrix& h, int n_modes, int sector) {
  const std::uint64_t dim = std::uint64_t(1) << n_modes;
  std::vector<std::uint64_t> keep;
  for (std::uint64_t b = 0; b < dim; ++b)
    if ((parity_sign(b, n_modes) > 0) == (sector > 0)) keep.push_back(b);
  Matrix out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out(i, j) = h(keep[i], keep[j]);
  return out;
}

}  // namespace ferm
