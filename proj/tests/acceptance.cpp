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
//
// End-to-end acceptance checks. Each criterion prints one pass/fail line;
// the exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ferm/dense.hpp"
#include "ferm/exemplars.hpp"
#include "ferm/io.hpp"
#include "ferm/nlts.hpp"
#include "ferm/superfast.hpp"
#include "oracles.hpp"

using namespace ferm;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& what,
               const std::function<bool()>& body, double time_limit_s) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (exception: ") + e.what() + ")";
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    ok = false;
    note += " (over time limit)";
  }
  if (!ok) ++failures;
  std::printf("criterion %d: %s - %s (%.2fs)%s\n", number,
              ok ? "pass" : "FAIL", what.c_str(), secs, note.c_str());
  std::fflush(stdout);
}

bool mat_close(const oracle::Mat& a, const oracle::Mat& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

PauliTerm random_unit_pauli(std::mt19937& rng, int n) {
  PauliTerm t = PauliTerm::identity(n);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int j = 1; j <= n; ++j) {
    int l = letter(rng);
    if (l) t = pauli_mul(t, PauliTerm::single(n, j, "IXYZ"[l]));
  }
  return t;
}

MajoranaTerm random_unit_majorana(std::mt19937& rng, int n_majoranas) {
  return majorana_normalize(n_majoranas,
                            oracle::random_subset(rng, n_majoranas, n_majoranas));
}

Graph random_capped_graph(std::mt19937& rng, int n, int max_degree,
                          int extra_edges) {
  Graph g(n);
  for (int v = 2; v <= n; ++v) {
    int u;
    do {
      u = 1 + int(rng() % (v - 1));
    } while (g.degree(u) >= max_degree);
    g.add_edge(v, u);
  }
  int attempts = 20 * extra_edges;
  while (extra_edges > 0 && attempts-- > 0) {
    int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
    if (a == b || g.has_edge(a, b)) continue;
    if (g.degree(a) >= max_degree || g.degree(b) >= max_degree) continue;
    g.add_edge(a, b);
    --extra_edges;
  }
  return g;
}

bool encoding_matches(const Graph& g, std::mt19937& rng) {
  auto basis = horton_mcb(g);
  auto enc = superfast_encode(g, basis);
  int n = g.n_vertices;
  // Commutation pattern of all vertex/edge generators.
  std::vector<MajoranaTerm> gens;
  std::vector<PauliTerm> imgs;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(vertex_operator(i, n));
    imgs.push_back(enc.vertex_image(i));
  }
  for (auto [i, j] : g.edges) {
    gens.push_back(edge_operator(i, j, n));
    imgs.push_back(enc.edge_image(i, j));
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      if (majorana_commutes(gens[a], gens[b]) !=
          pauli_commutes(imgs[a], imgs[b]))
        return false;
  for (const auto& s : enc.stabilizers.terms) {
    for (const auto& img : imgs)
      if (!pauli_commutes(s, img)) return false;
    for (const auto& s2 : enc.stabilizers.terms)
      if (!pauli_commutes(s, s2)) return false;
  }
  // Spectra: encoded Hamiltonian on the joint +1 stabilizer space against
  // the mode-space realization on the matching parity sector.
  MajoranaSum h;
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int i = 1; i <= n; ++i) {
    auto v = vertex_operator(i, n);
    v.coeff *= cplx{0, 1} * coeff(rng);
    h.add(v);
  }
  for (auto [i, j] : g.edges) {
    auto e = edge_operator(i, j, n);
    e.coeff *= cplx{0, 1} * coeff(rng);
    h.add(e);
  }
  h.simplify();
  auto encoded = superfast_encode_opsum(h, enc);
  Matrix code = restrict_to_stabilizer_space(
      dense_pauli(encoded, enc.n_qubits()), enc.stabilizers, enc.n_qubits());
  Matrix sector = parity_sector_block(dense_majorana(h, n), n, +1);
  if (code.rows() != sector.rows()) return false;
  auto s1 = eigen_spectrum(code);
  auto s2 = eigen_spectrum(sector);
  for (Eigen::Index i = 0; i < s1.size(); ++i)
    if (std::abs(s1(i) - s2(i)) > 1e-9) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 10 helpers: drive the CLI binary through temp files.
// ---------------------------------------------------------------------------

void put_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string get_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI in `dir` with stdout+stderr captured; returns the exit status.
int run_cli(const fs::path& dir, const std::string& args,
            const std::string& capture_name) {
  std::string cmd = std::string("cd \"") + dir.string() + "\" && \"" +
                    FERM_CLI_PATH + "\" " + args + " > " + capture_name +
                    " 2>&1";
  return std::system(cmd.c_str());
}

// One full pass over every subcommand; returns false on any nonzero exit.
// `files` collects every artifact (inputs excluded) for byte comparison.
bool cli_pass(const fs::path& dir, std::vector<std::string>& files) {
  fs::create_directories(dir);
  put_file(dir / "k4.txt",
           "graph 4\nedge 1 2\nedge 1 3\nedge 1 4\nedge 2 3\nedge 2 4\n"
           "edge 3 4\n");
  put_file(dir / "tri.txt", "graph 3\nedge 1 2\nedge 1 3\nedge 2 3\n");
  put_file(dir / "ham6.txt",
           "hamiltonian majorana 6\nterm 0 1 c1 c2\nterm 0 1 c2 c4\n"
           "term 0 1 c4 c6\nterm 0 1 c2 c6\n");
  put_file(dir / "dist.txt", "distribution 4\n0000 0.5\n1111 0.5\n");
  struct Step {
    std::string args;
    std::vector<std::string> outputs;
  };
  std::vector<Step> steps = {
      {"exemplar repetition --n 4 --out rep.txt", {"rep.txt"}},
      {"exemplar steane --out steane.txt", {"steane.txt"}},
      {"construct-nlts --in rep.txt --out nlts.txt", {"nlts.txt"}},
      {"map --mapping jw --in nlts.txt --out jw.txt", {"jw.txt"}},
      {"map --mapping bk --in nlts.txt --out bk.txt", {"bk.txt"}},
      {"map --mapping assimilate --in rep.txt --out asm.txt", {"asm.txt"}},
      {"map --mapping assimilate-inv --in asm.txt --out inv.txt",
       {"inv.txt"}},
      {"graph extract --in nlts.txt --out ig.txt", {"ig.txt"}},
      {"graph mcb --in k4.txt --out k4b.txt", {"k4b.txt"}},
      {"graph localize --in k4.txt --basis k4b.txt --out-graph k4g.txt "
       "--out-basis k4gb.txt",
       {"k4g.txt", "k4gb.txt"}},
      {"graph verify --in k4g.txt --basis k4gb.txt", {}},
      {"graph mcb --in tri.txt --out trib.txt", {"trib.txt"}},
      {"encode-superfast --graph tri.txt --basis trib.txt --in ham6.txt "
       "--out enc.txt --out-stabilizers stab.txt",
       {"enc.txt", "stab.txt"}},
      {"verify-spectrum --a rep.txt --b nlts.txt --n 4", {}},
      {"spreadness --in dist.txt --L 4", {}},
      {"depth-bound --l 100 --m 0 --L 3000 --mu 0.9", {}},
  };
  files.clear();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string capture = "step" + std::to_string(i) + ".out";
    if (run_cli(dir, steps[i].args, capture) != 0) return false;
    files.push_back(capture);
    for (const auto& f : steps[i].outputs) files.push_back(f);
  }
  return true;
}

}  // namespace

int main() {
  criterion(
      1, "symbolic algebra matches dense oracles",
      [] {
        std::mt19937 rng(1001);
        for (int n = 1; n <= 6; ++n) {
          for (int trial = 0; trial < 1000; ++trial) {
            auto a = random_unit_pauli(rng, n);
            auto b = random_unit_pauli(rng, n);
            auto da = oracle::dense_pauli(a), db = oracle::dense_pauli(b);
            if (!mat_close(oracle::dense_pauli(pauli_mul(a, b)), da * db,
                           1e-12))
              return false;
            bool zero = mat_close(da * db, db * da, 1e-12);
            if (pauli_commutes(a, b) != zero) return false;
          }
        }
        for (int n = 2; n <= 12; n += 2) {
          for (int trial = 0; trial < 1000; ++trial) {
            auto a = random_unit_majorana(rng, n);
            auto b = random_unit_majorana(rng, n);
            auto da = oracle::dense_majorana(a), db = oracle::dense_majorana(b);
            if (!mat_close(oracle::dense_majorana(majorana_mul(a, b)), da * db,
                           1e-12))
              return false;
            bool zero = mat_close(da * db, db * da, 1e-12);
            if (majorana_commutes(a, b) != zero) return false;
          }
        }
        return true;
      },
      30.0);

  criterion(
      2, "assimilation is an exact homomorphism with an exact inverse",
      [] {
        std::mt19937 rng(1002);
        for (int trial = 0; trial < 1000; ++trial) {
          int n = 2 * (1 + int(rng() % 3));
          AssimilationLayout layout(n);
          HybridTerm a(random_unit_pauli(rng, n), random_unit_majorana(rng, n));
          HybridTerm b(random_unit_pauli(rng, n), random_unit_majorana(rng, n));
          auto lhs = majorana_mul(assimilate(a, layout), assimilate(b, layout));
          auto rhs = assimilate(hybrid_mul(a, b), layout);
          if (lhs.indices != rhs.indices || lhs.coeff != rhs.coeff)
            return false;
        }
        for (int trial = 0; trial < 200; ++trial) {
          int n = 2 * (1 + int(rng() % 3));
          AssimilationLayout layout(n);
          auto t = random_unit_majorana(rng, 3 * n);
          auto back = assimilate(assimilate_inverse(t, layout), layout);
          if (back.indices != t.indices || back.coeff != t.coeff) return false;
        }
        return true;
      },
      10.0);

  criterion(
      3, "lifted repetition Hamiltonians show the 2^{n/2}-fold degeneracy",
      [] {
        for (int n : {2, 4}) {
          auto hq = repetition_hamiltonian(n);
          auto hf = construct_nlts(hq);
          auto spec_q = to_std(eigen_spectrum(dense_pauli(hq, n)));
          auto spec_f = to_std(eigen_spectrum(dense_majorana(hf, 3 * n / 2)));
          if (!spectrum_match_with_degeneracy(spec_q, spec_f, 1 << (n / 2),
                                              1e-9))
            return false;
        }
        return true;
      },
      60.0);

  criterion(
      4, "lifted measurement marginals equal the qubit distributions",
      [] {
        int n = 2;
        std::mt19937 rng(1004);
        std::normal_distribution<double> nd(0, 1);
        std::uniform_real_distribution<double> angle(-3.14, 3.14);
        for (int trial = 0; trial < 20; ++trial) {
          Matrix a(1 << n, 1 << n);
          for (int i = 0; i < (1 << n); ++i)
            for (int j = 0; j < (1 << n); ++j) a(i, j) = cplx{nd(rng), nd(rng)};
          Matrix rho_q = a * a.adjoint();
          rho_q /= rho_q.trace();
          Matrix rho_f = assimilated_state(rho_q, n);
          std::vector<double> thetas{angle(rng), angle(rng)};
          std::vector<double> phis{angle(rng), angle(rng)};
          auto p_q = pauli_povm_distribution(rho_q, thetas, phis);
          auto p_f = lifted_povm_distribution(rho_f, thetas, phis, n);
          if (p_q.size() != p_f.size()) return false;
          for (std::size_t s = 0; s < p_q.size(); ++s)
            if (std::abs(p_q[s] - p_f[s]) > 1e-10) return false;
        }
        return true;
      },
      30.0);

  criterion(
      5, "spreadness of the lifted ground state, point masses, monotonicity",
      [] {
        int n = 4;
        // Cat-state counterpart: a ground state of the lifted Hamiltonian.
        Eigen::VectorXcd cat = Eigen::VectorXcd::Zero(1 << n);
        cat(0) = cat((1 << n) - 1) = 1.0 / std::sqrt(2.0);
        Matrix rho_q = cat * cat.adjoint();
        Matrix rho_f = assimilated_state(rho_q, n);
        Matrix hf =
            dense_majorana(construct_nlts(repetition_hamiltonian(n)), 3 * n / 2);
        if (std::abs((hf * rho_f).trace().real()) > 1e-9) return false;
        std::vector<double> zeros(n, 0.0);
        auto p = lifted_povm_distribution(rho_f, zeros, zeros, n);
        DistributionTable dist(n, p);
        for (int L = 1; L <= n; ++L) {
          auto rep = spreadness(dist, L);
          if (std::abs(rep.mu_star - 0.5) > 1e-10) return false;
          double m1 = 0, m2 = 0;
          for (auto s : rep.witness_s1) m1 += dist.p[s];
          for (auto s : rep.witness_s2) m2 += dist.p[s];
          if (std::abs(m1 - 0.5) > 1e-10 || std::abs(m2 - 0.5) > 1e-10)
            return false;
        }
        // A product state measures to a point mass: mu_star = 0 at any L.
        std::vector<double> point(1 << n, 0.0);
        point[5] = 1.0;
        DistributionTable pd(n, point);
        for (int L = 1; L <= n; ++L)
          if (spreadness(pd, L).mu_star != 0.0) return false;
        // Monotonicity in L.
        std::mt19937 rng(1005);
        for (int trial = 0; trial < 100; ++trial) {
          int bits = 4 + int(rng() % 3);
          std::vector<double> q(std::size_t(1) << bits, 0.0);
          double left = 1.0;
          int support = 2 + int(rng() % 6);
          for (int i = 0; i < support - 1; ++i) {
            std::uniform_real_distribution<double> part(0.0, left);
            double v = part(rng);
            q[rng() % q.size()] += v;
            left -= v;
          }
          q[rng() % q.size()] += left;
          DistributionTable d(bits, q);
          double prev = 1.0;
          for (int L = 1; L <= bits; ++L) {
            double mu = spreadness(d, L).mu_star;
            if (mu > prev + 1e-15) return false;
            prev = mu;
          }
        }
        return true;
      },
      60.0);

  criterion(
      6, "localization bounds on 50 random degree-<=4 graphs, 10 <= n <= 60",
      [] {
        std::mt19937 rng(1006);
        int tested = 0;
        while (tested < 50) {
          int n = 10 + int(rng() % 51);
          Graph g = random_capped_graph(rng, n, 4, 2 + int(rng() % (n / 3)));
          auto basis = horton_mcb(g);
          int d = int(basis.cycles.size());
          if (d == 0) continue;
          ++tested;
          auto loc = localize(g, basis);
          auto rep = verify_cycle_basis(loc.ghat, loc.basis_hat);
          if (!rep.ok()) return false;
          if (rep.max_cycle_length > 4 || rep.max_edge_usage > 4) return false;
          if (loc.ghat.n_vertices != g.n_vertices * d) return false;
          if (loc.ghat.max_degree() > g.max_degree() + 3) return false;
          for (auto [a, b] : g.edges)
            if (!loc.ghat.has_edge(a, b)) return false;
          int extra = 0;
          for (auto [a, b] : loc.ghat.edges)
            if (a <= g.n_vertices && b <= g.n_vertices && !g.has_edge(a, b))
              ++extra;
          if (extra != int(loc.chords_in_copy1.size())) return false;
        }
        return true;
      },
      120.0);

  criterion(
      7, "edge-qubit encoding soundness on K3 and the chorded 4-cycle",
      [] {
        std::mt19937 rng(1007);
        Graph k3(3);
        k3.add_edge(1, 2);
        k3.add_edge(2, 3);
        k3.add_edge(1, 3);
        Graph chorded(4);
        chorded.add_edge(1, 2);
        chorded.add_edge(2, 3);
        chorded.add_edge(3, 4);
        chorded.add_edge(1, 4);
        chorded.add_edge(1, 3);
        return encoding_matches(k3, rng) && encoding_matches(chorded, rng);
      },
      60.0);

  criterion(
      8, "weight dynamics and light-cone bounds",
      [] {
        std::mt19937 rng(1008);
        std::uniform_real_distribution<double> angle(-3.14, 3.14);
        // Gaussian conjugation preserves weight exactly.
        for (int trial = 0; trial < 500; ++trial) {
          int n = 2 * (2 + int(rng() % 5));
          Circuit c(n);
          for (int l = 0, nl = 1 + int(rng() % 4); l < nl; ++l) {
            Layer layer;
            layer.kind = LayerKind::gaussian;
            for (int ga = 0; ga < 3; ++ga) {
              int a = 1 + int(rng() % n), b = 1 + int(rng() % n);
              if (a != b) layer.gates.push_back({{a, b}, angle(rng)});
            }
            c.add_layer(std::move(layer));
          }
          auto t = random_unit_majorana(rng, n);
          for (const auto& term : conjugate_term(t, c).terms)
            if (term.weight() != t.weight()) return false;
        }
        // One nonGaussian layer grows weight by at most a factor of 3.
        for (int trial = 0; trial < 200; ++trial) {
          int n = 12;
          Circuit c(n);
          Layer layer;
          layer.kind = LayerKind::nongaussian;
          std::vector<int> pool(n);
          for (int i = 0; i < n; ++i) pool[i] = i + 1;
          std::shuffle(pool.begin(), pool.end(), rng);
          layer.gates.push_back(
              {{pool[0], pool[1], pool[2], pool[3]}, angle(rng)});
          layer.gates.push_back({{pool[4], pool[5]}, angle(rng)});
          c.add_layer(std::move(layer));
          auto t = random_unit_majorana(rng, n);
          if (t.weight() == 0) continue;
          if (max_weight_after(t, c) > std::min(n, 3 * t.weight()))
            return false;
        }
        // Depth-T light cones stay within 3n * 4^T.
        for (int trial = 0; trial < 100; ++trial) {
          int n_qubits = 2 + 2 * int(rng() % 3);
          int n = 3 * n_qubits;
          int depth = int(rng() % 6);
          Circuit c(n);
          for (int l = 0; l < depth; ++l) {
            Layer layer;
            layer.kind = LayerKind::nongaussian;
            std::vector<int> pool(n);
            for (int i = 0; i < n; ++i) pool[i] = i + 1;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::size_t pos = 0;
            for (int ga = 0, ng = 1 + int(rng() % 3); ga < ng; ++ga) {
              std::size_t k = (rng() % 2) ? 2 : 4;
              if (pos + k > pool.size()) break;
              layer.gates.push_back(
                  {{pool.begin() + pos, pool.begin() + pos + k}, angle(rng)});
              pos += k;
            }
            if (layer.gates.empty())
              layer.gates.push_back({{1, 2, 3, 4}, angle(rng)});
            c.add_layer(std::move(layer));
          }
          std::set<int> outputs;
          for (int i = 0, no = 1 + int(rng() % 3); i < no; ++i)
            outputs.insert(1 + int(rng() % n));
          auto cone = backward_lightcone(c, outputs);
          if (double(cone.size()) >
              lightcone_majorana_bound(n_qubits, c.depth_nongaussian()))
            return false;
          for (int o : outputs)
            if (!cone.count(o)) return false;
        }
        return true;
      },
      60.0);

  criterion(
      9, "depth lower-bound formula values, clamp, and scaling",
      [] {
        auto log3 = [](double v) { return std::log(v) / std::log(3.0); };
        struct Case {
          double l, m, L, mu;
        };
        for (Case c : {Case{100, 0, 3000, 0.9}, Case{50, 50, 3000, 0.9},
                       Case{30, 10, 500, 0.5}}) {
          DepthBoundInput in;
          in.system_modes = c.l;
          in.ancilla_modes = c.m;
          in.spread_distance = c.L;
          in.min_mass = c.mu;
          // Independently arranged evaluation of the same bound.
          double expect =
              log3(c.L) -
              0.5 * log3(1600.0 * (c.l + c.m) * std::log(1.0 / c.mu));
          expect = std::max(0.0, expect);
          if (std::abs(depth_lower_bound(in) - expect) > 1e-12) return false;
          if (depth_lower_bound(in) > 0) {
            DepthBoundInput doubled = in;
            doubled.spread_distance = 2 * c.L;
            if (std::abs(depth_lower_bound(doubled) - depth_lower_bound(in) -
                         log3(2.0)) > 1e-12)
              return false;
          }
        }
        DepthBoundInput tiny;
        tiny.system_modes = 100;
        tiny.ancilla_modes = 0;
        tiny.spread_distance = 3;
        tiny.min_mass = 0.9;
        return depth_lower_bound(tiny) == 0.0;
      },
      10.0);

  criterion(
      10, "CLI output is byte-identical across repeated runs",
      [] {
        fs::path base = fs::temp_directory_path() / "ferm_acceptance";
        std::error_code ec;
        fs::remove_all(base, ec);
        std::vector<std::string> files1, files2;
        if (!cli_pass(base / "run1", files1)) return false;
        if (!cli_pass(base / "run2", files2)) return false;
        if (files1 != files2 || files1.empty()) return false;
        for (const auto& f : files1)
          if (get_file(base / "run1" / f) != get_file(base / "run2" / f))
            return false;
        fs::remove_all(base, ec);
        return true;
      },
      120.0);

  return failures;
}
