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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ferm/dense.hpp"
#include "ferm/exemplars.hpp"
#include "ferm/io.hpp"
#include "ferm/nlts.hpp"
#include "ferm/superfast.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ferm::throw_parse("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ferm::throw_parse("cannot open '" + path + "' for writing");
  out << text;
}

const char* kind_name(ferm::errc c) {
  switch (c) {
    case ferm::errc::parse: return "parse";
    case ferm::errc::dimension: return "dimension";
    case ferm::errc::cap: return "cap";
    default: return "verification";
  }
}

ferm::Hamiltonian load(const std::string& path) {
  return ferm::parse_hamiltonian(read_file(path));
}

void require_kind(const ferm::Hamiltonian& h, ferm::HamiltonianKind k,
                  const std::string& what) {
  if (h.kind != k) ferm::throw_dim(what);
}

std::vector<double> spectrum_of(const ferm::Hamiltonian& h) {
  using namespace ferm;
  switch (h.kind) {
    case HamiltonianKind::pauli:
      return to_std(eigen_spectrum(dense_pauli(h.pauli, h.n)));
    case HamiltonianKind::majorana:
      return to_std(eigen_spectrum(dense_majorana(h.majorana, h.n / 2)));
    default:
      throw_dim("verify-spectrum: hybrid Hamiltonians are not supported");
  }
}

int run(int argc, char** argv) {
  using namespace ferm;
  CLI::App app{"Exact fermion/qubit operator toolkit"};
  app.require_subcommand(1);

  // map -------------------------------------------------------------------
  auto* map_cmd = app.add_subcommand("map", "Apply a fermion/qubit mapping");
  std::string map_kind, map_in, map_out;
  map_cmd->add_option("--mapping", map_kind, "jw|bk|assimilate|assimilate-inv")
      ->required();
  map_cmd->add_option("--in", map_in)->required();
  map_cmd->add_option("--out", map_out)->required();
  map_cmd->callback([&] {
    Hamiltonian h = load(map_in);
    Hamiltonian out;
    if (map_kind == "jw" || map_kind == "bk") {
      require_kind(h, HamiltonianKind::majorana,
                   "map: jw/bk need a majorana Hamiltonian");
      out.kind = HamiltonianKind::pauli;
      out.n = h.n / 2;
      out.pauli = map_opsum(map_kind == "jw" ? Mapping::jw : Mapping::bk,
                            h.majorana);
    } else if (map_kind == "assimilate") {
      if (h.kind == HamiltonianKind::pauli) {
        for (const auto& t : h.pauli.terms)
          h.hybrid.add(HybridTerm(t, MajoranaTerm::identity(h.n)));
        h.kind = HamiltonianKind::hybrid;
      }
      require_kind(h, HamiltonianKind::hybrid,
                   "map: assimilate needs a pauli or hybrid Hamiltonian");
      AssimilationLayout layout(h.n);
      out.kind = HamiltonianKind::majorana;
      out.n = 3 * h.n;
      out.majorana = assimilate_opsum(h.hybrid, layout);
    } else if (map_kind == "assimilate-inv") {
      require_kind(h, HamiltonianKind::majorana,
                   "map: assimilate-inv needs a majorana Hamiltonian");
      if (h.n % 3 != 0)
        throw_dim("map: assimilate-inv needs a multiple of 3 Majoranas");
      AssimilationLayout layout(h.n / 3);
      out.kind = HamiltonianKind::hybrid;
      out.n = h.n / 3;
      out.hybrid = assimilate_inverse_opsum(h.majorana, layout);
    } else {
      throw_dim("map: unknown mapping '" + map_kind + "'");
    }
    write_file(map_out, serialize_hamiltonian(out));
  });

  // construct-nlts ----------------------------------------------------------
  auto* nlts_cmd = app.add_subcommand(
      "construct-nlts", "Lift a qubit Hamiltonian to Majorana form");
  std::string nlts_in, nlts_out;
  nlts_cmd->add_option("--in", nlts_in)->required();
  nlts_cmd->add_option("--out", nlts_out)->required();
  nlts_cmd->callback([&] {
    Hamiltonian h = load(nlts_in);
    require_kind(h, HamiltonianKind::pauli,
                 "construct-nlts: needs a pauli Hamiltonian");
    Hamiltonian out;
    out.kind = HamiltonianKind::majorana;
    out.n = 3 * h.n;
    out.majorana = construct_nlts(h.pauli);
    write_file(nlts_out, serialize_hamiltonian(out));
    std::cout << "locality " << opsum_locality(out.majorana) << "\n"
              << "sparsity " << opsum_sparsity(out.majorana) << "\n";
  });

  // graph -------------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "Interaction-graph tools");
  graph_cmd->require_subcommand(1);

  auto* extract = graph_cmd->add_subcommand(
      "extract", "Interaction graph of a Majorana Hamiltonian");
  std::string ex_in, ex_out;
  extract->add_option("--in", ex_in)->required();
  extract->add_option("--out", ex_out)->required();
  extract->callback([&] {
    Hamiltonian h = load(ex_in);
    require_kind(h, HamiltonianKind::majorana,
                 "graph extract: needs a majorana Hamiltonian");
    write_file(ex_out, serialize_graph(interaction_graph(h.majorana, h.n / 2)));
  });

  auto* mcb = graph_cmd->add_subcommand("mcb", "Minimum cycle basis");
  std::string mcb_in, mcb_out;
  mcb->add_option("--in", mcb_in)->required();
  mcb->add_option("--out", mcb_out)->required();
  mcb->callback([&] {
    write_file(mcb_out,
               serialize_cycle_basis(horton_mcb(parse_graph(read_file(mcb_in)))));
  });

  auto* loc = graph_cmd->add_subcommand(
      "localize", "Stack-and-sew a graph to a length<=4 cycle basis");
  std::string loc_in, loc_basis, loc_out_g, loc_out_b;
  loc->add_option("--in", loc_in)->required();
  loc->add_option("--basis", loc_basis)->required();
  loc->add_option("--out-graph", loc_out_g)->required();
  loc->add_option("--out-basis", loc_out_b)->required();
  loc->callback([&] {
    Graph g = parse_graph(read_file(loc_in));
    CycleBasis b = parse_cycle_basis(read_file(loc_basis));
    Localization l = localize(g, b);
    write_file(loc_out_g, serialize_graph(l.ghat));
    write_file(loc_out_b, serialize_cycle_basis(l.basis_hat));
    std::cout << "vertices " << l.ghat.n_vertices << "\n"
              << "edges " << l.ghat.edges.size() << "\n"
              << "chords_in_copy1 " << l.chords_in_copy1.size() << "\n";
  });

  auto* gverify = graph_cmd->add_subcommand("verify", "Check a cycle basis");
  std::string gv_in, gv_basis;
  gverify->add_option("--in", gv_in)->required();
  gverify->add_option("--basis", gv_basis)->required();
  gverify->callback([&] {
    Graph g = parse_graph(read_file(gv_in));
    CycleBasis b = parse_cycle_basis(read_file(gv_basis));
    auto rep = verify_cycle_basis(g, b);
    std::cout << "independent " << (rep.independent ? "true" : "false") << "\n"
              << "dimension " << rep.dimension << "\n"
              << "expected_dimension " << rep.expected_dimension << "\n"
              << "max_cycle_len " << rep.max_cycle_length << "\n"
              << "max_edge_usage " << rep.max_edge_usage << "\n"
              << "simple " << (rep.all_cycles_simple ? "true" : "false") << "\n"
              << "edges_exist " << (rep.all_edges_exist ? "true" : "false")
              << "\n";
  });

  // encode-superfast ----------------------------------------------------------
  auto* enc_cmd = app.add_subcommand(
      "encode-superfast", "Encode a Majorana Hamiltonian on edge qubits");
  std::string enc_graph, enc_basis, enc_in, enc_out, enc_stab;
  enc_cmd->add_option("--graph", enc_graph)->required();
  enc_cmd->add_option("--basis", enc_basis)->required();
  enc_cmd->add_option("--in", enc_in)->required();
  enc_cmd->add_option("--out", enc_out)->required();
  enc_cmd->add_option("--out-stabilizers", enc_stab)->required();
  enc_cmd->callback([&] {
    Graph g = parse_graph(read_file(enc_graph));
    CycleBasis b = parse_cycle_basis(read_file(enc_basis));
    Hamiltonian h = load(enc_in);
    require_kind(h, HamiltonianKind::majorana,
                 "encode-superfast: needs a majorana Hamiltonian");
    if (h.n != 2 * g.n_vertices)
      throw_dim("encode-superfast: Hamiltonian/graph mode count mismatch");
    SuperfastEncoding enc = superfast_encode(g, b);
    Hamiltonian out, stab;
    out.kind = stab.kind = HamiltonianKind::pauli;
    out.n = stab.n = enc.n_qubits();
    out.pauli = superfast_encode_opsum(h.majorana, enc);
    stab.pauli = enc.stabilizers;
    write_file(enc_out, serialize_hamiltonian(out));
    write_file(enc_stab, serialize_hamiltonian(stab));
  });

  // verify-spectrum -----------------------------------------------------------
  auto* vs_cmd = app.add_subcommand(
      "verify-spectrum", "Degeneracy-aware spectrum comparison");
  std::string vs_a, vs_b;
  int vs_n = 0;
  double vs_tol = 1e-9;
  vs_cmd->add_option("--a", vs_a, "reference Hamiltonian file")->required();
  vs_cmd->add_option("--b", vs_b, "lifted Hamiltonian file")->required();
  vs_cmd->add_option("--n", vs_n, "qubit count; degeneracy factor 2^{n/2}")
      ->required();
  vs_cmd->add_option("--tol", vs_tol);
  vs_cmd->callback([&] {
    if (vs_n < 0 || vs_n % 2 != 0)
      throw_dim("verify-spectrum: --n must be even and nonnegative");
    auto spec_a = spectrum_of(load(vs_a));
    auto spec_b = spectrum_of(load(vs_b));
    bool ok = spectrum_match_with_degeneracy(spec_a, spec_b, 1 << (vs_n / 2),
                                             vs_tol);
    std::cout << "match " << (ok ? "true" : "false") << "\n";
    if (!ok)
      throw error(errc::verification, "verify-spectrum: spectra differ");
  });

  // spreadness ---------------------------------------------------------------
  auto* sp_cmd = app.add_subcommand(
      "spreadness", "Spread mass of an outcome distribution");
  std::string sp_in;
  int sp_L = 0;
  sp_cmd->add_option("--in", sp_in, "distribution file")->required();
  sp_cmd->add_option("--L", sp_L, "Hamming-distance scale")->required();
  sp_cmd->callback([&] {
    DistributionTable d = parse_distribution(read_file(sp_in));
    SpreadnessReport rep = spreadness(d, sp_L);
    std::cout << "L " << rep.L << "\n"
              << "mu_star " << format_double(rep.mu_star) << "\n";
    std::cout << "witness_S1";
    for (auto s : rep.witness_s1) std::cout << " " << bitstring_of(s, d.n_bits);
    std::cout << "\nwitness_S2";
    for (auto s : rep.witness_s2) std::cout << " " << bitstring_of(s, d.n_bits);
    std::cout << "\nmethod " << (rep.exact ? "exact" : "greedy") << "\n";
  });

  // depth-bound ---------------------------------------------------------------
  auto* db_cmd = app.add_subcommand("depth-bound", "Circuit-depth lower bound");
  DepthBoundInput db;
  db_cmd->add_option("--l", db.system_modes, "system mode count")->required();
  db_cmd->add_option("--m", db.ancilla_modes, "ancilla mode count")->required();
  db_cmd->add_option("--L", db.spread_distance)->required();
  db_cmd->add_option("--mu", db.min_mass)->required();
  db_cmd->callback([&] {
    double t = depth_lower_bound(db);
    bool clamped =
        db.spread_distance * db.spread_distance <=
        1600.0 * (db.system_modes + db.ancilla_modes) *
            std::log(1.0 / db.min_mass);
    std::cout << "depth_bound " << format_double(t) << "\n"
              << "clamped " << (clamped ? "true" : "false") << "\n"
              << "log_convention natural\n";
  });

  // exemplar -----------------------------------------------------------------
  auto* exm_cmd = app.add_subcommand("exemplar", "Write a shipped Hamiltonian");
  std::string exm_name, exm_out;
  int exm_n = 4;
  exm_cmd->add_option("name", exm_name, "repetition|steane")->required();
  exm_cmd->add_option("--n", exm_n, "qubit count (repetition only)");
  exm_cmd->add_option("--out", exm_out)->required();
  exm_cmd->callback([&] {
    Hamiltonian h;
    h.kind = HamiltonianKind::pauli;
    if (exm_name == "repetition") {
      h.n = exm_n;
      h.pauli = repetition_hamiltonian(exm_n);
    } else if (exm_name == "steane") {
      h.n = 7;
      h.pauli = steane_hamiltonian();
    } else {
      throw_dim("exemplar: unknown name '" + exm_name + "'");
    }
    write_file(exm_out, serialize_hamiltonian(h));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep the exit taxonomy: command-line usage errors are parse errors
    // (--help and --version still exit 0).
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ferm::error& e) {
    std::cerr << "error " << kind_name(e.category()) << " " << e.what()
              << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error internal " << e.what() << "\n";
    return 1;
  }
}
