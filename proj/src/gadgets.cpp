#include "holoqec/gadgets.hpp"

#include <cmath>

#include "holoqec/error.hpp"

namespace holoqec {

namespace {

constexpr double kPi = 3.14159265358979323846;

int pow3(int k) {
  int v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

int next_t(const PhysicalCircuit& pc) { return pc.max_timestep() + 1; }

void check_level(int level) {
  if (level < 1) throw Error("BAD_LEVEL", "concatenation level must be >= 1");
}

}  // namespace

int append_remapped(PhysicalCircuit& dst, const GadgetCircuit& gadget,
                    const std::vector<int>& site_map) {
  const PhysicalCircuit& src = gadget.circuit;
  if (static_cast<int>(site_map.size()) != src.n_qubits)
    throw Error("BAD_SITES", "site map must cover the gadget register");
  int gate_offset = static_cast<int>(dst.gates.size());
  int loc_offset = static_cast<int>(dst.locations.size());
  int t_offset = next_t(dst);
  for (const ErrorLocation& loc : src.locations) {
    ErrorLocation l = loc;
    for (int& q : l.support) q = site_map[static_cast<std::size_t>(q)];
    dst.locations.push_back(std::move(l));
  }
  for (const PhysGate& g : src.gates) {
    PhysGate ng = g;
    for (int& q : ng.sites) q = site_map[static_cast<std::size_t>(q)];
    ng.timestep += t_offset;
    if (ng.location >= 0) ng.location += loc_offset;
    for (CondClause& clause : ng.cond)
      for (int& idx : clause) idx += gate_offset;
    dst.gates.push_back(std::move(ng));
  }
  return gate_offset;
}

void enumerate_gadget_runs(
    const GadgetCircuit& gadget, const StateVector& initial,
    const std::function<void(const StateVector&, const RunRecord&, double)>& cb) {
  enumerate_dense_runs(gadget.circuit, initial, gadget.injections, cb);
}

// --- majority-vote gate -----------------------------------------------------

GadgetCircuit m_gate(MBasis basis, int level) {
  check_level(level);
  int reg = pow3(level);       // data and ancilla register size
  int m = pow3(level - 1);     // block size of the lifted pattern
  GadgetCircuit g;
  g.level = level;
  g.label = basis == MBasis::X ? "m-gate-x" : "m-gate-z";
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 2 * reg;
  for (int q = 0; q < reg; ++q) g.data_sites.push_back(q);
  for (int q = 0; q < reg; ++q) g.ancillas.push_back({reg + q, basis == MBasis::X ? '0' : '+'});

  auto D = [&](int block, int t) { return block * m + t; };
  auto A = [&](int block, int t) { return reg + block * m + t; };
  std::string tag = g.label + "/k" + std::to_string(level);

  int t0 = 0;
  for (int q = 0; q < reg; ++q) {
    int loc = pc.add_location(LocationKind::Prep, {reg + q}, -1, tag);
    pc.add_gate(GateKind::RESET, {reg + q}, t0, loc);
  }
  if (basis == MBasis::Z) {
    ++t0;
    for (int q = 0; q < reg; ++q) {
      int loc = pc.add_location(LocationKind::Gate, {reg + q}, -1, tag);
      pc.add_gate(GateKind::H, {reg + q}, t0, loc);
    }
  }

  // syndrome extraction: aligned pass then the cyclically rotated pass
  ++t0;
  for (int i = 0; i < 3; ++i) {
    for (int t = 0; t < m; ++t) {
      std::vector<int> sites = basis == MBasis::X ? std::vector<int>{D(i, t), A(i, t)}
                                                  : std::vector<int>{A(i, t), D(i, t)};
      int loc = pc.add_location(LocationKind::Gate, sites, -1, tag);
      pc.add_gate(GateKind::CNOT, sites, t0, loc);
    }
  }
  ++t0;
  for (int i = 0; i < 3; ++i) {
    for (int t = 0; t < m; ++t) {
      std::vector<int> sites = basis == MBasis::X
                                   ? std::vector<int>{D((i + 1) % 3, t), A(i, t)}
                                   : std::vector<int>{A(i, t), D((i + 1) % 3, t)};
      int loc = pc.add_location(LocationKind::Gate, sites, -1, tag);
      pc.add_gate(GateKind::CNOT, sites, t0, loc);
    }
  }

  if (basis == MBasis::Z) {
    ++t0;
    for (int q = 0; q < reg; ++q) {
      int loc = pc.add_location(LocationKind::Gate, {reg + q}, -1, tag);
      pc.add_gate(GateKind::H, {reg + q}, t0, loc);
    }
  }

  // correction: bitwise Toffoli with the paired (rotated, aligned) controls
  for (int i = 0; i < 3; ++i) {
    ++t0;
    for (int t = 0; t < m; ++t) {
      std::vector<int> sites = {A((i + 2) % 3, t), A(i, t), D(i, t)};
      int loc = pc.add_location(LocationKind::Gate, sites, -1, tag);
      pc.add_gate(basis == MBasis::X ? GateKind::TOFFOLI : GateKind::Z_TOFFOLI, sites, t0, loc);
    }
  }
  for (int q = reg; q < 2 * reg; ++q) g.discard_sites.push_back(q);
  return g;
}

// --- syndrome voting ---------------------------------------------------------

std::vector<int> vote_syndromes(const SyndromeTriple& s) {
  if (s.s1.size() != s.s2.size() || s.s2.size() != s.s3.size())
    throw Error("LENGTH_MISMATCH", "syndrome strings differ in length");
  std::vector<int> s4(s.s1.size());
  for (std::size_t i = 0; i < s4.size(); ++i) s4[i] = (s.s1[i] ^ s.s2[i] ^ s.s3[i]) & 1;
  return s4;
}

GadgetCircuit vn_routine(int level) {
  check_level(level);
  int reg = pow3(level);
  int m = pow3(level - 1);
  GadgetCircuit g;
  g.level = level;
  g.label = "vn";
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 5 * reg;  // s1 s2 s3 | s4 s4R
  std::string tag = "vn/k" + std::to_string(level);
  for (int r = 0; r < 3; ++r)
    for (int q = 0; q < reg; ++q) g.data_sites.push_back(r * reg + q);
  for (int q = 0; q < 2 * reg; ++q) g.ancillas.push_back({3 * reg + q, '0'});

  int t0 = 0;
  for (int q = 3 * reg; q < 5 * reg; ++q) {
    int loc = pc.add_location(LocationKind::Prep, {q}, -1, tag);
    pc.add_gate(GateKind::RESET, {q}, t0, loc);
  }
  for (int r = 0; r < 3; ++r) {
    ++t0;
    for (int q = 0; q < reg; ++q) {
      std::vector<int> sites = {r * reg + q, 3 * reg + q};
      int loc = pc.add_location(LocationKind::Gate, sites, -1, tag);
      pc.add_gate(GateKind::CNOT, sites, t0, loc);
    }
  }
  // rotated copy: s4R block i reads s4 block i-1
  ++t0;
  for (int i = 0; i < 3; ++i) {
    for (int t = 0; t < m; ++t) {
      std::vector<int> sites = {3 * reg + ((i + 2) % 3) * m + t, 4 * reg + i * m + t};
      int loc = pc.add_location(LocationKind::Gate, sites, -1, tag);
      pc.add_gate(GateKind::CNOT, sites, t0, loc);
    }
  }
  for (int r = 0; r < 3; ++r)
    for (int q = 0; q < reg; ++q) g.discard_sites.push_back(r * reg + q);
  return g;
}

// --- full corrector for the 3x3 block ----------------------------------------

GadgetCircuit bs_ec(int level, BsOrientation orientation, StageOrder order) {
  check_level(level);
  if (level != 1)
    throw Error("BAD_LEVEL", "the corrector is built at desk scale (level 1) only");
  GadgetCircuit g;
  g.level = 1;
  g.label = "bs-ec";
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 33;  // 9 data + 9 X-stage + 9 Z-stage + 3 vote + 3 rotated copy
  for (int q = 0; q < 9; ++q) g.data_sites.push_back(q);
  for (int q = 9; q < 18; ++q) g.ancillas.push_back({q, '0'});
  for (int q = 18; q < 27; ++q) g.ancillas.push_back({q, '+'});
  for (int q = 27; q < 33; ++q) g.ancillas.push_back({q, '0'});

  auto site = [orientation](int i, int j) { return bs9_site(orientation, i, j); };
  auto xa = [](int i, int j) { return 9 + 3 * i + j; };   // X-stage syndrome grid
  auto za = [](int i, int j) { return 18 + 3 * i + j; };  // Z-stage syndrome grid
  auto s4 = [](int i) { return 27 + i; };
  auto s4r = [](int i) { return 30 + i; };

  auto emit = [&](GateKind kind, std::vector<int> sites, int t, LocationKind lk,
                  const std::string& tag) {
    int loc = pc.add_location(lk, sites, -1, tag);
    pc.add_gate(kind, std::move(sites), t, loc);
  };

  auto x_stage = [&]() {
    std::string tag = "bs-ec/x-stage";
    int t = next_t(pc);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) emit(GateKind::RESET, {xa(i, j)}, t, LocationKind::Prep, tag);
    // column Z-parities, cyclic: xa(i,j) = d(i,j) + d(i+1,j)
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        emit(GateKind::CNOT, {site(i, j), xa(i, j)}, t, LocationKind::Gate, tag);
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        emit(GateKind::CNOT, {site((i + 1) % 3, j), xa(i, j)}, t, LocationKind::Gate, tag);
    // vote the three column strings into s4 and make the rotated copy
    ++t;
    for (int i = 0; i < 3; ++i) {
      emit(GateKind::RESET, {s4(i)}, t, LocationKind::Prep, tag);
      emit(GateKind::RESET, {s4r(i)}, t, LocationKind::Prep, tag);
    }
    for (int j = 0; j < 3; ++j) {
      ++t;
      for (int i = 0; i < 3; ++i)
        emit(GateKind::CNOT, {xa(i, j), s4(i)}, t, LocationKind::Gate, tag);
    }
    ++t;
    for (int i = 0; i < 3; ++i)
      emit(GateKind::CNOT, {s4((i + 2) % 3), s4r(i)}, t, LocationKind::Gate, tag);
    // row fix on column 0, gauge-equivalent to the true location
    for (int r = 0; r < 3; ++r) {
      ++t;
      emit(GateKind::TOFFOLI, {s4r(r), s4(r), site(r, 0)}, t, LocationKind::Gate, tag);
    }
  };

  auto z_stage = [&]() {
    std::string tag = "bs-ec/z-stage";
    int t = next_t(pc);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) emit(GateKind::RESET, {za(i, j)}, t, LocationKind::Prep, tag);
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) emit(GateKind::H, {za(i, j)}, t, LocationKind::Gate, tag);
    // row X-parities, cyclic: za(i,j) reads (i,j) and (i,j+1)
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        emit(GateKind::CNOT, {za(i, j), site(i, j)}, t, LocationKind::Gate, tag);
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        emit(GateKind::CNOT, {za(i, j), site(i, (j + 1) % 3)}, t, LocationKind::Gate, tag);
    ++t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) emit(GateKind::H, {za(i, j)}, t, LocationKind::Gate, tag);
    ++t;
    for (int j = 0; j < 3; ++j) {
      emit(GateKind::RESET, {s4(j)}, t, LocationKind::Prep, tag);
      emit(GateKind::RESET, {s4r(j)}, t, LocationKind::Prep, tag);
    }
    for (int i = 0; i < 3; ++i) {
      ++t;
      for (int j = 0; j < 3; ++j)
        emit(GateKind::CNOT, {za(i, j), s4(j)}, t, LocationKind::Gate, tag);
    }
    ++t;
    for (int j = 0; j < 3; ++j)
      emit(GateKind::CNOT, {s4((j + 2) % 3), s4r(j)}, t, LocationKind::Gate, tag);
    // column fix on row 0
    for (int c = 0; c < 3; ++c) {
      ++t;
      emit(GateKind::Z_TOFFOLI, {s4r(c), s4(c), site(0, c)}, t, LocationKind::Gate, tag);
    }
  };

  if (order == StageOrder::XThenZ) {
    x_stage();
    z_stage();
  } else {
    z_stage();
    x_stage();
  }
  for (int q = 9; q < 33; ++q) g.discard_sites.push_back(q);
  return g;
}

// --- state preparation --------------------------------------------------------

GadgetCircuit prepare_qr(QrBasis basis, int level) {
  check_level(level);
  int reg = pow3(level);
  GadgetCircuit g;
  g.level = level;
  g.label = basis == QrBasis::BitFlip ? "prepare-qr-bitflip" : "prepare-qr-phaseflip";
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 2 * reg;
  for (int q = 0; q < reg; ++q) g.data_sites.push_back(q);
  for (int q = reg; q < 2 * reg; ++q)
    g.ancillas.push_back({q, basis == QrBasis::BitFlip ? '0' : '+'});
  std::string tag = g.label;

  // fresh data register
  int t = 0;
  for (int q = 0; q < reg; ++q) {
    int loc = pc.add_location(LocationKind::Prep, {q}, -1, tag);
    pc.add_gate(GateKind::RESET, {q}, t, loc);
  }
  if (basis == QrBasis::PhaseFlip) {
    ++t;
    for (int q = 0; q < reg; ++q) {
      int loc = pc.add_location(LocationKind::Gate, {q}, -1, tag);
      pc.add_gate(GateKind::H, {q}, t, loc);
    }
  }
  // validate each sub-register, then the whole one
  MBasis mb = basis == QrBasis::BitFlip ? MBasis::X : MBasis::Z;
  for (int k = 1; k <= level; ++k) {
    int blocks = pow3(level - k);
    int span = pow3(k);
    GadgetCircuit m = m_gate(mb, k);
    for (int b = 0; b < blocks; ++b) {
      std::vector<int> map;
      for (int q = 0; q < span; ++q) map.push_back(b * span + q);
      for (int q = 0; q < span; ++q) map.push_back(reg + q);  // ancilla reuse
      append_remapped(pc, m, map);
    }
  }
  return g;
}

GadgetCircuit prepare_logical(LogicalBasis state, int level, BsOrientation orientation) {
  check_level(level);
  int n = 1;
  for (int i = 0; i < level; ++i) n *= 9;
  GadgetCircuit g;
  g.level = level;
  g.label = state == LogicalBasis::Zero ? "prepare-zero" : "prepare-plus";
  PhysicalCircuit& pc = g.circuit;
  int anc_base = n;
  pc.n_qubits = n + 3;  // three reusable majority ancillas
  for (int q = 0; q < n; ++q) g.data_sites.push_back(q);
  for (int q = n; q < n + 3; ++q) g.ancillas.push_back({q, '0'});
  std::string tag = g.label;

  // Clifford encoding network, recursive over 3x3 blocks of sub-registers.
  // build(base, span, state): span = 9^(k-1) block size at this level.
  struct Builder {
    PhysicalCircuit& pc;
    BsOrientation orientation;
    std::string tag;

    void emit(GateKind kind, std::vector<int> sites, int t) {
      int loc = pc.add_location(kind == GateKind::RESET ? LocationKind::Prep : LocationKind::Gate,
                                sites, -1, tag);
      pc.add_gate(kind, std::move(sites), t, loc);
    }
    // transversal CNOT between two sub-registers
    void cnot_block(int c_base, int t_base, int span) {
      int t = pc.max_timestep() + 1;
      for (int q = 0; q < span; ++q) emit(GateKind::CNOT, {c_base + q, t_base + q}, t);
    }
    void build(int base, int level, LogicalBasis state) {
      int span = 1;
      for (int i = 0; i < level - 1; ++i) span *= 9;
      auto block = [&](int i, int j) { return base + span * bs9_site(orientation, i, j); };
      if (level == 1) {
        int t = pc.max_timestep() + 1;
        if (state == LogicalBasis::Zero) {
          // per row: |000> -> GHZ in the X basis
          for (int i = 0; i < 3; ++i) emit(GateKind::H, {block(i, 0)}, t);
          for (int i = 0; i < 3; ++i) cnot_block(block(i, 0), block(i, 1), 1);
          for (int i = 0; i < 3; ++i) cnot_block(block(i, 0), block(i, 2), 1);
          t = pc.max_timestep() + 1;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) emit(GateKind::H, {block(i, j)}, t);
        } else {
          // per column: GHZ in the Z basis
          for (int j = 0; j < 3; ++j) emit(GateKind::H, {block(0, j)}, t);
          for (int j = 0; j < 3; ++j) cnot_block(block(0, j), block(1, j), 1);
          for (int j = 0; j < 3; ++j) cnot_block(block(0, j), block(2, j), 1);
        }
        return;
      }
      if (state == LogicalBasis::Zero) {
        // per row of blocks: X-basis GHZ of logical qubits
        for (int i = 0; i < 3; ++i) {
          build(block(i, 0), level - 1, LogicalBasis::Zero);
          build(block(i, 1), level - 1, LogicalBasis::Plus);
          build(block(i, 2), level - 1, LogicalBasis::Plus);
        }
        for (int i = 0; i < 3; ++i) {
          cnot_block(block(i, 1), block(i, 0), span);
          cnot_block(block(i, 2), block(i, 0), span);
        }
      } else {
        for (int j = 0; j < 3; ++j) {
          build(block(0, j), level - 1, LogicalBasis::Plus);
          build(block(1, j), level - 1, LogicalBasis::Zero);
          build(block(2, j), level - 1, LogicalBasis::Zero);
        }
        for (int j = 0; j < 3; ++j) {
          cnot_block(block(0, j), block(1, j), span);
          cnot_block(block(0, j), block(2, j), span);
        }
      }
    }
  };

  int t = 0;
  for (int q = 0; q < n; ++q) {
    int loc = pc.add_location(LocationKind::Prep, {q}, -1, tag);
    pc.add_gate(GateKind::RESET, {q}, t, loc);
  }
  Builder builder{pc, orientation, tag};
  builder.build(0, level, state);

  if (level == 1) {
    // majority validation pass: M(Z) per row for zero, M(X) per column for plus
    auto site = [&](int i, int j) { return bs9_site(orientation, i, j); };
    GadgetCircuit m = m_gate(state == LogicalBasis::Zero ? MBasis::Z : MBasis::X, 1);
    for (int r = 0; r < 3; ++r) {
      std::vector<int> map;
      for (int k = 0; k < 3; ++k)
        map.push_back(state == LogicalBasis::Zero ? site(r, k) : site(k, r));
      for (int k = 0; k < 3; ++k) map.push_back(anc_base + k);
      append_remapped(pc, m, map);
    }
  }
  return g;
}

// --- arbitrary-state encoder ---------------------------------------------------

GadgetCircuit encode_arbitrary(int level) {
  check_level(level);
  if (level != 1) throw Error("BAD_LEVEL", "the encoder is built at desk scale (level 1) only");
  GadgetCircuit g;
  g.level = 1;
  g.label = "encoder";
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 21;  // 9 data + 9 parity ancillas + 3 vote bits
  for (int q = 0; q < 9; ++q) g.data_sites.push_back(q);
  for (int q = 9; q < 18; ++q) g.ancillas.push_back({q, '+'});
  for (int q = 18; q < 21; ++q) g.ancillas.push_back({q, '0'});
  std::string tag = "encoder";

  auto emit = [&](GateKind kind, std::vector<int> sites, int t, LocationKind lk) {
    int loc = pc.add_location(lk, sites, -1, tag);
    pc.add_gate(kind, std::move(sites), t, loc);
  };

  // data[0] carries the input; the rest start fresh
  for (int q = 1; q < 9; ++q) emit(GateKind::RESET, {q}, 0, LocationKind::Prep);

  // fan-out tree to a|0...0> + b|1...1>, one partner per qubit per step
  const int fanout[8][2] = {{0, 1}, {0, 2}, {1, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 8}};
  const int step_of[8] = {1, 2, 2, 3, 3, 3, 3, 4};
  for (int e = 0; e < 8; ++e)
    emit(GateKind::CNOT, {fanout[e][0], fanout[e][1]}, step_of[e], LocationKind::Gate);

  // gauge-respecting majority stage: row X-parities, voted across rows,
  // with the coherence-preserving paired correction on row 0
  auto pa = [](int i, int j) { return 9 + 3 * i + j; };
  auto s4 = [](int j) { return 18 + j; };
  int t = next_t(pc);
  for (int q = 9; q < 18; ++q) emit(GateKind::RESET, {q}, t, LocationKind::Prep);
  for (int q = 18; q < 21; ++q) emit(GateKind::RESET, {q}, t, LocationKind::Prep);
  ++t;
  for (int q = 9; q < 18; ++q) emit(GateKind::H, {q}, t, LocationKind::Gate);
  ++t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) emit(GateKind::CNOT, {pa(i, j), 3 * i + j}, t, LocationKind::Gate);
  ++t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      emit(GateKind::CNOT, {pa(i, j), 3 * i + (j + 1) % 3}, t, LocationKind::Gate);
  ++t;
  for (int q = 9; q < 18; ++q) emit(GateKind::H, {q}, t, LocationKind::Gate);
  for (int i = 0; i < 3; ++i) {
    ++t;
    for (int j = 0; j < 3; ++j) emit(GateKind::CNOT, {pa(i, j), s4(j)}, t, LocationKind::Gate);
  }
  // the correction Z_(0,c) * Z_L keeps the encoded superposition coherent
  for (int c = 0; c < 3; ++c) {
    ++t;
    emit(GateKind::Z_TOFFOLI, {s4((c + 2) % 3), s4(c), (c + 1) % 3}, t, LocationKind::Gate);
    ++t;
    emit(GateKind::Z_TOFFOLI, {s4((c + 2) % 3), s4(c), (c + 2) % 3}, t, LocationKind::Gate);
  }
  for (int q = 9; q < 21; ++q) g.discard_sites.push_back(q);
  return g;
}

// --- boundary non-Clifford gadgets ----------------------------------------------

namespace {

// Clifford preparation of |0_L> / |+_L> on `sites` (engine-width circuit).
void emit_clifford_logical_prep(PhysicalCircuit& pc, const CodeSpec& code,
                                const std::vector<int>& sites, LogicalBasis state,
                                const std::string& tag) {
  auto emit = [&](GateKind kind, std::vector<int> s, int t) {
    int loc = pc.add_location(kind == GateKind::RESET ? LocationKind::Prep : LocationKind::Gate,
                              s, -1, tag);
    pc.add_gate(kind, std::move(s), t, loc);
  };
  int t = next_t(pc);
  for (int q : sites) emit(GateKind::RESET, {q}, t);
  ++t;
  if (code.name.rfind("qr3", 0) == 0) {
    // bitflip: zero = |000>, plus = GHZ in Z basis;
    // phaseflip: zero = |+++>, plus = GHZ in X basis.
    bool bitflip = code.name == "qr3-bitflip";
    if (state == LogicalBasis::Plus) {
      emit(GateKind::H, {sites[0]}, t);
      emit(GateKind::CNOT, {sites[0], sites[1]}, t + 1);
      emit(GateKind::CNOT, {sites[0], sites[2]}, t + 2);
      if (!bitflip)
        for (int q : sites) emit(GateKind::H, {q}, t + 3);
    } else if (!bitflip) {
      for (int q : sites) emit(GateKind::H, {q}, t);
    }
    return;
  }
  // 3x3 block
  BsOrientation orientation =
      code.name == "bs9-rotated" ? BsOrientation::Rotated : BsOrientation::Standard;
  auto site = [&](int i, int j) { return sites[static_cast<std::size_t>(bs9_site(orientation, i, j))]; };
  if (state == LogicalBasis::Zero) {
    for (int i = 0; i < 3; ++i) emit(GateKind::H, {site(i, 0)}, t);
    for (int i = 0; i < 3; ++i) {
      emit(GateKind::CNOT, {site(i, 0), site(i, 1)}, t + 1);
      emit(GateKind::CNOT, {site(i, 0), site(i, 2)}, t + 2);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) emit(GateKind::H, {site(i, j)}, t + 3);
  } else {
    for (int j = 0; j < 3; ++j) emit(GateKind::H, {site(0, j)}, t);
    for (int j = 0; j < 3; ++j) {
      emit(GateKind::CNOT, {site(0, j), site(1, j)}, t + 1);
      emit(GateKind::CNOT, {site(0, j), site(2, j)}, t + 2);
    }
  }
}

std::vector<int> logical_z_sites(const CodeSpec& code, int offset) {
  std::vector<int> sites;
  for (int q = 0; q < code.n; ++q)
    if (code.logical_z.pauli_at(q) != 0) sites.push_back(offset + q);
  return sites;
}

}  // namespace

GadgetCircuit zhalf_circuit(const CodeSpec* code) {
  GadgetCircuit g;
  g.label = "zhalf";
  PhysicalCircuit& pc = g.circuit;
  if (code == nullptr) {
    g.level = 0;
    pc.n_qubits = 2;
    g.data_sites = {0};
    g.ancillas = {{1, 'i'}};
    std::string tag = "zhalf/l0";
    auto emit = [&](GateKind kind, std::vector<int> s, int t, LocationKind lk) {
      int loc = pc.add_location(lk, s, -1, tag);
      return pc.add_gate(kind, std::move(s), t, loc);
    };
    emit(GateKind::RESET, {1}, 0, LocationKind::Prep);
    emit(GateKind::H, {1}, 1, LocationKind::Gate);
    emit(GateKind::S, {1}, 2, LocationKind::Gate);
    emit(GateKind::CNOT, {0, 1}, 3, LocationKind::Gate);
    int m = emit(GateKind::MEASURE_Z, {1}, 4, LocationKind::Measure);
    int z = emit(GateKind::Z, {0}, 5, LocationKind::Gate);
    pc.gates[static_cast<std::size_t>(z)].cond = {{m}};
    return g;
  }
  g.level = 1;
  int n = code->n;
  pc.n_qubits = 2 * n;
  for (int q = 0; q < n; ++q) g.data_sites.push_back(q);
  for (int q = n; q < 2 * n; ++q) g.ancillas.push_back({q, 'i'});
  std::string tag = "zhalf/" + code->name;
  std::vector<int> anc_sites;
  for (int q = n; q < 2 * n; ++q) anc_sites.push_back(q);
  emit_clifford_logical_prep(pc, *code, anc_sites, LogicalBasis::Zero, tag);
  // |+i_L> = exp(i pi/4 X_L)|0_L>
  g.injections.push_back(
      {static_cast<int>(pc.gates.size()), embed(code->logical_x, 2 * n, anc_sites), kPi / 4});
  int t = next_t(pc);
  for (int q = 0; q < n; ++q) {
    int loc = pc.add_location(LocationKind::Gate, {q, n + q}, -1, tag);
    pc.add_gate(GateKind::CNOT, {q, n + q}, t, loc);
  }
  ++t;
  CondClause m_clause;
  for (int q = n; q < 2 * n; ++q) {
    int loc = pc.add_location(LocationKind::Measure, {q}, -1, tag);
    int gi = pc.add_gate(GateKind::MEASURE_Z, {q}, t, loc);
    if (code->logical_z.pauli_at(q - n) != 0) m_clause.push_back(gi);
  }
  ++t;
  for (int q : logical_z_sites(*code, 0)) {
    int loc = pc.add_location(LocationKind::Gate, {q}, -1, tag);
    int gi = pc.add_gate(GateKind::Z, {q}, t, loc);
    pc.gates[static_cast<std::size_t>(gi)].cond = {m_clause};
  }
  return g;
}

GadgetCircuit zquarter_circuit(const CodeSpec* code) {
  GadgetCircuit g;
  g.label = "zquarter";
  PhysicalCircuit& pc = g.circuit;
  if (code == nullptr) {
    g.level = 0;
    pc.n_qubits = 3;  // data, |H> ancilla, |+i> ancilla
    g.data_sites = {0};
    g.ancillas = {{1, 'h'}, {2, 'i'}};
    std::string tag = "zquarter/l0";
    auto emit = [&](GateKind kind, std::vector<int> s, int t, LocationKind lk) {
      int loc = pc.add_location(lk, s, -1, tag);
      return pc.add_gate(kind, std::move(s), t, loc);
    };
    emit(GateKind::RESET, {1}, 0, LocationKind::Prep);
    emit(GateKind::H, {1}, 1, LocationKind::Gate);
    emit(GateKind::ZQUARTER, {1}, 2, LocationKind::Gate);
    emit(GateKind::CNOT, {0, 1}, 3, LocationKind::Gate);
    int m = emit(GateKind::MEASURE_Z, {1}, 4, LocationKind::Measure);
    // conditional S via the |+i> gadget
    emit(GateKind::RESET, {2}, 5, LocationKind::Prep);
    emit(GateKind::H, {2}, 6, LocationKind::Gate);
    emit(GateKind::S, {2}, 7, LocationKind::Gate);
    int cx = emit(GateKind::CNOT, {0, 2}, 8, LocationKind::Gate);
    pc.gates[static_cast<std::size_t>(cx)].cond = {{m}};
    int m2 = emit(GateKind::MEASURE_Z, {2}, 9, LocationKind::Measure);
    int z = emit(GateKind::Z, {0}, 10, LocationKind::Gate);
    pc.gates[static_cast<std::size_t>(z)].cond = {{m}, {m2}};
    return g;
  }
  g.level = 1;
  int n = code->n;
  pc.n_qubits = 2 * n;
  for (int q = 0; q < n; ++q) g.data_sites.push_back(q);
  for (int q = n; q < 2 * n; ++q) g.ancillas.push_back({q, 'h'});
  std::string tag = "zquarter/" + code->name;
  std::vector<int> anc_sites;
  for (int q = n; q < 2 * n; ++q) anc_sites.push_back(q);

  // stage the |H_L> ancilla: |+_L> then exp(-i pi/8 Z_L)
  emit_clifford_logical_prep(pc, *code, anc_sites, LogicalBasis::Plus, tag);
  g.injections.push_back(
      {static_cast<int>(pc.gates.size()), embed(code->logical_z, 2 * n, anc_sites), -kPi / 8});
  int t = next_t(pc);
  for (int q = 0; q < n; ++q) {
    int loc = pc.add_location(LocationKind::Gate, {q, n + q}, -1, tag);
    pc.add_gate(GateKind::CNOT, {q, n + q}, t, loc);
  }
  ++t;
  CondClause m_clause;
  for (int q = n; q < 2 * n; ++q) {
    int loc = pc.add_location(LocationKind::Measure, {q}, -1, tag);
    int gi = pc.add_gate(GateKind::MEASURE_Z, {q}, t, loc);
    if (code->logical_z.pauli_at(q - n) != 0) m_clause.push_back(gi);
  }
  // conditional S_L: reuse the ancilla block for a |+i_L> consumption round
  emit_clifford_logical_prep(pc, *code, anc_sites, LogicalBasis::Zero, tag);
  g.injections.push_back(
      {static_cast<int>(pc.gates.size()), embed(code->logical_x, 2 * n, anc_sites), kPi / 4});
  t = next_t(pc);
  for (int q = 0; q < n; ++q) {
    int loc = pc.add_location(LocationKind::Gate, {q, n + q}, -1, tag);
    int gi = pc.add_gate(GateKind::CNOT, {q, n + q}, t, loc);
    pc.gates[static_cast<std::size_t>(gi)].cond = {m_clause};
  }
  ++t;
  CondClause m2_clause;
  for (int q = n; q < 2 * n; ++q) {
    int loc = pc.add_location(LocationKind::Measure, {q}, -1, tag);
    int gi = pc.add_gate(GateKind::MEASURE_Z, {q}, t, loc);
    if (code->logical_z.pauli_at(q - n) != 0) m2_clause.push_back(gi);
  }
  ++t;
  for (int q : logical_z_sites(*code, 0)) {
    int loc = pc.add_location(LocationKind::Gate, {q}, -1, tag);
    int gi = pc.add_gate(GateKind::Z, {q}, t, loc);
    pc.gates[static_cast<std::size_t>(gi)].cond = {m_clause, m2_clause};
  }
  return g;
}

// --- line SWAP and Toffoli decomposition ------------------------------------------

GadgetCircuit ft_swap_routine(int p1, int p2, int p3, const std::array<LineRole, 3>& roles) {
  if (!(p1 < p2 && p2 < p3))
    throw Error("BAD_ROLES", "positions must be strictly increasing");
  if (roles[0] != LineRole::Info || roles[1] != LineRole::Placeholder ||
      roles[2] != LineRole::Info)
    throw Error("BAD_ROLES", "expected info, placeholder, info");
  GadgetCircuit g;
  g.label = "ft-swap";
  g.data_sites = {p1, p3};
  g.ancillas = {{p2, '0'}};
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = p3 + 1;
  const int seq[3][2] = {{p1, p2}, {p1, p3}, {p2, p3}};
  for (int s = 0; s < 3; ++s) {
    std::vector<int> sites = {seq[s][0], seq[s][1]};
    int loc = pc.add_location(LocationKind::Gate, sites, -1, "ft-swap");
    pc.add_gate(GateKind::SWAP, sites, s, loc);
  }
  return g;
}

GadgetCircuit toffoli_decomposition(bool discard_controls) {
  GadgetCircuit g;
  g.label = discard_controls ? "toffoli-2q-discard" : "toffoli-2q";
  g.data_sites = {0, 1, 2};
  PhysicalCircuit& pc = g.circuit;
  pc.n_qubits = 3;
  auto emit = [&](GateKind kind, std::vector<int> sites, int t) {
    int loc = pc.add_location(LocationKind::Gate, sites, -1, g.label);
    pc.add_gate(kind, std::move(sites), t, loc);
  };
  // the two leading controlled-sqrt(X) commute: one timestep
  emit(GateKind::CXHALF, {0, 2}, 0);
  emit(GateKind::CXHALF, {1, 2}, 0);
  emit(GateKind::CNOT, {0, 1}, 1);
  emit(GateKind::CXHALF_DG, {1, 2}, 2);
  if (!discard_controls) emit(GateKind::CNOT, {0, 1}, 3);
  return g;
}

// --- decoding oracles ---------------------------------------------------------

DecodeContext make_decode_context(const CodeSpec& code, int n_total,
                                  const std::vector<int>& data_sites,
                                  const std::vector<int>& work_sites) {
  if (static_cast<int>(data_sites.size()) != code.n)
    throw Error("BAD_SITES", "data site count does not match the code");
  DecodeContext ctx;
  ctx.code = code;
  ctx.data_sites = data_sites;
  GadgetCircuit ec;
  if (code.n == 9) {
    BsOrientation orientation =
        code.name == "bs9-rotated" ? BsOrientation::Rotated : BsOrientation::Standard;
    ec = bs_ec(1, orientation);
    if (work_sites.size() < 24) throw Error("BAD_SITES", "the 3x3 corrector needs 24 work sites");
  } else if (code.n == 3) {
    ec = m_gate(code.name == "qr3-bitflip" ? MBasis::X : MBasis::Z, 1);
    if (work_sites.size() < 3) throw Error("BAD_SITES", "the repetition corrector needs 3 work sites");
  } else {
    throw Error("BAD_SITES", "no corrector for this code");
  }
  std::vector<int> map = data_sites;
  for (std::size_t i = 0; map.size() < static_cast<std::size_t>(ec.circuit.n_qubits); ++i)
    map.push_back(work_sites[i]);
  ctx.ec.n_qubits = n_total;
  append_remapped(ctx.ec, ec, map);
  for (const auto& s : code.stabilizers) ctx.stabilizers.push_back(embed(s, n_total, data_sites));
  ctx.logical_x = embed(code.logical_x, n_total, data_sites);
  ctx.logical_z = embed(code.logical_z, n_total, data_sites);
  return ctx;
}

LogicalFrame ideal_decode(const DecodeContext& ctx, Tableau& t, LogicalBasis reference, Rng& rng) {
  run_on_tableau(ctx.ec, t, rng);
  for (const auto& s : ctx.stabilizers)
    if (t.expectation(s) != 1) return LogicalFrame::Fail;
  int e = t.expectation(reference == LogicalBasis::Zero ? ctx.logical_z : ctx.logical_x);
  if (e == 0) return LogicalFrame::Fail;
  if (e == 1) return LogicalFrame::I;
  return reference == LogicalBasis::Zero ? LogicalFrame::X : LogicalFrame::Z;
}

LogicalFrame ideal_decode_dense(const CodeSpec& code, const StateVector& sv,
                                const std::vector<int>& data_sites, cplx a, cplx b, double tol) {
  int n = sv.num_qubits();
  for (const auto& s : code.stabilizers) {
    if (std::abs(sv.expectation(embed(s, n, data_sites)) - 1.0) > tol) return LogicalFrame::Fail;
  }
  PauliString lx = embed(code.logical_x, n, data_sites);
  PauliString lz = embed(code.logical_z, n, data_sites);
  PauliString ly = lx;
  ly *= lz;
  ly.mul_phase(1);  // Y_L = i X_L Z_L
  double x = sv.expectation(lx);
  double y = sv.expectation(ly);
  double z = sv.expectation(lz);
  double rx = 2.0 * (std::conj(a) * b).real();
  double ry = 2.0 * (std::conj(a) * b).imag();
  double rz = std::norm(a) - std::norm(b);
  struct Frame {
    LogicalFrame f;
    double sx, sy, sz;
  };
  const Frame frames[4] = {{LogicalFrame::I, 1, 1, 1},
                           {LogicalFrame::X, 1, -1, -1},
                           {LogicalFrame::Y, -1, 1, -1},
                           {LogicalFrame::Z, -1, -1, 1}};
  for (const Frame& fr : frames) {
    if (std::abs(x - fr.sx * rx) <= tol && std::abs(y - fr.sy * ry) <= tol &&
        std::abs(z - fr.sz * rz) <= tol)
      return fr.f;
  }
  return LogicalFrame::Fail;
}

void prepare_logical_dense(StateVector& sv, const CodeSpec& code, const std::vector<int>& sites,
                           cplx a, cplx b) {
  PhysicalCircuit prep;
  prep.n_qubits = sv.num_qubits();
  emit_clifford_logical_prep(prep, code, sites, LogicalBasis::Zero, "prep");
  for (const PhysGate& g : prep.gates) {
    if (g.kind == GateKind::RESET) continue;  // caller guarantees |0> there
    sv.apply_gate(g.kind, g.sites, g.param);
  }
  // |psi> = exp(-i phi/2 Z_L) exp(-i theta/2 Y_L) |0_L> up to global phase,
  // with a = cos(theta/2), b = e^{i phi} sin(theta/2)
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (norm < 1e-12) throw Error("BAD_SITES", "zero state requested");
  cplx an = a / norm, bn = b / norm;
  double theta = 2.0 * std::atan2(std::abs(bn), std::abs(an));
  double phi = std::arg(bn) - std::arg(an);
  PauliString lx = embed(code.logical_x, sv.num_qubits(), sites);
  PauliString lz = embed(code.logical_z, sv.num_qubits(), sites);
  PauliString y = lx;
  y *= lz;
  y.mul_phase(1);
  apply_pauli_exponential(sv, y, -theta / 2.0);
  apply_pauli_exponential(sv, lz, -phi / 2.0);
}

}  // namespace holoqec
