#include "holoqec/semiglobal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "holoqec/error.hpp"
#include "holoqec/executor.hpp"

namespace holoqec {

Layout2D Layout2D::interleaved(int n_info) {
  if (n_info < 1) throw Error("BAD_DIMS", "layout needs at least one info qubit");
  Layout2D l;
  l.line_length = 2 * n_info - 1;
  l.role_of.assign(static_cast<std::size_t>(l.line_length), LineRole::Placeholder);
  for (int i = 0; i < n_info; ++i) {
    l.role_of[static_cast<std::size_t>(2 * i)] = LineRole::Info;
    l.plane_map[i] = 2 * i;
  }
  return l;
}

namespace {

std::vector<int> column_support(const LatticeDims& d, const Column& c) {
  std::vector<int> qs;
  qs.reserve(static_cast<std::size_t>(d.nz));
  for (int z = 1; z <= d.nz; ++z) qs.push_back(column_qubit(d, c, z));
  return qs;
}

std::vector<std::pair<int, int>> parity_pairs(int nz, CZParity parity) {
  std::vector<std::pair<int, int>> pairs;
  if (parity == CZParity::OddEven) {
    for (int z = 1; z + 1 <= nz; z += 2) pairs.emplace_back(z, z + 1);
  } else {
    for (int z = 2; z + 1 <= nz; z += 2) pairs.emplace_back(z, z + 1);
  }
  return pairs;
}

}  // namespace

ValidationReport validate(const Circuit& circuit) {
  ValidationReport report;
  const LatticeDims& d = circuit.dims;
  auto add = [&](int idx, const char* rule, std::string msg) {
    report.violations.push_back({idx, rule, std::move(msg)});
  };
  try {
    d.check();
  } catch (const Error& e) {
    add(-1, "R0", e.what());
  }

  for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
    int idx = static_cast<int>(i);
    const SemiGlobalOp& op = circuit.ops[i];
    if (const auto* g = std::get_if<ColumnGate>(&op)) {
      if (!g->col.in_range(d)) add(idx, "R0", "column out of range");
      if (gate_arity(g->kind) != 1) add(idx, "R0", "column gate needs a 1-qubit kind");
      if (gate_is_measurement(g->kind))
        add(idx, "R1", "bulk measurement: measurements are boundary-only");
      else if (g->kind == GateKind::RESET)
        add(idx, "R1", "use a reset op (ColumnReset) or a boundary reset");
    } else if (const auto* g2 = std::get_if<TwoColumnGate>(&op)) {
      if (!g2->a.in_range(d) || !g2->b.in_range(d)) add(idx, "R0", "column out of range");
      if (gate_arity(g2->kind) != 2) add(idx, "R0", "two-column gate needs a 2-qubit kind");
      if (gate_is_measurement(g2->kind)) add(idx, "R1", "bulk measurement");
      if (g2->a == g2->b) add(idx, "R4", "two-column gate addresses one column twice");
    } else if (std::get_if<VerticalCZLayer>(&op)) {
      if (d.nz < 2) add(idx, "R0", "vertical parity layer requires nz >= 2");
    } else if (std::get_if<GlobalHLayer>(&op)) {
      // always fine
    } else if (const auto* r = std::get_if<ColumnReset>(&op)) {
      if (!r->col.in_range(d)) add(idx, "R0", "column out of range");
    } else if (const auto* b = std::get_if<BoundaryOp>(&op)) {
      if (b->sites.empty() || b->sites.size() > 3) add(idx, "R0", "boundary op takes 1-3 sites");
      if (static_cast<int>(b->sites.size()) != gate_arity(b->kind))
        add(idx, "R0", "site count does not match gate arity");
      bool in_range = true;
      for (const Site& s : b->sites)
        if (!s.in_range(d)) in_range = false;
      if (!in_range) add(idx, "R0", "boundary site out of range");
      if (in_range && !b->sites.empty()) {
        bool mixed = false, off_boundary = false;
        for (const Site& s : b->sites) {
          if (s.z != b->sites[0].z) mixed = true;
          if (!s.on_boundary(d)) off_boundary = true;
        }
        if (mixed || off_boundary) add(idx, "R3", mixed ? "sites on mixed z planes" : "site not on a z boundary");
        if (mixed && b->sites.size() >= 2)
          add(idx, "R2", "inter-plane gate must be a vertical CZ layer");
        bool dup = false;
        for (std::size_t a = 0; a < b->sites.size(); ++a)
          for (std::size_t c = a + 1; c < b->sites.size(); ++c)
            if (b->sites[a] == b->sites[c]) dup = true;
        if (dup) add(idx, "R0", "duplicate sites");
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

PhysicalCircuit expand(const Circuit& circuit) {
  ValidationReport rep = validate(circuit);
  if (!rep.ok) {
    std::string msg = "circuit fails validation:";
    for (const auto& v : rep.violations) msg += " [" + v.rule + " op " + std::to_string(v.op_index) + "]";
    throw Error("INVALID_CIRCUIT", msg);
  }
  const LatticeDims& d = circuit.dims;
  PhysicalCircuit pc;
  pc.n_qubits = d.qubits();
  int t = 0;
  std::string tag;
  for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
    int idx = static_cast<int>(i);
    const SemiGlobalOp& op = circuit.ops[i];
    if (const auto* a = std::get_if<Annotation>(&op)) {
      tag = a->text;
      continue;
    }
    if (const auto* g = std::get_if<ColumnGate>(&op)) {
      int loc = pc.add_location(LocationKind::Gate, column_support(d, g->col), idx, tag);
      for (int z = 1; z <= d.nz; ++z)
        pc.add_gate(g->kind, {column_qubit(d, g->col, z)}, t, loc);
    } else if (const auto* g2 = std::get_if<TwoColumnGate>(&op)) {
      std::vector<int> support = column_support(d, g2->a);
      for (int q : column_support(d, g2->b)) support.push_back(q);
      int loc = pc.add_location(LocationKind::Gate, std::move(support), idx, tag);
      for (int z = 1; z <= d.nz; ++z)
        pc.add_gate(g2->kind, {column_qubit(d, g2->a, z), column_qubit(d, g2->b, z)}, t, loc);
    } else if (const auto* layer = std::get_if<VerticalCZLayer>(&op)) {
      auto pairs = parity_pairs(d.nz, layer->parity);
      for (int y = 1; y <= d.ny; ++y) {
        for (int x = 1; x <= d.nx; ++x) {
          std::vector<int> support;
          for (const auto& [za, zb] : pairs) {
            support.push_back(linearize(d, x, y, za));
            support.push_back(linearize(d, x, y, zb));
          }
          int loc = pc.add_location(LocationKind::Gate, std::move(support), idx, tag);
          for (const auto& [za, zb] : pairs)
            pc.add_gate(GateKind::CZ, {linearize(d, x, y, za), linearize(d, x, y, zb)}, t, loc);
        }
      }
    } else if (std::get_if<GlobalHLayer>(&op)) {
      for (int y = 1; y <= d.ny; ++y) {
        for (int x = 1; x <= d.nx; ++x) {
          Column c{x, y};
          int loc = pc.add_location(LocationKind::Gate, column_support(d, c), idx, tag);
          for (int z = 1; z <= d.nz; ++z)
            pc.add_gate(GateKind::H, {column_qubit(d, c, z)}, t, loc);
        }
      }
    } else if (const auto* r = std::get_if<ColumnReset>(&op)) {
      int loc = pc.add_location(LocationKind::Prep, column_support(d, r->col), idx, tag);
      for (int z = 1; z <= d.nz; ++z)
        pc.add_gate(GateKind::RESET, {column_qubit(d, r->col, z)}, t, loc);
    } else if (const auto* b = std::get_if<BoundaryOp>(&op)) {
      std::vector<int> sites;
      for (const Site& s : b->sites) sites.push_back(linearize(d, s));
      LocationKind lk = gate_is_measurement(b->kind) ? LocationKind::Measure
                        : b->kind == GateKind::RESET ? LocationKind::Prep
                                                     : LocationKind::Gate;
      int loc = pc.add_location(lk, sites, idx, tag);
      pc.add_gate(b->kind, std::move(sites), t, loc);
    }
    ++t;
  }
  return pc;
}

namespace {

void append_t_pulse_ops(Circuit& c) {
  c.ops.emplace_back(GlobalHLayer{});
  if (c.dims.nz >= 2) c.ops.emplace_back(VerticalCZLayer{CZParity::OddEven});
  if (c.dims.nz >= 3) c.ops.emplace_back(VerticalCZLayer{CZParity::EvenOdd});
}

}  // namespace

Circuit build_T_tilde(const LatticeDims& dims) {
  dims.check();
  if (dims.nx != 1 || dims.ny != 1) throw Error("BAD_DIMS", "T-tilde acts on a single column");
  Circuit c{dims, {}, "t-tilde"};
  append_t_pulse_ops(c);
  return c;
}

Circuit build_T_pulse(const LatticeDims& dims) {
  dims.check();
  Circuit c{dims, {}, "t-pulse"};
  append_t_pulse_ops(c);
  return c;
}

Circuit build_mirror_sequence(const LatticeDims& dims, int reps) {
  dims.check();
  if (dims.nx != 1 || dims.ny != 1) throw Error("BAD_DIMS", "mirror sequence acts on a single column");
  if (reps < 0) throw Error("BAD_DIMS", "negative repetition count");
  Circuit c{dims, {}, "mirror"};
  for (int r = 0; r < reps; ++r) append_t_pulse_ops(c);
  return c;
}

Circuit build_memory_experiment(const LatticeDims& dims) {
  dims.check();
  Circuit c = build_T_pulse(dims);
  c.name = "memory-experiment";
  c.ops.emplace_back(ColumnReset{Column{dims.nx, dims.ny}});
  for (int y = 1; y <= dims.ny; ++y)
    for (int x = 1; x <= dims.nx; ++x)
      c.ops.emplace_back(BoundaryOp{GateKind::MEASURE_Z, {Site{x, y, 1}}});
  return c;
}

MirrorTable mirror_byproducts(int nz) {
  if (nz < 1) throw Error("BAD_DIMS", "nz must be >= 1");
  LatticeDims dims{1, 1, nz};
  PhysicalCircuit pc = expand(build_mirror_sequence(dims, nz + 1));
  MirrorTable table;
  table.nz = nz;
  for (int z = 1; z <= nz; ++z) {
    for (char p : {'X', 'Z'}) {
      PauliString in = PauliString::single(nz, z - 1, p);
      PauliString out = conjugate_pauli(pc, in);
      if (out.weight() != 1)
        throw Error("MIRROR_BROKEN", "mirror image is not a single-site pauli");
      int site = -1;
      for (int q = 0; q < nz; ++q)
        if (out.pauli_at(q) != 0) site = q;
      static const char kLetter[4] = {'I', 'X', 'Z', 'Y'};
      MirrorEntry e;
      e.from_z = z;
      e.to_z = site + 1;
      e.from_pauli = p;
      e.to_pauli = kLetter[out.pauli_at(site)];
      e.sign = out.hermitian_sign();
      if (e.to_z != nz + 1 - z || e.to_pauli != p || e.sign != 1) table.plain_reflection = false;
      table.entries.push_back(e);
    }
  }
  return table;
}

ReadoutPlan build_readout_sequence(const LatticeDims& dims, int plane) {
  dims.check();
  if (plane < 1 || plane > dims.nz) throw Error("BAD_PLANE", "plane index out of range");
  int nz = dims.nz;

  // BFS over payload positions; moves cost their T-pulse count.
  struct Node {
    int cost;
    std::vector<ReadoutMove> moves;
  };
  std::vector<Node> best(static_cast<std::size_t>(nz + 1), Node{-1, {}});
  std::deque<int> queue;
  best[static_cast<std::size_t>(plane)] = {0, {}};
  queue.push_back(plane);
  auto relax = [&](int from, int to, int cost, ReadoutMove m) {
    if (to < 1 || to > nz) return;
    const Node& src = best[static_cast<std::size_t>(from)];
    Node& dst = best[static_cast<std::size_t>(to)];
    int nc = src.cost + cost;
    if (dst.cost >= 0 && dst.cost <= nc) return;
    dst.cost = nc;
    dst.moves = src.moves;
    dst.moves.push_back(m);
    queue.push_back(to);
  };
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    relax(p, nz + 1 - p, nz + 1, ReadoutMove::FullMirror);
    if (p >= 2) relax(p, nz + 2 - p, nz, ReadoutMove::SubMirrorLow);
    if (p <= nz - 1) relax(p, nz - p, nz, ReadoutMove::SubMirrorHigh);
  }
  int boundary = -1;
  for (int b : {1, nz}) {
    if (best[static_cast<std::size_t>(b)].cost < 0) continue;
    if (boundary < 0 || best[static_cast<std::size_t>(b)].cost < best[static_cast<std::size_t>(boundary)].cost)
      boundary = b;
  }
  if (boundary < 0) throw Error("BAD_PLANE", "no route to a boundary plane");

  ReadoutPlan plan;
  plan.boundary_z = boundary;
  plan.moves = best[static_cast<std::size_t>(boundary)].moves;
  plan.circuit.dims = dims;
  plan.circuit.name = "readout-plane-" + std::to_string(plane);

  auto freeze_plane = [&](Circuit& c, int z) {
    for (int y = 1; y <= dims.ny; ++y)
      for (int x = 1; x <= dims.nx; ++x)
        c.ops.emplace_back(BoundaryOp{GateKind::RESET, {Site{x, y, z}}});
  };
  auto cancel_h = [&](Circuit& c, int z) {
    for (int y = 1; y <= dims.ny; ++y)
      for (int x = 1; x <= dims.nx; ++x)
        c.ops.emplace_back(BoundaryOp{GateKind::H, {Site{x, y, z}}});
  };
  auto frozen_pulse = [&](Circuit& c, int frozen_z) {
    c.ops.emplace_back(GlobalHLayer{});
    cancel_h(c, frozen_z);
    if (dims.nz >= 2) c.ops.emplace_back(VerticalCZLayer{CZParity::OddEven});
    if (dims.nz >= 3) c.ops.emplace_back(VerticalCZLayer{CZParity::EvenOdd});
  };

  for (ReadoutMove m : plan.moves) {
    switch (m) {
      case ReadoutMove::FullMirror: {
        plan.circuit.ops.emplace_back(Annotation{"full-mirror"});
        for (int r = 0; r < nz + 1; ++r) append_t_pulse_ops(plan.circuit);
        plan.t_pulses += nz + 1;
        break;
      }
      case ReadoutMove::SubMirrorLow: {
        plan.circuit.ops.emplace_back(Annotation{"sub-mirror-low"});
        freeze_plane(plan.circuit, 1);
        for (int r = 0; r < nz; ++r) frozen_pulse(plan.circuit, 1);
        plan.t_pulses += nz;
        break;
      }
      case ReadoutMove::SubMirrorHigh: {
        plan.circuit.ops.emplace_back(Annotation{"sub-mirror-high"});
        freeze_plane(plan.circuit, nz);
        for (int r = 0; r < nz; ++r) frozen_pulse(plan.circuit, nz);
        plan.t_pulses += nz;
        break;
      }
    }
  }
  plan.circuit.ops.emplace_back(Annotation{"boundary-readout"});
  for (int y = 1; y <= dims.ny; ++y)
    for (int x = 1; x <= dims.nx; ++x)
      plan.circuit.ops.emplace_back(BoundaryOp{GateKind::MEASURE_Z, {Site{x, y, boundary}}});
  return plan;
}

namespace {

// Three SWAPs moving an info payload across one placeholder; each SWAP
// touches at most one info-holding position at that moment.
const std::array<std::array<int, 2>, 3> kFtSwapPattern = {{{0, 1}, {0, 2}, {1, 2}}};

struct Lowerer {
  const LatticeDims& dims;
  const Layout2D& layout;
  PhysicalCircuit out;
  int t = 0;

  int q2d(int pos, int z) const { return pos + layout.line_length * (z - 1); }

  int line_pos(int plane_site, int op_loc) const {
    auto it = layout.plane_map.find(plane_site);
    if (it == layout.plane_map.end())
      throw Error("UNROUTABLE", "gate site " + std::to_string(plane_site) +
                                    " is outside the line layout (location " +
                                    std::to_string(op_loc) + ")");
    return it->second;
  }

  void emit(GateKind kind, std::vector<int> sites, int loc, double param = 0.0) {
    out.add_gate(kind, std::move(sites), t++, loc, param);
  }

  void emit_ft_swap(int left_pos, int z, int loc) {
    // exchanges info payloads at left_pos and left_pos+2
    for (const auto& pr : kFtSwapPattern)
      emit(GateKind::SWAP, {q2d(left_pos + pr[0], z), q2d(left_pos + pr[1], z)}, loc);
  }

  int route_location(const std::string& base_tag) {
    return out.add_location(LocationKind::Gate, {}, -1, base_tag.empty() ? "route" : base_tag + "/route");
  }

  // Positions keep their gate roles (first operand is the control for
  // asymmetric kinds); the leftmost payload is walked rightward and back.
  void lower_two_qubit(GateKind kind, int pa, int pb, int z, int loc, const std::string& tag) {
    int lo = pa < pb ? pa : pb;
    int hi = pa < pb ? pb : pa;
    std::vector<int> hops;
    int cur = lo;
    while (hi - cur > 2) {
      int rloc = route_location(tag);
      auto& sup = out.locations[static_cast<std::size_t>(rloc)].support;
      for (int k = 0; k < 3; ++k) sup.push_back(q2d(cur + k, z));
      emit_ft_swap(cur, z, rloc);
      hops.push_back(cur);
      cur += 2;
    }
    int qa = q2d(pa == lo ? cur : hi, z);
    int qb = q2d(pb == lo ? cur : hi, z);
    emit(kind, {qa, qb}, loc);
    for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
      int rloc = route_location(tag);
      auto& sup = out.locations[static_cast<std::size_t>(rloc)].support;
      for (int k = 0; k < 3; ++k) sup.push_back(q2d(*it + k, z));
      emit_ft_swap(*it, z, rloc);
    }
  }
};

}  // namespace

PhysicalCircuit lower_to_2d(const PhysicalCircuit& pc, const LatticeDims& dims,
                            const Layout2D& per_plane) {
  Lowerer lw{dims, per_plane, {}, 0};
  lw.out.n_qubits = per_plane.line_length * dims.nz;
  int plane_span = dims.nx * dims.ny;

  auto decompose_site = [&](int q) {
    return std::pair<int, int>{q % plane_span, q / plane_span + 1};  // (plane site, z)
  };

  for (const PhysGate& g : pc.gates) {
    if (!g.cond.empty())
      throw Error("UNROUTABLE", "conditional gates are not supported by the line lowering");
    const ErrorLocation& src =
        g.location >= 0 ? pc.locations[static_cast<std::size_t>(g.location)]
                        : ErrorLocation{LocationKind::Gate, {}, -1, ""};
    // one fresh location per emitted source gate keeps locations line-local
    int loc = lw.out.add_location(src.kind, {}, src.source_op, src.tag);
    auto& sup = lw.out.locations[static_cast<std::size_t>(loc)].support;

    if (g.sites.size() == 1) {
      auto [s, z] = decompose_site(g.sites[0]);
      int q = lw.q2d(lw.line_pos(s, loc), z);
      sup.push_back(q);
      lw.emit(g.kind, {q}, loc, g.param);
      continue;
    }
    if (g.sites.size() == 2) {
      auto [sa, za] = decompose_site(g.sites[0]);
      auto [sb, zb] = decompose_site(g.sites[1]);
      if (za != zb) {
        if (sa != sb || (za - zb != 1 && zb - za != 1))
          throw Error("UNROUTABLE", "vertical gates must couple adjacent planes in one column");
        int qa = lw.q2d(lw.line_pos(sa, loc), za);
        int qb = lw.q2d(lw.line_pos(sb, loc), zb);
        sup.push_back(qa);
        sup.push_back(qb);
        lw.emit(g.kind, {qa, qb}, loc, g.param);
        continue;
      }
      int pa = lw.line_pos(sa, loc), pb = lw.line_pos(sb, loc);
      sup.push_back(lw.q2d(pa, za));
      sup.push_back(lw.q2d(pb, za));
      lw.lower_two_qubit(g.kind, pa, pb, za, loc, src.tag);
      continue;
    }
    if (g.sites.size() == 3) {
      // in-plane Toffoli: decompose to two-qubit gates, then route each
      auto [s0, z0] = decompose_site(g.sites[0]);
      auto [s1, z1] = decompose_site(g.sites[1]);
      auto [s2, z2] = decompose_site(g.sites[2]);
      if (z0 != z1 || z1 != z2) throw Error("UNROUTABLE", "three-qubit gates must be in-plane");
      int p0 = lw.line_pos(s0, loc), p1 = lw.line_pos(s1, loc), p2 = lw.line_pos(s2, loc);
      sup.push_back(lw.q2d(p0, z0));
      sup.push_back(lw.q2d(p1, z0));
      sup.push_back(lw.q2d(p2, z0));
      bool zpol = g.kind == GateKind::Z_TOFFOLI;
      if (zpol) lw.emit(GateKind::H, {lw.q2d(p2, z0)}, loc);
      lw.lower_two_qubit(GateKind::CXHALF, p0, p2, z0, loc, src.tag);
      lw.lower_two_qubit(GateKind::CXHALF, p1, p2, z0, loc, src.tag);
      lw.lower_two_qubit(GateKind::CNOT, p0, p1, z0, loc, src.tag);
      lw.lower_two_qubit(GateKind::CXHALF_DG, p1, p2, z0, loc, src.tag);
      lw.lower_two_qubit(GateKind::CNOT, p0, p1, z0, loc, src.tag);
      if (zpol) lw.emit(GateKind::H, {lw.q2d(p2, z0)}, loc);
      continue;
    }
    throw Error("UNROUTABLE", "unsupported gate arity");
  }
  return lw.out;
}

}  // namespace holoqec
