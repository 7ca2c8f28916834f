#include "holoqec/executor.hpp"

#include <cmath>

#include "holoqec/error.hpp"

namespace holoqec {

bool RunRecord::cond_fired(const PhysGate& g) const {
  for (const CondClause& clause : g.cond) {
    int parity = 0;
    for (int gate_idx : clause) {
      auto it = outcomes.find(gate_idx);
      if (it == outcomes.end())
        throw Error("BAD_CONDITION", "conditional gate references a measurement that has not run");
      parity ^= it->second;
    }
    if (parity != 1) return false;
  }
  return true;
}

RunRecord run_on_tableau(const PhysicalCircuit& pc, Tableau& t, Rng& rng) {
  RunRecord rec;
  for (std::size_t gi = 0; gi < pc.gates.size(); ++gi) {
    const PhysGate& g = pc.gates[gi];
    if (!g.cond.empty() && !rec.cond_fired(g)) {
      if (gate_is_measurement(g.kind)) rec.outcomes[static_cast<int>(gi)] = 0;
      continue;
    }
    switch (g.kind) {
      case GateKind::RESET:
        t.reset_z(g.sites[0], rng);
        break;
      case GateKind::MEASURE_Z:
        rec.outcomes[static_cast<int>(gi)] = t.measure_z(g.sites[0], rng).bit;
        break;
      case GateKind::MEASURE_X:
        rec.outcomes[static_cast<int>(gi)] = t.measure_x(g.sites[0], rng).bit;
        break;
      case GateKind::TOFFOLI:
      case GateKind::Z_TOFFOLI:
        t.apply_toffoli_classical(g.sites[0], g.sites[1], g.sites[2], g.kind);
        break;
      case GateKind::WAIT:
        break;
      default:
        t.apply_clifford(g.kind, g.sites);
        break;
    }
  }
  return rec;
}

namespace {

void dense_apply(const PhysGate& g, StateVector& sv, RunRecord& rec, std::size_t gi, Rng& rng) {
  switch (g.kind) {
    case GateKind::RESET: {
      double p1 = sv.prob_of_bit(g.sites[0], 1);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      int bit = (u(rng) < p1) ? 1 : 0;
      if (sv.collapse(g.sites[0], bit) == 0.0) {
        bit = 1 - bit;
        sv.collapse(g.sites[0], bit);
      }
      if (bit) sv.apply_gate(GateKind::X, {g.sites[0]});
      break;
    }
    case GateKind::MEASURE_Z:
    case GateKind::MEASURE_X: {
      if (g.kind == GateKind::MEASURE_X) sv.apply_gate(GateKind::H, {g.sites[0]});
      double p1 = sv.prob_of_bit(g.sites[0], 1);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      int bit = (u(rng) < p1) ? 1 : 0;
      if (sv.collapse(g.sites[0], bit) == 0.0) {
        bit = 1 - bit;
        sv.collapse(g.sites[0], bit);
      }
      if (g.kind == GateKind::MEASURE_X) sv.apply_gate(GateKind::H, {g.sites[0]});
      rec.outcomes[static_cast<int>(gi)] = bit;
      break;
    }
    default:
      sv.apply_gate(g.kind, g.sites, g.param);
      break;
  }
}

}  // namespace

RunRecord run_on_statevector(const PhysicalCircuit& pc, StateVector& sv, Rng& rng) {
  RunRecord rec;
  for (std::size_t gi = 0; gi < pc.gates.size(); ++gi) {
    const PhysGate& g = pc.gates[gi];
    if (!g.cond.empty() && !rec.cond_fired(g)) {
      if (gate_is_measurement(g.kind)) rec.outcomes[static_cast<int>(gi)] = 0;
      continue;
    }
    dense_apply(g, sv, rec, gi, rng);
  }
  return rec;
}

void apply_pauli_exponential(StateVector& sv, const PauliString& p, double theta) {
  if (p.hermitian_sign() == 0) return;  // throws for non-hermitian inputs
  StateVector rotated = sv;
  rotated.apply_pauli(p);
  double c = std::cos(theta), s = std::sin(theta);
  for (std::size_t i = 0; i < sv.amplitudes().size(); ++i)
    sv.amplitudes()[i] = c * sv.amplitudes()[i] + cplx(0.0, s) * rotated.amplitudes()[i];
}

namespace {

void dfs_runs(const PhysicalCircuit& pc, const std::vector<LogicalInjection>& inj, std::size_t gi,
              StateVector& sv, RunRecord& rec, double prob,
              const std::function<void(const StateVector&, const RunRecord&, double)>& cb) {
  for (; gi <= pc.gates.size(); ++gi) {
    for (const LogicalInjection& li : inj) {
      if (li.before_gate == static_cast<int>(gi)) apply_pauli_exponential(sv, li.pauli, li.theta);
    }
    if (gi == pc.gates.size()) break;
    const PhysGate& g = pc.gates[gi];
    if (!g.cond.empty() && !rec.cond_fired(g)) {
      if (gate_is_measurement(g.kind)) rec.outcomes[static_cast<int>(gi)] = 0;
      continue;
    }
    if (g.kind == GateKind::MEASURE_Z || g.kind == GateKind::MEASURE_X ||
        g.kind == GateKind::RESET) {
      bool xbasis = g.kind == GateKind::MEASURE_X;
      StateVector pre = sv;
      if (xbasis) pre.apply_gate(GateKind::H, {g.sites[0]});
      for (int bit = 0; bit < 2; ++bit) {
        StateVector branch = pre;
        double pk = branch.collapse(g.sites[0], bit);
        if (pk <= 1e-14) continue;
        if (xbasis) branch.apply_gate(GateKind::H, {g.sites[0]});
        if (g.kind == GateKind::RESET && bit == 1) branch.apply_gate(GateKind::X, {g.sites[0]});
        RunRecord rec2 = rec;
        if (g.kind != GateKind::RESET) rec2.outcomes[static_cast<int>(gi)] = bit;
        dfs_runs(pc, inj, gi + 1, branch, rec2, prob * pk, cb);
      }
      return;
    }
    sv.apply_gate(g.kind, g.sites, g.param);
  }
  cb(sv, rec, prob);
}

}  // namespace

void enumerate_dense_runs(const PhysicalCircuit& pc, const StateVector& initial,
                          const std::function<void(const StateVector&, const RunRecord&, double)>& cb) {
  enumerate_dense_runs(pc, initial, {}, cb);
}

void enumerate_dense_runs(const PhysicalCircuit& pc, const StateVector& initial,
                          const std::vector<LogicalInjection>& injections,
                          const std::function<void(const StateVector&, const RunRecord&, double)>& cb) {
  StateVector sv = initial;
  RunRecord rec;
  dfs_runs(pc, injections, 0, sv, rec, 1.0, cb);
}

PauliString conjugate_pauli(const PhysicalCircuit& pc, const PauliString& p, int first_gate,
                            int last_gate) {
  PauliString cur = p;
  std::size_t end = last_gate < 0 ? pc.gates.size() : static_cast<std::size_t>(last_gate);
  for (std::size_t gi = static_cast<std::size_t>(first_gate); gi < end; ++gi) {
    const PhysGate& g = pc.gates[gi];
    if (!g.cond.empty())
      throw Error("NONPAULI_PROPAGATION", "cannot statically propagate through conditional gates");
    switch (g.kind) {
      case GateKind::H: cur.conj_h(g.sites[0]); break;
      case GateKind::X: cur.conj_x(g.sites[0]); break;
      case GateKind::Y: cur.conj_y(g.sites[0]); break;
      case GateKind::Z: cur.conj_z(g.sites[0]); break;
      case GateKind::S: cur.conj_s(g.sites[0]); break;
      case GateKind::Sdg: cur.conj_sdg(g.sites[0]); break;
      case GateKind::CNOT: cur.conj_cnot(g.sites[0], g.sites[1]); break;
      case GateKind::CZ: cur.conj_cz(g.sites[0], g.sites[1]); break;
      case GateKind::SWAP: cur.conj_swap(g.sites[0], g.sites[1]); break;
      case GateKind::WAIT: break;
      case GateKind::RESET:
      case GateKind::MEASURE_Z:
      case GateKind::MEASURE_X:
        // The site's state is overwritten/classicized; any error component
        // there is absorbed.
        cur.clear_site(g.sites[0]);
        break;
      case GateKind::TOFFOLI: {
        if (cur.x_bit(g.sites[0]) || cur.x_bit(g.sites[1]))
          throw Error("NONPAULI_PROPAGATION", "X/Y component on a Toffoli control");
        if (cur.z_bit(g.sites[2]))
          throw Error("NONPAULI_PROPAGATION", "Z/Y component on a Toffoli target");
        break;  // Z on controls and X on target commute with CCX
      }
      case GateKind::Z_TOFFOLI: {
        for (int s : g.sites)
          if (cur.x_bit(s)) throw Error("NONPAULI_PROPAGATION", "X/Y component on a CCZ leg");
        break;  // diagonal gate, Z components commute
      }
      case GateKind::CXHALF:
      case GateKind::CXHALF_DG: {
        bool control_diag = !cur.x_bit(g.sites[0]);
        bool target_x_only = !cur.z_bit(g.sites[1]);
        if (!(control_diag && target_x_only))
          throw Error("NONPAULI_PROPAGATION", "non-commuting Pauli at a controlled-sqrt(X)");
        break;
      }
      case GateKind::ZQUARTER: {
        if (cur.x_bit(g.sites[0]))
          throw Error("NONPAULI_PROPAGATION", "X/Y component at a Z^(1/4) gate");
        break;
      }
      default:
        throw Error("NONPAULI_PROPAGATION",
                    std::string("no Pauli conjugation for gate ") + std::string(gate_name(g.kind)));
    }
  }
  return cur;
}

std::vector<std::vector<cplx>> build_unitary(const PhysicalCircuit& pc, int n) {
  std::size_t dim = std::size_t{1} << n;
  std::vector<std::vector<cplx>> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    StateVector sv(n);
    sv.amplitudes()[0] = cplx(0.0, 0.0);
    sv.amplitudes()[j] = cplx(1.0, 0.0);
    for (const PhysGate& g : pc.gates) {
      if (gate_is_measurement(g.kind) || g.kind == GateKind::RESET)
        throw Error("BAD_SITES", "circuit is not unitary");
      sv.apply_gate(g.kind, g.sites, g.param);
    }
    cols[j] = sv.amplitudes();
  }
  return cols;
}

double channel_distance(const PhysicalCircuit& a, const PhysicalCircuit& b, int n) {
  auto run = [n](const PhysicalCircuit& pc, const StateVector& in) {
    StateVector sv = in;
    for (const PhysGate& g : pc.gates) sv.apply_gate(g.kind, g.sites, g.param);
    return sv;
  };
  double worst = 0.0;
  std::size_t dim = std::size_t{1} << n;
  for (std::size_t basis = 0; basis < 2 * dim - 1; ++basis) {
    StateVector in(n);
    if (basis < dim) {
      in.amplitudes()[0] = cplx(0.0, 0.0);
      in.amplitudes()[basis] = cplx(1.0, 0.0);
    } else {
      std::size_t bstr = basis - dim + 1;
      const double inv_sqrt2 = 0.70710678118654752440;
      in.amplitudes()[0] = cplx(inv_sqrt2, 0.0);
      in.amplitudes()[bstr] = cplx(inv_sqrt2, 0.0);
    }
    double f = StateVector::fidelity(run(a, in), run(b, in));
    worst = std::max(worst, 1.0 - f);
  }
  return worst;
}

}  // namespace holoqec
