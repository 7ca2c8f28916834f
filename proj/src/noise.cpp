#include "holoqec/noise.hpp"

#include "holoqec/error.hpp"

namespace holoqec {

void NoiseModel::check() const {
  for (double p : {p_gate, p_prep, p_meas})
    if (p < 0.0 || p > 1.0) throw Error("BAD_NOISE", "probability outside [0,1]");
}

NoisyPlan inject(const PhysicalCircuit& pc, const NoiseModel& noise, Rng& rng) {
  noise.check();
  NoisyPlan plan;
  plan.events.resize(pc.locations.size());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t li = 0; li < pc.locations.size(); ++li) {
    const ErrorLocation& loc = pc.locations[li];
    switch (loc.kind) {
      case LocationKind::Gate: {
        if (noise.p_gate <= 0.0 || u(rng) >= noise.p_gate) break;
        LocationEvent ev;
        ev.location = static_cast<int>(li);
        std::size_t s = loc.support.size();
        ev.pauli.assign(s, 0);
        if (noise.columnar_correlated) {
          // uniform over the 4^s - 1 nontrivial strings on the full support
          std::uint64_t count = 1;
          for (std::size_t k = 0; k < s; ++k) count *= 4;
          std::uniform_int_distribution<std::uint64_t> pick(1, count - 1);
          std::uint64_t code = pick(rng);
          for (std::size_t k = 0; k < s; ++k) {
            ev.pauli[k] = static_cast<int>(code & 3);
            code >>= 2;
          }
        } else {
          std::uniform_int_distribution<int> pick(0, 3);
          for (std::size_t k = 0; k < s; ++k) ev.pauli[k] = pick(rng);
        }
        plan.events[li] = std::move(ev);
        break;
      }
      case LocationKind::Prep: {
        if (noise.p_prep <= 0.0 || u(rng) >= noise.p_prep) break;
        LocationEvent ev;
        ev.location = static_cast<int>(li);
        ev.prep_state.reserve(loc.support.size());
        for (std::size_t k = 0; k < loc.support.size(); ++k) {
          switch (noise.reset_failure) {
            case ResetFailureState::MaximallyMixed:
              ev.prep_state.push_back(static_cast<int>(rng() & 1u));  // |0> or |1>
              break;
            case ResetFailureState::RandomPure: {
              // single-qubit stabilizer states form a 2-design, which is
              // exact for every probability downstream of the trajectory
              std::uniform_int_distribution<int> pick(0, 5);
              ev.prep_state.push_back(pick(rng));
              break;
            }
            case ResetFailureState::FixedOne:
              ev.prep_state.push_back(1);
              break;
          }
        }
        plan.events[li] = std::move(ev);
        break;
      }
      case LocationKind::Measure: {
        if (noise.p_meas <= 0.0 || u(rng) >= noise.p_meas) break;
        LocationEvent ev;
        ev.location = static_cast<int>(li);
        ev.flip_measurement = true;
        plan.events[li] = std::move(ev);
        break;
      }
    }
  }
  return plan;
}

namespace {

// eta selector -> preparation gates from |0>: 0:|0> 1:|1> 2:|+> 3:|-> 4:|+i> 5:|-i>
void apply_eta(Tableau& t, int site, int sel) {
  switch (sel) {
    case 0: break;
    case 1: t.apply_clifford(GateKind::X, {site}); break;
    case 2: t.apply_clifford(GateKind::H, {site}); break;
    case 3:
      t.apply_clifford(GateKind::X, {site});
      t.apply_clifford(GateKind::H, {site});
      break;
    case 4:
      t.apply_clifford(GateKind::H, {site});
      t.apply_clifford(GateKind::S, {site});
      break;
    case 5:
      t.apply_clifford(GateKind::X, {site});
      t.apply_clifford(GateKind::H, {site});
      t.apply_clifford(GateKind::S, {site});
      break;
    default: throw Error("BAD_NOISE", "unknown eta selector");
  }
}

}  // namespace

RunRecord run_noisy_on_tableau(const PhysicalCircuit& pc, const NoisyPlan& plan, Tableau& t,
                               Rng& rng) {
  // last gate index per location: the error is appended after the location's
  // final ideal gate
  std::vector<int> last_gate(pc.locations.size(), -1);
  for (std::size_t gi = 0; gi < pc.gates.size(); ++gi) {
    int loc = pc.gates[gi].location;
    if (loc >= 0) last_gate[static_cast<std::size_t>(loc)] = static_cast<int>(gi);
  }

  RunRecord rec;
  for (std::size_t gi = 0; gi < pc.gates.size(); ++gi) {
    const PhysGate& g = pc.gates[gi];
    bool fire_cond = g.cond.empty() || rec.cond_fired(g);
    const std::optional<LocationEvent>* ev = nullptr;
    if (g.location >= 0 && plan.events[static_cast<std::size_t>(g.location)])
      ev = &plan.events[static_cast<std::size_t>(g.location)];

    if (fire_cond) {
      switch (g.kind) {
        case GateKind::RESET:
          t.reset_z(g.sites[0], rng);
          break;
        case GateKind::MEASURE_Z:
        case GateKind::MEASURE_X: {
          int bit = g.kind == GateKind::MEASURE_Z ? t.measure_z(g.sites[0], rng).bit
                                                  : t.measure_x(g.sites[0], rng).bit;
          if (ev && (*ev)->flip_measurement) bit ^= 1;
          rec.outcomes[static_cast<int>(gi)] = bit;
          break;
        }
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
    } else if (gate_is_measurement(g.kind)) {
      rec.outcomes[static_cast<int>(gi)] = 0;
    }

    // append this location's sampled error after its final gate
    if (ev && g.location >= 0 && last_gate[static_cast<std::size_t>(g.location)] == static_cast<int>(gi)) {
      const LocationEvent& e = **ev;
      const ErrorLocation& loc = pc.locations[static_cast<std::size_t>(g.location)];
      if (!e.pauli.empty()) {
        PauliString p(t.num_qubits());
        static const char kLet[4] = {'I', 'X', 'Z', 'Y'};
        for (std::size_t k = 0; k < loc.support.size(); ++k)
          if (e.pauli[k] != 0) p.set_pauli(loc.support[k], kLet[e.pauli[k]]);
        if (!p.is_identity()) t.apply_pauli(p);
      }
      if (!e.prep_state.empty()) {
        for (std::size_t k = 0; k < loc.support.size(); ++k)
          apply_eta(t, loc.support[k], e.prep_state[k]);
      }
    }
  }
  return rec;
}

RunRecord run_noisy_on_tableau(const PhysicalCircuit& pc, const NoiseModel& noise, Tableau& t,
                               Rng& rng) {
  NoisyPlan plan = inject(pc, noise, rng);
  return run_noisy_on_tableau(pc, plan, t, rng);
}

double theta_for_plane(const InhomogeneityModel& model, int z, int nz, Rng& rng) {
  switch (model.dist) {
    case ThetaDist::Constant:
      return model.theta0;
    case ThetaDist::Uniform: {
      std::uniform_real_distribution<double> u(-model.theta0, model.theta0);
      return u(rng);
    }
    case ThetaDist::LinearGradient:
      return model.theta0 * static_cast<double>(z) / static_cast<double>(nz);
  }
  return model.theta0;
}

}  // namespace holoqec
