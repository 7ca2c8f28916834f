#include "holoqec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "holoqec/error.hpp"

namespace holoqec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(trial * 0x9E3779B97F4A7C15ULL + 1)));
}

// --- memory experiment -------------------------------------------------------

namespace {

struct MemorySetup {
  CodeSpec code;
  int n_total = 0;
  PhysicalCircuit prep_zero;
  PhysicalCircuit prep_plus;
  PhysicalCircuit noisy_ec;   // the gadget under test
  DecodeContext decode_ctx;
};

MemorySetup make_memory_setup(CodeChoice choice) {
  MemorySetup s;
  if (choice == CodeChoice::BS9) {
    s.code = code_bs9(BsOrientation::Standard);
    s.n_total = 33;
    std::vector<int> data(9), work;
    for (int q = 0; q < 9; ++q) data[static_cast<std::size_t>(q)] = q;
    for (int q = 9; q < 33; ++q) work.push_back(q);

    GadgetCircuit prep_zero = prepare_logical(LogicalBasis::Zero, 1);
    GadgetCircuit prep_plus = prepare_logical(LogicalBasis::Plus, 1);
    std::vector<int> prep_map = data;
    for (int q = 0; q < 3; ++q) prep_map.push_back(9 + q);
    s.prep_zero.n_qubits = s.n_total;
    append_remapped(s.prep_zero, prep_zero, prep_map);
    s.prep_plus.n_qubits = s.n_total;
    append_remapped(s.prep_plus, prep_plus, prep_map);

    GadgetCircuit ec = bs_ec(1);
    std::vector<int> ec_map(33);
    for (int q = 0; q < 33; ++q) ec_map[static_cast<std::size_t>(q)] = q;
    s.noisy_ec.n_qubits = s.n_total;
    append_remapped(s.noisy_ec, ec, ec_map);
    s.decode_ctx = make_decode_context(s.code, s.n_total, data, work);
  } else {
    s.code = code_qr3(QrBasis::BitFlip);
    s.n_total = 6;
    std::vector<int> data = {0, 1, 2}, work = {3, 4, 5};

    GadgetCircuit prep_zero = prepare_qr(QrBasis::BitFlip, 1);
    std::vector<int> map = {0, 1, 2, 3, 4, 5};
    s.prep_zero.n_qubits = s.n_total;
    append_remapped(s.prep_zero, prep_zero, map);
    // |+_L> = GHZ: prepare |0_L> then rotate logically via H on the tree root
    s.prep_plus.n_qubits = s.n_total;
    {
      int loc = s.prep_plus.add_location(LocationKind::Prep, {0, 1, 2}, -1, "prep-plus");
      s.prep_plus.add_gate(GateKind::RESET, {0}, 0, loc);
      s.prep_plus.add_gate(GateKind::RESET, {1}, 0, loc);
      s.prep_plus.add_gate(GateKind::RESET, {2}, 0, loc);
      int loc2 = s.prep_plus.add_location(LocationKind::Gate, {0, 1, 2}, -1, "prep-plus");
      s.prep_plus.add_gate(GateKind::H, {0}, 1, loc2);
      s.prep_plus.add_gate(GateKind::CNOT, {0, 1}, 2, loc2);
      s.prep_plus.add_gate(GateKind::CNOT, {0, 2}, 3, loc2);
    }
    GadgetCircuit ec = m_gate(MBasis::X, 1);
    s.noisy_ec.n_qubits = s.n_total;
    append_remapped(s.noisy_ec, ec, map);
    s.decode_ctx = make_decode_context(s.code, s.n_total, data, work);
  }
  return s;
}

}  // namespace

MemoryResult run_memory_exrec(CodeChoice code, int level, const NoiseModel& noise,
                              const std::vector<double>& p_sweep, long trials, std::uint64_t seed,
                              int jobs) {
  if (level != 1) throw Error("BAD_LEVEL", "memory experiment runs at level 1 (desk scale)");
  noise.check();
  MemorySetup setup = make_memory_setup(code);
  MemoryResult result;
  if (jobs < 1) jobs = 1;

  for (std::size_t pi = 0; pi < p_sweep.size(); ++pi) {
    double p = p_sweep[pi];
    NoiseModel nm = noise;
    nm.p_gate = p;
    nm.p_prep = p;
    // measurement noise keeps its configured value: the gadget is
    // measurement-free, so p_meas only matters for boundary readout circuits

    std::vector<long> fail_parts(static_cast<std::size_t>(jobs), 0);
    std::vector<long> fallback_parts(static_cast<std::size_t>(jobs), 0);
    auto worker = [&](int w) {
      long failures = 0, fallbacks = 0;
      for (long trial = w; trial < trials; trial += jobs) {
        Rng rng = trial_rng(seed + 0x1000 * pi, static_cast<std::uint64_t>(trial));
        bool failed = false;
        for (LogicalBasis basis : {LogicalBasis::Zero, LogicalBasis::Plus}) {
          Tableau t(setup.n_total);
          run_on_tableau(basis == LogicalBasis::Zero ? setup.prep_zero : setup.prep_plus, t, rng);
          try {
            run_noisy_on_tableau(setup.noisy_ec, nm, t, rng);
            LogicalFrame frame = ideal_decode(setup.decode_ctx, t, basis, rng);
            if (frame != LogicalFrame::I) failed = true;
          } catch (const Error& e) {
            if (e.code() == "DET_CONTROL_REQUIRED") {
              ++fallbacks;
              failed = true;
            } else {
              throw;
            }
          }
        }
        if (failed) ++failures;
      }
      fail_parts[static_cast<std::size_t>(w)] = failures;
      fallback_parts[static_cast<std::size_t>(w)] = fallbacks;
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
      for (auto& th : pool) th.join();
    }
    McEstimate est;
    est.p = p;
    est.trials = trials;
    est.seed = seed;
    for (int w = 0; w < jobs; ++w) {
      est.failures += fail_parts[static_cast<std::size_t>(w)];
      result.engine_fallbacks += fallback_parts[static_cast<std::size_t>(w)];
    }
    est.p_logical = trials > 0 ? static_cast<double>(est.failures) / static_cast<double>(trials) : 0.0;
    est.stderr_ = trials > 0 ? std::sqrt(est.p_logical * (1.0 - est.p_logical) /
                                         static_cast<double>(trials))
                             : 0.0;
    result.estimates.push_back(est);
  }
  return result;
}

// --- fits ---------------------------------------------------------------------

namespace {

struct Wls {
  // weighted least squares of y = c0 + c1 x
  double c0 = 0.0, c1 = 0.0;
  double var00 = 0.0, var11 = 0.0, cov01 = 0.0;
  double r_squared = 0.0;
};

Wls weighted_fit(const std::vector<double>& x, const std::vector<double>& y,
                 const std::vector<double>& w) {
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    swx += w[i] * x[i];
    swy += w[i] * y[i];
    swxx += w[i] * x[i] * x[i];
    swxy += w[i] * x[i] * y[i];
  }
  double det = sw * swxx - swx * swx;
  if (std::abs(det) < 1e-300) throw Error("INSUFFICIENT_DATA", "degenerate fit");
  Wls f;
  f.c1 = (sw * swxy - swx * swy) / det;
  f.c0 = (swxx * swy - swx * swxy) / det;
  f.var00 = swxx / det;
  f.var11 = sw / det;
  f.cov01 = -swx / det;
  double ybar = swy / sw, ss_tot = 0, ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double fit = f.c0 + f.c1 * x[i];
    ss_tot += w[i] * (y[i] - ybar) * (y[i] - ybar);
    ss_res += w[i] * (y[i] - fit) * (y[i] - fit);
  }
  f.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return f;
}

Wls suppression_fit(const std::vector<McEstimate>& estimates) {
  std::vector<double> x, y, w;
  for (const auto& e : estimates) {
    if (e.failures < 10 || e.p <= 0.0 || e.p_logical <= 0.0) continue;
    x.push_back(std::log(e.p));
    y.push_back(std::log(e.p_logical));
    // var(log pL) ~ (stderr/pL)^2
    double rel = e.stderr_ / e.p_logical;
    w.push_back(rel > 0 ? 1.0 / (rel * rel) : 1.0);
  }
  if (x.size() < 3)
    throw Error("INSUFFICIENT_DATA", "need >= 3 sweep points with >= 10 failures each");
  return weighted_fit(x, y, w);
}

}  // namespace

FitResult fit_suppression(const std::vector<McEstimate>& estimates) {
  Wls f = suppression_fit(estimates);
  return {f.c1, std::exp(f.c0), f.r_squared};
}

PseudoThreshold pseudo_threshold(const std::vector<McEstimate>& estimates) {
  Wls f = suppression_fit(estimates);
  double t = f.c1, log_a = f.c0;
  if (t <= 1.0) throw Error("NO_CROSSING", "fitted exponent <= 1: no crossing with p_logical = p");
  // p* solves A p^t = p  =>  log p* = -log A / (t - 1)
  double logp = -log_a / (t - 1.0);
  // delta method: d(logp)/d(logA) = -1/(t-1); d(logp)/dt = logA/(t-1)^2
  double g0 = -1.0 / (t - 1.0);
  double g1 = log_a / ((t - 1.0) * (t - 1.0));
  double var = g0 * g0 * f.var00 + g1 * g1 * f.var11 + 2.0 * g0 * g1 * f.cov01;
  double sd = var > 0 ? std::sqrt(var) : 0.0;
  PseudoThreshold out;
  out.value = std::exp(logp);
  out.lo = std::exp(logp - 1.96 * sd);
  out.hi = std::exp(logp + 1.96 * sd);
  return out;
}

// --- column containment --------------------------------------------------------

ContainmentReport run_column_containment(int planes, bool exhaustive, long trials,
                                         std::uint64_t seed) {
  if (planes < 2 || planes > 6) throw Error("BAD_DIMS", "plane count must be in [2,6]");
  ContainmentReport report;
  report.planes = planes;
  report.exhaustive = exhaustive;
  report.plane_failures.assign(static_cast<std::size_t>(planes), 0);

  LatticeDims dims{3, 3, planes};
  int n_data = 9 * planes;
  int n_total = n_data + 24;

  auto orientation_of = [](int plane, bool flipped) {
    bool rotated = (plane % 2 == 1) != flipped;  // plane index 0-based
    return rotated ? BsOrientation::Rotated : BsOrientation::Standard;
  };

  // pulse and its inverse on the data sites (identity on the workspace)
  PhysicalCircuit pulse, unpulse;
  pulse.n_qubits = unpulse.n_qubits = n_total;
  {
    PhysicalCircuit p3 = expand(build_T_pulse(dims));
    for (const auto& g : p3.gates) pulse.add_gate(g.kind, g.sites, g.timestep, -1);
    // inverse: CZ layers first (they commute, each self-inverse), then H
    for (const auto& g : p3.gates)
      if (g.kind == GateKind::CZ) unpulse.add_gate(g.kind, g.sites, 0, -1);
    for (const auto& g : p3.gates)
      if (g.kind == GateKind::H) unpulse.add_gate(g.kind, g.sites, 1, -1);
  }

  // per-plane preparation, corrector and decode contexts for both phases
  std::vector<PhysicalCircuit> prep[2];   // [basis][plane]
  std::vector<PhysicalCircuit> correct;   // flipped orientation (after the pulse)
  std::vector<DecodeContext> decode_ctx[2];
  std::vector<int> work;
  for (int q = n_data; q < n_total; ++q) work.push_back(q);
  for (int z = 0; z < planes; ++z) {
    std::vector<int> data;
    for (int q = 0; q < 9; ++q) data.push_back(9 * z + q);
    for (LogicalBasis basis : {LogicalBasis::Zero, LogicalBasis::Plus}) {
      GadgetCircuit pg = prepare_logical(basis, 1, orientation_of(z, false));
      std::vector<int> map = data;
      for (int k = 0; k < 3; ++k) map.push_back(n_data + k);
      PhysicalCircuit pc;
      pc.n_qubits = n_total;
      append_remapped(pc, pg, map);
      prep[basis == LogicalBasis::Zero ? 0 : 1].push_back(std::move(pc));
    }
    GadgetCircuit ec = bs_ec(1, orientation_of(z, true));
    std::vector<int> map = data;
    for (int q : work) map.push_back(q);
    map.resize(33);
    PhysicalCircuit pc;
    pc.n_qubits = n_total;
    append_remapped(pc, ec, map);
    correct.push_back(std::move(pc));
    for (LogicalBasis basis : {LogicalBasis::Zero, LogicalBasis::Plus}) {
      CodeSpec code = code_bs9(orientation_of(z, false));
      decode_ctx[basis == LogicalBasis::Zero ? 0 : 1].push_back(
          make_decode_context(code, n_total, data, work));
    }
  }

  auto run_case = [&](int col_x, int col_y, const std::vector<int>& paulis, LogicalBasis basis,
                      Rng& rng) {
    int bi = basis == LogicalBasis::Zero ? 0 : 1;
    Tableau t(n_total);
    for (int z = 0; z < planes; ++z) run_on_tableau(prep[bi][static_cast<std::size_t>(z)], t, rng);
    run_on_tableau(pulse, t, rng);
    // deliberate column error: one qubit per plane at (col_x, col_y)
    PauliString err(n_total);
    static const char kLet[4] = {'I', 'X', 'Z', 'Y'};
    for (int z = 0; z < planes; ++z) {
      int q = linearize(dims, col_x, col_y, z + 1);
      if (paulis[static_cast<std::size_t>(z)] != 0)
        err.set_pauli(q, kLet[paulis[static_cast<std::size_t>(z)]]);
    }
    if (!err.is_identity()) t.apply_pauli(err);
    for (int z = 0; z < planes; ++z) run_on_tableau(correct[static_cast<std::size_t>(z)], t, rng);
    run_on_tableau(unpulse, t, rng);
    ++report.runs;
    for (int z = 0; z < planes; ++z) {
      LogicalFrame frame = ideal_decode(decode_ctx[bi][static_cast<std::size_t>(z)], t, basis, rng);
      if (frame != LogicalFrame::I) {
        ++report.plane_failures[static_cast<std::size_t>(z)];
        ++report.total_failures;
      }
    }
  };

  Rng rng = trial_rng(seed, 0);
  if (exhaustive) {
    long count = 1;
    for (int z = 0; z < planes; ++z) count *= 4;
    for (int x = 1; x <= 3; ++x) {
      for (int y = 1; y <= 3; ++y) {
        for (long code = 0; code < count; ++code) {
          std::vector<int> paulis(static_cast<std::size_t>(planes));
          long c = code;
          for (int z = 0; z < planes; ++z) {
            paulis[static_cast<std::size_t>(z)] = static_cast<int>(c & 3);
            c >>= 2;
          }
          for (LogicalBasis basis : {LogicalBasis::Zero, LogicalBasis::Plus})
            run_case(x, y, paulis, basis, rng);
        }
      }
    }
  } else {
    for (long trial = 0; trial < trials; ++trial) {
      Rng trng = trial_rng(seed, static_cast<std::uint64_t>(trial) + 1);
      int x = 1 + static_cast<int>(trng() % 3);
      int y = 1 + static_cast<int>(trng() % 3);
      std::vector<int> paulis(static_cast<std::size_t>(planes));
      bool nontrivial = false;
      while (!nontrivial) {
        for (int z = 0; z < planes; ++z) {
          paulis[static_cast<std::size_t>(z)] = static_cast<int>(trng() % 4);
          if (paulis[static_cast<std::size_t>(z)]) nontrivial = true;
        }
      }
      LogicalBasis basis = (trial % 2 == 0) ? LogicalBasis::Zero : LogicalBasis::Plus;
      run_case(x, y, paulis, basis, trng);
    }
  }
  return report;
}

// --- T-pulse fault paths ---------------------------------------------------------

FaultPathReport run_t_fault_paths(const LatticeDims& dims) {
  dims.check();
  FaultPathReport report;
  report.dims = dims;
  PhysicalCircuit pc = expand(build_T_pulse(dims));
  report.locations = static_cast<long>(pc.locations.size());
  int plane_span = dims.nx * dims.ny;

  // last gate per location: the fault is injected after the ideal operation
  std::vector<int> last_gate(pc.locations.size(), -1);
  for (std::size_t gi = 0; gi < pc.gates.size(); ++gi)
    if (pc.gates[gi].location >= 0)
      last_gate[static_cast<std::size_t>(pc.gates[gi].location)] = static_cast<int>(gi);

  for (std::size_t li = 0; li < pc.locations.size(); ++li) {
    const auto& support = pc.locations[li].support;
    long count = 1;
    for (std::size_t k = 0; k < support.size(); ++k) count *= 4;
    for (long code = 1; code < count; ++code) {
      PauliString p(pc.n_qubits);
      long c = code;
      static const char kLet[4] = {'I', 'X', 'Z', 'Y'};
      for (std::size_t k = 0; k < support.size(); ++k) {
        if (c & 3) p.set_pauli(support[k], kLet[c & 3]);
        c >>= 2;
      }
      PauliString out = conjugate_pauli(pc, p, last_gate[li] + 1);
      ++report.cases_checked;
      std::vector<int> per_plane(static_cast<std::size_t>(dims.nz), 0);
      for (int q = 0; q < pc.n_qubits; ++q) {
        if (out.pauli_at(q) != 0) ++per_plane[static_cast<std::size_t>(q / plane_span)];
      }
      for (int z = 0; z < dims.nz; ++z) {
        report.max_weight_per_plane =
            std::max(report.max_weight_per_plane, per_plane[static_cast<std::size_t>(z)]);
        if (per_plane[static_cast<std::size_t>(z)] > 1) ++report.violations;
      }
    }
  }
  return report;
}

// --- coherent inhomogeneity --------------------------------------------------------

std::vector<InhomogeneityPoint> run_inhomogeneity(int planes, const InhomogeneityModel& model,
                                                  const std::vector<double>& theta_sweep,
                                                  std::uint64_t seed) {
  if (planes < 1 || planes > 4) throw Error("CAP_EXCEEDED", "plane count must be in [1,4]");
  std::vector<InhomogeneityPoint> out;
  int n_data = 3 * planes;
  int n_total = n_data + 3;  // shared majority ancillas
  GateKind rot = model.generator == RotationAxis::X   ? GateKind::ROT_X
                 : model.generator == RotationAxis::Y ? GateKind::ROT_Y
                                                      : GateKind::ROT_Z;

  for (double theta0 : theta_sweep) {
    InhomogeneityModel m = model;
    m.theta0 = theta0;
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(out.size()));

    StateVector sv(n_total);  // planes of |000>, bit-flip codewords
    // inhomogeneous column pulse: every qubit of plane z over-rotates by theta_z
    for (int z = 0; z < planes; ++z) {
      double th = theta_for_plane(m, z + 1, planes, rng);
      for (int q = 0; q < 3; ++q) sv.apply_gate(rot, {3 * z + q}, th);
    }
    InhomogeneityPoint point;
    point.theta0 = theta0;

    // pre-correction codeword infidelity, averaged over planes
    CodeSpec code = code_qr3(QrBasis::BitFlip);
    double pre = 0.0;
    for (int z = 0; z < planes; ++z) {
      StateVector proj = sv;
      double f = 1.0;
      for (int q = 0; q < 3; ++q) f *= proj.collapse(3 * z + q, 0);
      pre += 1.0 - f;
    }
    point.pre_ec_infidelity = pre / planes;

    // per-plane majority correction, then the same projection averaged over
    // the reset branches
    GadgetCircuit mg = m_gate(MBasis::X, 1);
    PhysicalCircuit ec;
    ec.n_qubits = n_total;
    for (int z = 0; z < planes; ++z) {
      std::vector<int> map = {3 * z, 3 * z + 1, 3 * z + 2, n_data, n_data + 1, n_data + 2};
      append_remapped(ec, mg, map);
    }
    double post = 0.0, norm = 0.0;
    enumerate_dense_runs(ec, sv, [&](const StateVector& fin, const RunRecord&, double prob) {
      double infid = 0.0;
      for (int z = 0; z < planes; ++z) {
        StateVector proj = fin;
        double f = 1.0;
        for (int q = 0; q < 3; ++q) f *= proj.collapse(3 * z + q, 0);
        infid += 1.0 - f;
      }
      post += prob * infid / planes;
      norm += prob;
    });
    point.post_ec_infidelity = norm > 0 ? post / norm : 0.0;
    out.push_back(point);
  }
  return out;
}

std::string estimates_csv(const std::string& experiment, const std::string& code, int level,
                          const std::vector<McEstimate>& estimates) {
  std::ostringstream out;
  out << "experiment,code,level,p,trials,failures,p_logical,stderr,seed\n";
  out.setf(std::ios::scientific);
  out.precision(6);
  for (const auto& e : estimates) {
    out << experiment << "," << code << "," << level << "," << e.p << "," << e.trials << ","
        << e.failures << "," << e.p_logical << "," << e.stderr_ << "," << e.seed << "\n";
  }
  return out.str();
}

}  // namespace holoqec
