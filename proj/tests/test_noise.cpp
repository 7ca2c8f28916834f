#include <cmath>

#include "doctest.h"
#include "holoqec/error.hpp"
#include "holoqec/experiments.hpp"
#include "holoqec/noise.hpp"
#include "holoqec/semiglobal.hpp"

using namespace holoqec;

TEST_CASE("inject: zero rate yields an empty plan") {
  PhysicalCircuit pc = expand(build_T_pulse({2, 2, 3}));
  NoiseModel noise;
  Rng rng(1);
  NoisyPlan plan = inject(pc, noise, rng);
  for (const auto& ev : plan.events) CHECK(!ev.has_value());
}

TEST_CASE("inject: forced firing draws a nontrivial correlated pauli on the column") {
  Circuit c{{1, 1, 4}, {ColumnGate{GateKind::H, {1, 1}}}, ""};
  PhysicalCircuit pc = expand(c);
  NoiseModel noise;
  noise.p_gate = 1.0;
  Rng rng(5);
  NoisyPlan plan = inject(pc, noise, rng);
  REQUIRE(plan.events.size() == 1);
  REQUIRE(plan.events[0].has_value());
  const auto& ev = *plan.events[0];
  CHECK(ev.pauli.size() == 4);
  int weight = 0;
  for (int p : ev.pauli)
    if (p) ++weight;
  CHECK(weight >= 1);
}

TEST_CASE("inject: empirical firing rate within 3 sigma") {
  Circuit c{{1, 1, 2}, {ColumnGate{GateKind::H, {1, 1}}}, ""};
  PhysicalCircuit pc = expand(c);
  NoiseModel noise;
  noise.p_gate = 0.37;
  long fired = 0;
  const long trials = 100000;
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(99, static_cast<std::uint64_t>(i));
    NoisyPlan plan = inject(pc, noise, rng);
    if (plan.events[0]) ++fired;
  }
  double phat = static_cast<double>(fired) / trials;
  double sigma = std::sqrt(noise.p_gate * (1 - noise.p_gate) / trials);
  CHECK(std::abs(phat - noise.p_gate) < 3 * sigma);
}

TEST_CASE("independence across columns: chi-square at 1% over 1e5 trials") {
  Circuit c{{2, 1, 2},
            {ColumnGate{GateKind::H, {1, 1}}, ColumnGate{GateKind::H, {2, 1}}},
            ""};
  PhysicalCircuit pc = expand(c);
  REQUIRE(pc.locations.size() == 2);
  NoiseModel noise;
  noise.p_gate = 0.2;
  long counts[2][2] = {{0, 0}, {0, 0}};
  const long trials = 100000;
  for (long i = 0; i < trials; ++i) {
    Rng rng = trial_rng(7, static_cast<std::uint64_t>(i));
    NoisyPlan plan = inject(pc, noise, rng);
    ++counts[plan.events[0] ? 1 : 0][plan.events[1] ? 1 : 0];
  }
  double row[2] = {double(counts[0][0] + counts[0][1]), double(counts[1][0] + counts[1][1])};
  double col[2] = {double(counts[0][0] + counts[1][0]), double(counts[0][1] + counts[1][1])};
  double chi2 = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double expect = row[a] * col[b] / trials;
      chi2 += (counts[a][b] - expect) * (counts[a][b] - expect) / expect;
    }
  CHECK(chi2 < 6.635);  // df=1 at the 1% level
}

TEST_CASE("prep failure replaces the reset output") {
  Circuit c{{1, 1, 1}, {ColumnReset{{1, 1}}}, ""};
  PhysicalCircuit pc = expand(c);
  NoiseModel noise;
  noise.p_prep = 1.0;
  noise.reset_failure = ResetFailureState::FixedOne;
  Tableau t(1);
  Rng rng(3);
  run_noisy_on_tableau(pc, noise, t, rng);
  CHECK(*t.deterministic_z(0) == 1);
}

TEST_CASE("measurement noise flips the record, not the state") {
  Circuit c{{1, 1, 2}, {BoundaryOp{GateKind::MEASURE_Z, {Site{1, 1, 1}}}}, ""};
  PhysicalCircuit pc = expand(c);
  NoiseModel noise;
  noise.p_meas = 1.0;
  Tableau t(2);
  Rng rng(3);
  RunRecord rec = run_noisy_on_tableau(pc, noise, t, rng);
  CHECK(rec.outcomes.at(0) == 1);           // flipped record of a |0> qubit
  CHECK(*t.deterministic_z(0) == 0);        // state untouched
}

TEST_CASE("memory experiment: p=0 has no failures; stderr shrinks with trials") {
  NoiseModel noise;
  MemoryResult clean = run_memory_exrec(CodeChoice::BS9, 1, noise, {0.0}, 200, 11);
  CHECK(clean.estimates[0].failures == 0);
  CHECK(clean.engine_fallbacks == 0);

  MemoryResult a = run_memory_exrec(CodeChoice::BS9, 1, noise, {0.02}, 1500, 12);
  MemoryResult b = run_memory_exrec(CodeChoice::BS9, 1, noise, {0.02}, 6000, 12);
  CHECK(a.estimates[0].failures > 0);
  CHECK(b.estimates[0].stderr_ < a.estimates[0].stderr_);
  double ratio = a.estimates[0].stderr_ / b.estimates[0].stderr_;
  CHECK(ratio == doctest::Approx(2.0).epsilon(0.35));
}

TEST_CASE("memory experiment is reproducible and job-count independent") {
  NoiseModel noise;
  MemoryResult a = run_memory_exrec(CodeChoice::BS9, 1, noise, {5e-3}, 1200, 42, 1);
  MemoryResult b = run_memory_exrec(CodeChoice::BS9, 1, noise, {5e-3}, 1200, 42, 4);
  CHECK(a.estimates[0].failures == b.estimates[0].failures);
}

TEST_CASE("fit recovery on synthetic power laws") {
  auto synth = [](double coeff, double power) {
    std::vector<McEstimate> est;
    for (double p : {1e-3, 2e-3, 5e-3, 1e-2}) {
      McEstimate e;
      e.p = p;
      e.trials = 1000000;
      e.p_logical = coeff * std::pow(p, power);
      e.failures = static_cast<long>(e.p_logical * e.trials);
      e.stderr_ = std::sqrt(e.p_logical * (1 - e.p_logical) / e.trials);
      est.push_back(e);
    }
    return est;
  };
  FitResult quad = fit_suppression(synth(7.0, 2.0));
  CHECK(quad.exponent == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(quad.coefficient_a == doctest::Approx(7.0).epsilon(5e-3));
  CHECK(quad.r_squared > 0.999);

  FitResult lin = fit_suppression(synth(1.0, 1.0));
  CHECK(lin.exponent == doctest::Approx(1.0).epsilon(1e-3));

  PseudoThreshold pt = pseudo_threshold(synth(100.0, 2.0));
  CHECK(pt.value == doctest::Approx(0.01).epsilon(1e-3));
  PseudoThreshold pt7 = pseudo_threshold(synth(7.0, 2.0));
  CHECK(pt7.value == doctest::Approx(1.0 / 7.0).epsilon(1e-3));
  CHECK(pt7.lo <= pt7.value);
  CHECK(pt7.hi >= pt7.value);

  CHECK_THROWS_WITH_AS(fit_suppression({synth(7.0, 2.0)[0]}),
                       doctest::Contains("INSUFFICIENT_DATA"), Error);
}

TEST_CASE("memory suppression is quadratic at desk scale (reduced trials)") {
  NoiseModel noise;
  MemoryResult mc = run_memory_exrec(CodeChoice::BS9, 1, noise, {2e-3, 5e-3, 1e-2, 2e-2}, 20000, 7);
  CHECK(mc.engine_fallbacks == 0);
  FitResult fit = fit_suppression(mc.estimates);
  CHECK(fit.exponent > 1.6);
  CHECK(fit.exponent < 2.4);
}

TEST_CASE("column containment: exhaustive scan at two planes has zero failures") {
  ContainmentReport rep = run_column_containment(2, true, 0, 5);
  CHECK(rep.exhaustive);
  CHECK(rep.runs == 9 * 16 * 2);
  CHECK(rep.total_failures == 0);
}

TEST_CASE("column containment: random column paulis at three planes") {
  ContainmentReport rep = run_column_containment(3, false, 400, 21);
  CHECK(rep.runs == 400);
  CHECK(rep.total_failures == 0);
}

TEST_CASE("t-pulse fault paths: exhaustive containment") {
  for (LatticeDims dims : {LatticeDims{1, 1, 6}, LatticeDims{3, 3, 2}}) {
    FaultPathReport rep = run_t_fault_paths(dims);
    CHECK(rep.violations == 0);
    CHECK(rep.max_weight_per_plane <= 1);
    CHECK(rep.cases_checked > 0);
  }
}

TEST_CASE("inhomogeneity: zero angle is exact; Z rotations are invisible on |0_L>") {
  InhomogeneityModel model;
  model.generator = RotationAxis::X;
  auto pts = run_inhomogeneity(2, model, {0.0}, 3);
  CHECK(pts[0].pre_ec_infidelity == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pts[0].post_ec_infidelity == doctest::Approx(0.0).epsilon(1e-12));

  InhomogeneityModel zrot;
  zrot.generator = RotationAxis::Z;
  auto zpts = run_inhomogeneity(2, zrot, {0.05}, 3);
  CHECK(zpts[0].pre_ec_infidelity == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("inhomogeneity: quadratic pre-correction scaling and post-correction suppression") {
  InhomogeneityModel model;
  model.generator = RotationAxis::X;
  auto pts = run_inhomogeneity(2, model, {0.01, 0.02, 0.04}, 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[1].pre_ec_infidelity / pts[0].pre_ec_infidelity == doctest::Approx(4.0).epsilon(0.02));
  CHECK(pts[2].pre_ec_infidelity / pts[0].pre_ec_infidelity == doctest::Approx(16.0).epsilon(0.05));
  for (const auto& pt : pts) CHECK(pt.post_ec_infidelity < 0.2 * pt.pre_ec_infidelity);
}

TEST_CASE("estimates csv schema") {
  McEstimate e;
  e.p = 1e-3;
  e.trials = 10;
  e.failures = 1;
  e.p_logical = 0.1;
  e.stderr_ = 0.09;
  e.seed = 4;
  std::string csv = estimates_csv("memory", "bs9", 1, {e});
  CHECK(csv.rfind("experiment,code,level,p,trials,failures,p_logical,stderr,seed\n", 0) == 0);
  CHECK(csv.find("memory,bs9,1,") != std::string::npos);
}
