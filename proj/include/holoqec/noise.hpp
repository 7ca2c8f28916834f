#pragma once

#include <optional>
#include <vector>

#include "holoqec/circuit.hpp"
#include "holoqec/executor.hpp"
#include "holoqec/pauli.hpp"
#include "holoqec/tableau.hpp"

namespace holoqec {

enum class ResetFailureState { MaximallyMixed, RandomPure, FixedOne };

// Columnar stochastic error model: one semi-global pulse is one error
// location. A firing gate location draws a Pauli on its full support when
// `columnar_correlated`, otherwise independent single-qubit depolarizing on
// each touched qubit. Failed preparations are replaced by eta; measurement
// locations flip the recorded bit.
struct NoiseModel {
  double p_gate = 0.0;
  double p_prep = 0.0;
  double p_meas = 0.0;
  bool columnar_correlated = true;
  ResetFailureState reset_failure = ResetFailureState::MaximallyMixed;

  void check() const;
  bool is_noiseless() const { return p_gate == 0.0 && p_prep == 0.0 && p_meas == 0.0; }
};

enum class RotationAxis { X, Y, Z };
enum class ThetaDist { Constant, Uniform, LinearGradient };

// Coherent pulse-inhomogeneity model: every column pulse is followed by
// exp(i theta_z G) on each addressed qubit, theta_z drawn per z-plane.
struct InhomogeneityModel {
  RotationAxis generator = RotationAxis::X;
  ThetaDist dist = ThetaDist::Constant;
  double theta0 = 0.0;
};

struct LocationEvent {
  int location = -1;
  // Pauli letters (0=I,1=X,2=Z,3=Y) per support qubit for gate locations.
  std::vector<int> pauli;
  // sampled eta basis/stabilizer state selector per support qubit for preps
  std::vector<int> prep_state;
  bool flip_measurement = false;
};

// Samples one noisy execution plan: which locations fire and with what error.
struct NoisyPlan {
  std::vector<std::optional<LocationEvent>> events;  // by location index
};

NoisyPlan inject(const PhysicalCircuit& pc, const NoiseModel& noise, Rng& rng);

// Runs the circuit with the plan's errors appended after each location's last
// gate (preparation replacement and measurement record flips included).
RunRecord run_noisy_on_tableau(const PhysicalCircuit& pc, const NoisyPlan& plan, Tableau& t,
                               Rng& rng);

// Convenience: inject + run with one rng stream.
RunRecord run_noisy_on_tableau(const PhysicalCircuit& pc, const NoiseModel& noise, Tableau& t,
                               Rng& rng);

double theta_for_plane(const InhomogeneityModel& model, int z, int nz, Rng& rng);

}  // namespace holoqec
