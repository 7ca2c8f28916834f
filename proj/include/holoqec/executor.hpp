#pragma once

#include <functional>
#include <map>
#include <vector>

#include "holoqec/circuit.hpp"
#include "holoqec/statevector.hpp"
#include "holoqec/tableau.hpp"

namespace holoqec {

struct RunRecord {
  std::map<int, int> outcomes;  // measurement gate index -> bit
  bool cond_fired(const PhysGate& g) const;
};

// Runs a flat circuit on the stabilizer engine. TOFFOLI/Z_TOFFOLI go through
// the classical-control path and throw DET_CONTROL_REQUIRED if a control is
// not a fixed Z eigenstate.
RunRecord run_on_tableau(const PhysicalCircuit& pc, Tableau& t, Rng& rng);

// Single stochastic trajectory on the dense engine.
RunRecord run_on_statevector(const PhysicalCircuit& pc, StateVector& sv, Rng& rng);

// Depth-first enumeration of every measurement/reset branch of a dense run.
// The callback receives the final state, the outcome record and the branch
// probability. Zero-probability branches are pruned.
void enumerate_dense_runs(const PhysicalCircuit& pc, const StateVector& initial,
                          const std::function<void(const StateVector&, const RunRecord&, double)>& cb);

// exp(i*theta*P) applied before gate `before_gate` during dense enumeration.
// Lets a run stage encoded ancilla states (|+i_L>, |H_L>) without the
// measurement cascade a full in-circuit encoder would add.
struct LogicalInjection {
  int before_gate;
  PauliString pauli;
  double theta;
};

void enumerate_dense_runs(const PhysicalCircuit& pc, const StateVector& initial,
                          const std::vector<LogicalInjection>& injections,
                          const std::function<void(const StateVector&, const RunRecord&, double)>& cb);

// psi -> cos(theta) psi + i sin(theta) P psi  (P a Hermitian Pauli).
void apply_pauli_exponential(StateVector& sv, const PauliString& p, double theta);

// Heisenberg propagation P -> U P U^dagger through the ideal circuit.
// RESET/MEASURE absorb the propagating component on their site. Throws
// NONPAULI_PROPAGATION when a Toffoli would map the Pauli outside the Pauli
// group (X/Y meeting a control, or X/Y through a CCZ leg, or Z/Y on a CCX
// target), and for gates with no Pauli conjugation action.
PauliString conjugate_pauli(const PhysicalCircuit& pc, const PauliString& p, int first_gate = 0,
                            int last_gate = -1);

// Dense unitary of a measurement-free circuit as a column-major matrix
// U[col][row-ish]: result[j] is the state produced from basis input |j>.
std::vector<std::vector<cplx>> build_unitary(const PhysicalCircuit& pc, int n);

// max over a fixed family of stabilizer inputs (basis states and
// (|0...0>+|b>)/sqrt2) of 1 - fidelity between the two circuit outputs.
double channel_distance(const PhysicalCircuit& a, const PhysicalCircuit& b, int n);

}  // namespace holoqec
