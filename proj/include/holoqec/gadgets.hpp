#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "holoqec/circuit.hpp"
#include "holoqec/codes.hpp"
#include "holoqec/executor.hpp"
#include "holoqec/statevector.hpp"
#include "holoqec/tableau.hpp"

namespace holoqec {

enum class MBasis { X, Z };
enum class StageOrder { XThenZ, ZThenX };
enum class LogicalFrame { I, X, Y, Z, Fail };

// Required initial state of an ancilla site: '0', '+', 'i' (=|+i>), 'h' (=|H>).
struct AncillaInit {
  int site;
  char state;
};

struct GadgetCircuit {
  PhysicalCircuit circuit;
  std::vector<int> data_sites;
  std::vector<AncillaInit> ancillas;
  std::vector<int> discard_sites;  // outputs that no later stage may use
  std::vector<LogicalInjection> injections;
  int level = 1;
  std::string label;

  std::vector<int> ancilla_sites() const {
    std::vector<int> v;
    v.reserve(ancillas.size());
    for (const auto& a : ancillas) v.push_back(a.site);
    return v;
  }
};

// Measurement-free majority-vote corrector for the repetition code.
// Level k acts on 3^k data qubits with one 3^k ancilla register; gates are
// the level-1 pattern lifted bitwise over 3^(k-1) blocks with the cyclic
// rotation on the second extraction and the paired Toffoli controls.
GadgetCircuit m_gate(MBasis basis, int level);

struct SyndromeTriple {
  std::vector<int> s1, s2, s3;
};

// s4 = s1 ^ s2 ^ s3 (analysis oracle for the circuit realization).
std::vector<int> vote_syndromes(const SyndromeTriple& s);

// Unitary voting stage: XOR the three syndrome registers into a fresh s4 and
// produce the cyclically rotated copy that drives the bitwise Toffoli
// correction. Inputs are discarded afterwards.
GadgetCircuit vn_routine(int level);

// Full error-correction gadget: X-correction stage (column Z-parities,
// voted, bitwise-Toffoli row fix) and Z-correction stage (row X-parities,
// voted, bitwise-CCZ column fix). Desk scale: level 1.
GadgetCircuit bs_ec(int level, BsOrientation orientation = BsOrientation::Standard,
                    StageOrder order = StageOrder::XThenZ);

// |vec 0^(k)> / |vec +^(k)> via recursive majority-vote validation.
GadgetCircuit prepare_qr(QrBasis basis, int level);

// |0_L^(k)> / |+_L^(k)>. Level 1 builds the row/column GHZ network and runs
// the matching majority gate per row/column; higher levels recurse with
// transversal block CNOTs.
GadgetCircuit prepare_logical(LogicalBasis state, int level,
                              BsOrientation orientation = BsOrientation::Standard);

// Fan-out encoder: data_sites[0] carries an arbitrary |phi>; CNOT tree to
// a|0...0> + b|1...1> under the one-partner-per-step constraint, then a
// Z-basis majority gate per row. Desk scale: level 1.
GadgetCircuit encode_arbitrary(int level);

// Boundary S gate by |+i> consumption: CNOT, Z measurement, conditional Z.
// code == nullptr gives the physical (level-0) circuit; otherwise the
// transversal encoded version for the given CSS code.
GadgetCircuit zhalf_circuit(const CodeSpec* code = nullptr);

// Boundary Z^(1/4) by |H> consumption with the S gadget as the conditional
// correction.
GadgetCircuit zquarter_circuit(const CodeSpec* code = nullptr);

// SWAP of the info payloads at line positions p1 < p3 across the placeholder
// p2; no step couples two info-holding positions directly.
GadgetCircuit ft_swap_routine(int p1, int p2, int p3, const std::array<LineRole, 3>& roles);

// Toffoli from controlled-sqrt(X): the two leading CXHALF commute and share a
// timestep; the trailing CNOT (controls-only fix-up) is dropped when the
// controls are discarded, giving a 3-timestep schedule.
GadgetCircuit toffoli_decomposition(bool discard_controls);

// --- decoding oracles --------------------------------------------------

struct DecodeContext {
  CodeSpec code;
  PhysicalCircuit ec;              // noiseless corrector on engine coordinates
  std::vector<int> data_sites;
  std::vector<PauliString> stabilizers;  // embedded at engine width
  PauliString logical_x;
  PauliString logical_z;
};

// work_sites supplies the corrector's ancilla space (24 sites for the 9-qubit
// block, 3 for the repetition code).
DecodeContext make_decode_context(const CodeSpec& code, int n_total,
                                  const std::vector<int>& data_sites,
                                  const std::vector<int>& work_sites);

// Runs the noiseless corrector, then checks the stabilizers and the logical
// eigenvalue against the reference. Returns the residual frame component
// detectable in that basis (I or X for Zero, I or Z for Plus), Fail if the
// state is outside the codespace modulo gauge.
LogicalFrame ideal_decode(const DecodeContext& ctx, Tableau& t, LogicalBasis reference, Rng& rng);

// Dense variant: no corrector run; gauge-invariant logical Bloch vector
// compared against amplitudes (a,b). Fail when outside the codespace.
LogicalFrame ideal_decode_dense(const CodeSpec& code, const StateVector& sv,
                                const std::vector<int>& data_sites, cplx a, cplx b,
                                double tol = 1e-6);

// --- helpers shared by tests and experiments ----------------------------

// Appends `gadget`'s gates to `dst` with its sites renumbered through
// `site_map`; location/source bookkeeping is carried over. Returns the gate
// index offset and remaps injections/conditions accordingly.
int append_remapped(PhysicalCircuit& dst, const GadgetCircuit& gadget,
                    const std::vector<int>& site_map);

// Dense DFS over measurement branches honoring the gadget's logical
// injections.
void enumerate_gadget_runs(
    const GadgetCircuit& gadget, const StateVector& initial,
    const std::function<void(const StateVector&, const RunRecord&, double)>& cb);

// Prepares |a 0_L + b 1_L> on `sites` of a dense register assumed |0> there:
// Clifford encoding of |0_L> followed by logical-Pauli exponentials.
void prepare_logical_dense(StateVector& sv, const CodeSpec& code, const std::vector<int>& sites,
                           cplx a, cplx b);

}  // namespace holoqec
