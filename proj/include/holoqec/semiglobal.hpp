#pragma once

#include <array>
#include <string>
#include <vector>

#include "holoqec/circuit.hpp"

namespace holoqec {

// Addressing rules:
//   R1  measurement (or a reset expressed as a plain column gate) in the bulk
//   R2  inter-plane two-qubit gate outside a VerticalCZLayer
//   R3  BoundaryOp with mixed or non-boundary z
//   R4  TwoColumnGate on identical columns
//   R0  structural problems (range, arity, layer needs nz >= 2)
// Long-range in-plane two-column gates are legal.
ValidationReport validate(const Circuit& circuit);

// Flattens a validated program. Column pulses become one error location per
// addressed column (column pair for two-column gates); every op advances the
// timestep by one. Qubit index: (x-1) + nx*(y-1) + nx*ny*(z-1).
PhysicalCircuit expand(const Circuit& circuit);

// Global step T = CZ(odd-even) * CZ(even-odd) * prod H on a single column.
Circuit build_T_tilde(const LatticeDims& dims);

// Same step over the full (nx,ny) extent.
Circuit build_T_pulse(const LatticeDims& dims);

// T-tilde repeated `reps` times; reps = nz+1 realizes the z-reflection.
Circuit build_mirror_sequence(const LatticeDims& dims, int reps);

// Demo program: one T pulse, an ancilla column refresh, boundary readout.
Circuit build_memory_experiment(const LatticeDims& dims);

struct MirrorEntry {
  int from_z = 0;  // 1-based
  int to_z = 0;
  char from_pauli = 'I';
  char to_pauli = 'I';
  int sign = +1;
};

struct MirrorTable {
  int nz = 0;
  std::vector<MirrorEntry> entries;  // X and Z image for every z
  bool plain_reflection = true;      // every image is +same-type at nz+1-z
};

// Conjugation table of single-site generators through T-tilde^(nz+1),
// computed with the stabilizer engine. Throws if any image is not single-site.
MirrorTable mirror_byproducts(int nz);

enum class ReadoutMove { FullMirror, SubMirrorLow, SubMirrorHigh };

struct ReadoutPlan {
  Circuit circuit;
  int t_pulses = 0;
  int boundary_z = 1;  // plane where the payload arrives and is measured
  std::vector<ReadoutMove> moves;
};

// Moves logical plane `plane` to a z-boundary using full mirrors and
// boundary-frozen sub-chain mirrors, then measures that boundary. Planes
// other than the payload are not preserved.
ReadoutPlan build_readout_sequence(const LatticeDims& dims, int plane);

// Maps a flat 3D circuit onto stacked lines with interleaved placeholder
// qubits. In-plane gates between non-adjacent info positions are routed with
// fault-tolerant SWAP triples; in-plane Toffolis are decomposed into
// two-qubit gates first. New qubit index: line_pos + line_length*(z-1).
PhysicalCircuit lower_to_2d(const PhysicalCircuit& pc, const LatticeDims& dims,
                            const Layout2D& per_plane);

}  // namespace holoqec
