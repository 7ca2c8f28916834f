#pragma once

#include <string>
#include <vector>

#include "holoqec/pauli.hpp"

namespace holoqec {

enum class QrBasis { BitFlip, PhaseFlip };
enum class BsOrientation { Standard, Rotated };
enum class LogicalBasis { Zero, Plus };

// Stabilizer / gauge / logical data for one code block. For the subsystem
// code the stabilizers are products of gauge generators; logicals are bare
// (they commute with the whole gauge group).
struct CodeSpec {
  std::string name;
  int n = 0;
  std::vector<PauliString> stabilizers;
  std::vector<PauliString> gauge_generators;
  PauliString logical_x;
  PauliString logical_z;
  int distance = 0;

  bool check() const;  // commutation structure of the tables above
};

// 3-qubit repetition code. BitFlip: stabilizers ZZI, IZZ, X_L = XXX, Z_L = ZII.
CodeSpec code_qr3(QrBasis basis);

// 3x3 subsystem code; Standard has X_L on column 0 and Z_L on row 0, with
// X-pair gauge along rows and Z-pair gauge along columns. Rotated is the
// transpose. Site (row i, col j) -> index 3i+j.
CodeSpec code_bs9(BsOrientation orientation);

int bs9_site(BsOrientation orientation, int i, int j);

// GF(2) symplectic rank of a set of Pauli operators (phases ignored).
int symplectic_rank(const std::vector<PauliString>& ops);

// Membership of p in the group generated by gens, up to phase.
bool in_span(const std::vector<PauliString>& gens, const PauliString& p);

// Embeds a code-local operator into an engine register via a site map
// (block index q -> engine qubit sites[q]).
PauliString embed(const PauliString& p, int n_total, const std::vector<int>& sites);

}  // namespace holoqec
