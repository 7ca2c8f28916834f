#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "holoqec/gates.hpp"
#include "holoqec/lattice.hpp"

namespace holoqec {

// --- Semi-global (columnar) program representation -------------------------
//
// Bulk qubits are addressed only by column (x,y); the two z-boundary planes
// accept per-site operations. Vertical entanglement comes exclusively from
// the parity CZ layers.

struct ColumnGate {
  GateKind kind;
  Column col;
};

struct TwoColumnGate {
  GateKind kind;
  Column a;
  Column b;
};

enum class CZParity { OddEven, EvenOdd };  // pairs (2n-1,2n) resp. (2n,2n+1)

struct VerticalCZLayer {
  CZParity parity;
};

struct GlobalHLayer {};

struct ColumnReset {
  Column col;
};

struct BoundaryOp {
  GateKind kind;
  std::vector<Site> sites;  // 1..3 sites, all on the same boundary plane
};

struct Annotation {
  std::string text;
};

using SemiGlobalOp =
    std::variant<ColumnGate, TwoColumnGate, VerticalCZLayer, GlobalHLayer, ColumnReset, BoundaryOp,
                 Annotation>;

struct Circuit {
  LatticeDims dims;
  std::vector<SemiGlobalOp> ops;
  std::string name;
};

struct Violation {
  int op_index;
  std::string rule;  // R1..R4
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// --- Flat physical circuits -------------------------------------------------

enum class LocationKind { Gate, Prep, Measure };

// One stochastic error location: a semi-global pulse contributes one location
// per addressed column (or column pair); gadget-level gates are one location
// each. `support` is the full qubit set the location may corrupt.
struct ErrorLocation {
  LocationKind kind = LocationKind::Gate;
  std::vector<int> support;
  int source_op = -1;  // index into the originating Circuit/gadget op list
  std::string tag;
};

// Conditional execution: fire iff for every clause the XOR of the recorded
// outcomes of the listed measurement gates equals 1.
using CondClause = std::vector<int>;  // gate indices of prior measurements

struct PhysGate {
  GateKind kind;
  std::vector<int> sites;
  int timestep = 0;
  int location = -1;  // index into PhysicalCircuit::locations
  double param = 0.0;
  std::vector<CondClause> cond;
};

struct PhysicalCircuit {
  int n_qubits = 0;
  std::vector<PhysGate> gates;
  std::vector<ErrorLocation> locations;

  int add_location(LocationKind kind, std::vector<int> support, int source_op,
                   std::string tag = {}) {
    locations.push_back({kind, std::move(support), source_op, std::move(tag)});
    return static_cast<int>(locations.size()) - 1;
  }

  int add_gate(GateKind kind, std::vector<int> sites, int timestep, int location,
               double param = 0.0) {
    gates.push_back({kind, std::move(sites), timestep, location, param, {}});
    return static_cast<int>(gates.size()) - 1;
  }

  int max_timestep() const {
    int t = -1;
    for (const auto& g : gates) t = g.timestep > t ? g.timestep : t;
    return t;
  }
};

// --- 1D line layout with placeholder qubits ---------------------------------

enum class LineRole { Info, Placeholder };

struct Layout2D {
  int line_length = 0;
  std::vector<LineRole> role_of;       // indexed by 0-based line position
  std::map<int, int> plane_map;        // plane site index -> 0-based line position

  static Layout2D interleaved(int n_info);
};

}  // namespace holoqec
