#pragma once

#include "holoqec/error.hpp"

namespace holoqec {

// Lattice coordinates are 1-based throughout the IR and file formats. The
// flat qubit index produced by linearize() is 0-based, x fastest:
//   q = (x-1) + nx*(y-1) + nx*ny*(z-1).
struct LatticeDims {
  int nx = 1;
  int ny = 1;
  int nz = 1;

  int columns() const { return nx * ny; }
  int qubits() const { return nx * ny * nz; }

  void check() const {
    if (nx < 1 || ny < 1 || nz < 1) throw Error("BAD_DIMS", "lattice dims must be >= 1");
  }
};

struct Column {
  int x = 1;
  int y = 1;

  bool in_range(const LatticeDims& d) const {
    return x >= 1 && x <= d.nx && y >= 1 && y <= d.ny;
  }
  bool operator==(const Column& o) const { return x == o.x && y == o.y; }
};

struct Site {
  int x = 1;
  int y = 1;
  int z = 1;

  bool in_range(const LatticeDims& d) const {
    return x >= 1 && x <= d.nx && y >= 1 && y <= d.ny && z >= 1 && z <= d.nz;
  }
  bool on_boundary(const LatticeDims& d) const { return z == 1 || z == d.nz; }
  bool operator==(const Site& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline int linearize(const LatticeDims& d, int x, int y, int z) {
  return (x - 1) + d.nx * (y - 1) + d.nx * d.ny * (z - 1);
}

inline int linearize(const LatticeDims& d, const Site& s) { return linearize(d, s.x, s.y, s.z); }

inline int column_qubit(const LatticeDims& d, const Column& c, int z) {
  return linearize(d, c.x, c.y, z);
}

}  // namespace holoqec
