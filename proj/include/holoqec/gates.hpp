#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace holoqec {

enum class GateKind : std::uint8_t {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  CZ,
  CNOT,
  SWAP,
  TOFFOLI,
  Z_TOFFOLI,
  CXHALF,
  CXHALF_DG,
  ZQUARTER,
  RESET,
  MEASURE_Z,
  MEASURE_X,
  WAIT,
  // Parametrized coherent rotations exp(i*theta*G). Dense engine only; these
  // never appear in semi-global circuit files.
  ROT_X,
  ROT_Y,
  ROT_Z,
};

int gate_arity(GateKind k);

// True for gates the stabilizer engine applies directly. TOFFOLI/Z_TOFFOLI are
// handled separately (classical-control path), the rest of the non-Clifford
// set is dense-engine only.
bool gate_is_clifford(GateKind k);

bool gate_is_measurement(GateKind k);

bool gate_takes_param(GateKind k);

// Canonical lowercase name used by all text formats ("h", "cnot", "mz", ...).
std::string_view gate_name(GateKind k);

std::optional<GateKind> gate_from_name(std::string_view name);

}  // namespace holoqec
