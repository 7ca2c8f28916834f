#include "holoqec/gates.hpp"

#include <array>

namespace holoqec {

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool clifford;
};

constexpr std::array<GateInfo, 21> kGateTable = {{
    {GateKind::H, "h", 1, true},
    {GateKind::X, "x", 1, true},
    {GateKind::Y, "y", 1, true},
    {GateKind::Z, "z", 1, true},
    {GateKind::S, "s", 1, true},
    {GateKind::Sdg, "sdg", 1, true},
    {GateKind::CZ, "cz", 2, true},
    {GateKind::CNOT, "cnot", 2, true},
    {GateKind::SWAP, "swap", 2, true},
    {GateKind::TOFFOLI, "toffoli", 3, false},
    {GateKind::Z_TOFFOLI, "ztoffoli", 3, false},
    {GateKind::CXHALF, "cxhalf", 2, false},
    {GateKind::CXHALF_DG, "cxhalfdg", 2, false},
    {GateKind::ZQUARTER, "zquarter", 1, false},
    {GateKind::RESET, "reset", 1, true},
    {GateKind::MEASURE_Z, "mz", 1, true},
    {GateKind::MEASURE_X, "mx", 1, true},
    {GateKind::WAIT, "wait", 1, true},
    {GateKind::ROT_X, "rotx", 1, false},
    {GateKind::ROT_Y, "roty", 1, false},
    {GateKind::ROT_Z, "rotz", 1, false},
}};

const GateInfo& info(GateKind k) { return kGateTable[static_cast<std::size_t>(k)]; }

}  // namespace

int gate_arity(GateKind k) { return info(k).arity; }

bool gate_is_clifford(GateKind k) { return info(k).clifford; }

bool gate_is_measurement(GateKind k) {
  return k == GateKind::MEASURE_Z || k == GateKind::MEASURE_X;
}

bool gate_takes_param(GateKind k) {
  return k == GateKind::ROT_X || k == GateKind::ROT_Y || k == GateKind::ROT_Z;
}

std::string_view gate_name(GateKind k) { return info(k).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (const auto& g : kGateTable) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

}  // namespace holoqec
