#pragma once

#include <iosfwd>
#include <string>

#include "holoqec/circuit.hpp"

namespace holoqec {

// Line-oriented circuit format:
//   dims <nx> <ny> <nz>
//   op col <kind> <x> <y>
//   op twocol <kind> <x1> <y1> <x2> <y2>
//   op czlayer oe|eo
//   op hlayer
//   op reset <x> <y>
//   op boundary <kind> (<x> <y> <z>)+
// '#' starts a comment; '#@ <text>' round-trips as an annotation op.
// Serialization is canonical: lowercase kinds, single spaces, program order.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// One gate per line: g <kind> <sites...> @t<step> #src<loc>  [?m<i>+m<j>&m<k>]
std::string serialize_physical(const PhysicalCircuit& pc);

std::string serialize_layout(const Layout2D& layout, int planes);

}  // namespace holoqec
