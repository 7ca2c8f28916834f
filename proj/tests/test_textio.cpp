#include <random>

#include "doctest.h"
#include "holoqec/error.hpp"
#include "holoqec/semiglobal.hpp"
#include "holoqec/textio.hpp"

using namespace holoqec;

TEST_CASE("parse a minimal program") {
  Circuit c = parse_circuit("dims 1 1 3\nop col h 1 1\n");
  CHECK(c.dims.nz == 3);
  REQUIRE(c.ops.size() == 1);
  const auto* g = std::get_if<ColumnGate>(&c.ops[0]);
  REQUIRE(g);
  CHECK(g->kind == GateKind::H);
}

TEST_CASE("comments and annotations") {
  Circuit c = parse_circuit("# plain comment\ndims 1 1 2\n#@ gadget: demo\nop hlayer\n");
  REQUIRE(c.ops.size() == 2);
  CHECK(std::get_if<Annotation>(&c.ops[0]));
  CHECK(std::get_if<GlobalHLayer>(&c.ops[1]));
  std::string round = serialize_circuit(c);
  Circuit c2 = parse_circuit(round);
  CHECK(serialize_circuit(c2) == round);
}

TEST_CASE("malformed czlayer parity is a parse error with the line number") {
  try {
    parse_circuit("dims 1 1 4\nop czlayer diagonal\n");
    FAIL("expected PARSE_ERROR");
  } catch (const Error& e) {
    CHECK(e.code() == "PARSE_ERROR");
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("diagonal") != std::string::npos);
  }
}

TEST_CASE("parse errors: missing dims, bad ints, bad kinds") {
  CHECK_THROWS_WITH_AS(parse_circuit("op hlayer\n"), doctest::Contains("PARSE_ERROR"), Error);
  CHECK_THROWS_WITH_AS(parse_circuit("dims 1 1 x\n"), doctest::Contains("PARSE_ERROR"), Error);
  CHECK_THROWS_WITH_AS(parse_circuit("dims 1 1 2\nop col frob 1 1\n"),
                       doctest::Contains("PARSE_ERROR"), Error);
  CHECK_THROWS_WITH_AS(parse_circuit("dims 1 1 2\nop boundary mz 1 1\n"),
                       doctest::Contains("PARSE_ERROR"), Error);
}

namespace {

Circuit random_valid_circuit(std::mt19937_64& rng, int n_ops) {
  LatticeDims d{2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                2 + static_cast<int>(rng() % 4)};
  Circuit c{d, {}, ""};
  auto rand_col = [&]() {
    return Column{1 + static_cast<int>(rng() % d.nx), 1 + static_cast<int>(rng() % d.ny)};
  };
  const GateKind one_q[] = {GateKind::H, GateKind::X, GateKind::S, GateKind::Z, GateKind::WAIT};
  const GateKind two_q[] = {GateKind::CZ, GateKind::CNOT, GateKind::SWAP};
  for (int i = 0; i < n_ops; ++i) {
    switch (rng() % 7) {
      case 0: c.ops.emplace_back(ColumnGate{one_q[rng() % 5], rand_col()}); break;
      case 1: {
        Column a = rand_col(), b = rand_col();
        while (b == a) b = rand_col();
        c.ops.emplace_back(TwoColumnGate{two_q[rng() % 3], a, b});
        break;
      }
      case 2:
        c.ops.emplace_back(VerticalCZLayer{(rng() & 1) ? CZParity::OddEven : CZParity::EvenOdd});
        break;
      case 3: c.ops.emplace_back(GlobalHLayer{}); break;
      case 4: c.ops.emplace_back(ColumnReset{rand_col()}); break;
      case 5: {
        int z = (rng() & 1) ? 1 : d.nz;
        Site s{1 + static_cast<int>(rng() % d.nx), 1 + static_cast<int>(rng() % d.ny), z};
        c.ops.emplace_back(BoundaryOp{(rng() & 1) ? GateKind::MEASURE_Z : GateKind::ZQUARTER, {s}});
        break;
      }
      case 6: c.ops.emplace_back(Annotation{"note-" + std::to_string(rng() % 100)}); break;
    }
  }
  return c;
}

bool ops_equal(const Circuit& a, const Circuit& b) {
  return serialize_circuit(a) == serialize_circuit(b);
}

}  // namespace

TEST_CASE("round-trip property: parse(serialize(c)) preserves structure") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = random_valid_circuit(rng, 100);
    Circuit back = parse_circuit(serialize_circuit(c));
    CHECK(back.dims.nx == c.dims.nx);
    CHECK(back.dims.ny == c.dims.ny);
    CHECK(back.dims.nz == c.dims.nz);
    REQUIRE(back.ops.size() == c.ops.size());
    Circuit c_nameless = c;
    c_nameless.name.clear();
    CHECK(ops_equal(c_nameless, back));
  }
}

TEST_CASE("serialize is canonical re-formatting") {
  Circuit c = parse_circuit("dims  2 1  3\nop   col  h  2 1\n");
  CHECK(serialize_circuit(c) == "dims 2 1 3\nop col h 2 1\n");
}

TEST_CASE("physical serialization carries timesteps, sources and conditions") {
  PhysicalCircuit pc;
  pc.n_qubits = 2;
  int loc = pc.add_location(LocationKind::Measure, {0}, 0);
  pc.add_gate(GateKind::MEASURE_Z, {0}, 0, loc);
  pc.add_gate(GateKind::Z, {1}, 1, loc);
  pc.gates[1].cond = {{0}};
  std::string text = serialize_physical(pc);
  CHECK(text == "qubits 2\ng mz 0 @t0 #src0\ng z 1 @t1 #src0 ?m0\n");
}
