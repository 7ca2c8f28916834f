#include <cmath>

#include "doctest.h"
#include "holoqec/error.hpp"
#include "holoqec/executor.hpp"
#include "holoqec/statevector.hpp"

using namespace holoqec;

TEST_CASE("zquarter puts e^{i pi/4} on |1>") {
  StateVector sv(1);
  sv.apply_gate(GateKind::X, {0});
  sv.apply_gate(GateKind::ZQUARTER, {0});
  cplx want = std::polar(1.0, 3.14159265358979323846 / 4.0);
  CHECK(std::abs(sv.amplitudes()[1] - want) < 1e-12);
}

TEST_CASE("cxhalf squared equals cnot on all basis states") {
  for (int b = 0; b < 4; ++b) {
    StateVector a(2), c(2);
    a.amplitudes()[0] = c.amplitudes()[0] = cplx(0, 0);
    a.amplitudes()[b] = c.amplitudes()[b] = cplx(1, 0);
    a.apply_gate(GateKind::CXHALF, {0, 1});
    a.apply_gate(GateKind::CXHALF, {0, 1});
    c.apply_gate(GateKind::CNOT, {0, 1});
    CHECK(StateVector::fidelity(a, c) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rotation exp(i theta Z) at theta=pi/2 equals S up to global phase") {
  StateVector a(1), b(1);
  a.apply_gate(GateKind::H, {0});
  b.apply_gate(GateKind::H, {0});
  a.apply_gate(GateKind::ROT_Z, {0}, 3.14159265358979323846 / 4.0);
  // exp(i (pi/4) Z) = diag(e^{i pi/4}, e^{-i pi/4}) = e^{i pi/4} diag(1, -i) = phase * Sdg
  b.apply_gate(GateKind::Sdg, {0});
  CHECK(StateVector::fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gate unitarity on a complete basis for n<=3") {
  struct Case {
    GateKind k;
    std::vector<int> sites;
    int n;
    double param;
  };
  std::vector<Case> cases = {
      {GateKind::H, {0}, 1, 0},          {GateKind::S, {0}, 1, 0},
      {GateKind::ZQUARTER, {0}, 1, 0},   {GateKind::ROT_X, {0}, 1, 0.3},
      {GateKind::ROT_Y, {0}, 1, -0.7},   {GateKind::ROT_Z, {0}, 1, 1.1},
      {GateKind::CXHALF, {0, 1}, 2, 0},  {GateKind::CXHALF_DG, {1, 0}, 2, 0},
      {GateKind::CZ, {0, 1}, 2, 0},      {GateKind::CNOT, {1, 0}, 2, 0},
      {GateKind::SWAP, {0, 1}, 2, 0},    {GateKind::TOFFOLI, {0, 1, 2}, 3, 0},
      {GateKind::Z_TOFFOLI, {0, 2, 1}, 3, 0},
  };
  for (const auto& c : cases) {
    std::size_t dim = std::size_t{1} << c.n;
    // columns must stay orthonormal
    std::vector<StateVector> cols;
    for (std::size_t j = 0; j < dim; ++j) {
      StateVector sv(c.n);
      sv.amplitudes()[0] = cplx(0, 0);
      sv.amplitudes()[j] = cplx(1, 0);
      sv.apply_gate(c.k, c.sites, c.param);
      CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
      cols.push_back(std::move(sv));
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        CHECK(std::abs(cols[i].inner_product(cols[j])) < 1e-10);
  }
}

TEST_CASE("measure_enumerate basics") {
  StateVector plus(1);
  plus.apply_gate(GateKind::H, {0});
  auto bs = measure_enumerate(plus, {0}, MeasBasis::Z);
  REQUIRE(bs.branches.size() == 2);
  CHECK(bs.branches[0].probability == doctest::Approx(0.5));
  CHECK(bs.branches[1].probability == doctest::Approx(0.5));

  StateVector zero(1);
  auto bz = measure_enumerate(zero, {0}, MeasBasis::Z);
  REQUIRE(bz.branches.size() == 1);
  CHECK(bz.branches[0].outcome == 0);
  CHECK(bz.branches[0].probability == doctest::Approx(1.0));

  StateVector ghz(3);
  ghz.apply_gate(GateKind::H, {0});
  ghz.apply_gate(GateKind::CNOT, {0, 1});
  ghz.apply_gate(GateKind::CNOT, {0, 2});
  auto bg = measure_enumerate(ghz, {0, 1, 2}, MeasBasis::Z);
  REQUIRE(bg.branches.size() == 2);
  CHECK(bg.branches[0].outcome == 0);
  CHECK(bg.branches[1].outcome == 7);
  CHECK(bg.branches[0].probability == doctest::Approx(0.5));
}

TEST_CASE("branch probabilities sum to one") {
  StateVector sv(3);
  sv.apply_gate(GateKind::H, {0});
  sv.apply_gate(GateKind::CXHALF, {0, 1});
  sv.apply_gate(GateKind::ZQUARTER, {1});
  sv.apply_gate(GateKind::CNOT, {1, 2});
  auto bs = measure_enumerate(sv, {0, 2}, MeasBasis::X);
  double total = 0;
  for (const auto& b : bs.branches) total += b.probability;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fidelity endpoints") {
  StateVector a(2), b(2);
  CHECK(StateVector::fidelity(a, a) == doctest::Approx(1.0));
  b.apply_gate(GateKind::X, {0});
  CHECK(StateVector::fidelity(a, b) == doctest::Approx(0.0));
}

TEST_CASE("reduced state match") {
  StateVector prod(2);
  prod.apply_gate(GateKind::H, {0});
  CHECK(reduced_state_match(prod, {0}, prod, {0}));
  StateVector zo(2);
  zo.apply_gate(GateKind::X, {1});  // |01> with qubit1 = 1
  CHECK(!reduced_state_match(zo, {0}, zo, {1}));

  // maximally mixed halves of a bell pair match each other
  StateVector bell(2);
  bell.apply_gate(GateKind::H, {0});
  bell.apply_gate(GateKind::CNOT, {0, 1});
  CHECK(reduced_state_match(bell, {0}, bell, {1}));
}

TEST_CASE("cap enforcement") {
  CHECK_THROWS_WITH_AS(StateVector(23), doctest::Contains("CAP_EXCEEDED"), Error);
}

TEST_CASE("dense reset branches keep payload intact on product states") {
  // payload on qubit 1, reset qubit 0 which is in |1>
  StateVector sv(2);
  sv.apply_gate(GateKind::X, {0});
  sv.apply_gate(GateKind::H, {1});
  sv.apply_gate(GateKind::ZQUARTER, {1});
  PhysicalCircuit pc;
  pc.n_qubits = 2;
  pc.add_gate(GateKind::RESET, {0}, 0, -1);
  int runs = 0;
  enumerate_dense_runs(pc, sv, [&](const StateVector& out, const RunRecord&, double p) {
    ++runs;
    CHECK(p == doctest::Approx(1.0));
    CHECK(out.prob_of_bit(0, 0) == doctest::Approx(1.0));
    StateVector want(2);
    want.apply_gate(GateKind::H, {1});
    want.apply_gate(GateKind::ZQUARTER, {1});
    CHECK(StateVector::fidelity(out, want) == doctest::Approx(1.0).epsilon(1e-10));
  });
  CHECK(runs == 1);
}
