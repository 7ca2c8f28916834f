#include "doctest.h"
#include "holoqec/codes.hpp"

using namespace holoqec;

TEST_CASE("qr3 tables") {
  CodeSpec bit = code_qr3(QrBasis::BitFlip);
  CHECK(bit.check());
  CHECK(bit.stabilizers[0].label() == "+ZZI");
  CHECK(bit.stabilizers[1].label() == "+IZZ");
  CHECK(bit.logical_x.label() == "+XXX");

  CodeSpec phase = code_qr3(QrBasis::PhaseFlip);
  CHECK(phase.check());
  CHECK(phase.logical_z.label() == "+ZZZ");
}

TEST_CASE("bs9 structure: stabilizers, gauge ranks, logicals") {
  for (BsOrientation o : {BsOrientation::Standard, BsOrientation::Rotated}) {
    CodeSpec c = code_bs9(o);
    CHECK(c.check());
    CHECK(c.stabilizers.size() == 4);
    CHECK(c.gauge_generators.size() == 12);

    // the 12 pair operators span a rank-12 group containing the four
    // stabilizers, leaving 8 independent generators modulo stabilizers
    // (two gauge qubits' worth of X and Z pairs)
    std::vector<PauliString> all = c.gauge_generators;
    CHECK(symplectic_rank(all) == 12);
    for (const auto& s : c.stabilizers) all.push_back(s);
    CHECK(symplectic_rank(all) == 12);
    CHECK(symplectic_rank(c.stabilizers) == 4);
    CHECK(symplectic_rank(all) - symplectic_rank(c.stabilizers) == 8);
    for (const auto& s : c.stabilizers) CHECK(in_span(c.gauge_generators, s));
  }
}

TEST_CASE("bs9 logical X lives on a column and commutes with the stabilizers") {
  CodeSpec c = code_bs9(BsOrientation::Standard);
  CHECK(c.logical_x.weight() == 3);
  for (int i = 0; i < 3; ++i) CHECK(c.logical_x.pauli_at(bs9_site(BsOrientation::Standard, i, 0)) == 1);
  for (const auto& s : c.stabilizers) CHECK(c.logical_x.commutes_with(s));
  CHECK(!c.logical_x.commutes_with(c.logical_z));
}

TEST_CASE("qr3 bitflip corrects the single-X error set (distance 3)") {
  CodeSpec c = code_qr3(QrBasis::BitFlip);
  // every single X anticommutes with some stabilizer (detectable) and no two
  // single-X errors share a syndrome
  auto syndrome = [&](const PauliString& e) {
    int s = 0;
    for (std::size_t i = 0; i < c.stabilizers.size(); ++i)
      if (!e.commutes_with(c.stabilizers[i])) s |= 1 << i;
    return s;
  };
  int s1 = syndrome(PauliString::from_label("+XII"));
  int s2 = syndrome(PauliString::from_label("+IXI"));
  int s3 = syndrome(PauliString::from_label("+IIX"));
  CHECK(s1 != 0);
  CHECK(s2 != 0);
  CHECK(s3 != 0);
  CHECK(s1 != s2);
  CHECK(s2 != s3);
  CHECK(s1 != s3);
}

TEST_CASE("rotated code is the transpose") {
  CodeSpec std_code = code_bs9(BsOrientation::Standard);
  CodeSpec rot = code_bs9(BsOrientation::Rotated);
  // X_L of the rotated code sits on a row of the standard indexing
  for (int j = 0; j < 3; ++j) CHECK(rot.logical_x.pauli_at(3 * 0 + j) == 1);
  (void)std_code;
}

TEST_CASE("embed maps operators through site maps") {
  PauliString p = PauliString::from_label("+XZ");
  PauliString e = embed(p, 5, {4, 1});
  CHECK(e.pauli_at(4) == 1);
  CHECK(e.pauli_at(1) == 2);
  CHECK(e.pauli_at(0) == 0);
}
