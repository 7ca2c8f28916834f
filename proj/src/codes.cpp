#include "holoqec/codes.hpp"

#include "holoqec/error.hpp"

namespace holoqec {

bool CodeSpec::check() const {
  for (std::size_t i = 0; i < stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < stabilizers.size(); ++j)
      if (!stabilizers[i].commutes_with(stabilizers[j])) return false;
    for (const auto& g : gauge_generators)
      if (!stabilizers[i].commutes_with(g)) return false;
    if (!stabilizers[i].commutes_with(logical_x) || !stabilizers[i].commutes_with(logical_z))
      return false;
  }
  if (logical_x.commutes_with(logical_z)) return false;
  for (const auto& g : gauge_generators)
    if (!g.commutes_with(logical_x) || !g.commutes_with(logical_z)) return false;
  return true;
}

CodeSpec code_qr3(QrBasis basis) {
  CodeSpec c;
  c.n = 3;
  c.distance = 3;
  if (basis == QrBasis::BitFlip) {
    c.name = "qr3-bitflip";
    c.stabilizers = {PauliString::from_label("+ZZI"), PauliString::from_label("+IZZ")};
    c.logical_x = PauliString::from_label("+XXX");
    c.logical_z = PauliString::from_label("+ZII");
  } else {
    c.name = "qr3-phaseflip";
    c.stabilizers = {PauliString::from_label("+XXI"), PauliString::from_label("+IXX")};
    c.logical_x = PauliString::from_label("+XII");
    c.logical_z = PauliString::from_label("+ZZZ");
  }
  return c;
}

int bs9_site(BsOrientation orientation, int i, int j) {
  return orientation == BsOrientation::Standard ? 3 * i + j : 3 * j + i;
}

CodeSpec code_bs9(BsOrientation orientation) {
  CodeSpec c;
  c.name = orientation == BsOrientation::Standard ? "bs9" : "bs9-rotated";
  c.n = 9;
  c.distance = 3;
  auto site = [orientation](int i, int j) { return bs9_site(orientation, i, j); };

  // X stabilizers on column pairs (j, j+1), Z stabilizers on row pairs.
  for (int j = 0; j < 2; ++j) {
    PauliString s(9);
    for (int i = 0; i < 3; ++i) {
      s.set_pauli(site(i, j), 'X');
      s.set_pauli(site(i, j + 1), 'X');
    }
    c.stabilizers.push_back(s);
  }
  for (int i = 0; i < 2; ++i) {
    PauliString s(9);
    for (int j = 0; j < 3; ++j) {
      s.set_pauli(site(i, j), 'Z');
      s.set_pauli(site(i + 1, j), 'Z');
    }
    c.stabilizers.push_back(s);
  }
  // gauge freedom: X pairs along rows, Z pairs along columns
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      PauliString g(9);
      g.set_pauli(site(i, j), 'X');
      g.set_pauli(site(i, j + 1), 'X');
      c.gauge_generators.push_back(g);
    }
  }
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 2; ++i) {
      PauliString g(9);
      g.set_pauli(site(i, j), 'Z');
      g.set_pauli(site(i + 1, j), 'Z');
      c.gauge_generators.push_back(g);
    }
  }
  c.logical_x = PauliString(9);
  for (int i = 0; i < 3; ++i) c.logical_x.set_pauli(site(i, 0), 'X');
  c.logical_z = PauliString(9);
  for (int j = 0; j < 3; ++j) c.logical_z.set_pauli(site(0, j), 'Z');
  return c;
}

namespace {

// Row-echelon form over the 2n-bit symplectic vectors (x bits then z bits).
struct Gf2Basis {
  std::vector<PauliString> rows;
  std::vector<int> pivots;

  static int bit_at(const PauliString& p, int idx) {
    int n = p.num_qubits();
    return idx < n ? (p.x_bit(idx) ? 1 : 0) : (p.z_bit(idx - n) ? 1 : 0);
  }

  bool reduce(PauliString& p) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (bit_at(p, pivots[r])) p *= rows[r];
    }
    return p.is_identity();
  }

  void insert(PauliString p) {
    if (!reduce(p)) {
      int n = p.num_qubits();
      for (int idx = 0; idx < 2 * n; ++idx) {
        if (bit_at(p, idx)) {
          rows.push_back(std::move(p));
          pivots.push_back(idx);
          return;
        }
      }
    }
  }
};

}  // namespace

int symplectic_rank(const std::vector<PauliString>& ops) {
  Gf2Basis basis;
  for (const auto& op : ops) basis.insert(op);
  return static_cast<int>(basis.rows.size());
}

bool in_span(const std::vector<PauliString>& gens, const PauliString& p) {
  Gf2Basis basis;
  for (const auto& g : gens) basis.insert(g);
  PauliString r = p;
  return basis.reduce(r);
}

PauliString embed(const PauliString& p, int n_total, const std::vector<int>& sites) {
  if (static_cast<int>(sites.size()) != p.num_qubits())
    throw Error("BAD_SITES", "site map length mismatch");
  PauliString out(n_total);
  out.set_phase(p.phase());
  for (int q = 0; q < p.num_qubits(); ++q) {
    if (p.x_bit(q)) out.set_x(sites[static_cast<std::size_t>(q)], true);
    if (p.z_bit(q)) out.set_z(sites[static_cast<std::size_t>(q)], true);
  }
  return out;
}

}  // namespace holoqec
