#include "holoqec/tableau.hpp"

#include <cassert>

#include "holoqec/error.hpp"

namespace holoqec {

#ifdef NDEBUG
int Tableau::debug_check_max_qubits = -1;
#else
int Tableau::debug_check_max_qubits = 16;
#endif

Tableau::Tableau(int n) : n_(n) {
  if (n < 1) throw Error("BAD_SITES", "tableau needs at least one qubit");
  rows_.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    PauliString d(n);
    d.set_x(i, true);
    rows_.push_back(std::move(d));
  }
  for (int i = 0; i < n; ++i) {
    PauliString s(n);
    s.set_z(i, true);
    rows_.push_back(std::move(s));
  }
}

void Tableau::post_mutation_check() const {
  if (debug_check_max_qubits >= 0 && n_ <= debug_check_max_qubits) {
    assert(check_symplectic());
  }
}

bool Tableau::check_symplectic() const {
  for (int i = 0; i < 2 * n_; ++i) {
    for (int j = i; j < 2 * n_; ++j) {
      bool anti = !rows_[static_cast<std::size_t>(i)].commutes_with(rows_[static_cast<std::size_t>(j)]);
      bool want = (j == i + n_);
      if (anti != want) return false;
    }
  }
  for (int i = n_; i < 2 * n_; ++i) {
    int y = 0;
    for (int q = 0; q < n_; ++q)
      if (rows_[static_cast<std::size_t>(i)].pauli_at(q) == 3) ++y;
    int r = ((rows_[static_cast<std::size_t>(i)].phase() - y) % 4 + 4) % 4;
    if (r != 0 && r != 2) return false;  // stabilizers must be Hermitian
  }
  return true;
}

void Tableau::apply_clifford(GateKind kind, const std::vector<int>& sites) {
  int arity = gate_arity(kind);
  if (static_cast<int>(sites.size()) != arity) throw Error("BAD_SITES", "wrong operand count");
  for (int s : sites)
    if (s < 0 || s >= n_) throw Error("BAD_SITES", "site out of range");
  if (arity == 2 && sites[0] == sites[1]) throw Error("BAD_SITES", "sites must be distinct");

  for (auto& row : rows_) {
    switch (kind) {
      case GateKind::H: row.conj_h(sites[0]); break;
      case GateKind::X: row.conj_x(sites[0]); break;
      case GateKind::Y: row.conj_y(sites[0]); break;
      case GateKind::Z: row.conj_z(sites[0]); break;
      case GateKind::S: row.conj_s(sites[0]); break;
      case GateKind::Sdg: row.conj_sdg(sites[0]); break;
      case GateKind::CZ: row.conj_cz(sites[0], sites[1]); break;
      case GateKind::CNOT: row.conj_cnot(sites[0], sites[1]); break;
      case GateKind::SWAP: row.conj_swap(sites[0], sites[1]); break;
      case GateKind::WAIT: return;
      default: throw Error("NON_CLIFFORD", std::string("not a tableau gate: ") + std::string(gate_name(kind)));
    }
  }
  post_mutation_check();
}

void Tableau::apply_pauli(const PauliString& p) {
  if (p.num_qubits() != n_) throw Error("BAD_SITES", "pauli length mismatch");
  for (int i = n_; i < 2 * n_; ++i) {
    if (!rows_[static_cast<std::size_t>(i)].commutes_with(p)) rows_[static_cast<std::size_t>(i)].mul_phase(2);
  }
  post_mutation_check();
}

void Tableau::row_mult(int dst, int src) {
  rows_[static_cast<std::size_t>(dst)] *= rows_[static_cast<std::size_t>(src)];
}

void Tableau::swap_generator_pair(int i, int j) {
  std::swap(rows_[static_cast<std::size_t>(n_ + i)], rows_[static_cast<std::size_t>(n_ + j)]);
  std::swap(rows_[static_cast<std::size_t>(i)], rows_[static_cast<std::size_t>(j)]);
}

PauliString Tableau::deterministic_observable(int site) const {
  PauliString acc(n_);
  for (int i = 0; i < n_; ++i) {
    if (rows_[static_cast<std::size_t>(i)].x_bit(site)) acc *= rows_[static_cast<std::size_t>(n_ + i)];
  }
  return acc;
}

std::optional<int> Tableau::deterministic_z(int site) const {
  if (site < 0 || site >= n_) throw Error("BAD_SITES", "site out of range");
  for (int i = n_; i < 2 * n_; ++i) {
    if (rows_[static_cast<std::size_t>(i)].x_bit(site)) return std::nullopt;
  }
  PauliString acc = deterministic_observable(site);
  // acc is +/- Z_site; its sign is the measurement value.
  return acc.phase() == 2 ? 1 : 0;
}

MeasureOutcome Tableau::measure_z(int site, Rng& rng) {
  if (site < 0 || site >= n_) throw Error("BAD_SITES", "site out of range");
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (rows_[static_cast<std::size_t>(i)].x_bit(site)) {
      p = i;
      break;
    }
  }
  if (p < 0) {
    PauliString acc = deterministic_observable(site);
    return {acc.phase() == 2 ? 1 : 0, true};
  }
  for (int i = 0; i < 2 * n_; ++i) {
    if (i != p && rows_[static_cast<std::size_t>(i)].x_bit(site)) row_mult(i, p);
  }
  rows_[static_cast<std::size_t>(p - n_)] = rows_[static_cast<std::size_t>(p)];
  int bit = static_cast<int>(rng() & 1u);
  PauliString z(n_);
  z.set_z(site, true);
  z.set_phase(bit ? 2 : 0);
  rows_[static_cast<std::size_t>(p)] = std::move(z);
  post_mutation_check();
  return {bit, false};
}

MeasureOutcome Tableau::measure_x(int site, Rng& rng) {
  apply_clifford(GateKind::H, {site});
  MeasureOutcome m = measure_z(site, rng);
  apply_clifford(GateKind::H, {site});
  return m;
}

void Tableau::reset_z(int site, Rng& rng) {
  MeasureOutcome m = measure_z(site, rng);
  if (m.bit) apply_clifford(GateKind::X, {site});
}

void Tableau::apply_toffoli_classical(int c1, int c2, int target, GateKind polarity) {
  if (polarity != GateKind::TOFFOLI && polarity != GateKind::Z_TOFFOLI)
    throw Error("BAD_SITES", "polarity must be TOFFOLI or Z_TOFFOLI");
  auto v1 = deterministic_z(c1);
  auto v2 = deterministic_z(c2);
  if (!v1 || !v2)
    throw Error("DET_CONTROL_REQUIRED",
                "toffoli control is not a deterministic Z eigenstate; dense simulation required");
  if (*v1 && *v2) {
    apply_clifford(polarity == GateKind::TOFFOLI ? GateKind::X : GateKind::Z, {target});
  }
}

int Tableau::expectation(const PauliString& p) const {
  if (p.num_qubits() != n_) throw Error("BAD_SITES", "pauli length mismatch");
  // If p is in +/-S it equals prod stab_i over the i whose destabilizer
  // anticommutes with p (destabilizer i anticommutes with stabilizer i only).
  PauliString acc(n_);
  for (int i = 0; i < n_; ++i) {
    if (!rows_[static_cast<std::size_t>(i)].commutes_with(p)) acc *= rows_[static_cast<std::size_t>(n_ + i)];
  }
  if (!acc.bits_equal(p)) return 0;
  int d = ((acc.phase() - p.phase()) % 4 + 4) % 4;
  return d == 0 ? 1 : -1;
}

void Tableau::canonicalize_in_place() {
  int r = n_;  // next stabilizer row to fill
  for (int q = 0; q < n_ && r < 2 * n_; ++q) {
    int pivot = -1;
    for (int i = r; i < 2 * n_; ++i) {
      if (rows_[static_cast<std::size_t>(i)].x_bit(q)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    swap_generator_pair(pivot - n_, r - n_);
    for (int i = n_; i < 2 * n_; ++i) {
      if (i != r && rows_[static_cast<std::size_t>(i)].x_bit(q)) {
        row_mult(i, r);
        row_mult(r - n_, i - n_);
      }
    }
    ++r;
  }
  for (int q = 0; q < n_ && r < 2 * n_; ++q) {
    int pivot = -1;
    for (int i = r; i < 2 * n_; ++i) {
      if (rows_[static_cast<std::size_t>(i)].z_bit(q)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    swap_generator_pair(pivot - n_, r - n_);
    for (int i = n_; i < 2 * n_; ++i) {
      if (i != r && rows_[static_cast<std::size_t>(i)].z_bit(q) && !rows_[static_cast<std::size_t>(i)].x_bit(q)) {
        row_mult(i, r);
        row_mult(r - n_, i - n_);
      }
    }
    ++r;
  }
  post_mutation_check();
}

Tableau Tableau::canonical_form() const {
  Tableau t = *this;
  t.canonicalize_in_place();
  return t;
}

bool Tableau::states_equal(const Tableau& a, const Tableau& b) {
  if (a.n_ != b.n_) return false;
  Tableau ca = a.canonical_form();
  Tableau cb = b.canonical_form();
  for (int i = a.n_; i < 2 * a.n_; ++i) {
    const PauliString& ra = ca.rows_[static_cast<std::size_t>(i)];
    const PauliString& rb = cb.rows_[static_cast<std::size_t>(i)];
    if (!ra.bits_equal(rb) || ra.hermitian_sign() != rb.hermitian_sign()) return false;
  }
  return true;
}

std::vector<PauliString> Tableau::subgroup_on(const std::vector<int>& sites) const {
  std::vector<bool> keep(static_cast<std::size_t>(n_), false);
  for (int s : sites) {
    if (s < 0 || s >= n_) throw Error("BAD_SITES", "site out of range");
    keep[static_cast<std::size_t>(s)] = true;
  }
  // Gaussian-eliminate with the complement qubits as leading columns; rows
  // that end with no support there generate the subgroup on `sites`.
  std::vector<PauliString> gens;
  for (int i = n_; i < 2 * n_; ++i) gens.push_back(rows_[static_cast<std::size_t>(i)]);
  std::size_t r = 0;
  auto eliminate = [&](int q, bool xpass) {
    std::size_t pivot = gens.size();
    for (std::size_t i = r; i < gens.size(); ++i) {
      bool hit = xpass ? gens[i].x_bit(q) : (gens[i].z_bit(q) && !gens[i].x_bit(q));
      if (hit) {
        pivot = i;
        break;
      }
    }
    if (pivot == gens.size()) return;
    std::swap(gens[pivot], gens[r]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == r) continue;
      bool hit = xpass ? gens[i].x_bit(q) : (gens[i].z_bit(q) && !gens[i].x_bit(q));
      if (hit) gens[i] *= gens[r];
    }
    ++r;
  };
  for (int q = 0; q < n_; ++q)
    if (!keep[static_cast<std::size_t>(q)]) eliminate(q, true);
  for (int q = 0; q < n_; ++q)
    if (!keep[static_cast<std::size_t>(q)]) eliminate(q, false);

  std::vector<PauliString> out;
  for (std::size_t i = r; i < gens.size(); ++i) {
    bool clean = true;
    for (int q = 0; q < n_ && clean; ++q) {
      if (!keep[static_cast<std::size_t>(q)] && gens[i].pauli_at(q) != 0) clean = false;
    }
    if (clean && !gens[i].is_identity()) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace holoqec
