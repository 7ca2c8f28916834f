#pragma once

#include <optional>
#include <random>
#include <vector>

#include "holoqec/gates.hpp"
#include "holoqec/pauli.hpp"

namespace holoqec {

struct MeasureOutcome {
  int bit = 0;
  bool deterministic = false;
};

using Rng = std::mt19937_64;

// Stabilizer tableau in the Aaronson-Gottesman layout: rows 0..n-1 are
// destabilizers, rows n..2n-1 stabilizers. Row i of each half is paired:
// destabilizer i anticommutes with stabilizer i and commutes with every other
// row. new_state(n) starts in |0...0> (stabilizers +Z_i, destabilizers X_i).
class Tableau {
 public:
  explicit Tableau(int n);

  static Tableau new_state(int n) { return Tableau(n); }

  int num_qubits() const { return n_; }

  const PauliString& destabilizer(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const PauliString& stabilizer(int i) const { return rows_[static_cast<std::size_t>(n_ + i)]; }

  void apply_clifford(GateKind kind, const std::vector<int>& sites);

  // Multiplies the state by a Pauli operator (flips stabilizer signs).
  void apply_pauli(const PauliString& p);

  MeasureOutcome measure_z(int site, Rng& rng);
  MeasureOutcome measure_x(int site, Rng& rng);
  void reset_z(int site, Rng& rng);

  // Z-basis value at `site` if it is determined by the stabilizer group,
  // without disturbing the state.
  std::optional<int> deterministic_z(int site) const;

  // Applies X (or Z) on `target` iff both controls are deterministically |1>.
  // Throws DET_CONTROL_REQUIRED when a control is not a fixed Z eigenstate.
  void apply_toffoli_classical(int c1, int c2, int target, GateKind polarity);

  // Expectation of a Hermitian Pauli: +1 / -1 when the operator is (+/-) an
  // element of the stabilizer group, 0 otherwise.
  int expectation(const PauliString& p) const;

  // Row-reduced canonical stabilizer generators (destabilizers co-updated so
  // the symplectic pairing stays intact).
  Tableau canonical_form() const;

  static bool states_equal(const Tableau& a, const Tableau& b);

  // Canonical generators of the subgroup supported entirely on `sites`
  // (the stabilizer group of the reduced state on that subset).
  std::vector<PauliString> subgroup_on(const std::vector<int>& sites) const;

  bool check_symplectic() const;

  // When >= 0, check_symplectic() runs after every mutation for states with
  // at most this many qubits. Enabled for small states in debug builds.
  static int debug_check_max_qubits;

 private:
  void canonicalize_in_place();
  void row_mult(int dst, int src);  // rows_[dst] <- rows_[dst] * rows_[src]
  void swap_generator_pair(int i, int j);
  PauliString deterministic_observable(int site) const;
  void post_mutation_check() const;

  int n_;
  std::vector<PauliString> rows_;
};

}  // namespace holoqec
