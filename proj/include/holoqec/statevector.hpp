#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "holoqec/gates.hpp"
#include "holoqec/pauli.hpp"

namespace holoqec {

using cplx = std::complex<double>;

enum class MeasBasis { Z, X };

// Exact amplitude-vector simulator for the small non-Clifford circuits
// (encoders, boundary gadgets, coherent over-rotations) and for oracle
// cross-checks of the stabilizer engine. Qubit q is bit q of the basis index.
class StateVector {
 public:
  static constexpr int kDefaultCap = 22;

  explicit StateVector(int n, int cap = kDefaultCap);

  int num_qubits() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& amplitudes() { return amps_; }

  void apply_gate(GateKind kind, const std::vector<int>& sites, double param = 0.0);
  void apply_unitary1(int site, const cplx u[2][2]);
  void apply_pauli(const PauliString& p);

  double norm_sq() const;
  double prob_of_bit(int site, int value) const;

  // Projects `site` onto `value` and renormalizes. Returns the branch
  // probability (0 if impossible; the state is left untouched then).
  double collapse(int site, int value);

  cplx inner_product(const StateVector& other) const;  // <this|other>
  double expectation(const PauliString& p) const;      // <psi|P|psi>, real part

  static double fidelity(const StateVector& a, const StateVector& b);

  std::vector<std::vector<cplx>> reduced_density_matrix(const std::vector<int>& subset) const;

 private:
  void check_sites(const std::vector<int>& sites, int arity) const;

  int n_;
  std::vector<cplx> amps_;
};

struct Branch {
  std::uint64_t outcome = 0;  // bit i of outcome = result for sites[i]
  double probability = 0.0;
  StateVector state;
};

struct BranchSet {
  std::vector<int> sites;
  std::vector<Branch> branches;  // zero-probability branches omitted
};

BranchSet measure_enumerate(const StateVector& sv, const std::vector<int>& sites, MeasBasis basis);

// Trace distance between reduced states on two site subsets (possibly of two
// different registers); true when within `tol`.
bool reduced_state_match(const StateVector& a, const std::vector<int>& subsetA,
                         const StateVector& b, const std::vector<int>& subsetB,
                         double tol = 1e-8);

// 0.5 * sum |eigenvalues| of the Hermitian difference of two density matrices.
double trace_distance(const std::vector<std::vector<cplx>>& rho,
                      const std::vector<std::vector<cplx>>& sigma);

}  // namespace holoqec
