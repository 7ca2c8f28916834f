#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holoqec/error.hpp"

namespace holoqec {

// n-qubit Pauli operator stored as i^phase * prod_q X_q^{x_q} Z_q^{z_q}.
// phase is the exponent of i, mod 4. In this convention Y = i*X*Z has
// x=1, z=1, phase=1 as a single-qubit operator; Hermitian operators carry
// phase 0 or 2 plus one extra i per Y factor, i.e. phase == y_count (mod 2).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);

  // Accepts optional sign prefix ("+", "-", "+i", "-i") then one of IXYZ per qubit.
  static PauliString from_label(const std::string& label);

  static PauliString single(int n, int site, char pauli);  // pauli in {X,Y,Z}

  int num_qubits() const { return n_; }

  bool x_bit(int q) const { return bit(xw_, q); }
  bool z_bit(int q) const { return bit(zw_, q); }
  void set_x(int q, bool v) { set_bit(xw_, q, v); }
  void set_z(int q, bool v) { set_bit(zw_, q, v); }

  // 0=I, 1=X, 2=Z, 3=Y at qubit q.
  int pauli_at(int q) const { return (x_bit(q) ? 1 : 0) | (z_bit(q) ? 2 : 0); }
  void set_pauli(int q, char pauli);
  void clear_site(int q);

  int phase() const { return phase_; }
  void set_phase(int k) { phase_ = ((k % 4) + 4) % 4; }
  void mul_phase(int k) { set_phase(phase_ + k); }

  bool is_identity() const;
  int weight() const;

  // Hermitian sign: for operators with phase == y_count mod 2 the operator is
  // (+/-) a tensor of I,X,Y,Z; returns +1 or -1. Throws if not Hermitian.
  int hermitian_sign() const;

  // this <- this * rhs (operator product, phases tracked mod 4).
  PauliString& operator*=(const PauliString& rhs);

  bool commutes_with(const PauliString& o) const;

  bool bits_equal(const PauliString& o) const { return xw_ == o.xw_ && zw_ == o.zw_; }
  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && phase_ == o.phase_ && bits_equal(o);
  }

  // In-place Clifford conjugation P -> U P U^dagger for the named gate.
  void conj_h(int q);
  void conj_s(int q);
  void conj_sdg(int q);
  void conj_x(int q);
  void conj_y(int q);
  void conj_z(int q);
  void conj_cnot(int c, int t);
  void conj_cz(int a, int b);
  void conj_swap(int a, int b);

  std::string label() const;  // e.g. "+XIZ" / "-iYZ"

  const std::vector<std::uint64_t>& x_words() const { return xw_; }
  const std::vector<std::uint64_t>& z_words() const { return zw_; }

 private:
  static bool bit(const std::vector<std::uint64_t>& w, int q) {
    return (w[static_cast<std::size_t>(q) >> 6] >> (q & 63)) & 1u;
  }
  static void set_bit(std::vector<std::uint64_t>& w, int q, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (q & 63);
    if (v)
      w[static_cast<std::size_t>(q) >> 6] |= mask;
    else
      w[static_cast<std::size_t>(q) >> 6] &= ~mask;
  }

  int n_ = 0;
  int phase_ = 0;  // exponent of i, mod 4
  std::vector<std::uint64_t> xw_;
  std::vector<std::uint64_t> zw_;
};

}  // namespace holoqec
