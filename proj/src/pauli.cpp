#include "holoqec/pauli.hpp"

#include <bit>

namespace holoqec {

namespace {
std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

int popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}
}  // namespace

PauliString::PauliString(int n) : n_(n), xw_(words_for(n), 0), zw_(words_for(n), 0) {
  if (n < 0) throw Error("BAD_SITES", "negative qubit count");
}

PauliString PauliString::from_label(const std::string& label) {
  std::size_t i = 0;
  int phase = 0;
  if (i < label.size() && (label[i] == '+' || label[i] == '-')) {
    if (label[i] == '-') phase = 2;
    ++i;
    if (i < label.size() && label[i] == 'i') {
      phase += 1;
      ++i;
    }
  }
  PauliString p(static_cast<int>(label.size() - i));
  p.set_phase(phase);
  for (int q = 0; i < label.size(); ++i, ++q) p.set_pauli(q, label[i]);
  return p;
}

PauliString PauliString::single(int n, int site, char pauli) {
  PauliString p(n);
  p.set_pauli(site, pauli);
  return p;
}

void PauliString::set_pauli(int q, char pauli) {
  switch (pauli) {
    case 'I':
    case 'i':
      break;
    case 'X':
    case 'x':
      set_x(q, true);
      break;
    case 'Y':
    case 'y':
      set_x(q, true);
      set_z(q, true);
      mul_phase(1);  // Y = i X Z
      break;
    case 'Z':
    case 'z':
      set_z(q, true);
      break;
    default:
      throw Error("BAD_SITES", std::string("invalid pauli letter '") + pauli + "'");
  }
}

void PauliString::clear_site(int q) {
  set_x(q, false);
  set_z(q, false);
}

bool PauliString::is_identity() const {
  for (std::size_t i = 0; i < xw_.size(); ++i)
    if (xw_[i] | zw_[i]) return false;
  return true;
}

int PauliString::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < xw_.size(); ++i) w += std::popcount(xw_[i] | zw_[i]);
  return w;
}

int PauliString::hermitian_sign() const {
  int y = popcount_and(xw_, zw_);
  int r = ((phase_ - y) % 4 + 4) % 4;
  if (r == 0) return 1;
  if (r == 2) return -1;
  throw Error("NON_HERMITIAN", "pauli string has imaginary overall phase");
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.n_ != n_) throw Error("BAD_SITES", "pauli length mismatch");
  // (X^a Z^b)(X^c Z^d): moving Z^b past X^c contributes (-1)^{b&c}.
  mul_phase(rhs.phase_ + 2 * popcount_and(zw_, rhs.xw_));
  for (std::size_t i = 0; i < xw_.size(); ++i) {
    xw_[i] ^= rhs.xw_[i];
    zw_[i] ^= rhs.zw_[i];
  }
  return *this;
}

bool PauliString::commutes_with(const PauliString& o) const {
  int anti = popcount_and(xw_, o.zw_) + popcount_and(zw_, o.xw_);
  return (anti & 1) == 0;
}

void PauliString::conj_h(int q) {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) mul_phase(2);
  set_x(q, z);
  set_z(q, x);
}

void PauliString::conj_s(int q) {
  if (x_bit(q)) {
    mul_phase(1);
    set_z(q, !z_bit(q));
  }
}

void PauliString::conj_sdg(int q) {
  if (x_bit(q)) {
    mul_phase(3);
    set_z(q, !z_bit(q));
  }
}

void PauliString::conj_x(int q) {
  if (z_bit(q)) mul_phase(2);
}

void PauliString::conj_y(int q) {
  if (x_bit(q) != z_bit(q)) mul_phase(2);
}

void PauliString::conj_z(int q) {
  if (x_bit(q)) mul_phase(2);
}

void PauliString::conj_cnot(int c, int t) {
  // X_c -> X_c X_t, Z_t -> Z_c Z_t; no phase in the X^x Z^z convention.
  set_x(t, x_bit(t) ^ x_bit(c));
  set_z(c, z_bit(c) ^ z_bit(t));
}

void PauliString::conj_cz(int a, int b) {
  if (x_bit(a) && x_bit(b)) mul_phase(2);
  set_z(a, z_bit(a) ^ x_bit(b));
  set_z(b, z_bit(b) ^ x_bit(a));
}

void PauliString::conj_swap(int a, int b) {
  bool xa = x_bit(a), za = z_bit(a);
  set_x(a, x_bit(b));
  set_z(a, z_bit(b));
  set_x(b, xa);
  set_z(b, za);
}

std::string PauliString::label() const {
  int y = popcount_and(xw_, zw_);
  int r = ((phase_ - y) % 4 + 4) % 4;
  static const char* kSign[4] = {"+", "+i", "-", "-i"};
  std::string out = kSign[r];
  out.reserve(out.size() + static_cast<std::size_t>(n_));
  static const char kLetter[4] = {'I', 'X', 'Z', 'Y'};
  for (int q = 0; q < n_; ++q) out += kLetter[pauli_at(q)];
  return out;
}

}  // namespace holoqec
