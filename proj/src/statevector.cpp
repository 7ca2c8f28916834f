#include "holoqec/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "holoqec/error.hpp"

namespace holoqec {

namespace {
constexpr double kPi = 3.14159265358979323846;

// sqrt(X) with sqrt(X)^2 = X exactly.
const cplx kSqrtX[2][2] = {{cplx(0.5, 0.5), cplx(0.5, -0.5)}, {cplx(0.5, -0.5), cplx(0.5, 0.5)}};
const cplx kSqrtXDag[2][2] = {{cplx(0.5, -0.5), cplx(0.5, 0.5)}, {cplx(0.5, 0.5), cplx(0.5, -0.5)}};
const double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

StateVector::StateVector(int n, int cap) : n_(n) {
  if (n < 1) throw Error("BAD_SITES", "state needs at least one qubit");
  if (n > cap) throw Error("CAP_EXCEEDED", "dense amplitude cap exceeded");
  amps_.assign(std::size_t{1} << n, cplx(0.0, 0.0));
  amps_[0] = cplx(1.0, 0.0);
}

void StateVector::check_sites(const std::vector<int>& sites, int arity) const {
  if (static_cast<int>(sites.size()) != arity) throw Error("BAD_SITES", "wrong operand count");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= n_) throw Error("BAD_SITES", "site out of range");
    for (std::size_t j = i + 1; j < sites.size(); ++j)
      if (sites[i] == sites[j]) throw Error("BAD_SITES", "sites must be distinct");
  }
}

void StateVector::apply_unitary1(int site, const cplx u[2][2]) {
  std::uint64_t bit = std::uint64_t{1} << site;
  std::uint64_t dim = amps_.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    cplx a0 = amps_[i], a1 = amps_[i | bit];
    amps_[i] = u[0][0] * a0 + u[0][1] * a1;
    amps_[i | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void StateVector::apply_gate(GateKind kind, const std::vector<int>& sites, double param) {
  check_sites(sites, gate_arity(kind));
  std::uint64_t dim = amps_.size();
  switch (kind) {
    case GateKind::H: {
      const cplx u[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
      apply_unitary1(sites[0], u);
      return;
    }
    case GateKind::X: {
      std::uint64_t bit = std::uint64_t{1} << sites[0];
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
      return;
    }
    case GateKind::Y: {
      const cplx u[2][2] = {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
      apply_unitary1(sites[0], u);
      return;
    }
    case GateKind::Z: {
      std::uint64_t bit = std::uint64_t{1} << sites[0];
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & bit) amps_[i] = -amps_[i];
      return;
    }
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::ZQUARTER: {
      cplx ph = kind == GateKind::S     ? cplx(0.0, 1.0)
                : kind == GateKind::Sdg ? cplx(0.0, -1.0)
                                        : std::polar(1.0, kPi / 4.0);
      std::uint64_t bit = std::uint64_t{1} << sites[0];
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & bit) amps_[i] *= ph;
      return;
    }
    case GateKind::ROT_X:
    case GateKind::ROT_Y:
    case GateKind::ROT_Z: {
      // exp(i * theta * G) = cos(theta) I + i sin(theta) G
      cplx c(std::cos(param), 0.0), is(0.0, std::sin(param));
      cplx u[2][2];
      if (kind == GateKind::ROT_X) {
        u[0][0] = c; u[0][1] = is; u[1][0] = is; u[1][1] = c;
      } else if (kind == GateKind::ROT_Y) {
        u[0][0] = c; u[0][1] = std::sin(param); u[1][0] = -std::sin(param); u[1][1] = c;
      } else {
        u[0][0] = c + is; u[0][1] = 0.0; u[1][0] = 0.0; u[1][1] = c - is;
      }
      apply_unitary1(sites[0], u);
      return;
    }
    case GateKind::CZ: {
      std::uint64_t m = (std::uint64_t{1} << sites[0]) | (std::uint64_t{1} << sites[1]);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & m) == m) amps_[i] = -amps_[i];
      return;
    }
    case GateKind::CNOT: {
      std::uint64_t c = std::uint64_t{1} << sites[0], t = std::uint64_t{1} << sites[1];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
      return;
    }
    case GateKind::SWAP: {
      std::uint64_t a = std::uint64_t{1} << sites[0], b = std::uint64_t{1} << sites[1];
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & a) && !(i & b)) std::swap(amps_[i], amps_[(i & ~a) | b]);
      }
      return;
    }
    case GateKind::TOFFOLI: {
      std::uint64_t c = (std::uint64_t{1} << sites[0]) | (std::uint64_t{1} << sites[1]);
      std::uint64_t t = std::uint64_t{1} << sites[2];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & c) == c && !(i & t)) std::swap(amps_[i], amps_[i | t]);
      return;
    }
    case GateKind::Z_TOFFOLI: {
      std::uint64_t m = (std::uint64_t{1} << sites[0]) | (std::uint64_t{1} << sites[1]) |
                        (std::uint64_t{1} << sites[2]);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & m) == m) amps_[i] = -amps_[i];
      return;
    }
    case GateKind::CXHALF:
    case GateKind::CXHALF_DG: {
      const cplx(*u)[2] = kind == GateKind::CXHALF ? kSqrtX : kSqrtXDag;
      std::uint64_t c = std::uint64_t{1} << sites[0], t = std::uint64_t{1} << sites[1];
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & c) && !(i & t)) {
          cplx a0 = amps_[i], a1 = amps_[i | t];
          amps_[i] = u[0][0] * a0 + u[0][1] * a1;
          amps_[i | t] = u[1][0] * a0 + u[1][1] * a1;
        }
      }
      return;
    }
    case GateKind::WAIT:
      return;
    default:
      throw Error("BAD_SITES", std::string("gate has no unitary action: ") + std::string(gate_name(kind)));
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.num_qubits() != n_) throw Error("BAD_SITES", "pauli length mismatch");
  std::uint64_t dim = amps_.size();
  std::uint64_t xmask = 0, zmask = 0;
  for (int q = 0; q < n_; ++q) {
    if (p.x_bit(q)) xmask |= std::uint64_t{1} << q;
    if (p.z_bit(q)) zmask |= std::uint64_t{1} << q;
  }
  static const cplx kI[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  cplx global = kI[p.phase() & 3];
  std::vector<cplx> out(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    // i^phase X^x Z^z |i> = i^phase (-1)^{z.i} |i ^ x>
    cplx v = amps_[i] * global;
    if (std::popcount(i & zmask) & 1) v = -v;
    out[i ^ xmask] = v;
  }
  amps_ = std::move(out);
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::prob_of_bit(int site, int value) const {
  std::uint64_t bit = std::uint64_t{1} << site;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) == (value != 0)) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::collapse(int site, int value) {
  double p = prob_of_bit(site, value);
  if (p <= 1e-14) return 0.0;
  std::uint64_t bit = std::uint64_t{1} << site;
  double inv = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (((i & bit) != 0) == (value != 0))
      amps_[i] *= inv;
    else
      amps_[i] = 0.0;
  }
  return p;
}

cplx StateVector::inner_product(const StateVector& other) const {
  if (other.n_ != n_) throw Error("DIM_MISMATCH", "qubit counts differ");
  cplx s(0.0, 0.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

double StateVector::expectation(const PauliString& p) const {
  StateVector tmp = *this;
  tmp.apply_pauli(p);
  return inner_product(tmp).real();
}

double StateVector::fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(a.inner_product(b));
}

std::vector<std::vector<cplx>> StateVector::reduced_density_matrix(
    const std::vector<int>& subset) const {
  if (subset.size() > 16) throw Error("BAD_SITES", "subset too large");
  for (int s : subset)
    if (s < 0 || s >= n_) throw Error("BAD_SITES", "site out of range");
  std::size_t dimA = std::size_t{1} << subset.size();
  std::vector<std::vector<cplx>> rho(dimA, std::vector<cplx>(dimA, cplx(0, 0)));

  std::uint64_t subset_mask = 0;
  for (int s : subset) subset_mask |= std::uint64_t{1} << s;
  std::vector<int> env;
  for (int q = 0; q < n_; ++q)
    if (!(subset_mask & (std::uint64_t{1} << q))) env.push_back(q);

  auto scatter = [&](std::size_t ia) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < subset.size(); ++k)
      if (ia & (std::size_t{1} << k)) v |= std::uint64_t{1} << subset[k];
    return v;
  };
  std::vector<std::uint64_t> sub_bits(dimA);
  for (std::size_t ia = 0; ia < dimA; ++ia) sub_bits[ia] = scatter(ia);

  std::uint64_t env_count = std::uint64_t{1} << env.size();
  for (std::uint64_t e = 0; e < env_count; ++e) {
    std::uint64_t base = 0;
    for (std::size_t k = 0; k < env.size(); ++k)
      if (e & (std::uint64_t{1} << k)) base |= std::uint64_t{1} << env[k];
    for (std::size_t ia = 0; ia < dimA; ++ia) {
      cplx ai = amps_[base | sub_bits[ia]];
      if (ai == cplx(0.0, 0.0)) continue;
      for (std::size_t ja = 0; ja < dimA; ++ja)
        rho[ia][ja] += ai * std::conj(amps_[base | sub_bits[ja]]);
    }
  }
  return rho;
}

namespace {

// Cyclic Jacobi eigenvalues of a Hermitian matrix (small dimensions only).
std::vector<double> hermitian_eigenvalues(std::vector<std::vector<cplx>> m) {
  std::size_t dim = m.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = p + 1; q < dim; ++q) off += std::norm(m[p][q]);
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        // Unitary 2x2 diagonalization of the (p,q) block.
        double app = m[p][p].real(), aqq = m[q][q].real();
        cplx apq = m[p][q];
        double absapq = std::abs(apq);
        double tau = (aqq - app) / (2.0 * absapq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        cplx phase = apq / absapq;
        // rows/cols update: [c, s*conj(phase); -s*phase, c]-style rotation
        for (std::size_t k = 0; k < dim; ++k) {
          cplx mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * std::conj(phase) * mkq;
          m[k][q] = s * phase * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          cplx mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * phase * mqk;
          m[q][k] = s * std::conj(phase) * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eig(dim);
  for (std::size_t i = 0; i < dim; ++i) eig[i] = m[i][i].real();
  return eig;
}

}  // namespace

double trace_distance(const std::vector<std::vector<cplx>>& rho,
                      const std::vector<std::vector<cplx>>& sigma) {
  if (rho.size() != sigma.size()) throw Error("DIM_MISMATCH", "density matrix dims differ");
  std::vector<std::vector<cplx>> diff(rho.size(), std::vector<cplx>(rho.size()));
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = 0; j < rho.size(); ++j) diff[i][j] = rho[i][j] - sigma[i][j];
  double td = 0.0;
  for (double e : hermitian_eigenvalues(std::move(diff))) td += std::abs(e);
  return 0.5 * td;
}

bool reduced_state_match(const StateVector& a, const std::vector<int>& subsetA,
                         const StateVector& b, const std::vector<int>& subsetB, double tol) {
  if (subsetA.size() != subsetB.size()) throw Error("BAD_SITES", "subset sizes differ");
  auto ra = a.reduced_density_matrix(subsetA);
  auto rb = b.reduced_density_matrix(subsetB);
  return trace_distance(ra, rb) <= tol;
}

BranchSet measure_enumerate(const StateVector& sv, const std::vector<int>& sites, MeasBasis basis) {
  if (sites.size() > 20) throw Error("BAD_SITES", "too many measured sites");
  for (int s : sites)
    if (s < 0 || s >= sv.num_qubits()) throw Error("BAD_SITES", "site out of range");
  StateVector work = sv;
  if (basis == MeasBasis::X)
    for (int s : sites) work.apply_gate(GateKind::H, {s});

  BranchSet out;
  out.sites = sites;
  std::uint64_t count = std::uint64_t{1} << sites.size();
  for (std::uint64_t outcome = 0; outcome < count; ++outcome) {
    StateVector branch = work;
    double p = 1.0;
    bool dead = false;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      double pk = branch.collapse(sites[k], (outcome >> k) & 1);
      if (pk == 0.0) {
        dead = true;
        break;
      }
      p *= pk;
    }
    if (dead || p < 1e-12) continue;
    if (basis == MeasBasis::X)
      for (int s : sites) branch.apply_gate(GateKind::H, {s});
    out.branches.push_back({outcome, p, std::move(branch)});
  }
  return out;
}

}  // namespace holoqec
