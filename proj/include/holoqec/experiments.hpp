#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holoqec/gadgets.hpp"
#include "holoqec/noise.hpp"
#include "holoqec/semiglobal.hpp"

namespace holoqec {

enum class CodeChoice { QR3, BS9 };

struct McEstimate {
  double p = 0.0;
  long trials = 0;
  long failures = 0;
  double p_logical = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
};

struct FitResult {
  double exponent = 0.0;
  double coefficient_a = 0.0;
  double r_squared = 0.0;
};

struct PseudoThreshold {
  double value = 0.0;
  double lo = 0.0;  // 95% interval from the fit covariance
  double hi = 0.0;
};

struct MemoryResult {
  std::vector<McEstimate> estimates;
  long engine_fallbacks = 0;  // trials that left the classical-control regime
};

// Memory check: ideal logical preparation, one noisy corrector round with
// noisy fresh-ancilla preparation, ideal decode; a trial fails if either the
// |0_L> or the |+_L> run ends with a logical frame != I. Trial i draws its
// randomness from stream (seed, i), so results are independent of `jobs`.
MemoryResult run_memory_exrec(CodeChoice code, int level, const NoiseModel& noise,
                              const std::vector<double>& p_sweep, long trials, std::uint64_t seed,
                              int jobs = 1);

// Least-squares fit of log p_logical against log p over points with at least
// 10 failures; needs >= 3 usable points.
FitResult fit_suppression(const std::vector<McEstimate>& estimates);

// Crossing of the fitted power law with p_logical = p, with a delta-method
// 95% interval. Requires exponent > 1.
PseudoThreshold pseudo_threshold(const std::vector<McEstimate>& estimates);

struct ContainmentReport {
  int planes = 0;
  long runs = 0;
  std::vector<long> plane_failures;  // logical frame != I per plane
  long total_failures = 0;
  bool exhaustive = false;
};

// Stack of encoded planes with alternating orientations: one global T pulse,
// a deliberate Pauli on one vertical column, parallel per-plane correction,
// ideal undo of the pulse and per-plane logical readout. Exhaustive mode
// scans every column position x every nontrivial column Pauli (both logical
// bases); sampled mode draws `trials` random column Paulis.
ContainmentReport run_column_containment(int planes, bool exhaustive, long trials,
                                         std::uint64_t seed);

struct FaultPathReport {
  LatticeDims dims;
  long locations = 0;
  long cases_checked = 0;
  int max_weight_per_plane = 0;
  long violations = 0;
};

// Exhaustive single-fault scan of the expanded T pulse: every location x
// every nontrivial Pauli on its support, propagated to the end; counts the
// touched qubits per z-plane of the image.
FaultPathReport run_t_fault_paths(const LatticeDims& dims);

struct InhomogeneityPoint {
  double theta0 = 0.0;
  double pre_ec_infidelity = 0.0;
  double post_ec_infidelity = 0.0;
};

// Dense run of an inhomogeneous column pulse over `planes` repetition-coded
// planes followed by per-plane majority correction.
std::vector<InhomogeneityPoint> run_inhomogeneity(int planes, const InhomogeneityModel& model,
                                                  const std::vector<double>& theta_sweep,
                                                  std::uint64_t seed);

// CSV rows in the documented schema:
// experiment,code,level,p,trials,failures,p_logical,stderr,seed
std::string estimates_csv(const std::string& experiment, const std::string& code, int level,
                          const std::vector<McEstimate>& estimates);

// Per-trial RNG stream derivation (stable across workers).
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace holoqec
