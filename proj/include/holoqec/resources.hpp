#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holoqec {

// Threshold constants used by the scaling formulas. The Hadamard-ancilla
// bound is computed from its closed form sin^2(pi/8), never stored rounded.
struct ThresholdConstants {
  double p_thresh_toffoli = 3.76e-5;   // gate+prep threshold, Toffoli library
  double p_thresh_two_qubit = 2.68e-5; // gate+prep threshold, 1-2 qubit library
  double p_meas_thresh = 1.0 / 3.0;
  double p_h_anc_thresh;               // sin^2(pi/8)
  double p_i_anc_thresh = 0.5;
  double p_thresh_measured = 1.2e-4;   // measured-gadget architecture

  ThresholdConstants();
};

struct ResourceParams {
  long n_c = 1;          // logical qubits
  int n_ec = 9;          // physical qubits per code block
  int n_a = 18;          // encoded ancillas per corrector
  int n_b = 6;           // classically encoded ancillas per corrector
  int n_a_prime = 18;    // measured-gadget ancillas
  double epsilon = 0.03; // target overall failure
  double p0 = 1e-6;      // physical error rate
  double beta = 8.0;     // circuit size f = beta * n_c^t
  double t_power = 4.0;
  double pulse_factor = 0.0;  // semi-global circuit-size multiplier; 0 -> 4*n_c

  double f_uadd() const;
  double f_sg() const;
  double effective_pulse_factor() const;
};

// k = log2[ log((eps/p_thresh)/f) / log(p0/p_thresh) ]
double concat_level(double epsilon, double p0, double p_thresh, double f);

// p_thresh * (p0/p_thresh)^(2^k); agrees with iterated squaring to 1e-12.
double recursion_check(double p0, double p_thresh, int k);
double recursion_iterative(double p0, double p_thresh, int k);

// control counts
long long controls_semiglobal(int k);                  // (nEC+nA) 9^(k-1) + nB 3^(k-1)
long long controls_uadd(long n_c, int k);              // n_c * controls_semiglobal(k)
long long controls_madd(long n_c, int k_prime);        // n_c * (nEC+nA') 9^(k'-1)

// closed forms for the concatenation-depth gaps
double delta_k(long n_c, double beta, double t_power, double p_thresh, double epsilon);
double delta_k_prime(const ResourceParams& params, const ThresholdConstants& consts);

struct ResourceReport {
  ResourceParams params;
  double k_uadd_real = 0, k_sg_real = 0, k_prime_real = 0;
  int k_uadd = 0, k_sg = 0, k_prime = 0;
  double delta_k_real = 0, delta_k_prime_real = 0;
  int cap_delta_k = 0, cap_delta_k_prime = 0;
  long long n_uadd = 0, n_sg = 0, n_madd = 0;
  double ratio_uadd_direct = 0, ratio_madd_direct = 0;
  double ratio_uadd_closed = 0;        // derivation-backed closed form
  double ratio_uadd_closed_printed = 0;  // the (2+3^{2+k}) variant
  bool significant_advantage = false;
  std::vector<std::string> warnings;

  std::string to_text() const;
  std::string to_csv() const;
};

ResourceReport resource_report(const ResourceParams& params,
                               const ThresholdConstants& consts = ThresholdConstants());

// Shor factoring instance: n_c = 2N+4, f = 8N^4, eps = 0.03.
ResourceParams shor_params(long bits);

}  // namespace holoqec
