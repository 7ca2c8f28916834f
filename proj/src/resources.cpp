#include "holoqec/resources.hpp"

#include <cmath>
#include <sstream>

#include "holoqec/error.hpp"

namespace holoqec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ThresholdConstants::ThresholdConstants() {
  double s = std::sin(kPi / 8.0);
  p_h_anc_thresh = s * s;
}

double ResourceParams::effective_pulse_factor() const {
  return pulse_factor > 0.0 ? pulse_factor : 4.0 * static_cast<double>(n_c);
}

double ResourceParams::f_uadd() const {
  return beta * std::pow(static_cast<double>(n_c), t_power);
}

double ResourceParams::f_sg() const { return f_uadd() * effective_pulse_factor(); }

double concat_level(double epsilon, double p0, double p_thresh, double f) {
  if (!(p0 > 0) || !(p_thresh > 0) || !(epsilon > 0) || !(f > 0))
    throw Error("CONCAT_HARMFUL", "parameters must be positive");
  if (p0 >= p_thresh)
    throw Error("CONCAT_HARMFUL", "physical rate at or above threshold: concatenation cannot help");
  double target = (epsilon / p_thresh) / f;
  if (target >= 1.0)
    return 0.0;  // already accurate enough without encoding
  double num = std::log(target);
  double den = std::log(p0 / p_thresh);
  return std::log2(num / den);
}

double recursion_check(double p0, double p_thresh, int k) {
  if (k < 0) throw Error("BAD_LEVEL", "negative level");
  return p_thresh * std::pow(p0 / p_thresh, std::pow(2.0, k));
}

double recursion_iterative(double p0, double p_thresh, int k) {
  double p = p0;
  for (int i = 0; i < k; ++i) p = p * p / p_thresh;
  return p;
}

long long controls_semiglobal(int k) {
  if (k < 1) throw Error("BAD_LEVEL", "level must be >= 1");
  long long pow9 = 1, pow3 = 1;
  for (int i = 1; i < k; ++i) {
    pow9 *= 9;
    pow3 *= 3;
  }
  return 27LL * pow9 + 6LL * pow3;
}

long long controls_uadd(long n_c, int k) { return static_cast<long long>(n_c) * controls_semiglobal(k); }

long long controls_madd(long n_c, int k_prime) {
  if (k_prime < 1) throw Error("BAD_LEVEL", "level must be >= 1");
  long long pow9 = 1;
  for (int i = 1; i < k_prime; ++i) pow9 *= 9;
  return static_cast<long long>(n_c) * 27LL * pow9;
}

double delta_k(long n_c, double beta, double t_power, double p_thresh, double epsilon) {
  double f = beta * std::pow(static_cast<double>(n_c), t_power);
  double inner = std::log(f * p_thresh / epsilon);
  if (inner <= 0) throw Error("DOMAIN_ERROR", "log(f p_thresh / eps) must be positive");
  double arg = 1.0 + std::log(4.0 * static_cast<double>(n_c)) / inner;
  if (arg <= 0) throw Error("DOMAIN_ERROR", "delta-k argument not positive");
  return std::log2(arg);
}

double delta_k_prime(const ResourceParams& params, const ThresholdConstants& consts) {
  // two-factor form of k_sg - k', from the level equation
  double ln_sg = std::log((params.epsilon / consts.p_thresh_toffoli) / params.f_sg());
  double ln_m = std::log((params.epsilon / consts.p_thresh_measured) / params.f_uadd());
  double ln_p_sg = std::log(params.p0 / consts.p_thresh_toffoli);
  double ln_p_m = std::log(params.p0 / consts.p_thresh_measured);
  if (ln_sg >= 0 || ln_m >= 0 || ln_p_sg >= 0 || ln_p_m >= 0)
    throw Error("DOMAIN_ERROR", "parameters leave the concatenating regime");
  return std::log2((ln_sg * ln_p_m) / (ln_m * ln_p_sg));
}

ResourceParams shor_params(long bits) {
  if (bits < 2) throw Error("DOMAIN_ERROR", "need at least 2 bits");
  ResourceParams p;
  p.n_c = 2 * bits + 4;
  // circuit size is 8 N^4 in the bit count N; expressed against n_c = 2N+4
  // through beta so that f_uadd() = beta * n_c^4 = 8 N^4
  double ratio = static_cast<double>(bits) / static_cast<double>(p.n_c);
  p.beta = 8.0 * ratio * ratio * ratio * ratio;
  p.t_power = 4.0;
  p.epsilon = 0.03;
  p.p0 = 1e-6;
  return p;
}

ResourceReport resource_report(const ResourceParams& params, const ThresholdConstants& consts) {
  ResourceReport r;
  r.params = params;
  double pt = consts.p_thresh_toffoli;
  r.k_uadd_real = concat_level(params.epsilon, params.p0, pt, params.f_uadd());
  r.k_sg_real = concat_level(params.epsilon, params.p0, pt, params.f_sg());
  r.k_prime_real = concat_level(params.epsilon, params.p0, consts.p_thresh_measured, params.f_uadd());
  r.k_uadd = static_cast<int>(std::ceil(r.k_uadd_real));
  r.k_sg = static_cast<int>(std::ceil(r.k_sg_real));
  r.k_prime = static_cast<int>(std::ceil(r.k_prime_real));
  if (r.k_uadd < 1) r.k_uadd = 1;
  if (r.k_sg < 1) r.k_sg = 1;
  if (r.k_prime < 1) r.k_prime = 1;

  r.delta_k_real = delta_k(params.n_c, params.beta, params.t_power, pt, params.epsilon);
  r.delta_k_prime_real = delta_k_prime(params, consts);
  r.cap_delta_k = r.k_sg - r.k_uadd;
  r.cap_delta_k_prime = r.k_sg - r.k_prime;

  r.n_sg = controls_semiglobal(r.k_sg);
  r.n_uadd = controls_uadd(params.n_c, r.k_uadd);
  r.n_madd = controls_madd(params.n_c, r.k_prime);
  r.ratio_uadd_direct = static_cast<double>(r.n_uadd) / static_cast<double>(r.n_sg);
  r.ratio_madd_direct = static_cast<double>(r.n_madd) / static_cast<double>(r.n_sg);

  // closed forms: nSg(k) = 3^k (3^{k+1} + 2)
  auto pow3d = [](int e) { return std::pow(3.0, e); };
  r.ratio_uadd_closed = static_cast<double>(params.n_c) * pow3d(r.k_uadd - r.k_sg) *
                        (2.0 + pow3d(r.k_uadd + 1)) / (2.0 + pow3d(r.k_sg + 1));
  r.ratio_uadd_closed_printed = static_cast<double>(params.n_c) * pow3d(-(r.k_sg - r.k_uadd)) *
                                (2.0 + pow3d(2 + r.k_uadd)) / (2.0 + pow3d(2 + r.k_sg));

  double adv = std::log(params.beta * std::pow(static_cast<double>(params.n_c), params.t_power - 1.0) *
                        pt / params.epsilon);
  r.significant_advantage = std::log(4.0) <= adv;

  if (std::abs(r.ratio_uadd_closed - r.ratio_uadd_direct) >
      1e-9 * std::max(1.0, std::abs(r.ratio_uadd_direct)))
    r.warnings.push_back("closed-form control ratio disagrees with the direct quotient");
  if (std::abs(r.ratio_uadd_closed_printed - r.ratio_uadd_direct) >
      1e-9 * std::max(1.0, std::abs(r.ratio_uadd_direct)))
    r.warnings.push_back("the (2+3^(2+k)) ratio variant disagrees with the direct quotient; "
                         "the direct count is authoritative");
  // the direct quotient never reproduces n_c itself unless delta-k terms cancel
  if (std::abs(r.ratio_uadd_direct - static_cast<double>(params.n_c)) >
      0.05 * static_cast<double>(params.n_c))
    r.warnings.push_back("control-count gain differs from the n_c headline figure; see the "
                         "direct quotient");
  return r;
}

std::string ResourceReport::to_text() const {
  std::ostringstream out;
  out.precision(12);
  out << "n_c=" << params.n_c << "\n";
  out << "f_uadd=" << params.f_uadd() << "\n";
  out << "f_sg=" << params.f_sg() << "\n";
  out << "epsilon=" << params.epsilon << "\n";
  out << "p0=" << params.p0 << "\n";
  out << "k_uadd_real=" << k_uadd_real << "\n";
  out << "k_uadd=" << k_uadd << "\n";
  out << "k_sg_real=" << k_sg_real << "\n";
  out << "k_sg=" << k_sg << "\n";
  out << "k_prime_real=" << k_prime_real << "\n";
  out << "k_prime=" << k_prime << "\n";
  out << "delta_k_real=" << delta_k_real << "\n";
  out << "delta_k_prime_real=" << delta_k_prime_real << "\n";
  out << "cap_delta_k=" << cap_delta_k << "\n";
  out << "cap_delta_k_prime=" << cap_delta_k_prime << "\n";
  out << "n_sg=" << n_sg << "\n";
  out << "n_uadd=" << n_uadd << "\n";
  out << "n_madd=" << n_madd << "\n";
  out << "ratio_uadd_direct=" << ratio_uadd_direct << "\n";
  out << "ratio_uadd_closed=" << ratio_uadd_closed << "\n";
  out << "ratio_uadd_closed_printed=" << ratio_uadd_closed_printed << "\n";
  out << "ratio_madd_direct=" << ratio_madd_direct << "\n";
  out << "significant_advantage=" << (significant_advantage ? 1 : 0) << "\n";
  for (const auto& w : warnings) out << "warning=" << w << "\n";
  return out.str();
}

std::string ResourceReport::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "n_c,k_uadd_real,k_uadd,k_sg_real,k_sg,k_prime,delta_k,cap_delta_k,n_sg,n_uadd,n_madd,"
         "ratio_uadd,ratio_madd\n";
  out << params.n_c << "," << k_uadd_real << "," << k_uadd << "," << k_sg_real << "," << k_sg
      << "," << k_prime << "," << delta_k_real << "," << cap_delta_k << "," << n_sg << ","
      << n_uadd << "," << n_madd << "," << ratio_uadd_direct << "," << ratio_madd_direct << "\n";
  return out.str();
}

}  // namespace holoqec
