#include "gue/hermite.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gue::hermite {

namespace {

std::atomic<int> g_max_degree{100000};

constexpr double kLog2PiQuarter = 0.459468038701765080;  // log(2 pi)/4

void check_args(int n, double t) {
  if (n < 0) throw std::invalid_argument("hermite: degree must be non-negative");
  if (n > g_max_degree.load())
    throw std::invalid_argument("hermite: degree " + std::to_string(n) +
                                " exceeds max_degree " + std::to_string(g_max_degree.load()));
  if (!std::isfinite(t)) throw std::domain_error("hermite: non-finite evaluation point");
}

// Rescaled upward pass. The pair (cur, prev) represents
// (psi_k, psi_{k-1}) * 2^{-512 shift} * e^{-base}. With a representable seed
// (|t| <~ 53) no rescale ever fires and the fast path is the plain recurrence;
// in the log-carried regime the magnitudes only grow, so only an upward
// rescale is needed.
struct ScaledPair {
  double cur, prev;
  double base;  // log seed when it underflowed, else 0
  int shift;    // number of 2^512 rescales applied
};

ScaledPair run_recurrence(int n, double t) {
  const double log_seed = -0.25 * t * t - kLog2PiQuarter;
  ScaledPair s{0.0, 0.0, 0.0, 0};
  if (log_seed > -700.0) {
    s.cur = std::exp(log_seed);
  } else {
    s.cur = 1.0;
    s.base = log_seed;
  }
  constexpr double kHuge = 0x1p512;
  for (int k = 0; k < n; ++k) {
    const double a = t / std::sqrt(k + 1.0);
    const double b = std::sqrt(k / (k + 1.0));
    const double next = a * s.cur - b * s.prev;
    s.prev = s.cur;
    s.cur = next;
    if (std::fabs(s.cur) > kHuge) {
      s.cur = std::ldexp(s.cur, -512);
      s.prev = std::ldexp(s.prev, -512);
      ++s.shift;
    }
  }
  return s;
}

double settle(double value, const ScaledPair& s) {
  if (s.base == 0.0 && s.shift == 0) return value;
  const double exponent = s.base + 512.0 * std::numbers::ln2 * s.shift;
  return value * std::exp(exponent);
}

}  // namespace

int max_degree() { return g_max_degree.load(); }

void set_max_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("set_max_degree: negative degree");
  g_max_degree.store(degree);
}

OscillatorEval psi_pair(int n, double t) {
  check_args(n, t);
  const ScaledPair s = run_recurrence(n, t);
  OscillatorEval out;
  out.n = n;
  out.t = t;
  out.value_n = settle(s.cur, s);
  out.value_nm1 = (n == 0) ? 0.0 : settle(s.prev, s);
  return out;
}

double psi(int n, double t) { return psi_pair(n, t).value_n; }

OscillatorEval psi_pair_scaled(int n, double x) {
  if (n < 1) throw std::invalid_argument("psi_pair_scaled: degree must be >= 1");
  return psi_pair(n, std::sqrt(static_cast<double>(n)) * x);
}

double psi_derivative(int n, double t) {
  check_args(n, t);
  if (n == 0) return -0.5 * t * psi(0, t);
  const OscillatorEval p = psi_pair(n, t);
  return -0.5 * t * p.value_n + std::sqrt(static_cast<double>(n)) * p.value_nm1;
}

double erdelyi_phi(double u) {
  if (!(u > 0.0) || u > 1.0) throw std::domain_error("erdelyi_phi: u must be in (0, 1]");
  const double inner = 0.5 * (u * std::sqrt(1.0 - u * u) - std::acos(u));
  return 1.5 * std::pow(std::fabs(inner), 2.0 / 3.0);
}

double erdelyi_phi_prime_abs(double u) {
  if (!(u > 0.0)) throw std::domain_error("erdelyi_phi_prime_abs: u must be positive");
  u = std::min(u, 1.0 - 1e-12);
  const double inner = 0.5 * (u * std::sqrt(1.0 - u * u) - std::acos(u));
  return std::pow(std::fabs(inner), -1.0 / 3.0) * std::sqrt(1.0 - u * u);
}

EdgeEnvelope erdelyi_envelope(int n, double x) {
  if (n < 1) throw std::invalid_argument("erdelyi_envelope: degree must be >= 1");
  if (!(std::fabs(x) < 2.0)) throw std::domain_error("erdelyi_envelope: |x| must be < 2");
  const double u = std::sqrt(static_cast<double>(n)) * std::fabs(x) /
                   (std::sqrt(2.0 * n + 1.0) * std::numbers::sqrt2);
  EdgeEnvelope env;
  env.n = n;
  env.x = x;
  env.bound = std::pow(static_cast<double>(n), -0.25) /
              std::sqrt(erdelyi_phi_prime_abs(std::max(u, 1e-300)));
  return env;
}

std::pair<double, double> airy_edge_values(int n) {
  if (n < 1) throw std::invalid_argument("airy_edge_values: degree must be >= 1");
  const double t = 2.0 * std::sqrt(static_cast<double>(n));
  const OscillatorEval p = psi_pair(n, t);
  const double dpsi = -0.5 * t * p.value_n + std::sqrt(static_cast<double>(n)) * p.value_nm1;
  return {std::pow(n, 1.0 / 12.0) * p.value_n, std::pow(n, -1.0 / 12.0) * dpsi};
}

}  // namespace gue::hermite
