#pragma once

#include <utility>

namespace gue::hermite {

// psi_n and psi_{n-1} at one point, obtained from a single recurrence pass.
// value_nm1 is zero when n = 0.
struct OscillatorEval {
  int n = 0;
  double t = 0.0;  // unscaled evaluation point
  double value_n = 0.0;
  double value_nm1 = 0.0;
};

// Pointwise envelope n^{-1/4} |phi'(u)|^{-1/2} evaluated at
// u = sqrt(n)|x| / (sqrt(2n+1) sqrt(2)). The constant prefactor is not
// included; it is fitted once over a reference grid in the test fixtures.
struct EdgeEnvelope {
  int n = 0;
  double x = 0.0;  // scaled coordinate, |x| < 2
  double bound = 0.0;
};

// Resource guard for the recurrence length. Default 100000.
int max_degree();
void set_max_degree(int degree);

// Normalized oscillator wave function psi_n(t) = e^{-t^2/4} h_n(t) / (sqrt(n!) (2 pi)^{1/4}),
// h_n the probabilist Hermite polynomial. Evaluated by the normalized upward
// recurrence psi_{k+1} = (t/sqrt(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1} with a
// rescaled carry so the far tail (where the seed e^{-t^2/4} underflows) stays finite.
double psi(int n, double t);

// Both psi_n(t) and psi_{n-1}(t) from one pass. n >= 0.
OscillatorEval psi_pair(int n, double t);

// psi_n(sqrt(n) x) and psi_{n-1}(sqrt(n) x). n >= 1.
OscillatorEval psi_pair_scaled(int n, double x);

// psi_n'(t) via the identity psi_n' = -(t/2) psi_n + sqrt(n) psi_{n-1}.
double psi_derivative(int n, double t);

// phi(u) = (3/2) | (1/2) u sqrt(1-u^2) - (1/2) acos(u) |^{2/3} for u in (0, 1].
// The inner expression is negative on [0, 1); its magnitude is taken before
// the 2/3 power.
double erdelyi_phi(double u);

// |phi'(u)| = |inner|^{-1/3} sqrt(1-u^2), clamped at u = 1 - 1e-12.
double erdelyi_phi_prime_abs(double u);

// Envelope for |psi_n(sqrt(n) x)|, |x| < 2. Even in x.
EdgeEnvelope erdelyi_envelope(int n, double x);

// (n^{1/12} psi_n(2 sqrt n), n^{-1/12} psi_n'(2 sqrt n)); the Airy edge pair
// converging to (Ai(0), Ai'(0)).
std::pair<double, double> airy_edge_values(int n);

}  // namespace gue::hermite
