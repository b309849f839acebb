#pragma once

#include <vector>

#include "gue/hermite.hpp"

namespace gue::kernel {

// Evaluation policy for K_n. diag_band is the |a-b| threshold below which the
// Christoffel-Darboux quotient switches to its confluent (L'Hopital) form;
// the quotient loses about half the significant digits once |a-b| is near
// sqrt(machine epsilon).
struct KernelContext {
  int n;
  double diag_band;

  explicit KernelContext(int degree);
};

// K_n(a, b) = sqrt(n) (psi_n(a) psi_{n-1}(b) - psi_{n-1}(a) psi_n(b)) / (a - b),
// with the confluent value at the midpoint when |a-b| <= diag_band.
double kernel(const KernelContext& ctx, double a, double b);

// Same quotient from pre-tabulated oscillator values at a and b. The confluent
// branch averages the two diagonal values (second-order accurate at the
// midpoint); used by the variance quadratures where all node values are
// tabulated once per axis.
double kernel_cd(const KernelContext& ctx, double a, double b,
                 const hermite::OscillatorEval& pa, const hermite::OscillatorEval& pb);

// Diagonal value K_n(a, a) = n (psi_n^2 + psi_{n-1}^2)(a) - sqrt(n) a psi_n(a) psi_{n-1}(a).
double kernel_diag(const KernelContext& ctx, const hermite::OscillatorEval& pa);

// Psi_n(x, y) in scaled coordinates:
//   psi_n(sx)^2 psi_n(sy)^2 - psi_n(sx) psi_{n-1}(sx) psi_n(sy) psi_{n-1}(sy),
// s = sqrt(n). Symmetric in (x, y); not pointwise non-negative.
double psi2d(const KernelContext& ctx, double x, double y);

struct CorrelationMatrix {
  std::vector<double> points;   // k unscaled reals
  std::vector<double> entries;  // row-major k x k, entries K_n(p_i, p_j)
};

CorrelationMatrix correlation_matrix(const KernelContext& ctx, const std::vector<double>& points);

// k-point correlation p_k = det(K_n(p_i, p_j)), 1 <= k <= 8.
double correlation(const KernelContext& ctx, const std::vector<double>& points);

}  // namespace gue::kernel
