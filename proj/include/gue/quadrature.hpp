#pragma once

#include <functional>
#include <vector>

namespace gue::quad {

enum class Scheme { gauss_legendre, theta_substituted, uniform_midpoint };
enum class DiagonalPolicy { offset_grids, excise_band };

struct Grid1D {
  std::vector<double> nodes;    // strictly increasing, inside (lo, hi)
  std::vector<double> weights;  // positive
  double lo = 0.0;
  double hi = 0.0;
  Scheme scheme = Scheme::gauss_legendre;
};

struct Grid2D {
  Grid1D gx;
  Grid1D gy;
  DiagonalPolicy policy = DiagonalPolicy::offset_grids;
  double excise_width = 0.0;  // only used under excise_band
};

// Gauss-Legendre nodes/weights mapped to (lo, hi). Exact for polynomials of
// degree <= 2m-1. m > 10^6 is rejected.
Grid1D gauss_legendre(int m, double lo, double hi);

// Midpoint substitution grid for the inverse-semicircle weight:
// nodes x_j = 2 cos(theta_j) with theta_j midpoints of a uniform partition of
// (0, pi), weights pi/m, so that sum w_j g(x_j) ~ int g(x)/sqrt(4-x^2) dx.
Grid1D theta_grid(int m);

// Companion grid for the second axis of an offset 2D rule: the union of the
// two quarter-shifted uniform theta partitions (2m nodes, weights pi/(2m)).
// Symmetric under theta -> pi - theta, so the rule integrates cos(k theta)
// exactly for all 0 < k < 2m; a single shifted partition does not (it has an
// O(1/m) bias on odd frequencies), and a half-cell shift would place a node
// at theta = pi. Node separation from theta_grid(m) is pi/(4m) in theta.
Grid1D theta_grid_offset(int m);

// Composite Gauss-Legendre in theta over [-2, 2] with plain-dx weights
// (w = gl_weight * 2 sin theta): `panels` uniform theta panels with q-point
// rules, graded in x exactly like the oscillation of the scaled kernels.
Grid1D theta_panels(int panels, int q);

// Returns a copy with each weight multiplied by sqrt(4 - x^2), turning a
// theta grid for int g/sqrt(4-x^2) into one for int g dx.
Grid1D with_semicircle_jacobian(Grid1D grid);

// x-axis theta_grid(m), y-axis theta_grid_offset(m), offset policy.
Grid2D offset_theta_2d(int m);

// sum_i sum_j wx_i wy_j F(x_i, y_j), rows evaluated in parallel, reduced in
// fixed index order (bit-stable across thread counts). Throws numerical_error
// naming the node pair if F is non-finite there.
double integrate_2d(const Grid2D& grid, const std::function<double(double, double)>& F);

// f(x) = sum_k coeffs[k] T_k(x/2) on [-2, 2].
struct ChebSeries {
  std::vector<double> coeffs;
  double eval(double x) const;
};

// c_0 = (1/pi) int_0^pi f(2 cos t) dt, c_k = (2/pi) int_0^pi f(2 cos t) cos(kt) dt,
// by midpoint quadrature with m nodes. Requires m >= 4K.
ChebSeries cheb_coeffs(const std::function<double(double)>& f, int K, int m);

}  // namespace gue::quad
