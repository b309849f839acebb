#include "gue/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gue/errors.hpp"
#include "gue/threading.hpp"

namespace gue::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre on (-1, 1) by Newton iteration on the Legendre recurrence.
void leggauss_unit(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = m * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[m - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[m - 1 - i] = w[i];
  }
}

}  // namespace

Grid1D gauss_legendre(int m, double lo, double hi) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: m must be >= 1");
  if (m > 1000000) throw std::invalid_argument("gauss_legendre: m > 10^6 rejected");
  if (!(lo < hi)) throw std::invalid_argument("gauss_legendre: requires lo < hi");
  std::vector<double> x, w;
  leggauss_unit(m, x, w);
  Grid1D g;
  g.lo = lo;
  g.hi = hi;
  g.scheme = Scheme::gauss_legendre;
  g.nodes.resize(m);
  g.weights.resize(m);
  const double mid = 0.5 * (hi + lo), halfw = 0.5 * (hi - lo);
  for (int i = 0; i < m; ++i) {
    g.nodes[i] = mid + halfw * x[i];
    g.weights[i] = halfw * w[i];
  }
  return g;
}

Grid1D theta_grid(int m) {
  if (m < 1) throw std::invalid_argument("theta_grid: m must be >= 1");
  Grid1D g;
  g.lo = -2.0;
  g.hi = 2.0;
  g.scheme = Scheme::theta_substituted;
  g.nodes.resize(m);
  g.weights.assign(m, kPi / m);
  for (int j = 0; j < m; ++j) {
    const double theta = kPi * (m - j - 0.5) / m;  // descending theta = ascending x
    g.nodes[j] = 2.0 * std::cos(theta);
  }
  return g;
}

Grid1D theta_grid_offset(int m) {
  if (m < 1) throw std::invalid_argument("theta_grid_offset: m must be >= 1");
  Grid1D g;
  g.lo = -2.0;
  g.hi = 2.0;
  g.scheme = Scheme::theta_substituted;
  g.nodes.resize(2 * m);
  g.weights.assign(2 * m, kPi / (2 * m));
  std::vector<double> thetas(2 * m);
  for (int j = 0; j < m; ++j) {
    thetas[2 * j] = kPi * (j + 0.25) / m;
    thetas[2 * j + 1] = kPi * (j + 0.75) / m;
  }
  for (int j = 0; j < 2 * m; ++j) g.nodes[j] = 2.0 * std::cos(thetas[2 * m - 1 - j]);
  return g;
}

Grid1D theta_panels(int panels, int q) {
  if (panels < 1 || q < 1) throw std::invalid_argument("theta_panels: requires panels >= 1 and q >= 1");
  std::vector<double> gx, gw;
  leggauss_unit(q, gx, gw);
  Grid1D g;
  g.lo = -2.0;
  g.hi = 2.0;
  g.scheme = Scheme::gauss_legendre;
  g.nodes.reserve(panels * q);
  g.weights.reserve(panels * q);
  const double h = kPi / panels;
  // descending theta so nodes come out ascending in x
  for (int p = panels - 1; p >= 0; --p) {
    const double mid = (p + 0.5) * h;
    for (int i = q - 1; i >= 0; --i) {
      const double theta = mid + 0.5 * h * gx[i];
      g.nodes.push_back(2.0 * std::cos(theta));
      g.weights.push_back(0.5 * h * gw[i] * 2.0 * std::sin(theta));
    }
  }
  return g;
}

Grid1D with_semicircle_jacobian(Grid1D grid) {
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double x = grid.nodes[i];
    grid.weights[i] *= std::sqrt(std::max(0.0, 4.0 - x * x));
  }
  return grid;
}

Grid2D offset_theta_2d(int m) {
  Grid2D g;
  g.gx = theta_grid(m);
  g.gy = theta_grid_offset(m);
  g.policy = DiagonalPolicy::offset_grids;
  return g;
}

double integrate_2d(const Grid2D& grid, const std::function<double(double, double)>& F) {
  const auto& X = grid.gx;
  const auto& Y = grid.gy;
  const int nx = static_cast<int>(X.nodes.size());
  const int ny = static_cast<int>(Y.nodes.size());
  const bool excise = grid.policy == DiagonalPolicy::excise_band;
  std::vector<double> rows(nx, 0.0);
  std::vector<std::pair<double, double>> bad(nx, {0.0, 0.0});
  std::vector<char> failed(nx, 0);
  threading::parallel_for(0, nx, [&](int i) {
    const double x = X.nodes[i];
    double s = 0.0;
    for (int j = 0; j < ny; ++j) {
      const double y = Y.nodes[j];
      if (excise && std::fabs(x - y) < grid.excise_width) continue;
      const double v = F(x, y);
      if (!std::isfinite(v)) {
        failed[i] = 1;
        bad[i] = {x, y};
        return;
      }
      s += Y.weights[j] * v;
    }
    rows[i] = X.weights[i] * s;
  });
  for (int i = 0; i < nx; ++i)
    if (failed[i])
      throw numerical_error("integrate_2d: non-finite integrand at (x=" +
                            std::to_string(bad[i].first) + ", y=" +
                            std::to_string(bad[i].second) + ")");
  double total = 0.0;
  for (int i = 0; i < nx; ++i) total += rows[i];
  return total;
}

double ChebSeries::eval(double x) const {
  if (coeffs.empty()) return 0.0;
  // Clenshaw for sum c_k T_k(u), u = x/2
  const double u = 0.5 * x;
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
    const double b0 = coeffs[k] + 2.0 * u * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + u * b1 - b2;
}

ChebSeries cheb_coeffs(const std::function<double(double)>& f, int K, int m) {
  if (K < 0) throw std::invalid_argument("cheb_coeffs: K must be >= 0");
  if (m < 4 * K || m < 1) throw std::invalid_argument("cheb_coeffs: requires m >= 4K and m >= 1");
  std::vector<double> fx(m);
  for (int j = 0; j < m; ++j) {
    const double theta = kPi * (j + 0.5) / m;
    fx[j] = f(2.0 * std::cos(theta));
  }
  ChebSeries s;
  s.coeffs.assign(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    double acc = 0.0;
    for (int j = 0; j < m; ++j) acc += fx[j] * std::cos(k * kPi * (j + 0.5) / m);
    s.coeffs[k] = (k == 0 ? 1.0 : 2.0) * acc / m;
  }
  return s;
}

}  // namespace gue::quad
