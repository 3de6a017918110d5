#include "isocs/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "isocs/parallel.hpp"

namespace isocs::quad {

static Rule compute_rule(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-angle initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

const Rule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::map<int, Rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

Grid composite_grid(double lo, double hi, int panels, int nodes) {
  if (!(hi > lo)) throw std::invalid_argument("composite_grid: hi <= lo");
  if (panels < 1 || nodes < 1)
    throw std::invalid_argument("composite_grid: bad panel spec");
  const Rule& r = gauss_legendre(nodes);
  Grid g;
  g.x.reserve(static_cast<std::size_t>(panels) * nodes);
  g.w.reserve(static_cast<std::size_t>(panels) * nodes);
  const double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * h;
    const double mid = a + 0.5 * h;
    for (int k = 0; k < nodes; ++k) {
      g.x.push_back(mid + 0.5 * h * r.x[k]);
      g.w.push_back(0.5 * h * r.w[k]);
    }
  }
  return g;
}

Grid radial_grid(double x_max, int panels, int nodes) {
  Grid g = composite_grid(0.0, std::sqrt(x_max), panels, nodes);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double u = g.x[i];
    g.w[i] *= 2.0 * u;
    g.x[i] = u * u;
  }
  return g;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int nodes) {
  const Grid g = composite_grid(lo, hi, panels, nodes);
  return par::blocked_sum(g.size(),
                          [&](std::size_t i) { return g.w[i] * f(g.x[i]); });
}

}  // namespace isocs::quad
