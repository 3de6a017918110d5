#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace isocs::quad {

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate)
      : std::runtime_error(what), error_estimate(estimate) {}
  double error_estimate;
};

class DivergentTail : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gauss-Legendre rule on [-1,1]. Nodes by Newton iteration on P_n, cached.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};
const Rule& gauss_legendre(int n);

// Fixed composite grid on [lo,hi]: `panels` equal panels, `nodes` GL points
// each. Node/weight pairs in ascending order.
struct Grid {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};
Grid composite_grid(double lo, double hi, int panels, int nodes);

// Grid on (0, x_max] for radial weights with an algebraic factor x^p at the
// origin: Gauss-Legendre in u with x = u^2, the Jacobian 2u folded into the
// weights. Lifts the endpoint power enough for fast convergence at any
// fractional p >= 0.
Grid radial_grid(double x_max, int panels, int nodes);

// Deterministic blocked integration of f over a composite grid.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int nodes);

}  // namespace isocs::quad
