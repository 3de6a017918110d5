#pragma once

#include <span>
#include <utility>
#include <vector>

#include "isocs/fock.hpp"
#include "isocs/states.hpp"

namespace isocs::measures {

// elementary_*: moment-matched reduced weights in closed elementary form
//   (one shared profile x^{gamma/2} e^{-x/4} / (2^{gamma+2} Gamma(gamma/2+1));
//   full weights multiply the family's normalization function back on).
// meijer_*: the Meijer-G closed forms under test, evaluated numerically by
//   the Mellin-Barnes contour. meijer_even/meijer_odd are printed as full
//   weights; meijer_gk is printed directly as the reduced density.
enum class Form {
  elementary_even,
  elementary_odd,
  elementary_gk,
  meijer_even,
  meijer_odd,
  meijer_gk,
};

struct RadialMeasure {
  Form form;
  double gamma;
  double scale = 4.0;
};

// Reduced weight at x > 0: the density whose k-th raw moments must equal the
// family's rho sequence for the resolution of identity to hold.
double weight(const RadialMeasure& m, double x);

// Reduced weight times the family's normalization function (the curve shape
// the weight-function tables emit).
double full_weight(const RadialMeasure& m, double x);

// rho-sequence target for the k-th raw moment, scale-adjusted:
// scale^k (gamma/2+1)_k.
double moment_target(const RadialMeasure& m, int k);

struct MomentTarget {
  int k;
  double target;
};
std::vector<MomentTarget> sector_moment_targets(states::Family f,
                                                const RadialMeasure& m,
                                                int k_max);

struct MomentReport {
  double max_rel_dev = 0.0;
  std::vector<std::pair<int, double>> deviations;  // (k, rel dev)
};
// Raw moments on a shared composite grid (weight evaluated once per node,
// grid-doubling convergence check), compared against the targets.
MomentReport moment_check(const RadialMeasure& m,
                          std::span<const MomentTarget> targets);

struct ResolutionOptions {
  int n_max = 20;   // family enumeration indices 0..n_max
  int panels = 96;
  int nodes = 16;
  double x_max = 0.0;  // 0 => automatic from the largest moment power
};

// Diagonal entries of int w(x) |state><state| with the angular average done
// analytically (it kills every off-diagonal term). Entry j corresponds to
// the family's j-th basis vector.
std::vector<double> identity_resolution_diagonal(
    states::Family f, const RadialMeasure& m, const fock::FockSpace& s,
    const ResolutionOptions& opt = {});

// max |diag - 1| over the family's indices 0..n_max.
double identity_resolution_residual(states::Family f, const RadialMeasure& m,
                                    const fock::FockSpace& s,
                                    const ResolutionOptions& opt = {});

// Automatic radial cutoff for integrands ~ x^{p_max+gamma/2} e^{-x/scale}.
double radial_cutoff(double gamma, double p_max, double scale);

}  // namespace isocs::measures
