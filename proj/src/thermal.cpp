#include "isocs/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "isocs/parallel.hpp"
#include "isocs/quadrature.hpp"
#include "isocs/specfun.hpp"

namespace isocs::thermal {

namespace sf = specfun;

namespace {

struct FamilyIndex {
  int q0;
  int step;
};

FamilyIndex family_index(states::Family f) {
  switch (f) {
    case states::Family::bgcs_even: return {0, 2};
    case states::Family::bgcs_odd: return {1, 2};
    case states::Family::gkcs: return {0, 1};
  }
  throw std::logic_error("family_index: unreachable");
}

}  // namespace

fock::OperatorMatrix DensityOperator::matrix() const {
  fock::OperatorMatrix m(space, "rho");
  for (int q = 0; q < space.trunc; ++q) m.at(q, q) = weights[q];
  return m;
}

double boltzmann_ratio(states::Family f, double beta) {
  return f == states::Family::gkcs ? std::exp(-4.0 * beta)
                                   : std::exp(-8.0 * beta);
}

DensityOperator density(states::Family f, const ThermalParams& p,
                        const fock::FockSpace& s) {
  if (!(p.beta > 0.0)) throw std::domain_error("density: requires beta > 0");
  const FamilyIndex fi = family_index(f);
  // Partition function by direct summation of the Boltzmann series.
  double z = 0.0;
  for (int q = fi.q0;; q += fi.step) {
    const double t = std::exp(-p.beta * fock::energy(q, s.gamma));
    z += t;
    if (t < 1e-18 * z || q > 100000) break;
  }
  DensityOperator rho{f, s, std::vector<double>(s.trunc, 0.0), z};
  double acc = 0.0;
  for (int q = fi.q0; q < s.trunc; q += fi.step) {
    rho.weights[q] = std::exp(-p.beta * fock::energy(q, s.gamma));
    acc += rho.weights[q];
  }
  // Probabilities normalized on the truncated ladder so the trace is exact.
  for (double& w : rho.weights) w /= acc;
  return rho;
}

double partition_closed_form(states::Family f, const ThermalParams& p) {
  const double b = p.beta, g = p.gamma;
  switch (f) {
    case states::Family::bgcs_even:
      return std::exp(-2.0 * b * g) / (1.0 - std::exp(-8.0 * b));
    case states::Family::bgcs_odd:
      return std::exp(-2.0 * b * (g + 1.0)) / (1.0 - std::exp(-8.0 * b));
    case states::Family::gkcs:
      return std::exp(-2.0 * b * g) / (1.0 - std::exp(-4.0 * b));
  }
  throw std::logic_error("partition_closed_form: unreachable");
}

double thermal_moment(states::Family f, const ThermalParams& p, int s,
                      const fock::FockSpace& space) {
  if (s < 0 || s > 8)
    throw std::domain_error("thermal_moment: s outside [0, 8]");
  const DensityOperator rho = density(f, p, space);
  const FamilyIndex fi = family_index(f);
  double acc = 0.0, last = 0.0;
  for (int q = fi.q0; q < space.trunc; q += fi.step) {
    // (K-K+) eigenvalue at ladder index q.
    const double ev = 2.0 * (q + 1.0) * (q + space.gamma);
    last = rho.weights[q] * std::pow(ev, s);
    acc += last;
  }
  if (s > 0 && last > 1e-12 * acc)
    throw states::TruncationError(
        "thermal_moment: truncation tail exceeds 1e-12 of the sum");
  return acc;
}

MomentFormulaEval thermal_moment_closed_form(states::Family f,
                                             const ThermalParams& p, int s,
                                             bool flip_argument) {
  if (f == states::Family::gkcs)
    throw std::invalid_argument(
        "thermal_moment_closed_form: parity families only");
  const double u = std::exp((flip_argument ? -4.0 : 4.0) * p.beta);
  MomentFormulaEval out;
  out.argument = u;
  const double g2 = 0.5 * p.gamma;
  try {
    if (f == states::Family::bgcs_even) {
      const double pref =
          2.0 * std::pow(4.0 * u, s) * std::sinh(u) *
          std::exp(sf::ln_gamma(g2 + s + 1.0) - sf::ln_gamma(g2 + 1.0));
      out.value = pref * sf::hyp2f1(1.0, g2 + s + 1.0, g2 + 1.0, u);
    } else {
      const double pref =
          std::pow(4.0 * u, s + 1.0) * std::sinh(u) *
          std::exp(sf::ln_gamma(g2 + s + 2.0) - sf::ln_gamma(g2 + 2.0)) / 2.0;
      out.value = pref * sf::hyp2f1(1.0, g2 + s + 2.0, g2 + 2.0, u);
    }
  } catch (const sf::DivergentArgument&) {
    out.divergent = true;
  }
  return out;
}

namespace {

// Q at radial label x = |z|^2 (or J), evaluated in log space against the
// converged normalizer. The Boltzmann weights suppress exactly the ladder
// range a truncated state would lose, so this stays accurate for labels far
// beyond what a normalized StateVector can represent.
double husimi_q_radial(const DensityOperator& rho, double x) {
  if (x == 0.0) {
    return rho.family == states::Family::bgcs_odd ? 0.0 : rho.weights[0];
  }
  const FamilyIndex fi = family_index(rho.family);
  const double lx = std::log(x);
  double acc = 0.0;
  for (int q = fi.q0; q < rho.space.trunc; q += fi.step)
    acc += rho.weights[q] *
           std::exp(q * lx - states::rho_log(rho.space.gamma, q).log_abs);
  return acc / states::norm_function(rho.family, rho.space.gamma, x);
}

}  // namespace

double husimi_q(const DensityOperator& rho, const states::Label& l) {
  if (l.family == states::Family::bgcs_odd && l.z == states::cplx(0.0))
    throw std::domain_error("husimi_q: odd family degenerate at z = 0");
  if (l.family != rho.family)
    throw std::invalid_argument("husimi_q: family mismatch");
  const double x =
      l.family == states::Family::gkcs ? l.J : std::norm(l.z);
  return husimi_q_radial(rho, x);
}

double husimi_q_closed_form(states::Family f, const ThermalParams& p,
                            double x_or_J) {
  const double b = 0.5 * p.gamma + 1.0;
  const double c = std::exp(-4.0 * p.beta);
  const double r = boltzmann_ratio(f, p.beta);
  const double fa = sf::hyp1f1(1.0, b, 0.25 * c * x_or_J);
  const double fb = sf::hyp1f1(1.0, b, 0.25 * x_or_J);
  switch (f) {
    case states::Family::bgcs_even: return (1.0 - r) * fa / fb;
    case states::Family::bgcs_odd:
      return (1.0 - r) * (fa - 1.0) / (fb - 1.0);
    case states::Family::gkcs: return (1.0 - r) * fa / fb;
  }
  throw std::logic_error("husimi_q_closed_form: unreachable");
}

double husimi_normalization(const DensityOperator& rho,
                            const measures::RadialMeasure& m, int panels,
                            int nodes) {
  // Q decays like exp(-(1 - e^{-4 beta}) x / scale); infer the rate from the
  // stored weights' per-step ratio. The cutoff keeps the dropped tail below
  // 1e-12 while the labels stay representable at the space's truncation.
  const FamilyIndex fi = family_index(rho.family);
  const double r =
      rho.weights[fi.q0 + fi.step] / rho.weights[fi.q0];  // per-index ratio
  const double cstep = std::pow(r, 1.0 / fi.step);
  const double x_max = m.scale * 28.0 / (1.0 - cstep) + 40.0;
  const quad::Grid grid = quad::radial_grid(x_max, panels, nodes);
  std::vector<double> vals(grid.size());
  par::parallel_for(grid.size(), [&](std::size_t i) {
    const double x = grid.x[i];
    vals[i] = grid.w[i] * measures::full_weight(m, x) * husimi_q_radial(rho, x);
  });
  return par::blocked_sum(vals.size(), [&](std::size_t i) { return vals[i]; });
}

double p_function(states::Family f, const ThermalParams& p, double x) {
  if (!(x > 0.0)) throw std::domain_error("p_function: requires x > 0");
  const double c = std::exp(-4.0 * p.beta);  // argument scaling, all families
  const double r = boltzmann_ratio(f, p.beta);
  const double scale = 4.0;
  double pref = (1.0 - r) / c;
  if (f == states::Family::bgcs_odd) pref /= c;
  // w(x/c) / w(x) for the shared elementary profile.
  return pref * std::exp(-0.5 * p.gamma * std::log(c) -
                         x * (1.0 - c) / (c * scale));
}

double p_function_closed_form(states::Family f, const ThermalParams& p,
                              double x) {
  if (!(x > 0.0))
    throw std::domain_error("p_function_closed_form: requires x > 0");
  const double c = std::exp(-4.0 * p.beta);
  const double r = boltzmann_ratio(f, p.beta);
  const sf::MeijerParams mp{-1.0, -1.0, 0.5 * p.gamma};
  const sf::ScaledValue num = sf::meijer_g20_12_scaled(0.25 * c * x, mp);
  const sf::ScaledValue den = sf::meijer_g20_12_scaled(0.25 * x, mp);
  return (1.0 - r) * (num.mantissa / den.mantissa) *
         std::exp(num.log_scale - den.log_scale);
}

std::vector<double> p_reconstruct_diagonal(states::Family f,
                                           const ThermalParams& p,
                                           const fock::FockSpace& s,
                                           int n_max, int panels, int nodes) {
  const FamilyIndex fi = family_index(f);
  const double c = std::exp(-4.0 * p.beta);
  const double p_max = fi.q0 + n_max * fi.step;
  const double x_max = measures::radial_cutoff(s.gamma, p_max, 4.0 * c);
  const quad::Grid grid = quad::radial_grid(x_max, panels, nodes);
  const measures::RadialMeasure m{measures::Form::elementary_gk, s.gamma, 4.0};

  std::vector<double> wv(grid.size());
  par::parallel_for(grid.size(), [&](std::size_t i) {
    wv[i] = grid.w[i] * measures::weight(m, grid.x[i]) *
            p_function(f, p, grid.x[i]);
  });
  std::vector<double> lr(static_cast<std::size_t>(n_max) + 1);
  for (int j = 0; j <= n_max; ++j)
    lr[j] = states::rho_log(s.gamma, fi.q0 + j * fi.step).log_abs;
  return par::blocked_sum_rows(
      grid.size(), static_cast<std::size_t>(n_max) + 1,
      [&](std::size_t i, double* acc) {
        const double lx = std::log(grid.x[i]);
        for (int j = 0; j <= n_max; ++j)
          acc[j] += wv[i] * std::exp((fi.q0 + j * fi.step) * lx - lr[j]);
      });
}

double trace_against(const DensityOperator& rho,
                     const fock::OperatorMatrix& A) {
  double acc = 0.0;
  for (int q = 0; q < rho.space.trunc; ++q)
    acc += rho.weights[q] * A.at(q, q).real();
  return acc;
}

}  // namespace isocs::thermal
