#pragma once

#include <vector>

#include "isocs/measures.hpp"
#include "isocs/quantize.hpp"
#include "isocs/states.hpp"

namespace isocs::thermal {

struct ThermalParams {
  double beta;   // inverse temperature, k_B = 1
  double gamma;  // Bargmann index
};

// Canonical Gibbs mixture over the family's ladder indices. weights is
// full-ladder length with zeros off the sector; Z is the direct geometric
// sum of exp(-beta E_n).
struct DensityOperator {
  states::Family family;
  fock::FockSpace space;
  std::vector<double> weights;
  double Z;

  fock::OperatorMatrix matrix() const;
};

DensityOperator density(states::Family f, const ThermalParams& p,
                        const fock::FockSpace& s);

// Closed-form partition functions under test (exact oracle is density().Z).
double partition_closed_form(states::Family f, const ThermalParams& p);

// Boltzmann ratio per family index step: exp(-8 beta) for the parity
// families, exp(-4 beta) for the action family.
double boltzmann_ratio(states::Family f, double beta);

// Direct Boltzmann sum of <(K-K+)^s>: sum_n w_n [2(n+1)(n+gamma)]^s over the
// family's ladder indices, with a truncation-tail check on the summand.
double thermal_moment(states::Family f, const ThermalParams& p, int s,
                      const fock::FockSpace& space);

struct MomentFormulaEval {
  bool divergent = false;
  double argument = 0.0;  // the 2F1 argument used
  double value = 0.0;     // meaningful only when !divergent
};
// The hypergeometric closed form for the parity families. With
// flip_argument the Boltzmann factor enters inverted (exp(+4beta) ->
// exp(-4beta) throughout), the plausible-typo trial the harness records.
MomentFormulaEval thermal_moment_closed_form(states::Family f,
                                             const ThermalParams& p, int s,
                                             bool flip_argument);

// Q(label) = <label| rho |label> via the diagonal Boltzmann sum.
double husimi_q(const DensityOperator& rho, const states::Label& l);
// The closed-form ratio expressions under test.
double husimi_q_closed_form(states::Family f, const ThermalParams& p,
                            double x_or_J);
// int Q dnu with the family's full measure; equals 1 for the exact mixture.
double husimi_normalization(const DensityOperator& rho,
                            const measures::RadialMeasure& m,
                            int panels = 160, int nodes = 16);

// Diagonal quasi-density against the family projectors, fixed by the moment
// condition (reconstructs the Boltzmann weights exactly in the untruncated
// limit).
double p_function(states::Family f, const ThermalParams& p, double x);
// The closed-form Meijer-G ratio under test.
double p_function_closed_form(states::Family f, const ThermalParams& p,
                              double x);
// Reconstructed diagonal weights int w(x) P(x) |c_q(x)|^2 dx for family
// indices 0..n_max (canonical reduced measure assumed).
std::vector<double> p_reconstruct_diagonal(states::Family f,
                                           const ThermalParams& p,
                                           const fock::FockSpace& s,
                                           int n_max, int panels = 160,
                                           int nodes = 16);

// Tr(rho A) for a full-ladder operator.
double trace_against(const DensityOperator& rho,
                     const fock::OperatorMatrix& A);

}  // namespace isocs::thermal
