#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "isocs/fock.hpp"
#include "isocs/specfun.hpp"

namespace isocs::states {

using cplx = std::complex<double>;

enum class Family { bgcs_even, bgcs_odd, gkcs };

// Coherent-state label: z for the parity families, (J, alpha) for the
// action-angle family.
struct Label {
  Family family;
  cplx z{0.0, 0.0};
  double J = 0.0;
  double alpha = 0.0;

  static Label bg_even(cplx z) { return {Family::bgcs_even, z, 0.0, 0.0}; }
  static Label bg_odd(cplx z) { return {Family::bgcs_odd, z, 0.0, 0.0}; }
  static Label gk(double J, double alpha) {
    return {Family::gkcs, cplx(0.0), J, alpha};
  }
};

// canonical: coefficients normalized numerically to sum |c_n|^2 = 1.
// closed_form: the closed-form normalizer constants are used verbatim
// (they disagree with unit norm for two of the families; the harness
// measures by how much).
enum class NormMode { canonical, closed_form };

class TruncationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateVector {
  fock::FockSpace space;
  std::vector<cplx> coeffs;  // full-ladder length trunc
  Label label;
  NormMode mode = NormMode::canonical;
  bool degenerate = false;  // odd family at z = 0

  double norm2() const;
};

// rho(m) = 4^m (gamma/2 + 1)_m, the squared coefficient denominators of all
// three families; log form to survive large m.
specfun::SignedLog rho_log(double gamma, int m);

// Canonical normalizer as a function of x = |z|^2 (parity families) or
// x = J (action family): the matching parity part of 1F1(1; gamma/2+1; x/4),
// or the full series.
double norm_function(Family f, double gamma, double x);

StateVector bgcs_even(cplx z, const fock::FockSpace& s,
                      NormMode mode = NormMode::canonical);
StateVector bgcs_odd(cplx z, const fock::FockSpace& s,
                     NormMode mode = NormMode::canonical);
StateVector gkcs(double J, double alpha, const fock::FockSpace& s,
                 NormMode mode = NormMode::canonical);
StateVector make_state(const Label& l, const fock::FockSpace& s,
                       NormMode mode = NormMode::canonical);

// <s1|s2>.
cplx overlap(const StateVector& s1, const StateVector& s2);

// Closed-form overlap expressions for the three families (the quantities
// under test; the sum above is the oracle).
cplx overlap_closed_form(const Label& a, const Label& b, double gamma);

struct EigenFit {
  cplx lambda;      // <s|K|s>
  double residual;  // ||K s - lambda s|| over interior indices
};
EigenFit eigen_residual(const StateVector& s,
                        const fock::OperatorMatrix& lowering);

// |c_n|^2.
double pnd(const StateVector& s, int n);

// Phase evolution c_n -> exp(-i E_n t) c_n.
StateVector evolve(const StateVector& s, double t);

}  // namespace isocs::states
