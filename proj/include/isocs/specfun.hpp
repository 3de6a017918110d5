#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace isocs::specfun {

// Truncation policy shared by every series in the library.
struct SeriesControl {
  int max_terms = 10'000;
  double rel_tol = 1e-14;
  double abs_floor = 1e-300;
  void validate() const;
};

class SpecfunError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A series hit max_terms before meeting rel_tol.
class NonConvergence : public SpecfunError {
 public:
  NonConvergence(const std::string& what, double partial, int terms)
      : SpecfunError(what), partial_sum(partial), terms_used(terms) {}
  double partial_sum;
  int terms_used;
};

// The defining series diverges at this argument (distinct from slow
// convergence; the claims harness surfaces it as its own verdict).
class DivergentArgument : public SpecfunError {
 public:
  DivergentArgument(const std::string& what, double arg)
      : SpecfunError(what), argument(arg) {}
  double argument;
};

class OverflowError : public SpecfunError {
  using SpecfunError::SpecfunError;
};

// Log-magnitude plus sign; value() may over/underflow honestly.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;  // -1, 0, +1
  double value() const;
};

// ln Gamma(x), x > 0. Relative error <= 1e-13 on [1e-3, 1e6].
double ln_gamma(double x);
// Principal branch for Re(z) > 0 (Lanczos; used by the Mellin-Barnes
// contour, where all arguments stay in the right half plane).
std::complex<double> ln_gamma(std::complex<double> z);

// (a)_n = a (a+1) ... (a+n-1). Direct product for n <= 50, log-space above.
double pochhammer(double a, int n);
SignedLog pochhammer_log(double a, int n);

// 1F1(a; b; x) by Taylor series; Kummer transform for x < -30.
double hyp1f1(double a, double b, double x, const SeriesControl& ctl = {});

// Even/odd split of 1F1(1; b; x):
//   even = sum_m x^{2m} / (b)_{2m},   odd = sum_m x^{2m+1} / (b)_{2m+1}.
struct ParityParts {
  double even = 1.0;
  double odd = 0.0;
};
ParityParts hyp1f1_parity_parts(double b, double x,
                                const SeriesControl& ctl = {});
// Single-pass sub-series summation; cross-check path for the above.
ParityParts hyp1f1_parity_parts_direct(double b, double x,
                                       const SeriesControl& ctl = {});

// 1F1(1; b; u) = sum_m u^m / (b)_m at complex u, and its parity split.
// Covers every complex-argument use in the closed forms under test.
std::complex<double> hyp1f1_one(double b, std::complex<double> u,
                                const SeriesControl& ctl = {});
struct ComplexParityParts {
  std::complex<double> even{1.0, 0.0};
  std::complex<double> odd{0.0, 0.0};
};
ComplexParityParts hyp1f1_one_parity(double b, std::complex<double> u,
                                     const SeriesControl& ctl = {});

// Gauss 2F1. Terminating cases evaluate for any x; otherwise |x| >= 1
// throws DivergentArgument. Near the unit circle an Euler transform is used
// when it terminates, a Pfaff transform for x < 0.
double hyp2f1(double a, double b, double c, double x,
              const SeriesControl& ctl = {});

// Parameters of G^{2,0}_{1,2}(x | a1; b1, b2), whose Mellin transform is
// Gamma(b1+s) Gamma(b2+s) / Gamma(a1+s).
struct MeijerParams {
  double a1;
  double b1;
  double b2;
  // Contour abscissa must exceed this for the integrand's poles to lie left.
  double strip_min() const;
};

struct MeijerOptions {
  double abscissa = 0.0;  // 0 => automatic (saddle-following)
  double rel_tol = 1e-10;
  int nodes = 12;  // GL nodes per contour panel (doubled for the error check)
};

// mantissa * exp(log_scale); mantissa carries the sign and is O(1).
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;
  double value() const;
};

// Numerical Mellin-Barnes evaluation along a vertical contour.
ScaledValue meijer_g20_12_scaled(double x, const MeijerParams& p,
                                 const MeijerOptions& opt = {});
double meijer_g20_12(double x, const MeijerParams& p,
                     const MeijerOptions& opt = {});

struct MellinOptions {
  double scale = 4.0;  // interval splitting hint: the weight's decay scale
  double rel_tol = 1e-9;
  int nodes = 16;
};

// int_0^inf x^{s-1} f(x) dx with tail extension and divergence detection.
double mellin_moment(const std::function<double(double)>& f, double s,
                     const MellinOptions& opt = {});

}  // namespace isocs::specfun
