#include "isocs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "isocs/parallel.hpp"
#include "isocs/quadrature.hpp"

namespace isocs::specfun {

void SeriesControl::validate() const {
  if (max_terms < 1) throw std::invalid_argument("SeriesControl: max_terms < 1");
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::invalid_argument("SeriesControl: rel_tol outside (0,1)");
  if (!(abs_floor >= 0.0))
    throw std::invalid_argument("SeriesControl: abs_floor < 0");
}

double SignedLog::value() const { return sign * std::exp(log_abs); }

namespace {

// Lanczos g=7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

template <class T>
T lanczos_ln_gamma(T z) {
  // Valid for Re(z) >= 0.5.
  T acc = T(kLanczos[0]);
  for (int k = 1; k < 9; ++k) acc += T(kLanczos[k]) / (z - T(1) + T(k));
  const T t = z + T(6.5);
  return T(kHalfLog2Pi) + (z - T(0.5)) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(double v) {
  return v <= 1e-12 && std::abs(v - std::round(v)) < 1e-12;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  if (x >= 0.5) return lanczos_ln_gamma(x);
  // Shift small arguments up: ln Gamma(x) = ln Gamma(x+1) - ln x.
  return lanczos_ln_gamma(x + 1.0) - std::log(x);
}

std::complex<double> ln_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0))
    throw std::domain_error("ln_gamma(complex): requires Re z > 0");
  if (z.real() >= 0.5) return lanczos_ln_gamma(z);
  return lanczos_ln_gamma(z + 1.0) - std::log(z);
}

double pochhammer(double a, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n < 0");
  if (n <= 50) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
  }
  const SignedLog sl = pochhammer_log(a, n);
  const double v = sl.value();
  if (!std::isfinite(v))
    throw OverflowError("pochhammer: result exceeds representable range");
  return v;
}

SignedLog pochhammer_log(double a, int n) {
  if (n < 0) throw std::domain_error("pochhammer_log: n < 0");
  SignedLog out{0.0, 1};
  if (n == 0) return out;
  if (a > 0.0) {
    // Gamma-ratio form, overflow safe.
    out.log_abs = ln_gamma(a + n) - ln_gamma(a);
    return out;
  }
  for (int k = 0; k < n; ++k) {
    const double f = a + k;
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    out.log_abs += std::log(std::abs(f));
    if (f < 0.0) out.sign = -out.sign;
  }
  return out;
}

namespace {

// Shared convergence rule: stop after two consecutive small terms.
template <class T>
T kummer_series(double a, double b, T x, const SeriesControl& ctl,
                const char* who) {
  T sum = T(1);
  T term = T(1);
  int small_streak = 0;
  for (int m = 0; m < ctl.max_terms; ++m) {
    term *= (a + m) / (b + m) * x / (m + 1.0);
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum) + ctl.abs_floor) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw NonConvergence(std::string(who) + ": series did not converge",
                       std::abs(sum), ctl.max_terms);
}

}  // namespace

double hyp1f1(double a, double b, double x, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b))
    throw std::domain_error("hyp1f1: b is a non-positive integer");
  if (x < -30.0 && !is_nonpositive_integer(a)) {
    // Kummer transform: all transformed terms are nonnegative.
    return std::exp(x) * kummer_series(b - a, b, -x, ctl, "hyp1f1(kummer)");
  }
  return kummer_series(a, b, x, ctl, "hyp1f1");
}

ParityParts hyp1f1_parity_parts(double b, double x, const SeriesControl& ctl) {
  if (x == 0.0) return {1.0, 0.0};
  const double fp = hyp1f1(1.0, b, x, ctl);
  const double fm = hyp1f1(1.0, b, -x, ctl);
  return {0.5 * (fp + fm), 0.5 * (fp - fm)};
}

ParityParts hyp1f1_parity_parts_direct(double b, double x,
                                       const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b))
    throw std::domain_error("hyp1f1_parity_parts_direct: bad b");
  ParityParts out{1.0, x / b};
  const double x2 = x * x;
  double te = 1.0;      // x^{2m} / (b)_{2m}
  double to = x / b;    // x^{2m+1} / (b)_{2m+1}
  int small_streak = 0;
  for (int m = 0; m < ctl.max_terms; ++m) {
    te *= x2 / ((b + 2 * m) * (b + 2 * m + 1));
    to *= x2 / ((b + 2 * m + 1) * (b + 2 * m + 2));
    out.even += te;
    out.odd += to;
    const double mag = std::abs(te) + std::abs(to);
    const double ref = std::abs(out.even) + std::abs(out.odd);
    if (mag <= ctl.rel_tol * ref + ctl.abs_floor) {
      if (++small_streak >= 2) return out;
    } else {
      small_streak = 0;
    }
  }
  throw NonConvergence("hyp1f1_parity_parts_direct: no convergence",
                       out.even + out.odd, ctl.max_terms);
}

std::complex<double> hyp1f1_one(double b, std::complex<double> u,
                                const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b))
    throw std::domain_error("hyp1f1_one: b is a non-positive integer");
  return kummer_series(1.0, b, u, ctl, "hyp1f1_one");
}

ComplexParityParts hyp1f1_one_parity(double b, std::complex<double> u,
                                     const SeriesControl& ctl) {
  const std::complex<double> fp = hyp1f1_one(b, u, ctl);
  const std::complex<double> fm = hyp1f1_one(b, -u, ctl);
  return {0.5 * (fp + fm), 0.5 * (fp - fm)};
}

namespace {

double hyp2f1_series(double a, double b, double c, double x,
                     const SeriesControl& ctl) {
  double sum = 1.0, term = 1.0;
  int small_streak = 0;
  for (int m = 0; m < ctl.max_terms; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum) + ctl.abs_floor) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw NonConvergence("hyp2f1: series did not converge", sum, ctl.max_terms);
}

}  // namespace

double hyp2f1(double a, double b, double c, double x,
              const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c is a non-positive integer");
  const bool terminating =
      is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (terminating) return hyp2f1_series(a, b, c, x, ctl);
  if (std::abs(x) >= 1.0)
    throw DivergentArgument("hyp2f1: defining series diverges for |x| >= 1",
                            x);
  if (std::abs(x) <= 0.9) return hyp2f1_series(a, b, c, x, ctl);
  // Near the unit circle. Euler transform terminates whenever c-a or c-b is
  // a non-positive integer (the thermal closed forms always satisfy this).
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
    return std::pow(1.0 - x, c - a - b) *
           hyp2f1_series(c - a, c - b, c, x, ctl);
  }
  if (x < 0.0) {
    // Pfaff: argument x/(x-1) lands in (0, 1/2).
    return std::pow(1.0 - x, -a) * hyp2f1_series(a, c - b, c, x / (x - 1.0), ctl);
  }
  return hyp2f1_series(a, b, c, x, ctl);  // slow but convergent; may report
}

double MeijerParams::strip_min() const { return -std::min(b1, b2); }

double ScaledValue::value() const { return mantissa * std::exp(log_scale); }

namespace {

struct ContourSetup {
  double sigma;
  double t_max;
  double panel_width;
  double log_x;
  double ref;  // Re of the log-integrand at t=0, used as the scale
};

ContourSetup contour_setup(double x, const MeijerParams& p, double abscissa) {
  ContourSetup s;
  s.log_x = std::log(x);
  const double nu = p.b1 + p.b2 - p.a1;
  // Saddle-following abscissa keeps the integrand peak comparable to the
  // result, so large-x values come out with full relative precision. For
  // small x the saddle lies left of the strip; hugging the strip edge
  // minimizes the x^{-sigma} amplification there.
  const double floor_sigma = p.strip_min() + 0.5;
  s.sigma = abscissa > 0.0 ? abscissa
                           : std::max(floor_sigma, x + 1.0 - nu);
  if (abscissa > 0.0 && abscissa <= p.strip_min())
    throw std::domain_error("meijer_g20_12: abscissa inside the pole strip");
  const double spread = s.sigma + std::abs(nu) + 4.0;
  s.t_max = std::max(30.0, std::sqrt(90.0 * spread));
  s.panel_width = std::min(2.0, 6.0 / (1.0 + std::abs(s.log_x)));
  const std::complex<double> w0 =
      ln_gamma(std::complex<double>(p.b1 + s.sigma, 0.0)) +
      ln_gamma(std::complex<double>(p.b2 + s.sigma, 0.0)) -
      ln_gamma(std::complex<double>(p.a1 + s.sigma, 0.0)) -
      s.sigma * s.log_x;
  s.ref = w0.real();
  return s;
}

// (1/pi) int_0^{t_max} exp(Re W - ref) cos(Im W) dt with
// W(t) = lnG(b1+s) + lnG(b2+s) - lnG(a1+s) - s ln x,  s = sigma + i t.
double contour_sum(const ContourSetup& cs, const MeijerParams& p, int nodes) {
  const int panels =
      static_cast<int>(std::ceil(cs.t_max / cs.panel_width));
  const quad::Grid g = quad::composite_grid(0.0, cs.t_max, panels, nodes);
  return par::blocked_sum(g.size(), [&](std::size_t i) {
    const std::complex<double> s(cs.sigma, g.x[i]);
    const std::complex<double> w = ln_gamma(s + p.b1) + ln_gamma(s + p.b2) -
                                   ln_gamma(s + p.a1) - s * cs.log_x;
    return g.w[i] * std::exp(w.real() - cs.ref) * std::cos(w.imag());
  }) / M_PI;
}

}  // namespace

ScaledValue meijer_g20_12_scaled(double x, const MeijerParams& p,
                                 const MeijerOptions& opt) {
  if (!(x > 0.0)) throw std::domain_error("meijer_g20_12: requires x > 0");
  if (!(std::isfinite(p.a1) && std::isfinite(p.b1) && std::isfinite(p.b2)))
    throw std::domain_error("meijer_g20_12: parameters must be finite");
  const ContourSetup cs = contour_setup(x, p, opt.abscissa);
  const double coarse = contour_sum(cs, p, opt.nodes);
  const double fine = contour_sum(cs, p, 2 * opt.nodes);
  const double est = std::abs(fine - coarse);
  // Roundoff floor: the integrand is normalized to a unit peak, so the
  // accumulated rounding noise scales with the contour length.
  const double floor = 32.0 * std::numeric_limits<double>::epsilon() * cs.t_max;
  if (est > opt.rel_tol * std::abs(fine) + floor)
    throw quad::QuadratureError(
        "meijer_g20_12: contour quadrature did not converge", est);
  return {fine, cs.ref};
}

double meijer_g20_12(double x, const MeijerParams& p,
                     const MeijerOptions& opt) {
  return meijer_g20_12_scaled(x, p, opt).value();
}

double mellin_moment(const std::function<double(double)>& f, double s,
                     const MellinOptions& opt) {
  if (!(opt.scale > 0.0)) throw std::invalid_argument("mellin_moment: scale");
  const auto integrand = [&](double x) { return std::pow(x, s - 1.0) * f(x); };
  const auto piece = [&](double lo, double hi, int panels) {
    // Two GL orders give a per-piece error estimate.
    const double c = quad::integrate(integrand, lo, hi, panels, opt.nodes);
    const double fwd = quad::integrate(integrand, lo, hi, panels, 2 * opt.nodes);
    if (std::abs(fwd - c) > opt.rel_tol * (std::abs(fwd) + 1e-30) &&
        std::abs(fwd - c) > 1e-280) {
      const double finer =
          quad::integrate(integrand, lo, hi, 2 * panels, 2 * opt.nodes);
      if (std::abs(finer - fwd) > opt.rel_tol * (std::abs(finer) + 1e-30))
        throw quad::QuadratureError("mellin_moment: panel did not converge",
                                    std::abs(finer - fwd));
      return finer;
    }
    return fwd;
  };

  // Head: [0, 8*scale] resolves the peak region of e^{-x/scale} weights.
  // Integrated in the substituted variable x = u^2, which softens
  // fractional endpoint powers without sampling so close to the origin
  // that contour-backed integrands lose their relative precision.
  const auto head = [&](int panels) {
    const double hi = std::sqrt(8.0 * opt.scale);
    return quad::integrate(
        [&](double u) { return 2.0 * u * integrand(u * u); }, 0.0, hi,
        panels, opt.nodes);
  };
  double total = head(48);
  {
    const double refined = head(96);
    if (std::abs(refined - total) > opt.rel_tol * (std::abs(refined) + 1e-30))
      throw quad::QuadratureError("mellin_moment: head did not converge",
                                  std::abs(refined - total));
    total = refined;
  }
  // Geometric tail extension with decay monitoring.
  double lo = 8.0 * opt.scale;
  double prev = std::abs(total);
  int growing = 0;
  for (int k = 0; k < 48; ++k) {
    const double hi = 2.0 * lo;
    const double c = piece(lo, hi, 16);
    total += c;
    if (std::abs(c) <= opt.rel_tol * 1e-3 * std::abs(total) + 1e-300)
      return total;
    if (std::abs(c) >= prev) {
      if (++growing >= 3)
        throw quad::DivergentTail(
            "mellin_moment: integrand tail is not decaying");
    } else {
      growing = 0;
    }
    prev = std::abs(c);
    lo = hi;
  }
  throw quad::DivergentTail("mellin_moment: tail failed to converge");
}

}  // namespace isocs::specfun
