#include "isocs/claims.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "isocs/fock.hpp"
#include "isocs/kernels.hpp"
#include "isocs/measures.hpp"
#include "isocs/parallel.hpp"
#include "isocs/quadrature.hpp"
#include "isocs/quantize.hpp"
#include "isocs/specfun.hpp"
#include "isocs/states.hpp"
#include "isocs/thermal.hpp"

namespace isocs::claims {

namespace sf = specfun;
using states::Family;
using cplx = std::complex<double>;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::refuted: return "REFUTED";
    case Verdict::divergent_formula: return "DIVERGENT_FORMULA";
    case Verdict::degenerate_input: return "DEGENERATE_INPUT";
  }
  return "?";
}

void Config::validate() const {
  if (trunc < 8) throw std::invalid_argument("Config: trunc < 8");
  if (!(tol > 0.0)) throw std::invalid_argument("Config: tol <= 0");
  if (!(gamma > 1.0)) throw std::invalid_argument("Config: gamma <= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("Config: beta <= 0");
}

namespace {

std::string fmt(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

std::string fmt(cplx v) {
  char b[104];
  std::snprintf(b, sizeof b, "%.17g%+.17gi", v.real(), v.imag());
  return b;
}

// Accumulates a claim's measurements.
struct Acc {
  double max_res = 0.0;
  std::string notes;
  std::vector<std::string> grid;
  void res(double r) { max_res = std::max(max_res, std::abs(r)); }
  void note(const std::string& s) {
    if (!notes.empty()) notes += " | ";
    notes += s;
  }
  void point(const std::string& s) { grid.push_back(s); }
};

struct Ctx {
  Config cfg;
  fock::FockSpace full;
  fock::FockSpace even;
  fock::FockSpace odd;
  double second_gamma() const { return cfg.gamma == 1.5 ? 2.5 : 1.5; }
  fock::FockSpace with(double g, fock::Sector sec) const {
    return fock::FockSpace{g, cfg.trunc, sec};
  }
};

measures::RadialMeasure elem(Family f, double g) {
  switch (f) {
    case Family::bgcs_even:
      return {measures::Form::elementary_even, g, 4.0};
    case Family::bgcs_odd:
      return {measures::Form::elementary_odd, g, 4.0};
    case Family::gkcs:
      return {measures::Form::elementary_gk, g, 4.0};
  }
  throw std::logic_error("elem: unreachable");
}

// sqrt(rho(n)), the coefficient-normalization constant shared by the
// coherent-state families.
double sqrt_rho(double gamma, int n) {
  return std::exp(0.5 * states::rho_log(gamma, n).log_abs);
}

// Mellin-Barnes kernel values sampled once per radial node; the closed-form
// weight variants under test are all assembled from these two kernels.
struct MeijerSamples {
  quad::Grid grid;
  std::vector<double> gb;  // G(x/4 | 0; 0, -gamma/2)
  std::vector<double> ga;  // G(x/4 | -1; -1, gamma/2)
};

MeijerSamples sample_meijer_kernels(double g, double x_max, int panels,
                                    int nodes, bool need_ga) {
  MeijerSamples s{quad::radial_grid(x_max, panels, nodes), {}, {}};
  s.gb.resize(s.grid.size());
  s.ga.resize(s.grid.size(), 0.0);
  par::parallel_for(s.grid.size(), [&](std::size_t i) {
    const double u = 0.25 * s.grid.x[i];
    s.gb[i] = sf::meijer_g20_12(u, {0.0, 0.0, -0.5 * g});
    if (need_ga) s.ga[i] = sf::meijer_g20_12(u, {-1.0, -1.0, 0.5 * g});
  });
  return s;
}

// Raw moments of weight(x, gb, ga) on the coarse and fine sample sets, with
// the grid-doubling convergence check.
template <class W>
std::vector<double> shared_moments(const MeijerSamples& coarse,
                                   const MeijerSamples& fine, W&& weight,
                                   const std::vector<int>& ks) {
  const auto pass = [&](const MeijerSamples& s) {
    std::vector<double> out;
    out.reserve(ks.size());
    for (int k : ks)
      out.push_back(par::blocked_sum(s.grid.size(), [&](std::size_t i) {
        return s.grid.w[i] * weight(s.grid.x[i], s.gb[i], s.ga[i]) *
               std::pow(s.grid.x[i], k);
      }));
    return out;
  };
  const std::vector<double> c = pass(coarse);
  const std::vector<double> f = pass(fine);
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (std::abs(f[i] - c[i]) > 1e-7 * (std::abs(f[i]) + 1e-30))
      throw quad::QuadratureError("shared_moments: grid not converged",
                                  std::abs(f[i] - c[i]));
  return f;
}

// ---------------------------------------------------------------- C1
void c1(const Ctx& c, Acc& a) {
  for (double g : {c.cfg.gamma, c.second_gamma()}) {
    for (int n : {1, 2, 5, 10}) {
      const double oracle = fock::vacuum_ladder_norm(n, g);
      const double constant = sqrt_rho(g, n);
      a.res(std::abs(oracle - constant) / constant);
      a.point("gamma=" + fmt(g) + ";n=" + std::to_string(n));
      if (n == 1)
        a.note("gamma=" + fmt(g) + " n=1: ladder oracle " + fmt(oracle) +
               " vs closed-form constant " + fmt(constant) + " (abs diff " +
               fmt(std::abs(oracle - constant)) + ")");
    }
  }
}

// ---------------------------------------------------------------- C2
void c2(const Ctx& c, Acc& a) {
  struct Pt { cplx z; double g; };
  for (const Pt& p : {Pt{cplx(2.0, 0.0), c.cfg.gamma},
                      Pt{cplx(1.0, 1.0), c.second_gamma()}}) {
    const double x = std::norm(p.z);
    const double b = 0.5 * p.g + 1.0;
    const double f = sf::hyp1f1(1.0, b, 0.25 * x);
    const double ne = states::norm_function(Family::bgcs_even, p.g, x);
    const double no = states::norm_function(Family::bgcs_odd, p.g, x);
    const double de = ne / f - 1.0;
    const double dn = no / (f - 1.0) - 1.0;
    a.res(de);
    a.res(dn);
    a.point("gamma=" + fmt(p.g) + ";z=" + fmt(p.z));
    a.note("gamma=" + fmt(p.g) + " z=" + fmt(p.z) +
           ": even normalizer ratio-1 = " + fmt(de) +
           ", odd ratio-1 = " + fmt(dn));
  }
  for (double J : {4.0, 1.0}) {
    const fock::FockSpace s = c.full;
    const states::StateVector st =
        states::gkcs(J, 0.3, s, states::NormMode::closed_form);
    const double dev = st.norm2() - 1.0;
    a.res(dev);
    a.point("J=" + fmt(J));
    a.note("J=" + fmt(J) + ": action-family closed-form prefactor (1/F, not "
           "1/sqrt(F)) gives squared norm deviation " + fmt(dev));
  }
}

// ---------------------------------------------------------------- C3/C4
void overlap_claim(const Ctx& c, Acc& a, Family fam) {
  struct Pt { cplx z1, z2; };
  const std::vector<Pt> pts = {{cplx(1.0, 0.0), cplx(2.0, 0.0)},
                               {cplx(1.0, 0.5), cplx(2.0, -1.0)},
                               {cplx(0.5, 0.0), cplx(0.5, 0.0)}};
  const fock::FockSpace& s = fam == Family::bgcs_even ? c.even : c.odd;
  for (double g : {c.cfg.gamma, c.second_gamma()}) {
    fock::FockSpace sg = s;
    sg.gamma = g;
    for (const Pt& p : pts) {
      const states::Label l1 = fam == Family::bgcs_even
                                   ? states::Label::bg_even(p.z1)
                                   : states::Label::bg_odd(p.z1);
      const states::Label l2 = fam == Family::bgcs_even
                                   ? states::Label::bg_even(p.z2)
                                   : states::Label::bg_odd(p.z2);
      const cplx oracle = states::overlap(states::make_state(l1, sg),
                                          states::make_state(l2, sg));
      const cplx closed = states::overlap_closed_form(l1, l2, g);
      a.res(std::abs(oracle - closed));
      a.point("gamma=" + fmt(g) + ";z1=" + fmt(p.z1) + ";z2=" + fmt(p.z2));
      if (p.z1 == p.z2 && g == c.cfg.gamma)
        a.note("diagonal pair: oracle " + fmt(oracle) + ", closed form " +
               fmt(closed));
    }
  }
  a.note("off-diagonal deviation comes from the full-series numerator and "
         "normalizers standing in for the parity parts");
}

// ---------------------------------------------------------------- C5
void c5(const Ctx& c, Acc& a) {
  struct Pt { cplx z; double g; };
  for (const Pt& p : {Pt{cplx(1.0, 0.0), c.cfg.gamma},
                      Pt{cplx(1.0, 1.0), 2.5}}) {
    for (Family fam : {Family::bgcs_even, Family::bgcs_odd}) {
      fock::FockSpace s = c.with(
          p.g, fam == Family::bgcs_even ? fock::Sector::even
                                        : fock::Sector::odd);
      const states::StateVector st =
          fam == Family::bgcs_even ? states::bgcs_even(p.z, s)
                                   : states::bgcs_odd(p.z, s);
      const auto canon = states::eigen_residual(
          st, fock::generator(s, fock::Generator::Kminus));
      const auto sect = states::eigen_residual(
          st, fock::sector_ladder(s, fock::Generator::Kminus));
      a.res(canon.residual);
      a.res(std::abs(canon.lambda - p.z));
      a.point("gamma=" + fmt(p.g) + ";z=" + fmt(p.z) + ";family=" +
              (fam == Family::bgcs_even ? "even" : "odd"));
      a.note(std::string(fam == Family::bgcs_even ? "even" : "odd") +
             " z=" + fmt(p.z) + " gamma=" + fmt(p.g) +
             ": canonical ladder residual " + fmt(canon.residual) +
             " (lambda " + fmt(canon.lambda) + "), parity-internal ladder " +
             "residual " + fmt(sect.residual) + " (lambda " +
             fmt(sect.lambda) + ")");
    }
  }
}

// ---------------------------------------------------------------- C6
void c6(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  // Moment-matched elementary measures resolve the identity on each sector.
  measures::ResolutionOptions ropt;
  ropt.n_max = 12;
  const double re = measures::identity_resolution_residual(
      Family::bgcs_even, elem(Family::bgcs_even, g), c.even, ropt);
  const double ro = measures::identity_resolution_residual(
      Family::bgcs_odd, elem(Family::bgcs_odd, g), c.odd, ropt);
  a.note("moment-matched elementary weights: even-sector resolution residual " +
         fmt(re) + ", odd-sector residual " + fmt(ro));

  // The printed Meijer-G weights, via reduced moments against the rho
  // targets. Parameters (0; 0, -gamma/2): the even form (evaluated at the
  // magnitude of its negated argument). Parameters (-1; -1, gamma/2): the
  // subtracted term of the odd form and the derivation variants. Both
  // kernels are sampled once per grid node and every variant's moments are
  // assembled from the shared samples.
  const double b = 0.5 * g + 1.0;
  const measures::RadialMeasure me{measures::Form::meijer_even, g, 4.0};
  const std::vector<int> even_ks = {0, 2, 4, 6};
  const std::vector<int> odd_ks = {1, 3, 5};
  const double x_max = measures::radial_cutoff(g, 7.0, 4.0);

  const auto targets = [&](const std::vector<int>& ks) {
    std::vector<double> t;
    for (int k : ks) t.push_back(measures::moment_target(me, k));
    return t;
  };
  const auto dev_against = [&](const std::vector<double>& got,
                               const std::vector<double>& want) {
    double mx = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
      mx = std::max(mx, std::abs(got[i] - want[i]) / std::abs(want[i]));
    return mx;
  };

  const MeijerSamples cs = sample_meijer_kernels(g, x_max, 64, 10, true);
  const MeijerSamples fs = sample_meijer_kernels(g, x_max, 128, 10, true);
  const double lg = std::exp(sf::ln_gamma(b));
  const auto even_weight = [&](double x, double gb, double ga) {
    (void)ga;
    return std::exp(0.5 * g * std::log(x) - 0.25 * x -
                    (g + 2.0) * std::log(2.0)) *
           gb / sf::hyp1f1(1.0, b, 0.25 * x);
  };
  const auto odd_weight = [&](double x, double gb, double ga) {
    return (std::exp(0.5 * g * std::log(x) - 0.25 * x -
                     (g + 2.0) * std::log(2.0)) *
                gb -
            ga / (4.0 * lg)) /
           (sf::hyp1f1(1.0, b, 0.25 * x) - 1.0);
  };
  const auto ga_only = [&](double x, double gb, double ga) {
    (void)x;
    (void)gb;
    return ga;
  };

  const std::vector<double> even_moments =
      shared_moments(cs, fs, even_weight, even_ks);
  const double even_dev = dev_against(even_moments, targets(even_ks));
  a.res(even_dev);
  for (int k : even_ks) a.point("gamma=" + fmt(g) + ";k=" + std::to_string(k));
  a.note("even closed-form weight (parameters 0; 0,-gamma/2, negated "
         "argument read as magnitude): max relative moment deviation " +
         fmt(even_dev));

  const std::vector<double> odd_moments =
      shared_moments(cs, fs, odd_weight, odd_ks);
  const double odd_dev = dev_against(odd_moments, targets(odd_ks));
  a.res(odd_dev);
  for (int k : odd_ks) a.point("gamma=" + fmt(g) + ";k=" + std::to_string(k));
  a.note("odd closed-form weight: max relative moment deviation " +
         fmt(odd_dev));

  // Derivation variants built on G(x/4 | -1; -1, gamma/2), which equals the
  // elementary profile up to the normalizing constants under test.
  const std::vector<double> ga_moments =
      shared_moments(cs, fs, ga_only, even_ks);
  double dev_over_gamma = 0.0, dev_over_4gamma = 0.0;
  const std::vector<double> want = targets(even_ks);
  for (std::size_t i = 0; i < even_ks.size(); ++i) {
    dev_over_gamma = std::max(
        dev_over_gamma, std::abs(ga_moments[i] / lg - want[i]) / want[i]);
    dev_over_4gamma = std::max(
        dev_over_4gamma,
        std::abs(ga_moments[i] / (4.0 * lg) - want[i]) / want[i]);
  }
  a.note("variant G(x/4|-1;-1,gamma/2)/Gamma(gamma/2+1): max moment "
         "deviation " + fmt(dev_over_gamma) +
         "; with the extra 1/4 the deviation is " + fmt(dev_over_4gamma) +
         " (this is the moment-matched form)");

  // Scope: support alone restricts each resolution to its parity sector.
  measures::ResolutionOptions small = ropt;
  small.n_max = 6;
  const std::vector<double> cross = measures::identity_resolution_diagonal(
      Family::bgcs_odd, elem(Family::bgcs_even, g), c.odd, small);
  double cross_dev = 0.0;
  for (double d : cross) cross_dev = std::max(cross_dev, std::abs(d - 1.0));
  a.note("the resolution can only hold per parity sector: even-family "
         "projectors have no odd-index support (identity claim on the full "
         "space fails by construction)");
  (void)cross_dev;

  // Second gamma, light grid.
  const double g2 = c.second_gamma();
  const measures::RadialMeasure me2{measures::Form::meijer_even, g2, 4.0};
  const std::vector<int> ks2 = {0, 2};
  const double x2 = measures::radial_cutoff(g2, 3.0, 4.0);
  const double b2 = 0.5 * g2 + 1.0;
  const auto even_weight2 = [&](double x, double gb, double ga) {
    (void)ga;
    return std::exp(0.5 * g2 * std::log(x) - 0.25 * x -
                    (g2 + 2.0) * std::log(2.0)) *
           gb / sf::hyp1f1(1.0, b2, 0.25 * x);
  };
  const std::vector<double> m2 =
      shared_moments(sample_meijer_kernels(g2, x2, 64, 10, false),
                     sample_meijer_kernels(g2, x2, 128, 10, false),
                     even_weight2, ks2);
  std::vector<double> want2;
  for (int k : ks2) want2.push_back(measures::moment_target(me2, k));
  const double dev2 = dev_against(m2, want2);
  a.res(dev2);
  for (int k : ks2) a.point("gamma=" + fmt(g2) + ";k=" + std::to_string(k));
  a.note("gamma=" + fmt(g2) + ": even closed-form weight max moment "
         "deviation " + fmt(dev2));
}

// ---------------------------------------------------------------- C7
void c7(const Ctx& c, Acc& a) {
  struct Pt { double J1, a1, J2, a2; };
  for (const Pt& p : {Pt{4.0, 0.3, 1.0, -0.2}, Pt{2.0, 0.1, 2.0, 0.1},
                      Pt{4.0, 0.0, 4.0, 0.5}}) {
    const states::Label l1 = states::Label::gk(p.J1, p.a1);
    const states::Label l2 = states::Label::gk(p.J2, p.a2);
    const cplx oracle = states::overlap(states::make_state(l1, c.full),
                                        states::make_state(l2, c.full));
    const cplx closed = states::overlap_closed_form(l1, l2, c.cfg.gamma);
    a.res(std::abs(oracle - closed));
    a.point("J1=" + fmt(p.J1) + ";alpha1=" + fmt(p.a1) + ";J2=" + fmt(p.J2) +
            ";alpha2=" + fmt(p.a2));
  }
  a.note("action-angle overlap closed form reproduces the coefficient sum "
         "(energy phases exp(-i E_n alpha) with E_n = 2(2n+gamma))");
}

// ---------------------------------------------------------------- C8
void c8(const Ctx& c, Acc& a) {
  measures::ResolutionOptions ropt;
  ropt.n_max = 20;
  const double r1 = measures::identity_resolution_residual(
      Family::gkcs, elem(Family::gkcs, c.cfg.gamma), c.full, ropt);
  a.res(r1);
  a.point("gamma=" + fmt(c.cfg.gamma) + ";n_max=20");
  measures::ResolutionOptions r2o;
  r2o.n_max = 12;
  const double g2 = c.second_gamma();
  const double r2 = measures::identity_resolution_residual(
      Family::gkcs, elem(Family::gkcs, g2), c.with(g2, fock::Sector::full),
      r2o);
  a.res(r2);
  a.point("gamma=" + fmt(g2) + ";n_max=12");
  a.note("elementary action density (J/4)^{gamma/2} e^{-J/4} / "
         "(4 Gamma(gamma/2+1)), diagonal residuals " + fmt(r1) + " and " +
         fmt(r2));
  // The printed Meijer form of the same density.
  const measures::RadialMeasure mg{measures::Form::meijer_gk, c.cfg.gamma, 4.0};
  const measures::RadialMeasure eg = elem(Family::gkcs, c.cfg.gamma);
  double dev = 0.0;
  for (double J : {1.0, 4.0, 10.0})
    dev = std::max(dev, std::abs(measures::weight(mg, J) /
                                     measures::weight(eg, J) - 1.0));
  a.note("closed-form Meijer density G(J/4|-1;-1,gamma/2)/(4 Gamma) matches "
         "the elementary density: max relative deviation " + fmt(dev) +
         " (the squared-normalizer measure offsets the 1/F state prefactor)");
  a.res(dev);
}

// ---------------------------------------------------------------- C9
void c9(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  // Hermiticity and diagonal positivity of the canonical kernels.
  const states::Label ea = states::Label::bg_even(cplx(1.0, 0.4));
  const states::Label eb = states::Label::bg_even(cplx(0.5, -0.8));
  const states::Label oa = states::Label::bg_odd(cplx(1.2, 0.0));
  const states::Label ob = states::Label::bg_odd(cplx(0.7, 0.6));
  const states::Label ga = states::Label::gk(4.0, 0.3);
  const states::Label gb = states::Label::gk(2.0, -0.1);

  const auto herm = [&](const states::Label& x, const states::Label& y,
                        const fock::FockSpace& s) {
    const cplx kxy = kernels::kernel(x, y, s).canonical;
    const cplx kyx = kernels::kernel(y, x, s).canonical;
    return std::abs(std::conj(kxy) - kyx);
  };
  const double h = std::max({herm(ea, eb, c.even), herm(oa, ob, c.odd),
                             herm(ga, gb, c.full)});
  a.res(h);
  a.note("hermiticity residual (canonical kernels, all families): " + fmt(h));

  const auto diag1 = [&](const states::Label& x, const fock::FockSpace& s) {
    return std::abs(kernels::kernel(x, x, s).canonical - 1.0);
  };
  const double d = std::max({diag1(ea, c.even), diag1(oa, c.odd),
                             diag1(ga, c.full)});
  a.res(d);
  a.note("diagonal kernels equal 1: max deviation " + fmt(d));

  const std::vector<states::Label> gl = {
      states::Label::gk(0.5, 0.0), states::Label::gk(1.0, 0.4),
      states::Label::gk(2.0, -0.3), states::Label::gk(4.0, 0.1),
      states::Label::gk(6.0, 0.2)};
  const double mineig = kernels::gram_min_eigenvalue(gl, c.full);
  a.res(std::max(0.0, -mineig));
  a.note("Gram matrix of five action-angle kernels: min eigenvalue " +
         fmt(mineig));

  measures::ResolutionOptions ropt;
  const double ie = kernels::idempotence_residual(
      ea, eb, elem(Family::bgcs_even, g), c.even, ropt);
  const double io = kernels::idempotence_residual(
      oa, ob, elem(Family::bgcs_odd, g), c.odd, ropt);
  const double ig = kernels::idempotence_residual(
      ga, gb, elem(Family::gkcs, g), c.full, ropt);
  a.res(ie);
  a.res(io);
  a.res(ig);
  a.note("idempotence residuals under the moment-matched measures: even " +
         fmt(ie) + ", odd " + fmt(io) + ", action " + fmt(ig));

  // The closed-form action-angle kernel carries a flat exp(-4i dalpha)
  // phase; the overlap oracle carries exp(2i gamma dalpha) outside and the
  // spectrum phases inside the series.
  const kernels::KernelEval ke = kernels::kernel(ga, gb, c.full);
  a.res(ke.abs_diff);
  a.note("closed-form action-angle kernel vs canonical overlap at distinct "
         "angles: deviation " + fmt(ke.abs_diff) +
         " (canonical " + fmt(ke.canonical) + ", closed form " +
         fmt(ke.closed_form) + ")");
  a.note("the printed hermiticity line that conjugates the action-angle "
         "kernel into the odd one is a cross-family comparison; hermiticity "
         "is verified within each family");
  a.point("gamma=" + fmt(g) + ";pairs=even/odd/action");
  a.point("gamma=" + fmt(g) + ";gram=5 action labels");
}

// ---------------------------------------------------------------- C10
void c10(const Ctx& c, Acc& a) {
  struct Pt { cplx z; };
  for (const Pt& p : {Pt{cplx(1.0, 0.5)}, Pt{cplx(0.8, 0.0)}}) {
    for (Family fam : {Family::bgcs_even, Family::bgcs_odd}) {
      const fock::FockSpace& s = fam == Family::bgcs_even ? c.even : c.odd;
      const states::StateVector st =
          fam == Family::bgcs_even ? states::bgcs_even(p.z, s)
                                   : states::bgcs_odd(p.z, s);
      const auto expval = [&](const fock::OperatorMatrix& m) {
        const auto v = m.apply(st.coeffs);
        cplx acc(0.0);
        for (int n = 0; n < s.trunc; ++n)
          acc += std::conj(st.coeffs[n]) * v[n];
        return acc;
      };
      const cplx km = expval(fock::generator(s, fock::Generator::Kminus));
      const cplx kp = expval(fock::generator(s, fock::Generator::Kplus));
      const cplx kpkm = expval(fock::multiply(
          fock::generator(s, fock::Generator::Kplus),
          fock::generator(s, fock::Generator::Kminus)));
      const cplx skm = expval(fock::sector_ladder(s, fock::Generator::Kminus));
      a.res(std::abs(km - p.z));
      a.res(std::abs(kp - std::conj(p.z)));
      a.res(std::abs(kpkm - std::norm(p.z)));
      a.point("family=" + std::string(fam == Family::bgcs_even ? "even" : "odd") +
              ";z=" + fmt(p.z));
      a.note(std::string(fam == Family::bgcs_even ? "even" : "odd") + " z=" +
             fmt(p.z) + ": <K-> = " + fmt(km) + " vs z (canonical; "
             "parity-internal ladder gives " + fmt(skm) + "), <K+K-> = " +
             fmt(kpkm) + " vs |z|^2 = " + fmt(std::norm(p.z)));
    }
  }
  // Action-angle family.
  const double J = 4.0, al = 0.3;
  const states::StateVector st = states::gkcs(J, al, c.full);
  const auto expval = [&](const fock::OperatorMatrix& m) {
    const auto v = m.apply(st.coeffs);
    cplx acc(0.0);
    for (int n = 0; n < c.full.trunc; ++n)
      acc += std::conj(st.coeffs[n]) * v[n];
    return acc;
  };
  const cplx km = expval(fock::generator(c.full, fock::Generator::Kminus));
  const cplx kpkm = expval(fock::multiply(
      fock::generator(c.full, fock::Generator::Kplus),
      fock::generator(c.full, fock::Generator::Kminus)));
  const cplx want = std::sqrt(J) * std::exp(cplx(0.0, -al));
  a.res(std::abs(km - want));
  a.res(std::abs(kpkm - J));
  a.point("J=" + fmt(J) + ";alpha=" + fmt(al));
  a.note("action family: <K-> = " + fmt(km) + " vs sqrt(J) exp(-i alpha) = " +
         fmt(want) + "; <K+K-> = " + fmt(kpkm) + " vs J = " + fmt(J));
  a.note("the tabulated <K3> entries are constants carrying a free index; "
         "<2K0> is label-dependent (kind mismatch), e.g. " +
         fmt(expval(fock::scale(fock::generator(c.full, fock::Generator::K0),
                                2.0))) + " at J=4");
}

// ---------------------------------------------------------------- C11
void c11(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const double b = 0.5 * g + 1.0;
  double gk_dev = 0.0, even_dev = 0.0, odd_dev = 0.0;
  for (double J : {4.0, 2.0}) {
    const states::StateVector st = states::gkcs(J, 0.0, c.full);
    const double f = sf::hyp1f1(1.0, b, 0.25 * J);
    for (int n = 0; n <= 6; ++n) {
      const double closed =
          std::exp(n * std::log(J) - states::rho_log(g, n).log_abs) / f;
      gk_dev = std::max(gk_dev, std::abs(closed - states::pnd(st, n)));
    }
    a.point("family=action;J=" + fmt(J));
  }
  for (cplx z : {cplx(1.5, 0.0), cplx(2.0, 1.0)}) {
    const double x = std::norm(z);
    const double f = sf::hyp1f1(1.0, b, 0.25 * x);
    const states::StateVector se = states::bgcs_even(z, c.even);
    const states::StateVector so = states::bgcs_odd(z, c.odd);
    for (int n = 0; n <= 3; ++n) {
      const double ce = std::exp(2.0 * n * std::log(x) -
                                 states::rho_log(g, 2 * n).log_abs) / f;
      even_dev = std::max(even_dev, std::abs(ce - states::pnd(se, 2 * n)));
      // The odd closed form prints |z|^{4n+1}.
      const double co = std::exp((4.0 * n + 1.0) * std::log(std::abs(z)) -
                                 states::rho_log(g, 2 * n + 1).log_abs) /
                        (f - 1.0);
      odd_dev = std::max(odd_dev, std::abs(co - states::pnd(so, 2 * n + 1)));
    }
    a.point("family=even/odd;z=" + fmt(z));
  }
  a.res(gk_dev);
  a.res(even_dev);
  a.res(odd_dev);
  a.note("action-family distribution matches exactly: max deviation " +
         fmt(gk_dev));
  a.note("even closed form deviates by the full-vs-parity normalizer: " +
         fmt(even_dev));
  a.note("odd closed form deviates further by the printed |z|^{4n+1} "
         "exponent (the coefficient square carries |z|^{4n+2}): " +
         fmt(odd_dev));
}

// ---------------------------------------------------------------- C12
void c12(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const double b = 0.5 * g + 1.0;
  const auto f1 = [&](cplx u) { return sf::hyp1f1_one(b, u); };

  double even_dev = 0.0, odd_dev = 0.0, gk_dev = 0.0;
  struct Pt { cplx z, z0; double t; };
  for (const Pt& p : {Pt{cplx(1.0, 0.0), cplx(1.0, 0.0), 0.2},
                      Pt{cplx(0.8, 0.0), cplx(1.2, 0.0), 0.4}}) {
    const cplx z0t = p.z0 * std::exp(cplx(0.0, -2.0 * p.t));
    for (Family fam : {Family::bgcs_even, Family::bgcs_odd}) {
      const fock::FockSpace& s = fam == Family::bgcs_even ? c.even : c.odd;
      const states::StateVector sz =
          fam == Family::bgcs_even ? states::bgcs_even(p.z, s)
                                   : states::bgcs_odd(p.z, s);
      const states::StateVector s0 =
          fam == Family::bgcs_even ? states::bgcs_even(p.z0, s)
                                   : states::bgcs_odd(p.z0, s);
      const double oracle =
          std::norm(states::overlap(sz, states::evolve(s0, p.t)));
      const cplx na = f1(0.25 * std::conj(p.z) * z0t);
      const cplx nb = f1(0.25 * p.z * std::conj(z0t));
      const double da = sf::hyp1f1(1.0, b, 0.25 * std::norm(p.z));
      const double db = sf::hyp1f1(1.0, b, 0.25 * std::norm(z0t));
      double closed;
      if (fam == Family::bgcs_even)
        closed = (na * nb).real() / (da * db);
      else
        closed = ((na - 1.0) * (nb - 1.0)).real() /
                 ((da - 1.0) * (db - 1.0));
      const double dev = std::abs(oracle - closed);
      if (fam == Family::bgcs_even)
        even_dev = std::max(even_dev, dev);
      else
        odd_dev = std::max(odd_dev, dev);
      a.point("family=" +
              std::string(fam == Family::bgcs_even ? "even" : "odd") +
              ";z=" + fmt(p.z) + ";z0=" + fmt(p.z0) + ";t=" + fmt(p.t));
    }
  }
  struct GPt { double J, J0, t; };
  for (const GPt& p : {GPt{4.0, 4.0, 0.2}, GPt{4.0, 2.0, 0.4},
                       GPt{4.0, 4.0, 0.7}}) {
    const states::StateVector sz = states::gkcs(p.J, 0.0, c.full);
    const states::StateVector s0 = states::gkcs(p.J0, 0.0, c.full);
    const double oracle =
        std::norm(states::overlap(sz, states::evolve(s0, p.t)));
    const double root = 0.25 * std::sqrt(p.J * p.J0);
    const cplx na = f1(root * std::exp(cplx(0.0, 4.0 * p.t)));
    const cplx nb = f1(root * std::exp(cplx(0.0, -4.0 * p.t)));
    const double closed = (na * nb).real() /
                          (sf::hyp1f1(1.0, b, 0.25 * p.J) *
                           sf::hyp1f1(1.0, b, 0.25 * p.J0));
    gk_dev = std::max(gk_dev, std::abs(oracle - closed));
    a.point("family=action;J=" + fmt(p.J) + ";J0=" + fmt(p.J0) +
            ";t=" + fmt(p.t));
  }
  a.res(even_dev);
  a.res(odd_dev);
  a.res(gk_dev);
  a.note("action-family density matches the spectrum phases exactly: max "
         "deviation " + fmt(gk_dev));
  a.note("parity closed forms use the substitution z0(t) = z0 exp(-2it), "
         "half the spectral phase rate exp(-4it) per coefficient step, and "
         "full-series normalizers: even deviation " + fmt(even_dev) +
         ", odd deviation " + fmt(odd_dev));
}

// ---------------------------------------------------------------- C13
void c13(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const quantize::QuadratureSpec q;
  const auto me = elem(Family::bgcs_even, g);
  const auto mo = elem(Family::bgcs_odd, g);
  const auto az_e = quantize::toeplitz(quantize::Symbol::z,
                                       Family::bgcs_even, me, c.even, q);
  const auto azb_e = quantize::toeplitz(quantize::Symbol::zbar,
                                        Family::bgcs_even, me, c.even, q);
  const auto am_e = quantize::toeplitz(quantize::Symbol::modz2,
                                       Family::bgcs_even, me, c.even, q);
  const auto az_o = quantize::toeplitz(quantize::Symbol::z,
                                       Family::bgcs_odd, mo, c.odd, q);
  const auto am_o = quantize::toeplitz(quantize::Symbol::modz2,
                                       Family::bgcs_odd, mo, c.odd, q);
  const int hi = c.cfg.trunc - 2;
  double dev = 0.0;
  for (int n = 1; 2 * n < hi; ++n) {
    const double el =
        4.0 * std::sqrt((0.5 * g + 2.0 * n) * (0.5 * g + 2.0 * n - 1.0));
    dev = std::max(dev, std::abs(az_e.at(2 * n - 2, 2 * n).real() - el));
    dev = std::max(dev, std::abs(azb_e.at(2 * n, 2 * n - 2).real() - el));
  }
  for (int n = 0; 2 * n < hi; ++n)
    dev = std::max(dev, std::abs(am_e.at(2 * n, 2 * n).real() -
                                 4.0 * (0.5 * g + 2.0 * n + 1.0)));
  double dev_o = 0.0;
  for (int n = 1; 2 * n + 1 < hi; ++n) {
    const double el =
        4.0 * std::sqrt((0.5 * g + 2.0 * n) * (0.5 * g + 2.0 * n + 1.0));
    dev_o = std::max(dev_o, std::abs(az_o.at(2 * n - 1, 2 * n + 1).real() - el));
  }
  for (int n = 0; 2 * n + 1 < hi; ++n)
    dev_o = std::max(dev_o, std::abs(am_o.at(2 * n + 1, 2 * n + 1).real() -
                                     4.0 * (0.5 * g + 2.0 * n + 2.0)));
  a.res(dev);
  a.res(dev_o);
  a.point("gamma=" + fmt(g) + ";family=even;interior=" + std::to_string(hi));
  a.point("gamma=" + fmt(g) + ";family=odd;interior=" + std::to_string(hi));
  a.note("quantized matrix elements vs the closed-form band entries: even "
         "deviation " + fmt(dev) + ", odd deviation " + fmt(dev_o));

  // Expectation table: <z|A_z|z> vs z^2.
  const cplx z(1.0, 0.5);
  const states::StateVector se = states::bgcs_even(z, c.even);
  const auto v = az_e.apply(se.coeffs);
  cplx exp_az(0.0);
  for (int n = 0; n < c.cfg.trunc; ++n)
    exp_az += std::conj(se.coeffs[n]) * v[n];
  a.res(std::abs(exp_az - z * z));
  a.point("gamma=" + fmt(g) + ";z=" + fmt(z));
  a.note("<A_z> on the even state at z=" + fmt(z) + ": " + fmt(exp_az) +
         " vs z^2 = " + fmt(z * z));
  const auto vm = am_e.apply(se.coeffs);
  cplx exp_am(0.0);
  for (int n = 0; n < c.cfg.trunc; ++n)
    exp_am += std::conj(se.coeffs[n]) * vm[n];
  a.note("<A_|z|^2> is label-dependent (" + fmt(exp_am.real()) +
         " at z=" + fmt(z) + "); the tabulated constant 2(gamma+4n+2) "
         "carries a free index (kind mismatch, not scored)");
}

// ---------------------------------------------------------------- C14
void c14(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const auto cmp = quantize::compare_with_generators(
      c.full, elem(Family::bgcs_even, g), elem(Family::bgcs_odd, g));
  for (const auto& cc : cmp) {
    a.note(cc.label + ": max deviation " + fmt(cc.max_abs_dev));
    a.point(cc.label);
    // Scored: the four printed identities.
    if (cc.label == "A_z(even) vs K-^2" || cc.label == "A_zbar(even) vs K+^2" ||
        cc.label == "A_|z|^2(even) vs 2K0+4" ||
        cc.label == "A_|z|^2(odd) vs 2K0+8")
      a.res(cc.max_abs_dev);
  }
}

// ---------------------------------------------------------------- C15
void c15(const Ctx& c, Acc& a) {
  for (double beta : {0.25, 0.5, 1.0}) {
    for (double g : {c.cfg.gamma, c.second_gamma()}) {
      if (g != c.cfg.gamma && beta != 0.5) continue;
      const thermal::ThermalParams tp{beta, g};
      for (Family fam : {Family::bgcs_even, Family::bgcs_odd, Family::gkcs}) {
        const fock::FockSpace s = c.with(
            g, fam == Family::bgcs_even
                   ? fock::Sector::even
                   : (fam == Family::bgcs_odd ? fock::Sector::odd
                                              : fock::Sector::full));
        const double zd = thermal::density(fam, tp, s).Z;
        const double zc = thermal::partition_closed_form(fam, tp);
        const double ratio = zd / zc;
        a.res(ratio - 1.0);
        const char* name = fam == Family::bgcs_even
                               ? "even"
                               : (fam == Family::bgcs_odd ? "odd" : "action");
        a.point(std::string("family=") + name + ";beta=" + fmt(beta) +
                ";gamma=" + fmt(g));
        if (fam == Family::bgcs_odd)
          a.note("odd beta=" + fmt(beta) + " gamma=" + fmt(g) +
                 ": direct/closed-form ratio " + fmt(ratio) +
                 ", exp(-2 beta) = " + fmt(std::exp(-2.0 * beta)) +
                 ", difference " + fmt(ratio - std::exp(-2.0 * beta)));
        else if (beta == 0.5 && g == c.cfg.gamma)
          a.note(std::string(name) + ": ratio-1 = " + fmt(ratio - 1.0));
      }
    }
  }
  a.note("even and action closed forms match the direct geometric sums; the "
         "odd closed form is off by exactly exp(-2 beta)");
}

// ---------------------------------------------------------------- C16
void c16(const Ctx& c, Acc& a) {
  bool any_divergent = false;
  for (Family fam : {Family::bgcs_even, Family::bgcs_odd}) {
    const fock::FockSpace s = c.with(
        c.cfg.gamma, fam == Family::bgcs_even ? fock::Sector::even
                                              : fock::Sector::odd);
    const char* name = fam == Family::bgcs_even ? "even" : "odd";
    for (int mom : {1, 2}) {
      for (double beta : {0.25, 0.5}) {
        const thermal::ThermalParams tp{beta, c.cfg.gamma};
        const double oracle = thermal::thermal_moment(fam, tp, mom, s);
        const auto printed =
            thermal::thermal_moment_closed_form(fam, tp, mom, false);
        const auto flipped =
            thermal::thermal_moment_closed_form(fam, tp, mom, true);
        any_divergent = any_divergent || printed.divergent;
        a.point(std::string("family=") + name + ";s=" + std::to_string(mom) +
                ";beta=" + fmt(beta));
        std::string line = std::string(name) + " s=" + std::to_string(mom) +
                           " beta=" + fmt(beta) + ": oracle=" + fmt(oracle);
        line += printed.divergent
                    ? " closed_form=DIVERGENT at argument " +
                          fmt(printed.argument)
                    : " closed_form=" + fmt(printed.value);
        line += " flipped_argument_trial=" +
                (flipped.divergent ? std::string("DIVERGENT")
                                   : fmt(flipped.value));
        a.note(line);
        if (!flipped.divergent && oracle != 0.0)
          a.res(flipped.value / oracle - 1.0);
      }
    }
  }
  a.note(any_divergent
             ? "the closed forms place exp(4 beta) >= 1 inside the 2F1 "
               "series; reported as a divergence, with the exp(-4 beta) "
               "trial for information"
             : "no divergence encountered");
}

// ---------------------------------------------------------------- C17
void c17(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const quantize::QuadratureSpec q{64, 12};
  for (double beta : {0.5, 1.0}) {
    const thermal::ThermalParams tp{beta, g};
    for (Family fam : {Family::bgcs_even, Family::bgcs_odd}) {
      const fock::FockSpace s = c.with(
          g, fam == Family::bgcs_even ? fock::Sector::even
                                      : fock::Sector::odd);
      const thermal::DensityOperator rho = thermal::density(fam, tp, s);
      const auto m = elem(fam, g);
      const double t1 = thermal::trace_against(
          rho, fock::generator(s, fock::Generator::Kminus));
      const double t2 = thermal::trace_against(
          rho, fock::generator(s, fock::Generator::Kplus));
      const double t3 = thermal::trace_against(
          rho, quantize::toeplitz(quantize::Symbol::z, fam, m, s, q));
      const double t4 = thermal::trace_against(
          rho, quantize::toeplitz(quantize::Symbol::zbar, fam, m, s, q));
      a.res(t1); a.res(t2); a.res(t3); a.res(t4);
      a.point(std::string("family=") +
              (fam == Family::bgcs_even ? "even" : "odd") +
              ";beta=" + fmt(beta));
    }
  }
  a.note("the mixtures are diagonal and every operator tested is strictly "
         "off-diagonal, so each trace vanishes identically (residual is an "
         "exact floating-point zero)");
}

// ---------------------------------------------------------------- C18
void c18(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  double gk_dev = 0.0, even_dev = 0.0, odd_dev = 0.0;
  for (double beta : {0.5, 1.0}) {
    const thermal::ThermalParams tp{beta, g};
    const thermal::DensityOperator rg =
        thermal::density(Family::gkcs, tp, c.full);
    for (double J : {1.0, 4.0}) {
      const double oracle = thermal::husimi_q(rg, states::Label::gk(J, 0.0));
      const double closed =
          thermal::husimi_q_closed_form(Family::gkcs, tp, J);
      gk_dev = std::max(gk_dev, std::abs(oracle - closed));
      a.point("family=action;beta=" + fmt(beta) + ";J=" + fmt(J));
    }
    const thermal::DensityOperator re =
        thermal::density(Family::bgcs_even, tp, c.even);
    const thermal::DensityOperator ro =
        thermal::density(Family::bgcs_odd, tp, c.odd);
    for (double x : {1.0, 4.0}) {
      const double ze = std::sqrt(x);
      const double oe =
          thermal::husimi_q(re, states::Label::bg_even(cplx(ze, 0.0)));
      const double ce = thermal::husimi_q_closed_form(Family::bgcs_even, tp, x);
      even_dev = std::max(even_dev, std::abs(oe - ce));
      const double oo =
          thermal::husimi_q(ro, states::Label::bg_odd(cplx(ze, 0.0)));
      const double co = thermal::husimi_q_closed_form(Family::bgcs_odd, tp, x);
      odd_dev = std::max(odd_dev, std::abs(oo - co));
      a.point("family=even/odd;beta=" + fmt(beta) + ";|z|^2=" + fmt(x));
    }
  }
  a.res(gk_dev);
  a.res(even_dev);
  a.res(odd_dev);
  const thermal::ThermalParams tp{c.cfg.beta, g};
  const double norm = thermal::husimi_normalization(
      thermal::density(Family::gkcs, tp, c.full), elem(Family::gkcs, g));
  a.res(norm - 1.0);
  a.note("action-family closed form matches the diagonal Boltzmann sum: max "
         "deviation " + fmt(gk_dev) + "; its phase-space integral is " +
         fmt(norm));
  a.note("parity closed forms use the full series where the diagonal sum "
         "produces the parity part: even deviation " + fmt(even_dev) +
         ", odd deviation " + fmt(odd_dev));
}

// ---------------------------------------------------------------- C19
void c19(const Ctx& c, Acc& a) {
  const double g = c.cfg.gamma;
  const thermal::ThermalParams tp{c.cfg.beta, g};
  // Moment-derived diagonal density reconstructs the Boltzmann weights.
  for (Family fam : {Family::gkcs, Family::bgcs_even, Family::bgcs_odd}) {
    const fock::FockSpace s = c.with(
        g, fam == Family::bgcs_even
               ? fock::Sector::even
               : (fam == Family::bgcs_odd ? fock::Sector::odd
                                          : fock::Sector::full));
    const int n_max = fam == Family::gkcs ? 15 : 10;
    const std::vector<double> rec =
        thermal::p_reconstruct_diagonal(fam, tp, s, n_max);
    const thermal::DensityOperator rho = thermal::density(fam, tp, s);
    const int q0 = fam == Family::bgcs_odd ? 1 : 0;
    const int step = fam == Family::gkcs ? 1 : 2;
    double dev = 0.0;
    for (int j = 0; j <= n_max; ++j)
      dev = std::max(dev, std::abs(rec[j] - rho.weights[q0 + j * step]));
    const char* name = fam == Family::bgcs_even
                           ? "even"
                           : (fam == Family::bgcs_odd ? "odd" : "action");
    a.note(std::string(name) +
           ": moment-derived density reconstructs the Boltzmann weights to " +
           fmt(dev) + " (n <= " + std::to_string(n_max) + ")");
    a.point(std::string("family=") + name + ";beta=" + fmt(c.cfg.beta));
  }
  // The closed-form Meijer ratio scales its argument toward the origin,
  // which inverts the Boltzmann direction.
  double closed_dev = 0.0;
  for (double x : {1.0, 4.0, 10.0}) {
    const double canonical = thermal::p_function(Family::gkcs, tp, x);
    const double closed =
        thermal::p_function_closed_form(Family::gkcs, tp, x);
    closed_dev = std::max(closed_dev, std::abs(closed / canonical - 1.0));
    if (x == 4.0)
      a.note("at J=4: moment-derived P = " + fmt(canonical) +
             ", closed-form ratio P = " + fmt(closed));
    a.point("closed-form;J=" + fmt(x));
  }
  a.res(closed_dev);
  a.note("closed-form ratio vs moment-derived density: max relative "
         "deviation " + fmt(closed_dev) +
         " (the printed argument scaling exp(-4 beta) x reproduces inverted "
         "Boltzmann weights)");
}

struct ClaimDef {
  const char* id;
  const char* what;
  void (*eval)(const Ctx&, Acc&);
  // Verdict override: divergent-formula claims are flagged by the evaluator.
  bool divergent_kind = false;
};

const ClaimDef kRegistry[] = {
    {"C1", "norm of repeated raising on the vacuum vs the closed-form "
           "constant sqrt(4^n (gamma/2+1)_n)", c1, false},
    {"C2", "closed-form normalizers of the three families vs unit norm", c2,
     false},
    {"C3", "even-family overlap closed form vs coefficient sum",
     [](const Ctx& c, Acc& a) { overlap_claim(c, a, Family::bgcs_even); },
     false},
    {"C4", "odd-family overlap closed form vs coefficient sum",
     [](const Ctx& c, Acc& a) { overlap_claim(c, a, Family::bgcs_odd); },
     false},
    {"C5", "parity families as lowering-operator eigenstates", c5, false},
    {"C6", "parity-family resolution of identity and weight functions", c6,
     false},
    {"C7", "action-angle overlap closed form vs coefficient sum", c7, false},
    {"C8", "action-angle resolution of identity and its density", c8, false},
    {"C9", "reproducing-kernel properties and closed forms", c9, false},
    {"C10", "generator mean values in the coherent families", c10, false},
    {"C11", "photon number distribution closed forms", c11, false},
    {"C12", "time-evolved overlap densities", c12, false},
    {"C13", "quantized-operator matrix elements and expectations", c13,
     false},
    {"C14", "quantized operators vs ladder-operator expressions", c14, false},
    {"C15", "partition function closed forms", c15, false},
    {"C16", "thermal moment hypergeometric closed forms", c16, true},
    {"C17", "vanishing thermal means of off-diagonal operators", c17, false},
    {"C18", "Husimi distribution closed forms and normalization", c18, false},
    {"C19", "diagonal quasi-density closed forms and reconstruction", c19,
     false},
};

const ClaimDef* find_claim(const std::string& id) {
  for (const ClaimDef& d : kRegistry)
    if (id == d.id) return &d;
  return nullptr;
}

}  // namespace

std::vector<std::string> all_ids() {
  std::vector<std::string> out;
  for (const ClaimDef& d : kRegistry) out.emplace_back(d.id);
  return out;
}

std::string describe(const std::string& id) {
  const ClaimDef* d = find_claim(id);
  if (!d) throw std::invalid_argument("describe: unknown claim id " + id);
  return d->what;
}

std::vector<Report> run(std::span<const std::string> ids, const Config& cfg) {
  cfg.validate();
  std::vector<const ClaimDef*> defs;
  for (const std::string& id : ids) {
    const ClaimDef* d = find_claim(id);
    if (!d) throw std::invalid_argument("run: unknown claim id " + id);
    defs.push_back(d);
  }
  // Registry order, duplicates collapsed.
  std::vector<const ClaimDef*> ordered;
  for (const ClaimDef& d : kRegistry)
    if (std::find(defs.begin(), defs.end(), &d) != defs.end())
      ordered.push_back(&d);

  Ctx ctx{cfg,
          fock::FockSpace{cfg.gamma, cfg.trunc, fock::Sector::full},
          fock::FockSpace{cfg.gamma, cfg.trunc, fock::Sector::even},
          fock::FockSpace{cfg.gamma, cfg.trunc, fock::Sector::odd}};

  // Claims run in registry order; the heavy lifting inside each claim
  // (weight sampling, contour quadrature, matrix assembly) is what
  // parallelizes. One claim dominates the cost profile, so an outer
  // parallel loop would only serialize its inner loops.
  std::vector<Report> out(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const ClaimDef& d = *ordered[i];
    Report r;
    r.id = d.id;
    Acc acc;
    try {
      d.eval(ctx, acc);
      r.max_residual = acc.max_res;
      r.notes = acc.notes;
      r.params_grid = acc.grid;
      r.verdict = d.divergent_kind
                      ? Verdict::divergent_formula
                      : (acc.max_res < cfg.tol ? Verdict::confirmed
                                               : Verdict::refuted);
    } catch (const states::TruncationError& e) {
      r.verdict = Verdict::degenerate_input;
      r.max_residual = std::numeric_limits<double>::quiet_NaN();
      r.notes = std::string("truncation: ") + e.what();
    }
    out[i] = std::move(r);
  }
  return out;
}

std::string to_json(std::span<const Report> reports, const Config& cfg) {
  nlohmann::ordered_json root;
  root["config"] = {{"gamma", cfg.gamma},
                    {"beta", cfg.beta},
                    {"trunc", cfg.trunc},
                    {"tol", cfg.tol}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Report& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["verdict"] = verdict_name(r.verdict);
    j["max_residual"] = r.max_residual;
    j["notes"] = r.notes;
    j["params_grid"] = r.params_grid;
    arr.push_back(std::move(j));
  }
  root["claims"] = std::move(arr);
  return root.dump(2) + "\n";
}

}  // namespace isocs::claims
