#include <doctest.h>

#include <cmath>
#include <vector>

#include "isocs/quadrature.hpp"
#include "isocs/specfun.hpp"
#include "oracles.hpp"

namespace sf = isocs::specfun;

TEST_SUITE_BEGIN("specfun");

TEST_CASE("ln_gamma at integer anchors") {
  CHECK(std::abs(sf::ln_gamma(1.0)) < 1e-14);
  CHECK(std::abs(sf::ln_gamma(2.0)) < 1e-14);
}

TEST_CASE("ln_gamma(1/2) matches the frozen high-precision value") {
  CHECK(sf::ln_gamma(0.5) ==
        doctest::Approx(static_cast<double>(oracles::kLnSqrtPi))
            .epsilon(1e-13));
}

TEST_CASE("ln_gamma vs the Stirling oracle across [1e-3, 1e6]") {
  for (double x : {1e-3, 1e-2, 0.1, 0.37, 0.5, 0.9, 1.5, 3.0, 7.5, 20.0,
                   123.0, 4.2e3, 8.8e4, 1e6}) {
    const double want = static_cast<double>(oracles::lngamma(x));
    const double got = sf::ln_gamma(x);
    // Relative where the value is away from the zeros of ln Gamma.
    if (std::abs(want) > 0.1)
      CHECK(got == doctest::Approx(want).epsilon(1e-13));
    else
      CHECK(std::abs(got - want) < 1e-14);
  }
}

TEST_CASE("ln_gamma rejects the left half line") {
  CHECK_THROWS_AS((void)sf::ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS((void)sf::ln_gamma(-2.5), std::domain_error);
}

TEST_CASE("complex ln_gamma agrees with the real one on the real axis") {
  for (double x : {0.7, 1.3, 5.0, 42.0}) {
    const auto z = sf::ln_gamma(std::complex<double>(x, 0.0));
    CHECK(z.real() == doctest::Approx(sf::ln_gamma(x)).epsilon(1e-14));
    CHECK(std::abs(z.imag()) < 1e-14);
  }
}

TEST_CASE("pochhammer basics") {
  CHECK(sf::pochhammer(7.3, 0) == 1.0);
  CHECK(sf::pochhammer(3.0, 2) == doctest::Approx(12.0).epsilon(1e-15));
  // (gamma/2+1)_3 at gamma=2: 2*3*4.
  CHECK(sf::pochhammer(2.0, 3) == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("pochhammer log form is consistent with the direct product") {
  for (int n : {40, 60, 90}) {
    const auto sl = sf::pochhammer_log(2.5, n);
    CHECK(sl.sign == 1);
    long double direct = 0.0L;
    for (int k = 0; k < n; ++k) direct += std::log(2.5L + k);
    CHECK(sl.log_abs ==
          doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
  }
}

TEST_CASE("pochhammer overflow is signalled") {
  CHECK_THROWS_AS((void)sf::pochhammer(50.0, 400), sf::OverflowError);
  // Log form stays finite for the same input.
  CHECK(std::isfinite(sf::pochhammer_log(50.0, 400).log_abs));
}

TEST_CASE("pochhammer sign tracking through negative factors") {
  // (-2.5)_3 = (-2.5)(-1.5)(-0.5) < 0
  const auto sl = sf::pochhammer_log(-2.5, 3);
  CHECK(sl.sign == -1);
  CHECK(sl.value() == doctest::Approx(-2.5 * -1.5 * -0.5).epsilon(1e-14));
}

TEST_CASE("hyp1f1 anchors") {
  CHECK(sf::hyp1f1(1.0, 2.0, 0.0) == 1.0);
  CHECK(sf::hyp1f1(1.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK(sf::hyp1f1(1.0, 2.0, 1.0) ==
        doctest::Approx(static_cast<double>(oracles::kHyp1f1_121))
            .epsilon(1e-13));
}

TEST_CASE("hyp1f1 against the long double oracle on a grid") {
  for (double b : {1.5, 2.0, 5.0}) {
    for (double x : {0.3, 2.0, 11.0, 35.0}) {
      const double want = static_cast<double>(oracles::hyp1f1(1.0L, b, x));
      CHECK(sf::hyp1f1(1.0, b, x) == doctest::Approx(want).epsilon(1e-13));
    }
  }
}

TEST_CASE("hyp1f1 Kummer path for strongly negative arguments") {
  // 1F1(1;1;x) = exp(x) exactly.
  CHECK(sf::hyp1f1(1.0, 1.0, -50.0) ==
        doctest::Approx(std::exp(-50.0)).epsilon(1e-12));
  CHECK(sf::hyp1f1(2.0, 3.0, -40.0) ==
        doctest::Approx(static_cast<double>(
            std::exp(-40.0L) * oracles::hyp1f1(1.0L, 3.0L, 40.0L)))
            .epsilon(1e-12));
}

TEST_CASE("hyp1f1 terminating polynomial case") {
  // 1F1(-2;gamma;x) = 1 - 2x/gamma + x^2/(gamma(gamma+1)).
  const double g = 2.0, x = 3.0;
  CHECK(sf::hyp1f1(-2.0, g, x) ==
        doctest::Approx(1.0 - 2.0 * x / g + x * x / (g * (g + 1.0)))
            .epsilon(1e-14));
}

TEST_CASE("hyp1f1 reports non-convergence instead of truncating") {
  sf::SeriesControl ctl;
  ctl.max_terms = 5;
  CHECK_THROWS_AS((void)sf::hyp1f1(1.0, 2.0, 30.0, ctl), sf::NonConvergence);
}

TEST_CASE("hyp1f1 rejects non-positive integer b") {
  CHECK_THROWS_AS((void)sf::hyp1f1(1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)sf::hyp1f1(1.0, -3.0, 1.0), std::domain_error);
}

TEST_CASE("parity parts at zero") {
  const auto p = sf::hyp1f1_parity_parts(2.0, 0.0);
  CHECK(p.even == 1.0);
  CHECK(p.odd == 0.0);
}

TEST_CASE("parity parts recompose the full series") {
  for (double b : {1.5, 2.0, 2.5, 5.0}) {
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0, 25.0, 50.0}) {
      const auto p = sf::hyp1f1_parity_parts(b, x);
      const double f = sf::hyp1f1(1.0, b, x);
      CHECK(p.even + p.odd == doctest::Approx(f).epsilon(1e-12));
    }
  }
}

TEST_CASE("even part matches the brute-force sub-series oracle") {
  const double want =
      static_cast<double>(oracles::hyp1f1_even_part(2.0L, 1.0L));
  CHECK(sf::hyp1f1_parity_parts(2.0, 1.0).even ==
        doctest::Approx(want).epsilon(1e-13));
  // which is sinh(1) for b = 2
  CHECK(want == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("combination and direct-sum parity paths agree") {
  for (double b : {1.5, 2.0, 5.0}) {
    for (double x : {0.2, 1.0, 4.0, 12.0}) {
      const auto c = sf::hyp1f1_parity_parts(b, x);
      const auto d = sf::hyp1f1_parity_parts_direct(b, x);
      CHECK(c.even == doctest::Approx(d.even).epsilon(1e-12));
      CHECK(c.odd == doctest::Approx(d.odd).epsilon(1e-12));
    }
  }
}

TEST_CASE("contiguous recurrence: F(1;b;x) = 1 + (x/b) F(1;b+1;x)") {
  for (double b : {1.5, 2.0, 2.5, 5.0}) {
    for (double x = 0.0; x <= 50.0; x += 5.0) {
      const double lhs = sf::hyp1f1(1.0, b, x);
      const double rhs = 1.0 + (x / b) * sf::hyp1f1(1.0, b + 1.0, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("complex series agrees with the real path on the real axis") {
  const auto v = sf::hyp1f1_one(2.0, {3.0, 0.0});
  CHECK(v.real() == doctest::Approx(sf::hyp1f1(1.0, 2.0, 3.0)).epsilon(1e-13));
  CHECK(std::abs(v.imag()) < 1e-14);
  const auto p = sf::hyp1f1_one_parity(2.0, {1.0, 0.0});
  CHECK(p.even.real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-13));
}

TEST_CASE("hyp2f1 anchors") {
  CHECK(sf::hyp2f1(0.7, 1.3, 2.2, 0.0) == 1.0);
  // 2F1(1,1;2;x) = -ln(1-x)/x.
  CHECK(sf::hyp2f1(1.0, 1.0, 2.0, 0.5) ==
        doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-12));
  CHECK(sf::hyp2f1(1.0, 1.0, 2.0, -0.95) ==
        doctest::Approx(-std::log(1.95) / -0.95).epsilon(1e-12));
}

TEST_CASE("hyp2f1 divergent argument is a typed signal") {
  const double arg = std::exp(4.0 * 0.1);  // > 1
  CHECK_THROWS_AS((void)sf::hyp2f1(1.0, 3.0, 2.0, arg),
                  sf::DivergentArgument);
  CHECK_THROWS_AS((void)sf::hyp2f1(1.0, 1.5, 2.5, -1.0),
                  sf::DivergentArgument);
}

TEST_CASE("hyp2f1 terminating polynomial works beyond the disc") {
  // 2F1(-2,b;c;x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1)).
  const double b = 1.7, c = 2.4, x = 3.0;
  const double want =
      1.0 - 2.0 * b / c * x + b * (b + 1.0) / (c * (c + 1.0)) * x * x;
  CHECK(sf::hyp2f1(-2.0, b, c, x) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("hyp2f1 near the unit circle via the Euler transform") {
  // c - b = -2: Euler side terminates. Oracle: direct series, long double.
  const double a = 1.0, b = 4.0, c = 2.0, x = 0.95;
  long double sum = 1.0L, term = 1.0L;
  for (int m = 0; m < 4000; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0L)) * x;
    sum += term;
  }
  CHECK(sf::hyp2f1(a, b, c, x) ==
        doctest::Approx(static_cast<double>(sum)).epsilon(1e-12));
}

TEST_CASE("hyp2f1 Pfaff path for x near -1") {
  const double a = 1.0, b = 1.2, c = 2.6, x = -0.97;
  long double sum = 1.0L, term = 1.0L;
  for (int m = 0; m < 200000; ++m) {
    term *= (a + m) * (b + m) / ((c + m) * (m + 1.0L)) * x;
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum)) break;
  }
  CHECK(sf::hyp2f1(a, b, c, x) ==
        doctest::Approx(static_cast<double>(sum)).epsilon(1e-11));
}

namespace {

// Mellin pair oracles: G(x | -1; -1, g/2) = x^{g/2} e^{-x} and
// G(x | 0; 0, -g/2) = x^{-g/2} e^{-x}, recovered by matching moments of the
// ansatz c x^p e^{-x} at two integer moments and checked at twenty.
struct FittedWeight {
  double c, p;
};

FittedWeight fit_by_moments(const isocs::specfun::MeijerParams& mp) {
  const auto mellin = [&](double s) {
    return std::exp(sf::ln_gamma(mp.b1 + s) + sf::ln_gamma(mp.b2 + s) -
                    sf::ln_gamma(mp.a1 + s));
  };
  // For c x^p e^{-x}: moment(s) = c Gamma(p+s). Two moments fix (c, p) via
  // moment(s+1)/moment(s) = p + s.
  const double s0 = mp.strip_min() + 1.5;
  const double m0 = mellin(s0), m1 = mellin(s0 + 1.0);
  const double p = m1 / m0 - s0;
  const double c = m0 / std::exp(sf::ln_gamma(p + s0));
  return {c, p};
}

}  // namespace

TEST_CASE("meijer G matches the moment-fitted elementary oracle") {
  for (double g : {2.0, 1.5}) {
    for (const sf::MeijerParams mp :
         {sf::MeijerParams{-1.0, -1.0, 0.5 * g},
          sf::MeijerParams{0.0, 0.0, -0.5 * g}}) {
      const FittedWeight fw = fit_by_moments(mp);
      // Verify the ansatz against twenty integer moments first.
      for (int k = 1; k <= 20; ++k) {
        const double s = mp.strip_min() + 0.5 + k;
        const double want = std::exp(sf::ln_gamma(mp.b1 + s) +
                                     sf::ln_gamma(mp.b2 + s) -
                                     sf::ln_gamma(mp.a1 + s));
        const double got = fw.c * std::exp(sf::ln_gamma(fw.p + s));
        REQUIRE(got == doctest::Approx(want).epsilon(1e-10));
      }
      for (double x : {0.05, 0.3, 1.0, 4.0, 17.0}) {
        const double want = fw.c * std::pow(x, fw.p) * std::exp(-x);
        CHECK(sf::meijer_g20_12(x, mp) ==
              doctest::Approx(want).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("meijer G is contour independent inside the strip") {
  const sf::MeijerParams mp{-1.0, -1.0, 1.0};
  sf::MeijerOptions o1, o2;
  o1.abscissa = 2.5;
  o2.abscissa = 4.0;
  const double a = sf::meijer_g20_12(1.0, mp, o1);
  const double b = sf::meijer_g20_12(1.0, mp, o2);
  CHECK(a == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("meijer G integral equals the continued Gamma ratio at s=1") {
  // For (-1; -1, g/2) the s=1 Mellin value continues to Gamma(g/2+1).
  const double g = 2.0;
  const sf::MeijerParams mp{-1.0, -1.0, 0.5 * g};
  const double integral = isocs::quad::integrate(
      [&](double x) { return sf::meijer_g20_12(x, mp); }, 1e-8, 40.0, 64, 12);
  CHECK(integral ==
        doctest::Approx(std::exp(sf::ln_gamma(0.5 * g + 1.0))).epsilon(1e-8));
}

TEST_CASE("meijer G positive on a log grid for both parameter families") {
  for (double g : {2.0, 1.5}) {
    for (const sf::MeijerParams mp :
         {sf::MeijerParams{-1.0, -1.0, 0.5 * g},
          sf::MeijerParams{0.0, 0.0, -0.5 * g}}) {
      for (double lx = -3.0; lx <= 3.0; lx += 0.5) {
        const auto v = sf::meijer_g20_12_scaled(std::pow(10.0, lx), mp);
        CHECK(v.mantissa > 0.0);
      }
    }
  }
}

TEST_CASE("meijer G domain checks") {
  CHECK_THROWS_AS((void)sf::meijer_g20_12(-1.0, {-1.0, -1.0, 1.0}),
                  std::domain_error);
  sf::MeijerOptions bad;
  bad.abscissa = 0.5;  // inside the pole strip for b1 = -1
  CHECK_THROWS_AS((void)sf::meijer_g20_12(1.0, {-1.0, -1.0, 1.0}, bad),
                  std::domain_error);
}

TEST_CASE("mellin_moment anchors") {
  CHECK(sf::mellin_moment([](double x) { return std::exp(-x); }, 3.0) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sf::mellin_moment(
            [](double x) { return x * std::exp(-0.25 * x) / 16.0; }, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mellin_moment closes the defining pair with meijer G") {
  const double g = 2.0;
  const sf::MeijerParams mp{-1.0, -1.0, 0.5 * g};
  for (int s = 1; s <= 10; ++s) {
    const double got = sf::mellin_moment(
        [&](double x) { return sf::meijer_g20_12(x, mp); }, s,
        {1.0, 1e-9, 16});
    const double want = std::exp(sf::ln_gamma(0.5 * g + s));  // ratio cancels
    CHECK(got == doctest::Approx(want).epsilon(1e-7));
  }
  // Second parameter family, away from the strip edge where the x->0
  // contour cancellation dominates the s=1 moment.
  const double g2 = 1.5;
  const sf::MeijerParams mp2{0.0, 0.0, -0.5 * g2};
  for (double s : {2.0, 3.0}) {
    const double got = sf::mellin_moment(
        [&](double x) { return sf::meijer_g20_12(x, mp2); }, s,
        {1.0, 1e-9, 16});
    const double want = std::exp(sf::ln_gamma(s - 0.5 * g2));
    CHECK(got == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("mellin_moment detects a non-decaying tail") {
  CHECK_THROWS_AS((void)sf::mellin_moment(
                      [](double x) { return 1.0 / (1.0 + x); }, 1.0),
                  isocs::quad::DivergentTail);
}

TEST_CASE("series control validation") {
  sf::SeriesControl bad;
  bad.rel_tol = 2.0;
  CHECK_THROWS_AS((void)sf::hyp1f1(1.0, 2.0, 1.0, bad),
                  std::invalid_argument);
}

TEST_SUITE_END();
