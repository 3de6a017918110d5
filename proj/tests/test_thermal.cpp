#include <doctest.h>

#include <cmath>

#include "isocs/thermal.hpp"

namespace th = isocs::thermal;
namespace st = isocs::states;
namespace ms = isocs::measures;
namespace qz = isocs::quantize;
namespace fock = isocs::fock;
using cplx = std::complex<double>;

namespace {
const fock::FockSpace kEven{2.0, 64, fock::Sector::even};
const fock::FockSpace kOdd{2.0, 64, fock::Sector::odd};
const fock::FockSpace kFull{2.0, 64, fock::Sector::full};
const ms::RadialMeasure kGk{ms::Form::elementary_gk, 2.0, 4.0};
}  // namespace

TEST_SUITE_BEGIN("thermal");

TEST_CASE("partition function: action family matches the closed form") {
  const th::ThermalParams p{0.5, 2.0};
  const double z = th::density(st::Family::gkcs, p, kFull).Z;
  CHECK(z == doctest::Approx(std::exp(-2.0) / (1.0 - std::exp(-2.0)))
                 .epsilon(1e-14));
  CHECK(z == doctest::Approx(th::partition_closed_form(st::Family::gkcs, p))
                 .epsilon(1e-14));
}

TEST_CASE("partition function: odd closed form is off by exp(-2 beta)") {
  for (double beta : {0.25, 0.5, 1.0}) {
    const th::ThermalParams p{beta, 2.0};
    const double zd = th::density(st::Family::bgcs_odd, p, kOdd).Z;
    const double zc = th::partition_closed_form(st::Family::bgcs_odd, p);
    CHECK(zd / zc == doctest::Approx(std::exp(-2.0 * beta)).epsilon(1e-12));
  }
}

TEST_CASE("density weights are a probability vector and the trace is one") {
  const th::ThermalParams p{0.5, 2.0};
  for (st::Family f :
       {st::Family::bgcs_even, st::Family::bgcs_odd, st::Family::gkcs}) {
    const fock::FockSpace& s = f == st::Family::bgcs_even
                                   ? kEven
                                   : (f == st::Family::bgcs_odd ? kOdd : kFull);
    const th::DensityOperator rho = th::density(f, p, s);
    double acc = 0.0;
    for (double w : rho.weights) {
      CHECK(w >= 0.0);
      acc += w;
    }
    CHECK(std::abs(acc - 1.0) < 1e-14);
    const auto m = rho.matrix();
    cplx tr(0.0);
    for (int n = 0; n < s.trunc; ++n) tr += m.at(n, n);
    CHECK(std::abs(tr - 1.0) < 1e-14);
  }
}

TEST_CASE("thermal moment at s=0 is the trace") {
  const th::ThermalParams p{0.5, 2.0};
  CHECK(th::thermal_moment(st::Family::gkcs, p, 0, kFull) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("thermal moment s=1 equals the matrix-trace route") {
  const th::ThermalParams p{0.5, 2.0};
  for (st::Family f : {st::Family::bgcs_even, st::Family::gkcs}) {
    const fock::FockSpace& s = f == st::Family::bgcs_even ? kEven : kFull;
    const th::DensityOperator rho = th::density(f, p, s);
    const auto km = fock::generator(s, fock::Generator::Kminus);
    const auto kp = fock::generator(s, fock::Generator::Kplus);
    const auto kmkp = fock::multiply(km, kp);
    const double via_trace = th::trace_against(rho, kmkp);
    CHECK(th::thermal_moment(f, p, 1, s) ==
          doctest::Approx(via_trace).epsilon(1e-12));
  }
}

TEST_CASE("thermal moment flags an unsupported truncation tail") {
  const th::ThermalParams p{0.1, 2.0};
  CHECK_THROWS_AS((void)th::thermal_moment(st::Family::bgcs_even, p, 8, kEven),
                  st::TruncationError);
  CHECK_THROWS_AS((void)th::thermal_moment(st::Family::gkcs, p, 9, kFull),
                  std::domain_error);
}

TEST_CASE("closed-form thermal moment diverges as printed, converges flipped") {
  const th::ThermalParams p{0.1, 2.0};
  const auto printed =
      th::thermal_moment_closed_form(st::Family::bgcs_even, p, 1, false);
  CHECK(printed.divergent);
  CHECK(printed.argument == doctest::Approx(std::exp(0.4)));
  const auto flipped =
      th::thermal_moment_closed_form(st::Family::bgcs_even, p, 1, true);
  CHECK(!flipped.divergent);
  CHECK(std::isfinite(flipped.value));
}

TEST_CASE("Husimi values are a convex combination") {
  const th::ThermalParams p{0.5, 2.0};
  const th::DensityOperator rho = th::density(st::Family::gkcs, p, kFull);
  double wmax = 0.0;
  for (double w : rho.weights) wmax = std::max(wmax, w);
  for (double J : {0.1, 1.0, 4.0, 10.0}) {
    const double q = th::husimi_q(rho, st::Label::gk(J, 0.0));
    CHECK(q >= 0.0);
    CHECK(q <= wmax + 1e-15);
  }
}

TEST_CASE("action-family Husimi closed form is exact") {
  const th::ThermalParams p{0.5, 2.0};
  const th::DensityOperator rho = th::density(st::Family::gkcs, p, kFull);
  for (double J : {1.0, 4.0})
    CHECK(th::husimi_q(rho, st::Label::gk(J, 0.0)) ==
          doctest::Approx(th::husimi_q_closed_form(st::Family::gkcs, p, J))
              .epsilon(1e-12));
}

TEST_CASE("Husimi normalization against the family measure") {
  const th::ThermalParams p{0.5, 2.0};
  const th::DensityOperator rho = th::density(st::Family::gkcs, p, kFull);
  CHECK(th::husimi_normalization(rho, kGk) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("zero-temperature limit of the Husimi function") {
  const th::ThermalParams p{6.0, 2.0};
  const th::DensityOperator rho = th::density(st::Family::gkcs, p, kFull);
  const auto l = st::Label::gk(2.0, 0.0);
  const double q = th::husimi_q(rho, l);
  const double ground = st::pnd(st::make_state(l, kFull), 0);
  CHECK(q == doctest::Approx(ground).epsilon(1e-9));
}

TEST_CASE("Husimi grows with beta near the vacuum label") {
  const auto l = st::Label::bg_even(cplx(0.1, 0.0));
  double prev = 0.0;
  for (double beta : {0.2, 0.4, 0.8, 1.6, 3.2}) {
    const double q = th::husimi_q(
        th::density(st::Family::bgcs_even, {beta, 2.0}, kEven), l);
    CHECK(q >= prev - 1e-12);
    prev = q;
  }
}

TEST_CASE("moment-derived P reconstructs the Boltzmann weights") {
  const th::ThermalParams p{0.5, 2.0};
  for (st::Family f :
       {st::Family::gkcs, st::Family::bgcs_even, st::Family::bgcs_odd}) {
    const fock::FockSpace& s = f == st::Family::bgcs_even
                                   ? kEven
                                   : (f == st::Family::bgcs_odd ? kOdd : kFull);
    const int n_max = f == st::Family::gkcs ? 15 : 10;
    const auto rec = th::p_reconstruct_diagonal(f, p, s, n_max);
    const th::DensityOperator rho = th::density(f, p, s);
    const int q0 = f == st::Family::bgcs_odd ? 1 : 0;
    const int step = f == st::Family::gkcs ? 1 : 2;
    for (int j = 0; j <= n_max; ++j)
      CHECK(std::abs(rec[j] - rho.weights[q0 + j * step]) < 1e-6);
  }
}

TEST_CASE("P concentrates onto the vacuum at low temperature") {
  const th::ThermalParams p{5.0, 2.0};
  const auto rec =
      th::p_reconstruct_diagonal(st::Family::gkcs, p, kFull, 10);
  CHECK(std::abs(rec[0] - 1.0) < 1e-6);
  for (int j = 1; j <= 10; ++j) CHECK(std::abs(rec[j]) < 1e-6);
}

TEST_CASE("P is nonnegative on the evaluated grid") {
  for (double beta : {0.2, 0.5, 1.0})
    for (double lx = -2.0; lx <= 2.0; lx += 0.5) {
      const double p = th::p_function(st::Family::gkcs, {beta, 2.0},
                                      std::pow(10.0, lx));
      CHECK(p >= 0.0);
      if (lx <= 1.0) CHECK(p > 0.0);  // underflow-free part of the grid
    }
}

TEST_CASE("P and Q consistency through the coherent projectors") {
  // int |<xi|z>|^2 P(|z|^2) dnu(z) = Q(xi) with the angular average killing
  // the cross terms.
  const th::ThermalParams p{0.5, 2.0};
  const th::DensityOperator rho = th::density(st::Family::gkcs, p, kFull);
  const auto xi = st::make_state(st::Label::gk(3.0, 0.0), kFull);
  // Diagonal reconstruction of rho in the Fock basis, then Q = sum.
  const auto rec = th::p_reconstruct_diagonal(st::Family::gkcs, p, kFull, 30);
  double q = 0.0;
  for (int n = 0; n <= 30; ++n) q += std::norm(xi.coeffs[n]) * rec[n];
  CHECK(q == doctest::Approx(th::husimi_q(rho, xi.label)).epsilon(1e-6));
}

TEST_CASE("vanishing first moments of strictly off-diagonal operators") {
  const th::ThermalParams p{0.5, 2.0};
  const th::DensityOperator rho = th::density(st::Family::bgcs_even, p, kEven);
  CHECK(th::trace_against(
            rho, fock::generator(kEven, fock::Generator::Kminus)) == 0.0);
  CHECK(th::trace_against(
            rho, fock::generator(kEven, fock::Generator::Kplus)) == 0.0);
  const ms::RadialMeasure me{ms::Form::elementary_even, 2.0, 4.0};
  CHECK(th::trace_against(rho, qz::toeplitz(qz::Symbol::z,
                                            st::Family::bgcs_even, me,
                                            kEven)) == 0.0);
}

TEST_SUITE_END();
