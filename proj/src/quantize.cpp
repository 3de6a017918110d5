#include "isocs/quantize.hpp"

#include <cmath>
#include <stdexcept>

#include "isocs/parallel.hpp"
#include "isocs/quadrature.hpp"

namespace isocs::quantize {

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

fock::OperatorMatrix restrict_to_sector(const fock::OperatorMatrix& A) {
  fock::OperatorMatrix C = A;
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j)
      if (!A.space.contains(i) || !A.space.contains(j)) C.at(i, j) = 0.0;
  return C;
}

}  // namespace

fock::OperatorMatrix toeplitz(Symbol sym, states::Family family,
                              const measures::RadialMeasure& m,
                              const fock::FockSpace& s,
                              const QuadratureSpec& q) {
  if (family == states::Family::gkcs)
    throw std::invalid_argument("toeplitz: parity families only");
  const FamilyIndex fi = family_index(family);

  // Angular selection: the symbol couples ladder index pairs
  // (q, q + band*step); the radial factor is x^{radial_power}.
  int band = 0;
  double radial_power = 0.0;
  std::string label;
  switch (sym) {
    case Symbol::one: band = 0; radial_power = 0.0; label = "A_1"; break;
    case Symbol::modz2: band = 0; radial_power = 1.0; label = "A_|z|^2"; break;
    case Symbol::z: band = 1; radial_power = 1.0; label = "A_z"; break;
    case Symbol::zbar: band = 1; radial_power = 1.0; label = "A_zbar"; break;
  }

  const double p_max = s.trunc + radial_power;
  const double x_max = measures::radial_cutoff(s.gamma, p_max, m.scale);
  const quad::Grid grid = quad::radial_grid(x_max, q.panels, q.nodes);
  std::vector<double> wv(grid.size());
  par::parallel_for(grid.size(), [&](std::size_t i) {
    wv[i] = grid.w[i] * measures::weight(m, grid.x[i]);
  });

  fock::OperatorMatrix A(s, label);
  std::vector<int> cols;
  for (int qc = fi.q0; qc < s.trunc; qc += fi.step)
    if (qc - band * fi.step >= 0) cols.push_back(qc);

  par::parallel_for(cols.size(), [&](std::size_t ci) {
    const int qc = cols[ci];
    const int qr = qc - band * fi.step;
    const double lrho = 0.5 * (states::rho_log(s.gamma, qr).log_abs +
                               states::rho_log(s.gamma, qc).log_abs);
    const double power = radial_power + 0.5 * (qr + qc);
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      acc += wv[i] * std::exp(power * std::log(grid.x[i]) - lrho);
    A.at(qr, qc) = acc;
  });

  if (sym == Symbol::zbar) return fock::adjoint(A);
  return A;
}

std::vector<Comparison> compare_with_generators(
    const fock::FockSpace& s, const measures::RadialMeasure& even_m,
    const measures::RadialMeasure& odd_m, const QuadratureSpec& q) {
  using states::Family;
  fock::FockSpace even_s = s;
  even_s.sector = fock::Sector::even;
  fock::FockSpace odd_s = s;
  odd_s.sector = fock::Sector::odd;

  const fock::OperatorMatrix k0 = fock::generator(s, fock::Generator::K0);
  const fock::OperatorMatrix km = fock::generator(s, fock::Generator::Kminus);
  const fock::OperatorMatrix kp = fock::generator(s, fock::Generator::Kplus);
  const fock::OperatorMatrix km2 = fock::multiply(km, km);
  const fock::OperatorMatrix kp2 = fock::multiply(kp, kp);

  std::vector<Comparison> out;
  const auto compare = [&](const std::string& label,
                           const fock::OperatorMatrix& a,
                           const fock::OperatorMatrix& b) {
    fock::OperatorMatrix d = fock::subtract(a, restrict_to_sector(
        fock::OperatorMatrix{b}));
    out.push_back({label, fock::max_abs_interior(d)});
  };

  const auto shifted_k0 = [&](const fock::FockSpace& sec, double shift) {
    fock::OperatorMatrix m(sec, "2K0+c");
    for (int n : sec.indices()) m.at(n, n) = 2.0 * (2.0 * n + s.gamma) + shift;
    return m;
  };

  for (auto [fam, sec, meas] :
       {std::tuple{Family::bgcs_even, even_s, even_m},
        std::tuple{Family::bgcs_odd, odd_s, odd_m}}) {
    const char* tag = fam == Family::bgcs_even ? "even" : "odd";
    const fock::OperatorMatrix az = toeplitz(Symbol::z, fam, meas, sec, q);
    const fock::OperatorMatrix azb = toeplitz(Symbol::zbar, fam, meas, sec, q);
    const fock::OperatorMatrix am2 = toeplitz(Symbol::modz2, fam, meas, sec, q);
    const fock::OperatorMatrix a1 = toeplitz(Symbol::one, fam, meas, sec, q);

    fock::OperatorMatrix km2s = km2; km2s.space = sec;
    fock::OperatorMatrix kp2s = kp2; kp2s.space = sec;
    compare(std::string("A_z(") + tag + ") vs K-^2", az, km2s);
    compare(std::string("A_zbar(") + tag + ") vs K+^2", azb, kp2s);
    const double shift = fam == Family::bgcs_even ? 4.0 : 8.0;
    compare(std::string("A_|z|^2(") + tag + ") vs 2K0+" +
                (fam == Family::bgcs_even ? "4" : "8"),
            am2, shifted_k0(sec, shift));
    if (fam == Family::bgcs_odd)  // the shift that actually matches
      compare("A_|z|^2(odd) vs 2K0+4", am2, shifted_k0(sec, 4.0));
    compare(std::string("A_1(") + tag + ") vs I_sector", a1,
            fock::sector_identity(sec));

    // Parity-internal ladder variant.
    const fock::OperatorMatrix skm =
        fock::sector_ladder(sec, fock::Generator::Kminus);
    const fock::OperatorMatrix skm2 = fock::multiply(skm, skm);
    compare(std::string("A_z(") + tag + ") vs sector K-", az, skm);
    compare(std::string("A_z(") + tag + ") vs sector K-^2", az, skm2);
  }
  return out;
}

}  // namespace isocs::quantize
