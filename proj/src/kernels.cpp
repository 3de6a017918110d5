#include "isocs/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace isocs::kernels {

namespace sf = specfun;

namespace {

cplx kernel_closed_form(const states::Label& a, const states::Label& b,
                        double gamma) {
  const double bb = 0.5 * gamma + 1.0;
  switch (a.family) {
    case states::Family::bgcs_even:
    case states::Family::bgcs_odd:
      // Same expressions as the closed-form overlaps.
      return states::overlap_closed_form(a, b, gamma);
    case states::Family::gkcs: {
      const double num = sf::hyp1f1(1.0, bb, 0.25 * std::sqrt(a.J * b.J));
      const double da = sf::hyp1f1(1.0, bb, 0.25 * a.J);
      const double db = sf::hyp1f1(1.0, bb, 0.25 * b.J);
      return num / std::sqrt(da * db) *
             std::exp(cplx(0.0, -4.0 * (a.alpha - b.alpha)));
    }
  }
  throw std::logic_error("kernel_closed_form: unreachable");
}

}  // namespace

KernelEval kernel(const states::Label& a, const states::Label& b,
                  const fock::FockSpace& s) {
  if (a.family != b.family)
    throw std::invalid_argument("kernel: labels from different families");
  if (a.family == states::Family::bgcs_odd &&
      (a.z == cplx(0.0) || b.z == cplx(0.0)))
    throw std::domain_error("kernel: odd family is degenerate at z = 0");
  const states::StateVector sa = states::make_state(a, s);
  const states::StateVector sb = states::make_state(b, s);
  KernelEval out;
  out.canonical = states::overlap(sa, sb);
  out.closed_form = kernel_closed_form(a, b, s.gamma);
  out.abs_diff = std::abs(out.canonical - out.closed_form);
  return out;
}

double idempotence_residual(const states::Label& a, const states::Label& b,
                            const measures::RadialMeasure& m,
                            const fock::FockSpace& s,
                            const measures::ResolutionOptions& opt) {
  if (a.family != b.family)
    throw std::invalid_argument("idempotence_residual: family mismatch");
  // The intermediate-label integral reduces to <a| M |b> with
  // M = diag entries of the measure against the family projectors.
  measures::ResolutionOptions o = opt;
  const states::StateVector sa = states::make_state(a, s);
  const states::StateVector sb = states::make_state(b, s);
  int q0 = 0, step = 1;
  if (a.family == states::Family::bgcs_even) step = 2;
  if (a.family == states::Family::bgcs_odd) { q0 = 1; step = 2; }
  o.n_max = (s.trunc - 1 - q0) / step - 1;
  const std::vector<double> diag =
      measures::identity_resolution_diagonal(a.family, m, s, o);
  cplx with_measure(0.0), direct(0.0);
  for (int j = 0; j <= o.n_max; ++j) {
    const int q = q0 + j * step;
    const cplx prod = std::conj(sa.coeffs[q]) * sb.coeffs[q];
    with_measure += prod * diag[static_cast<std::size_t>(j)];
    direct += prod;
  }
  return std::abs(with_measure - direct);
}

double gram_min_eigenvalue(std::span<const states::Label> labels,
                           const fock::FockSpace& s) {
  const int k = static_cast<int>(labels.size());
  if (k == 0) throw std::invalid_argument("gram_min_eigenvalue: empty set");
  std::vector<states::StateVector> sv;
  sv.reserve(labels.size());
  for (const auto& l : labels) sv.push_back(states::make_state(l, s));
  // Hermitian Gram G, embedded as the real symmetric [[Re,-Im],[Im,Re]]
  // (same spectrum, doubled multiplicity), then cyclic Jacobi.
  const int n = 2 * k;
  std::vector<double> A(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& {
    return A[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const cplx g = states::overlap(sv[i], sv[j]);
      at(i, j) = g.real();
      at(i, j + k) = -g.imag();
      at(i + k, j) = g.imag();
      at(i + k, j + k) = g.real();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = 0.5 * std::atan2(2.0 * apq, at(q, q) - at(p, p));
        const double c = std::cos(theta), sn = std::sin(theta);
        for (int r = 0; r < n; ++r) {
          const double arp = at(r, p), arq = at(r, q);
          at(r, p) = c * arp - sn * arq;
          at(r, q) = sn * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = at(p, r), aqr = at(q, r);
          at(p, r) = c * apr - sn * aqr;
          at(q, r) = sn * apr + c * aqr;
        }
      }
  }
  double mn = at(0, 0);
  for (int i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
  return mn;
}

}  // namespace isocs::kernels
