#include "isocs/states.hpp"

#include <cmath>

namespace isocs::states {

namespace sf = specfun;

double StateVector::norm2() const {
  double acc = 0.0;
  for (const cplx& c : coeffs) acc += std::norm(c);
  return acc;
}

specfun::SignedLog rho_log(double gamma, int m) {
  sf::SignedLog p = sf::pochhammer_log(0.5 * gamma + 1.0, m);
  p.log_abs += m * std::log(4.0);
  return p;
}

double norm_function(Family f, double gamma, double x) {
  const double b = 0.5 * gamma + 1.0;
  switch (f) {
    case Family::gkcs: return sf::hyp1f1(1.0, b, 0.25 * x);
    case Family::bgcs_even: return sf::hyp1f1_parity_parts(b, 0.25 * x).even;
    case Family::bgcs_odd: return sf::hyp1f1_parity_parts(b, 0.25 * x).odd;
  }
  throw std::logic_error("norm_function: unreachable");
}

namespace {

void check_tail(const StateVector& st) {
  const double n2 = st.norm2();
  if (n2 <= 0.0) return;
  const double tail = std::norm(st.coeffs[st.space.last_index()]) / n2;
  if (tail >= 1e-14)
    throw TruncationError(
        "state truncation tail exceeds 1e-14; increase trunc");
}

void apply_norm(StateVector& st, double closed_form_norm2) {
  check_tail(st);
  const double n2 =
      st.mode == NormMode::canonical ? st.norm2() : closed_form_norm2;
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& c : st.coeffs) c *= inv;
}

}  // namespace

StateVector bgcs_even(cplx z, const fock::FockSpace& s, NormMode mode) {
  StateVector st{s, std::vector<cplx>(s.trunc, cplx(0.0)),
                 Label::bg_even(z), mode, false};
  if (z == cplx(0.0)) {
    st.coeffs[0] = 1.0;
    return st;
  }
  const double lr = std::log(std::abs(z));
  const double th = std::arg(z);
  for (int q = 0; q < s.trunc; q += 2) {
    const double mag = std::exp(q * lr - 0.5 * rho_log(s.gamma, q).log_abs);
    st.coeffs[q] = std::polar(mag, q * th);
  }
  apply_norm(st, norm_function(Family::bgcs_even, s.gamma, std::norm(z)));
  return st;
}

StateVector bgcs_odd(cplx z, const fock::FockSpace& s, NormMode mode) {
  StateVector st{s, std::vector<cplx>(s.trunc, cplx(0.0)),
                 Label::bg_odd(z), mode, false};
  if (z == cplx(0.0)) {
    st.degenerate = true;  // the defining series vanishes identically
    return st;
  }
  const double lr = std::log(std::abs(z));
  const double th = std::arg(z);
  for (int q = 1; q < s.trunc; q += 2) {
    const double mag = std::exp(q * lr - 0.5 * rho_log(s.gamma, q).log_abs);
    st.coeffs[q] = std::polar(mag, q * th);
  }
  const double f = sf::hyp1f1(1.0, 0.5 * s.gamma + 1.0, 0.25 * std::norm(z));
  apply_norm(st, f - 1.0);
  return st;
}

StateVector gkcs(double J, double alpha, const fock::FockSpace& s,
                 NormMode mode) {
  if (!(J >= 0.0)) throw std::domain_error("gkcs: requires J >= 0");
  StateVector st{s, std::vector<cplx>(s.trunc, cplx(0.0)),
                 Label::gk(J, alpha), mode, false};
  if (J == 0.0) {
    st.coeffs[0] = std::polar(1.0, -fock::energy(0, s.gamma) * alpha);
    return st;
  }
  const double lJ = std::log(J);
  for (int n = 0; n < s.trunc; ++n) {
    const double mag =
        std::exp(0.5 * n * lJ - 0.5 * rho_log(s.gamma, n).log_abs);
    st.coeffs[n] = std::polar(mag, -fock::energy(n, s.gamma) * alpha);
  }
  if (mode == NormMode::canonical) {
    apply_norm(st, 1.0);
  } else {
    // The closed-form prefactor is 1/F rather than 1/sqrt(F).
    check_tail(st);
    const double f = norm_function(Family::gkcs, s.gamma, J);
    for (cplx& c : st.coeffs) c /= f;
  }
  return st;
}

StateVector make_state(const Label& l, const fock::FockSpace& s,
                       NormMode mode) {
  switch (l.family) {
    case Family::bgcs_even: return bgcs_even(l.z, s, mode);
    case Family::bgcs_odd: return bgcs_odd(l.z, s, mode);
    case Family::gkcs: return gkcs(l.J, l.alpha, s, mode);
  }
  throw std::logic_error("make_state: unreachable");
}

cplx overlap(const StateVector& s1, const StateVector& s2) {
  if (!s1.space.same_basis(s2.space))
    throw std::invalid_argument("overlap: basis mismatch");
  cplx acc(0.0);
  for (int n = 0; n < s1.space.trunc; ++n)
    acc += std::conj(s1.coeffs[n]) * s2.coeffs[n];
  return acc;
}

cplx overlap_closed_form(const Label& a, const Label& b, double gamma) {
  const double bb = 0.5 * gamma + 1.0;
  switch (a.family) {
    case Family::bgcs_even: {
      const cplx num = sf::hyp1f1_one(bb, 0.25 * std::conj(a.z) * b.z);
      const double da = sf::hyp1f1(1.0, bb, 0.25 * std::norm(a.z));
      const double db = sf::hyp1f1(1.0, bb, 0.25 * std::norm(b.z));
      return num / std::sqrt(da * db);
    }
    case Family::bgcs_odd: {
      const cplx num =
          sf::hyp1f1_one(bb, 0.25 * std::conj(a.z) * b.z) - 1.0;
      const double da = sf::hyp1f1(1.0, bb, 0.25 * std::norm(a.z)) - 1.0;
      const double db = sf::hyp1f1(1.0, bb, 0.25 * std::norm(b.z)) - 1.0;
      return num / std::sqrt(da * db);
    }
    case Family::gkcs: {
      // <J',a' | J,a> with (J',a') = a and (J,a) = b.
      const double dphi = a.alpha - b.alpha;  // alpha' - alpha
      const cplx arg = 0.25 * std::sqrt(a.J * b.J) *
                       std::exp(cplx(0.0, 4.0 * dphi));
      const cplx num = sf::hyp1f1_one(bb, arg) *
                       std::exp(cplx(0.0, 2.0 * gamma * dphi));
      const double da = sf::hyp1f1(1.0, bb, 0.25 * a.J);
      const double db = sf::hyp1f1(1.0, bb, 0.25 * b.J);
      return num / std::sqrt(da * db);
    }
  }
  throw std::logic_error("overlap_closed_form: unreachable");
}

EigenFit eigen_residual(const StateVector& s,
                        const fock::OperatorMatrix& lowering) {
  if (!s.space.same_basis(lowering.space))
    throw std::invalid_argument("eigen_residual: basis mismatch");
  const std::vector<cplx> Ks = lowering.apply(s.coeffs);
  cplx lambda(0.0);
  for (int n = 0; n < s.space.trunc; ++n)
    lambda += std::conj(s.coeffs[n]) * Ks[n];
  double acc = 0.0;
  const int hi = s.space.trunc - 2;  // truncation breaks the top rows
  for (int n = 0; n < hi; ++n) acc += std::norm(Ks[n] - lambda * s.coeffs[n]);
  return {lambda, std::sqrt(acc)};
}

double pnd(const StateVector& s, int n) {
  if (n < 0 || n >= s.space.trunc)
    throw std::out_of_range("pnd: index outside truncation");
  return std::norm(s.coeffs[n]);
}

StateVector evolve(const StateVector& s, double t) {
  StateVector out = s;
  for (int n = 0; n < s.space.trunc; ++n)
    out.coeffs[n] *= std::polar(1.0, -fock::energy(n, s.space.gamma) * t);
  return out;
}

}  // namespace isocs::states
