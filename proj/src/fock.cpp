#include "isocs/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "isocs/quadrature.hpp"
#include "isocs/specfun.hpp"

namespace isocs::fock {

double gamma_from_A(double A) {
  if (!(A >= 0.0)) throw std::domain_error("gamma_from_A: requires A >= 0");
  return 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * A);
}

ModelParams ModelParams::from_A(double A) {
  if (!(A >= 0.0)) throw std::domain_error("ModelParams: requires A >= 0");
  // g is the nonnegative root of g(g+1) = A.
  const double g = 0.5 * (std::sqrt(1.0 + 4.0 * A) - 1.0);
  return {g, A, gamma_from_A(A)};
}

ModelParams ModelParams::from_coupling(double g) {
  if (!(g >= 0.0)) throw std::domain_error("ModelParams: requires g >= 0");
  const double A = g * (g + 1.0);
  return {g, A, gamma_from_A(A)};
}

double energy(int m, double gamma) { return 2.0 * (2.0 * m + gamma); }

double wavefunction(int m, double gamma, double x, int max_degree) {
  if (!(x > 0.0)) throw std::domain_error("wavefunction: requires x > 0");
  if (m < 0 || m > max_degree)
    throw std::domain_error("wavefunction: index exceeds polynomial cap");
  // sqrt(2 (gamma)_m / (m! Gamma(gamma))) in log space.
  const double lg = specfun::ln_gamma(gamma);
  const double ln_pref = 0.5 * (std::log(2.0) + specfun::ln_gamma(gamma + m) -
                                specfun::ln_gamma(m + 1.0) - 2.0 * lg);
  const double poly = specfun::hyp1f1(-static_cast<double>(m), gamma, x * x);
  return std::exp(ln_pref + (gamma - 0.5) * std::log(x) - 0.5 * x * x) * poly;
}

double wavefunction_overlap(int m, int n, double gamma, int gl_nodes) {
  const quad::Rule& r = quad::gauss_legendre(gl_nodes);
  double acc = 0.0;
  for (int k = 0; k < gl_nodes; ++k) {
    const double u = 0.5 * (r.x[k] + 1.0);  // map [-1,1] -> (0,1)
    const double x = std::tan(0.5 * M_PI * u);
    const double jac = 0.5 * M_PI * (1.0 + x * x);
    if (!(x > 0.0) || !std::isfinite(jac)) continue;
    acc += 0.5 * r.w[k] * jac * wavefunction(m, gamma, x) *
           wavefunction(n, gamma, x);
  }
  return acc;
}

bool FockSpace::contains(int n) const {
  if (n < 0 || n >= trunc) return false;
  switch (sector) {
    case Sector::full: return true;
    case Sector::even: return n % 2 == 0;
    case Sector::odd: return n % 2 == 1;
  }
  return false;
}

int FockSpace::first_index() const { return sector == Sector::odd ? 1 : 0; }

int FockSpace::index_step() const { return sector == Sector::full ? 1 : 2; }

int FockSpace::last_index() const {
  const int step = index_step();
  const int first = first_index();
  const int count = (trunc - 1 - first) / step;
  return first + count * step;
}

std::vector<int> FockSpace::indices() const {
  std::vector<int> out;
  for (int n = first_index(); n < trunc; n += index_step()) out.push_back(n);
  return out;
}

bool FockSpace::same_basis(const FockSpace& o) const {
  return gamma == o.gamma && trunc == o.trunc;
}

OperatorMatrix::OperatorMatrix(const FockSpace& s, std::string lbl)
    : space(s), a(static_cast<std::size_t>(s.trunc) * s.trunc, cplx(0.0)),
      label(std::move(lbl)) {
  if (s.trunc < 2) throw std::invalid_argument("OperatorMatrix: trunc < 2");
}

std::vector<cplx> OperatorMatrix::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != n())
    throw std::invalid_argument("OperatorMatrix::apply: size mismatch");
  std::vector<cplx> out(v.size(), cplx(0.0));
  for (int i = 0; i < n(); ++i) {
    cplx acc(0.0);
    for (int j = 0; j < n(); ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (!A.space.same_basis(B.space))
    throw std::invalid_argument("multiply: basis mismatch");
  OperatorMatrix C(A.space, "(" + A.label + ")*(" + B.label + ")");
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = A.at(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

OperatorMatrix adjoint(const OperatorMatrix& A) {
  OperatorMatrix C(A.space, "adj(" + A.label + ")");
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) C.at(i, j) = std::conj(A.at(j, i));
  return C;
}

OperatorMatrix add(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (!A.space.same_basis(B.space))
    throw std::invalid_argument("add: basis mismatch");
  OperatorMatrix C(A.space, A.label + "+" + B.label);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] + B.a[i];
  return C;
}

OperatorMatrix subtract(const OperatorMatrix& A, const OperatorMatrix& B) {
  if (!A.space.same_basis(B.space))
    throw std::invalid_argument("subtract: basis mismatch");
  OperatorMatrix C(A.space, A.label + "-" + B.label);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.a[i] - B.a[i];
  return C;
}

OperatorMatrix scale(const OperatorMatrix& A, cplx s) {
  OperatorMatrix C(A.space, A.label);
  for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = s * A.a[i];
  return C;
}

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
  OperatorMatrix C = subtract(multiply(A, B), multiply(B, A));
  C.label = "[" + A.label + "," + B.label + "]";
  return C;
}

OperatorMatrix sector_identity(const FockSpace& s) {
  OperatorMatrix C(s, "I_sector");
  for (int n : s.indices()) C.at(n, n) = 1.0;
  return C;
}

double max_abs_interior(const OperatorMatrix& A, int margin) {
  const int hi = A.n() - margin;
  double mx = 0.0;
  for (int i = 0; i < hi; ++i)
    for (int j = 0; j < hi; ++j) mx = std::max(mx, std::abs(A.at(i, j)));
  return mx;
}

OperatorMatrix generator(const FockSpace& s, Generator which) {
  if (s.trunc < 2) throw std::invalid_argument("generator: trunc < 2");
  const double g = s.gamma;
  switch (which) {
    case Generator::K0: {
      OperatorMatrix m(s, "K0");
      for (int n = 0; n < s.trunc; ++n) m.at(n, n) = 2.0 * n + g;
      return m;
    }
    case Generator::Kminus: {
      OperatorMatrix m(s, "K-");
      for (int n = 1; n < s.trunc; ++n)
        m.at(n - 1, n) = std::sqrt(2.0 * n * (n + g - 1.0));
      return m;
    }
    case Generator::Kplus: {
      OperatorMatrix m(s, "K+");
      for (int n = 0; n + 1 < s.trunc; ++n)
        m.at(n + 1, n) = std::sqrt(2.0 * (n + 1.0) * (n + g));
      return m;
    }
  }
  throw std::logic_error("generator: unreachable");
}

OperatorMatrix sector_ladder(const FockSpace& s, Generator which) {
  if (s.sector == Sector::full)
    throw std::invalid_argument("sector_ladder: needs an even or odd sector");
  if (which == Generator::K0) {
    OperatorMatrix m = generator(s, Generator::K0);
    m.label = "K0(sector)";
    return m;
  }
  const double g = s.gamma;
  OperatorMatrix m(s, which == Generator::Kplus ? "K+(sector)" : "K-(sector)");
  if (s.sector == Sector::even) {
    for (int n = 0; 2 * n < s.trunc; ++n) {
      const int q = 2 * n;
      if (which == Generator::Kplus && q + 2 < s.trunc)
        m.at(q + 2, q) = std::sqrt(4.0 * n * (2.0 * n + g));
      if (which == Generator::Kminus && q - 2 >= 0)
        m.at(q - 2, q) = std::sqrt(4.0 * n * (2.0 * n + g - 2.0));
    }
  } else {
    for (int n = 0; 2 * n + 1 < s.trunc; ++n) {
      const int q = 2 * n + 1;
      if (which == Generator::Kplus && q + 2 < s.trunc)
        m.at(q + 2, q) = std::sqrt(2.0 * (2.0 * n + 1.0) * (2.0 * n + g + 1.0));
      if (which == Generator::Kminus && q - 2 >= 0)
        m.at(q - 2, q) = std::sqrt(2.0 * (2.0 * n + 1.0) * (2.0 * n + g - 1.0));
    }
  }
  return m;
}

double vacuum_ladder_norm(int n, double gamma) {
  if (n < 0) throw std::domain_error("vacuum_ladder_norm: n < 0");
  // prod_{k=0}^{n-1} 2(k+1)(k gamma...) = 2^n n! (gamma)_n
  const double ln = n * std::log(2.0) + specfun::ln_gamma(n + 1.0) +
                    specfun::pochhammer_log(gamma, n).log_abs;
  return std::exp(0.5 * ln);
}

}  // namespace isocs::fock
