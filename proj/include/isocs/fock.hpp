#pragma once

#include <complex>
#include <string>
#include <vector>

namespace isocs::fock {

using cplx = std::complex<double>;

// gamma = 1 + sqrt(1 + 4A)/2 for potential strength A = g(g+1) >= 0.
double gamma_from_A(double A);

// Model parameters tied together by A = g(g+1) and the Bargmann index.
struct ModelParams {
  double g;
  double A;
  double gamma;
  static ModelParams from_A(double A);
  static ModelParams from_coupling(double g);
};

// E_m = 2(2m + gamma).
double energy(int m, double gamma);

// Position-space eigenfunction on x > 0 (Dirichlet at the origin).
// The internal polynomial degree is capped by max_degree.
double wavefunction(int m, double gamma, double x, int max_degree = 30);

// <Phi_m, Phi_n> over (0,inf) via the x = tan(pi u / 2) substitution.
double wavefunction_overlap(int m, int n, double gamma, int gl_nodes = 400);

enum class Sector { full, even, odd };

struct FockSpace {
  double gamma;
  int trunc;  // full-ladder dimension; indices 0..trunc-1
  Sector sector = Sector::full;

  bool contains(int n) const;
  int first_index() const;       // 0 (full/even) or 1 (odd)
  int index_step() const;        // 1 (full) or 2 (even/odd)
  int last_index() const;        // largest ladder index in the sector
  std::vector<int> indices() const;
  bool same_basis(const FockSpace& o) const;
};

// Dense complex matrix over the full ladder of a FockSpace.
struct OperatorMatrix {
  FockSpace space;
  std::vector<cplx> a;  // row-major trunc x trunc
  std::string label;

  explicit OperatorMatrix(const FockSpace& s, std::string lbl = "");
  int n() const { return space.trunc; }
  cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * n() + j]; }
  const cplx& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n() + j];
  }
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
};

OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix adjoint(const OperatorMatrix& A);
OperatorMatrix add(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix subtract(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix scale(const OperatorMatrix& A, cplx s);
OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B);
// Identity restricted to the space's sector indices.
OperatorMatrix sector_identity(const FockSpace& s);
// Max |entry| over rows/cols in [0, n - margin).
double max_abs_interior(const OperatorMatrix& A, int margin = 2);

enum class Generator { K0, Kplus, Kminus };

// Ladder representation on the full Fock index:
//   K0|n> = (2n+gamma)|n>,  K-|n> = sqrt(2n(n+gamma-1))|n-1>,
//   K+|n> = sqrt(2(n+1)(n+gamma))|n+1>.
// Sector spaces reuse these full-ladder matrices unchanged.
OperatorMatrix generator(const FockSpace& s, Generator which);

// Alternative parity-internal ladder family acting in steps of two
// (used only by the verification harness, never by the oracles):
//   even:  K+|2n> = sqrt(4n(2n+gamma))|2n+2>,
//          K-|2n> = sqrt(4n(2n+gamma-2))|2n-2>,
//   odd:   K+|2n+1> = sqrt(2(2n+1)(2n+gamma+1))|2n+3>,
//          K-|2n+1> = sqrt(2(2n+1)(2n+gamma-1))|2n-1>.
// K0 is the same diagonal as the canonical family.
OperatorMatrix sector_ladder(const FockSpace& s, Generator which);

// Exact norm of (K+)^n applied to the vacuum under the canonical ladder,
// i.e. sqrt(2^n n! (gamma)_n), computed in log space.
double vacuum_ladder_norm(int n, double gamma);

}  // namespace isocs::fock
