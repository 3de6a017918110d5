#pragma once

#include <complex>
#include <span>

#include "isocs/measures.hpp"
#include "isocs/states.hpp"

namespace isocs::kernels {

using cplx = std::complex<double>;

// Both routes to the reproducing kernel: the canonical value is the overlap
// of the two canonical states (oracle); the closed form is the expression
// under test. For the action-angle family the closed form carries a flat
// exp(-4i(alpha-alpha')) phase instead of the overlap's spectrum phases.
struct KernelEval {
  cplx canonical;
  cplx closed_form;
  double abs_diff;
};

KernelEval kernel(const states::Label& a, const states::Label& b,
                  const fock::FockSpace& s);

// | int K(a,u) K(u,b) dmu(u) - K(a,b) | with the angular/phase average done
// analytically and the radial integral by quadrature.
double idempotence_residual(const states::Label& a, const states::Label& b,
                            const measures::RadialMeasure& m,
                            const fock::FockSpace& s,
                            const measures::ResolutionOptions& opt = {});

// Smallest eigenvalue of the Gram matrix of canonical kernels on a label set.
double gram_min_eigenvalue(std::span<const states::Label> labels,
                           const fock::FockSpace& s);

}  // namespace isocs::kernels
