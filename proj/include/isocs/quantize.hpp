#pragma once

#include <string>
#include <vector>

#include "isocs/measures.hpp"

namespace isocs::quantize {

// Classical symbols quantized against the parity families. On a family
// whose labels enter with power step p (two for the parity families), the
// angular selection rule couples ladder indices p apart for the symbol z,
// so z acts as the family's own step symbol; |z|^2 is diagonal; the
// constant recovers the sector identity.
enum class Symbol { z, zbar, modz2, one };

struct QuadratureSpec {
  int panels = 128;
  int nodes = 16;
};

fock::OperatorMatrix toeplitz(Symbol sym, states::Family family,
                              const measures::RadialMeasure& m,
                              const fock::FockSpace& s,
                              const QuadratureSpec& q = {});

struct Comparison {
  std::string label;
  double max_abs_dev;
};

// Quantized operators against ladder-operator expressions, under both the
// canonical generators and the parity-internal ladder variant.
std::vector<Comparison> compare_with_generators(
    const fock::FockSpace& s, const measures::RadialMeasure& even_m,
    const measures::RadialMeasure& odd_m, const QuadratureSpec& q = {});

}  // namespace isocs::quantize
