#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isocs/claims.hpp"

namespace isocs::tables {

struct GridSpec {
  double min = 0.1;
  double max = 6.0;
  int points = 60;
  void validate() const;  // min < max, points >= 2
};

// Figure-style weight-function curves: column x = |z| (or sqrt(J)), one
// column per gamma with the family's full canonical weight at x^2.
void write_weights_csv(std::ostream& os, const std::string& family,
                       const std::vector<double>& gammas, const GridSpec& g);

// Photon number distributions for the three families at fixed default
// labels (|z| from grid max midpoint for the parity families, J for the
// action family); one row per ladder-enumeration index.
void write_pnd_csv(std::ostream& os, const claims::Config& cfg, double z_abs,
                   double J);

// Thermal Husimi profile over the label grid.
void write_husimi_csv(std::ostream& os, const std::string& family,
                      const claims::Config& cfg, const GridSpec& g);

}  // namespace isocs::tables
