#include "isocs/tables.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "isocs/measures.hpp"
#include "isocs/states.hpp"
#include "isocs/thermal.hpp"

namespace isocs::tables {

namespace {

std::string fmt(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

states::Family parse_family(const std::string& name) {
  if (name == "even" || name == "bgcs_even") return states::Family::bgcs_even;
  if (name == "odd" || name == "bgcs_odd") return states::Family::bgcs_odd;
  if (name == "gk" || name == "gkcs") return states::Family::gkcs;
  throw std::invalid_argument("unknown family: " + name);
}

measures::Form elementary_form(states::Family f) {
  switch (f) {
    case states::Family::bgcs_even: return measures::Form::elementary_even;
    case states::Family::bgcs_odd: return measures::Form::elementary_odd;
    case states::Family::gkcs: return measures::Form::elementary_gk;
  }
  throw std::logic_error("elementary_form: unreachable");
}

}  // namespace

void GridSpec::validate() const {
  if (!(min < max)) throw std::invalid_argument("grid: min >= max");
  if (points < 2) throw std::invalid_argument("grid: points < 2");
}

void write_weights_csv(std::ostream& os, const std::string& family,
                       const std::vector<double>& gammas, const GridSpec& g) {
  g.validate();
  if (gammas.empty()) throw std::invalid_argument("weights: no gammas");
  const states::Family fam = parse_family(family);
  os << "x";
  for (double gm : gammas) os << ",W_" << family << "_gamma_" << fmt(gm);
  os << "\n";
  for (int i = 0; i < g.points; ++i) {
    const double x = g.min + (g.max - g.min) * i / (g.points - 1);
    os << fmt(x);
    for (double gm : gammas) {
      const measures::RadialMeasure m{elementary_form(fam), gm, 4.0};
      os << "," << fmt(measures::full_weight(m, x * x));
    }
    os << "\n";
  }
}

void write_pnd_csv(std::ostream& os, const claims::Config& cfg, double z_abs,
                   double J) {
  cfg.validate();
  const fock::FockSpace even{cfg.gamma, cfg.trunc, fock::Sector::even};
  const fock::FockSpace odd{cfg.gamma, cfg.trunc, fock::Sector::odd};
  const fock::FockSpace full{cfg.gamma, cfg.trunc, fock::Sector::full};
  const states::StateVector se = states::bgcs_even({z_abs, 0.0}, even);
  const states::StateVector so = states::bgcs_odd({z_abs, 0.0}, odd);
  const states::StateVector sg = states::gkcs(J, 0.0, full);
  const int rows = cfg.trunc / 2;
  os << "n,pnd_even,pnd_odd,pnd_gk\n";
  for (int n = 0; n < rows; ++n) {
    os << n << "," << fmt(states::pnd(se, 2 * n)) << ","
       << fmt(states::pnd(so, 2 * n + 1)) << "," << fmt(states::pnd(sg, n))
       << "\n";
  }
}

void write_husimi_csv(std::ostream& os, const std::string& family,
                      const claims::Config& cfg, const GridSpec& g) {
  cfg.validate();
  g.validate();
  const states::Family fam = parse_family(family);
  const fock::FockSpace s{
      cfg.gamma, cfg.trunc,
      fam == states::Family::bgcs_even
          ? fock::Sector::even
          : (fam == states::Family::bgcs_odd ? fock::Sector::odd
                                             : fock::Sector::full)};
  const thermal::DensityOperator rho =
      thermal::density(fam, {cfg.beta, cfg.gamma}, s);
  os << "x,husimi_q\n";
  for (int i = 0; i < g.points; ++i) {
    const double x = g.min + (g.max - g.min) * i / (g.points - 1);
    states::Label l = fam == states::Family::gkcs
                          ? states::Label::gk(x * x, 0.0)
                          : (fam == states::Family::bgcs_even
                                 ? states::Label::bg_even({x, 0.0})
                                 : states::Label::bg_odd({x, 0.0}));
    os << fmt(x) << "," << fmt(thermal::husimi_q(rho, l)) << "\n";
  }
}

}  // namespace isocs::tables
