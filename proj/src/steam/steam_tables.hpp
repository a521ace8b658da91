#pragma once

#include <string>
#include <vector>

#include "steam/interp.hpp"

namespace bsim {

// Saturated water/steam properties and their pressure partials. All values
// SI: Pa, kg/m3, J/kg, K.
struct SaturationProps {
  double P;
  double rho_w, rho_s;
  double h_w, h_s;
  double T_s;
  double d_rho_w_dP, d_rho_s_dP;
  double d_h_w_dP, d_h_s_dP;
  double d_T_s_dP;
};

// Superheated-steam density as a function of pressure and enthalpy.
struct SuperheatedProps {
  double P;
  double h;
  double rho;
  double d_rho_dh;
  double d_rho_dP;
};

// Interpolated property tables loaded from the CSV data assets. The
// saturation table is a set of monotone cubic curves over one pressure
// grid; the superheated table is a boundary-fitted (P, sigma) grid where
// sigma = 0 is the saturation line. Instances are immutable after load and
// safe to share across threads.
class SteamTables {
 public:
  static SteamTables load(const std::string& data_dir);

  // Shared instance backed by the default data directory (BOILERSIM_DATA
  // env var, else the build-time data path).
  static const SteamTables& instance();

  SaturationProps saturation_at(double P) const;
  SuperheatedProps superheated_at(double P, double h) const;

  // Saturated-steam enthalpy h_s(P); the lower boundary of the superheated
  // region.
  double saturation_enthalpy(double P) const;

  double min_pressure() const { return p_grid_.front(); }
  double max_pressure() const { return p_grid_.back(); }
  double max_enthalpy() const { return h_max_; }

 private:
  SteamTables() = default;
  void check_pressure(double P) const;

  std::vector<double> p_grid_;
  MonotoneCubic rho_w_, rho_s_, h_w_, h_s_, t_s_;
  BoundaryFittedGrid superheated_;
  double h_max_ = 0.0;
};

}  // namespace bsim
