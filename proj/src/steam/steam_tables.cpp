#include "steam/steam_tables.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "support/csv.hpp"
#include "support/errors.hpp"

#ifndef BSIM_DATA_DIR
#define BSIM_DATA_DIR "data"
#endif

namespace bsim {

namespace {

std::string format_si(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

SteamTables SteamTables::load(const std::string& data_dir) {
  SteamTables t;

  CsvTable sat = read_csv(data_dir + "/saturation.csv");
  t.p_grid_ = sat.column("P");
  t.rho_w_ = MonotoneCubic(t.p_grid_, sat.column("rho_w"));
  t.rho_s_ = MonotoneCubic(t.p_grid_, sat.column("rho_s"));
  t.h_w_ = MonotoneCubic(t.p_grid_, sat.column("h_w"));
  t.h_s_ = MonotoneCubic(t.p_grid_, sat.column("h_s"));
  t.t_s_ = MonotoneCubic(t.p_grid_, sat.column("T_s"));

  // The superheated csv is long-form (P,h,rho) with one group of rows per
  // pressure node; the first row of each group sits on the saturation line
  // and every group shares the same normalized enthalpy offsets.
  CsvTable sh = read_csv(data_dir + "/superheated.csv");
  const auto& p_col = sh.column("P");
  const auto& h_col = sh.column("h");
  const auto& rho_col = sh.column("rho");
  std::vector<double> p_nodes;
  std::vector<std::size_t> group_start;
  for (std::size_t r = 0; r < sh.rows(); ++r) {
    if (p_nodes.empty() || p_col[r] != p_nodes.back()) {
      p_nodes.push_back(p_col[r]);
      group_start.push_back(r);
    }
  }
  group_start.push_back(sh.rows());
  const std::size_t m = group_start[1] - group_start[0];
  std::vector<double> sigma(m);
  std::vector<std::vector<double>> rho(p_nodes.size(),
                                       std::vector<double>(m));
  double h_max = 0.0;
  for (std::size_t i = 0; i < p_nodes.size(); ++i) {
    const std::size_t b = group_start[i];
    if (group_start[i + 1] - b != m) {
      fail(ErrorKind::io, "superheated.csv: ragged enthalpy groups");
    }
    const double h0 = h_col[b];
    const double h1 = h_col[b + m - 1];
    h_max = h1;
    for (std::size_t j = 0; j < m; ++j) {
      const double s = (h_col[b + j] - h0) / (h1 - h0);
      if (i == 0) {
        sigma[j] = s;
      } else if (std::abs(s - sigma[j]) > 1e-9) {
        fail(ErrorKind::io, "superheated.csv: inconsistent enthalpy offsets");
      }
      rho[i][j] = rho_col[b + j];
    }
  }
  t.h_max_ = h_max;
  t.superheated_ = BoundaryFittedGrid(p_nodes, sigma, rho);

  if (t.p_grid_ != p_nodes) {
    fail(ErrorKind::io,
         "saturation.csv and superheated.csv must share the pressure grid");
  }
  return t;
}

const SteamTables& SteamTables::instance() {
  static const SteamTables tables = [] {
    const char* env = std::getenv("BOILERSIM_DATA");
    return load(env && *env ? env : BSIM_DATA_DIR);
  }();
  return tables;
}

void SteamTables::check_pressure(double P) const {
  if (!(P >= p_grid_.front())) {
    fail(ErrorKind::range, "pressure " + format_si(P) +
                               " Pa below supported minimum " +
                               format_si(p_grid_.front()) + " Pa");
  }
  if (!(P <= p_grid_.back())) {
    fail(ErrorKind::range, "pressure " + format_si(P) +
                               " Pa above supported maximum " +
                               format_si(p_grid_.back()) + " Pa");
  }
}

SaturationProps SteamTables::saturation_at(double P) const {
  check_pressure(P);
  SaturationProps out;
  out.P = P;
  const std::size_t k = find_interval(p_grid_, P);
  rho_w_.eval_at(k, P, out.rho_w, out.d_rho_w_dP);
  rho_s_.eval_at(k, P, out.rho_s, out.d_rho_s_dP);
  h_w_.eval_at(k, P, out.h_w, out.d_h_w_dP);
  h_s_.eval_at(k, P, out.h_s, out.d_h_s_dP);
  t_s_.eval_at(k, P, out.T_s, out.d_T_s_dP);
  return out;
}

double SteamTables::saturation_enthalpy(double P) const {
  check_pressure(P);
  return h_s_(P);
}

SuperheatedProps SteamTables::superheated_at(double P, double h) const {
  check_pressure(P);
  double hs, dhs_dP;
  h_s_.eval(P, hs, dhs_dP);
  const double span = h_max_ - hs;
  const double sigma = (h - hs) / span;
  if (sigma < -1e-12) {
    fail(ErrorKind::phase, "enthalpy " + format_si(h) +
                               " J/kg is below saturation (" + format_si(hs) +
                               " J/kg at " + format_si(P) + " Pa)");
  }
  if (sigma > 1.0 + 1e-12) {
    fail(ErrorKind::range, "enthalpy " + format_si(h) +
                               " J/kg above tabulated maximum " +
                               format_si(h_max_) + " J/kg");
  }
  const double s = std::min(std::max(sigma, 0.0), 1.0);
  const auto e = superheated_.eval(P, s);
  SuperheatedProps out;
  out.P = P;
  out.h = h;
  out.rho = e.value;
  out.d_rho_dh = e.d_dsigma / span;
  // At fixed h, changing P moves the saturation boundary, hence sigma.
  const double dsigma_dP = -dhs_dP * (h_max_ - h) / (span * span);
  out.d_rho_dP = e.d_dp + e.d_dsigma * dsigma_dP;
  return out;
}

}  // namespace bsim
