#pragma once

#include <cstddef>
#include <vector>

namespace bsim {

// Index of the interval [x[k], x[k+1]] containing v (v clamped to the grid
// is the caller's responsibility; out-of-range v maps to the end intervals).
std::size_t find_interval(const std::vector<double>& x, double v);

// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slopes).
// The slopes are fixed at construction, so value and derivative are exact
// analytic evaluations of the same C1 curve.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;
  void eval(double x, double& value, double& deriv) const;

  // Evaluation on a known interval; lets callers sharing one grid do a
  // single locate for several curves.
  void eval_at(std::size_t k, double x, double& value, double& deriv) const;

  const std::vector<double>& grid() const { return x_; }
  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, m_;
};

// Tensor interpolant of a function f(P, sigma) on a rectangular grid where
// sigma in [0, 1] is a normalized second coordinate. Columns use monotone
// cubic slopes in sigma; the P direction uses three-point (linear-operator)
// slopes so that the sigma-partial of the surface is the same blend of the
// column derivatives.
class BoundaryFittedGrid {
 public:
  BoundaryFittedGrid() = default;
  BoundaryFittedGrid(std::vector<double> p, std::vector<double> sigma,
                     std::vector<std::vector<double>> values);  // values[p][sigma]

  struct Eval {
    double value;
    double d_dp;     // partial at fixed sigma
    double d_dsigma; // partial at fixed p
  };
  Eval eval(double p, double sigma) const;

  const std::vector<double>& p_grid() const { return p_; }
  const std::vector<double>& sigma_grid() const { return sigma_; }

 private:
  std::vector<double> p_, sigma_;
  std::vector<std::vector<double>> v_;   // column values, v_[i][j]
  std::vector<std::vector<double>> vm_;  // column sigma-slopes
};

}  // namespace bsim
